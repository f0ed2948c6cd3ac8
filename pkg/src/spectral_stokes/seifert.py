"""Pairs (real vector space, nondegenerate bilinear form): monodromy,
classification into irreducible types, enhancements, semiorthogonal data.

The monodromy of a pair with Gram matrix G (so L(a, b) = a^t G b) is
M = G^{-t} G; it satisfies L(Ma, b) = L(b, a).  Unit-circle pairs split
L-orthogonally into irreducible pieces, named here:

* ``F1``        one Jordan block, real eigenvalue, sign invariant eps
* ``F2real``    two Jordan blocks, real eigenvalue, no sign invariant
* ``F2complex`` two blocks at a conjugate pair, unit invariant zeta
* ``F2hyper``   two blocks at a real pair (lam, 1/lam), |lam| > 1
* ``F4hyper``   four blocks at (lam, conj, inverses), |lam| > 1

Unit-circle values are stored as angles b (the value being
``exp(-2*pi*i*b)``); conjugate types are normalised so the eigenvalue
angle lies in (0, 1/2).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.linalg

from . import matrices as mx
from .errors import DegenerateFlag, NotLadderComposed, Singular, Unclassified
from .polycore import (RealPoly, angle_to_point, beta_from_cos, circle_dist,
                       cyclotomic_angles, cyclotomic_polynomial,
                       factor_cyclotomic, format_number, is_exact, mod1,
                       parse_rational, snap_angle)
from .spectra import Spp, SppLadder, decompose_into_ladders

ANGLE_TOL = 1e-9


# ---------------------------------------------------------------------------
# irreducible types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IrrType:
    """Descriptor of one irreducible summand.

    ``lam`` is an angle for the on-circle families and the actual
    (real or complex) eigenvalue of modulus > 1 for the hyperbolic ones.
    ``eps`` is set for F1, ``zeta`` (an angle) for F2complex.
    """

    family: str
    lam: object
    n: int
    eps: int | None = None
    zeta: object | None = None

    def __post_init__(self):
        if self.family == "F1":
            on_one = _angle_is(self.lam, 0)
            on_minus = _angle_is(self.lam, Fraction(1, 2))
            assert on_one or on_minus, "F1 eigenvalue must be +-1"
            assert self.eps in (1, -1)
            if on_one:
                assert self.n % 2 == 1, "F1 at +1 needs odd size"
            else:
                assert self.n % 2 == 0, "F1 at -1 needs even size"
        elif self.family == "F2real":
            on_one = _angle_is(self.lam, 0)
            on_minus = _angle_is(self.lam, Fraction(1, 2))
            assert on_one or on_minus
            if on_one:
                assert self.n % 2 == 0, "two-block type at +1 needs even size"
            else:
                assert self.n % 2 == 1, "two-block type at -1 needs odd size"
        elif self.family == "F2complex":
            assert self.zeta is not None
            # zeta^2 = conj(lam) * (-1)^(n+1), in angle form
            want = mod1(-self.lam + Fraction(self.n + 1, 2)
                        if is_exact(self.lam) and is_exact(self.zeta)
                        else -float(self.lam) + (self.n + 1) / 2.0)
            got = mod1(2 * self.zeta)
            assert circle_dist(got, want) <= 1e-7, "zeta^2 != conj(lam) * (-1)^(n+1)"

    @property
    def dim(self) -> int:
        return {"F1": 1, "F2real": 2, "F2complex": 2,
                "F2hyper": 2, "F4hyper": 4}[self.family] * self.n

    def normalized(self) -> "IrrType":
        """Conjugate-pair representative with eigenvalue angle in (0, 1/2)."""
        if self.family != "F2complex":
            return self
        a = mod1(self.lam)
        if float(a) <= 0.5:
            return self
        return IrrType(self.family, mod1(-a), self.n, zeta=mod1(-self.zeta))

    def sort_key(self):
        lam = self.lam
        if self.family in ("F2hyper", "F4hyper"):
            lamk = (abs(complex(lam)), complex(lam).real, complex(lam).imag)
        else:
            lamk = (float(mod1(lam)), 0.0, 0.0)
        zk = float(mod1(self.zeta)) if self.zeta is not None else -1.0
        return (self.family, self.n, lamk, self.eps or 0, zk)

    def matches(self, other: "IrrType", tol: float = ANGLE_TOL) -> bool:
        if (self.family, self.n, self.eps) != (other.family, other.n, other.eps):
            return False
        if self.family in ("F2hyper", "F4hyper"):
            return abs(complex(self.lam) - complex(other.lam)) <= 1e-6 * max(1.0, abs(complex(self.lam)))
        if circle_dist(self.lam, other.lam) > tol:
            return False
        if (self.zeta is None) != (other.zeta is None):
            return False
        if self.zeta is not None and circle_dist(self.zeta, other.zeta) > tol:
            return False
        return True

    def label(self) -> str:
        def ang(a):
            if _angle_is(a, 0):
                return "1"
            if _angle_is(a, Fraction(1, 2)):
                return "-1"
            return f"e(-2pi i {format_number(a, 6)})"
        if self.family == "F1":
            return f"Seif({ang(self.lam)},1,{self.n},{self.eps})"
        if self.family == "F2real":
            return f"Seif({ang(self.lam)},2,{self.n})"
        if self.family == "F2complex":
            return f"Seif({ang(self.lam)},2,{self.n},{ang(self.zeta)})"
        if self.family == "F2hyper":
            return f"Seif({format_number(self.lam, 6)},2,{self.n})"
        return f"Seif({complex(self.lam):.6g},4,{self.n})"

    def to_json(self):
        out = {"family": self.family, "n": self.n}
        if self.family in ("F2hyper", "F4hyper"):
            z = complex(self.lam)
            out["lambda"] = [z.real, z.imag]
        else:
            out["lambda"] = format_number(self.lam)
        if self.eps is not None:
            out["eps"] = self.eps
        if self.zeta is not None:
            out["zeta"] = format_number(self.zeta)
        return out

    @classmethod
    def from_json(cls, data) -> "IrrType":
        lam = data["lambda"]
        lam = complex(lam[0], lam[1]) if isinstance(lam, list) else parse_rational(lam)
        zeta = parse_rational(data["zeta"]) if "zeta" in data else None
        return cls(data["family"], lam, int(data["n"]),
                   eps=data.get("eps"), zeta=zeta)


def _angle_is(a, target, tol: float = ANGLE_TOL) -> bool:
    if is_exact(a) and is_exact(target):
        return mod1(a) == mod1(target)
    return circle_dist(a, target) <= tol


def types_multiset_equal(ts1, ts2, tol: float = ANGLE_TOL) -> bool:
    if len(ts1) != len(ts2):
        return False
    rem = sorted(ts2, key=IrrType.sort_key)
    for t in sorted(ts1, key=IrrType.sort_key):
        hit = next((i for i, u in enumerate(rem) if t.matches(u, tol)), None)
        if hit is None:
            return False
        rem.pop(hit)
    return True


def type_label_multiset(types) -> str:
    return "+".join(t.label() for t in sorted(types, key=IrrType.sort_key))


# ---------------------------------------------------------------------------
# ladder -> type (the content of a polarized / signed-polarized enhancement)
# ---------------------------------------------------------------------------

def irr_type_from_ladder(alpha, m: int, l: int, signed: bool = False,
                         tol: float = ANGLE_TOL) -> IrrType:
    """The irreducible type forced by a ladder (first number alpha, center
    m, length l+1) inside a polarized (or signed polarized) enhancement.

    The eigenvalue is (-1)^(m+1) exp(-2*pi*i*alpha); the distance
    d = 2*alpha + l + 1 - m decides the family; the sign data is
    exp(pi*i*d/2), times (-1)^l in the signed convention.
    """
    exact = is_exact(alpha)
    d = 2 * alpha + l + 1 - m
    lam_angle = mod1(alpha + (Fraction(m + 1, 2) if exact else (m + 1) / 2.0))
    n_b = l + 1
    d_int = None
    if exact:
        if Fraction(d).denominator == 1:
            d_int = int(d)
    elif abs(float(d) - round(float(d))) <= tol:
        d_int = round(float(d))
    if d_int is not None:
        if exact:
            lam_angle = mod1(Fraction(lam_angle))
        else:
            lam_angle = Fraction(0) if circle_dist(lam_angle, 0) <= tol else Fraction(1, 2)
        if d_int % 2 == 0:
            eps = (-1) ** ((d_int // 2) % 2)
            if signed and l % 2 == 1:
                eps = -eps
            return IrrType("F1", lam_angle, n_b, eps=eps)
        return IrrType("F2real", lam_angle, n_b)
    quarter = Fraction(d, 4) if exact else float(d) / 4.0
    zeta_angle = mod1(-quarter)
    if signed and l % 2 == 1:
        zeta_angle = mod1(zeta_angle + (Fraction(1, 2) if exact else 0.5))
    return IrrType("F2complex", lam_angle, n_b, zeta=zeta_angle).normalized()


def class_from_spp(spp: Spp, m: int, signed: bool = False,
                   tol: float = ANGLE_TOL) -> list[IrrType]:
    """Irreducible type multiset determined by a ladder-composed pair
    multiset with center m under the (signed) polarized convention.

    Partner pairs with integer distance produce real-eigenvalue types
    (two F1 copies for even distance, one two-block type for odd); pairs
    with non-integer distance produce one conjugate-pair type; single
    ladders produce one F1 each.
    """
    assignments = decompose_into_ladders(spp, m, tol)
    out: list[IrrType] = []
    seen = set()
    for i, asg in enumerate(assignments):
        if i in seen:
            continue
        lad = asg.ladder
        if asg.is_single:
            out.append(irr_type_from_ladder(lad.alpha, m, lad.l, signed, tol))
            continue
        if asg.partner_index is None:
            raise NotLadderComposed(
                f"ladder {lad} has no partner in the multiset", witness=lad)
        seen.add(asg.partner_index)
        t = irr_type_from_ladder(lad.alpha, m, lad.l, signed, tol)
        if t.family == "F1":
            out.extend([t, t])
        else:
            out.append(t)
    return out


# ---------------------------------------------------------------------------
# pairs and monodromy
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeifertPair:
    """Gram matrix G of a nondegenerate form, L(a, b) = a^t G b."""

    G: np.ndarray

    def __post_init__(self):
        if self.G.shape[0] != self.G.shape[1]:
            raise ValueError("Gram matrix must be square")
        if mx.is_exact_matrix(self.G):
            if mx.rank_exact(self.G) != self.n:
                raise Singular("Gram matrix is singular")
        else:
            if abs(np.linalg.det(np.asarray(self.G, dtype=float))) < 1e-12:
                raise Singular("Gram matrix is numerically singular")

    @property
    def n(self) -> int:
        return self.G.shape[0]

    @property
    def is_exact(self) -> bool:
        return mx.is_exact_matrix(self.G)

    @classmethod
    def from_triangular(cls, S: np.ndarray) -> "SeifertPair":
        return cls(S.T.copy())


def monodromy_and_forms(P: SeifertPair):
    """(M, symmetric Gram, antisymmetric Gram) of a pair.

    M = G^{-t} G satisfies L(Ma, b) = L(b, a); the symmetric form has
    Gram G + G^t, the antisymmetric one G^t - G.  The radical of the
    symmetric form is ker(M + 1), that of the antisymmetric one
    ker(M - 1); both are verified.
    """
    G = P.G
    n = P.n
    if P.is_exact:
        M = mx.solve_exact(G.T.copy(), G)
        Is = G + G.T
        Ia = G.T - G
        assert mx.mat_eq(M.T.copy().dot(G).dot(M), G), "monodromy must preserve the form"
        assert n - mx.rank_exact(Is) == n - mx.rank_exact(M + mx.identity(n)), \
            "radical of the symmetric form must be ker(M + 1)"
        assert n - mx.rank_exact(Ia) == n - mx.rank_exact(M - mx.identity(n)), \
            "radical of the antisymmetric form must be ker(M - 1)"
    else:
        Gf = np.asarray(G, dtype=float)
        M = np.linalg.solve(Gf.T, Gf)
        Is = Gf + Gf.T
        Ia = Gf.T - Gf
    return M, Is, Ia


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def _numeric_rank(A: np.ndarray, tol: float) -> int:
    sv = np.linalg.svd(A, compute_uv=False)
    if len(sv) == 0:
        return 0
    return int(np.sum(sv > tol * max(1.0, sv[0])))


def _block_sizes(kernel_dims: list[int]) -> list[int]:
    """Jordan block sizes from dim ker N^j, j = 1..; standard staircase."""
    sizes = []
    prev = 0
    counts = []
    for d in kernel_dims:
        counts.append(d - prev)
        prev = d
    # counts[j] = number of blocks of size > j
    for j, c in enumerate(counts):
        for _ in range(c - (counts[j + 1] if j + 1 < len(counts) else 0)):
            sizes.append(j + 1)
    return sorted(sizes, reverse=True)


def _poly_of_matrix(p: RealPoly, A: np.ndarray) -> np.ndarray:
    exact = mx.is_exact_matrix(A)
    n = A.shape[0]
    out = np.zeros((n, n), dtype=object if exact else float)
    if exact:
        out[:] = 0
    power = mx.identity(n, exact)
    for i, c in enumerate(p.coeffs):
        if c != 0:
            out = out + power * c
        if i < len(p.coeffs) - 1:
            power = power.dot(A)
    return out


@dataclass
class _EigGroup:
    kind: str          # 'real' | 'pair' | 'hyper_real' | 'hyper_quad'
    lam: object        # +-1 (int) | angle | float (real, |.|>1) | complex
    mult: int          # per-eigenvalue algebraic multiplicity
    sizes: list        # Jordan block sizes per eigenvalue


def _exact_eigdata(M_e: np.ndarray, tol: float):
    """Eigenvalue groups of an exact monodromy matrix, or None when the
    characteristic polynomial cannot be resolved exactly."""
    n = M_e.shape[0]
    cp = mx.char_poly_exact(M_e)
    groups: list[_EigGroup] = []

    def kernel_dims(q: RealPoly, per: int, mult: int):
        dims = []
        power = mx.identity(n)
        qm = _poly_of_matrix(q, M_e)
        j = 0
        while True:
            j += 1
            power = power.dot(qm)
            total = n - mx.rank_exact(power)
            assert total % per == 0, "kernel must split evenly over the orbit"
            dims.append(total // per)
            if dims[-1] >= mult or j >= mult:
                break
        return dims

    rem = cp
    for lam in (1, -1):
        mult = 0
        lin = RealPoly([-lam, 1])
        while rem.degree >= 1 and rem(lam) == 0:
            rem = rem.exact_div(lin)
            mult += 1
        if mult:
            dims = kernel_dims(lin, 1, mult)
            groups.append(_EigGroup("real", lam, mult, _block_sizes(dims)))
    if rem.degree == 0:
        return groups
    if rem.is_integer:
        mults, tail = factor_cyclotomic(rem)
        if tail.degree == 0:
            for d, m in sorted(mults.items()):
                phi = cyclotomic_angles(d)
                dims = kernel_dims(cyclotomic_polynomial(d), len(phi), m)
                sizes = _block_sizes(dims)
                for b in phi:
                    if float(b) < 0.5:
                        groups.append(_EigGroup("pair", b, m, sizes))
            return groups
        rem = tail
    if rem.degree == 2:
        c2, c1, c0 = rem.coeffs[2], rem.coeffs[1], rem.coeffs[0]
        if c2 == 1 and c0 == 1:
            c = -c1
            q = RealPoly([1, -c, 1])
            if abs(float(c)) < 2:
                theta = beta_from_cos(Fraction(c, 2) if is_exact(c) else float(c) / 2.0)
                dims = kernel_dims(q, 2, 1)
                groups.append(_EigGroup("pair", theta, 1, _block_sizes(dims)))
                return groups
            lam = (float(c) + math.sqrt(float(c) ** 2 - 4)) / 2.0
            if abs(lam) < 1:
                lam = float(c) - lam
            dims = kernel_dims(q, 2, 1)
            groups.append(_EigGroup("hyper_real", lam, 1, _block_sizes(dims)))
            return groups
    return None


def _numeric_eigdata(M_f: np.ndarray, tol: float):
    n = M_f.shape[0]
    eig = np.linalg.eigvals(M_f)
    eig = eig[np.lexsort((eig.imag, eig.real))]
    clusters: list[list[complex]] = []
    for z in eig:
        for cl in clusters:
            if abs(z - cl[0]) <= max(tol, 1e-7):
                cl.append(z)
                break
        else:
            clusters.append([z])
    reps = [(np.mean(cl), len(cl)) for cl in clusters]

    def kdims(lam, mult):
        dims = []
        A = M_f.astype(complex) - lam * np.eye(n)
        power = np.eye(n, dtype=complex)
        for j in range(1, mult + 1):
            power = power @ A
            dims.append(n - _numeric_rank(power, 1e-8))
            if dims[-1] >= mult:
                break
        return dims

    groups: list[_EigGroup] = []
    used = [False] * len(reps)
    for i, (lam, mult) in enumerate(reps):
        if used[i]:
            continue
        used[i] = True
        if abs(lam - 1) <= 1e-7:
            groups.append(_EigGroup("real", 1, mult, _block_sizes(kdims(1.0, mult))))
            continue
        if abs(lam + 1) <= 1e-7:
            groups.append(_EigGroup("real", -1, mult, _block_sizes(kdims(-1.0, mult))))
            continue
        # find the conjugate cluster
        conj_idx = next((j for j, (mu, m2) in enumerate(reps)
                         if not used[j] and m2 == mult and abs(mu - np.conj(lam)) <= 1e-6), None)
        if abs(abs(lam) - 1) <= 1e-6:
            if conj_idx is None:
                raise Unclassified("unpaired complex unit eigenvalue", pattern=complex(lam))
            used[conj_idx] = True
            rep = lam if lam.imag < 0 else np.conj(lam)
            theta = mod1(-cmath.phase(complex(rep)) / (2 * math.pi))
            groups.append(_EigGroup("pair", snap_angle(theta), mult,
                                    _block_sizes(kdims(complex(rep), mult))))
            continue
        if abs(lam.imag) <= 1e-7:
            # real hyperbolic: pair with 1/lam
            inv_idx = next((j for j, (mu, m2) in enumerate(reps)
                            if not used[j] and m2 == mult and abs(mu - 1 / lam) <= 1e-6 * max(1, abs(1 / lam))), None)
            if inv_idx is None:
                raise Unclassified("unpaired real eigenvalue off the circle", pattern=complex(lam))
            used[inv_idx] = True
            rep = lam.real if abs(lam) > 1 else 1 / lam.real
            groups.append(_EigGroup("hyper_real", float(rep), mult,
                                    _block_sizes(kdims(complex(rep), mult))))
            continue
        # complex off circle: quadruple (lam, conj, 1/lam, 1/conj)
        quad = [np.conj(lam), 1 / lam, 1 / np.conj(lam)]
        idxs = []
        for target in quad:
            jj = next((j for j, (mu, m2) in enumerate(reps)
                       if not used[j] and j not in idxs and m2 == mult
                       and abs(mu - target) <= 1e-6 * max(1, abs(target))), None)
            if jj is None:
                raise Unclassified("unpaired complex eigenvalue off the circle",
                                   pattern=complex(lam))
            idxs.append(jj)
        for jj in idxs:
            used[jj] = True
        rep = lam
        if abs(rep) < 1:
            rep = 1 / rep
        if rep.imag < 0:
            rep = np.conj(rep)
        groups.append(_EigGroup("hyper_quad", complex(rep), mult,
                                _block_sizes(kdims(complex(rep), mult))))
    return groups


def _top_vector(A: np.ndarray, s: int, tol: float = 1e-10) -> np.ndarray:
    """Vector in ker(A^s) outside ker(A^{s-1}) (numeric)."""
    As = np.linalg.matrix_power(A, s)
    null = scipy.linalg.null_space(As, rcond=1e-10)
    Asm = np.linalg.matrix_power(A, s - 1)
    for i in range(null.shape[1]):
        v = null[:, i]
        if np.linalg.norm(Asm @ v) > tol * max(1.0, np.linalg.norm(v)):
            return v
    # fall back: combine columns
    best, best_norm = None, -1.0
    for i in range(null.shape[1]):
        v = null[:, i]
        r = np.linalg.norm(Asm @ v)
        if r > best_norm:
            best, best_norm = v, r
    if best is None or best_norm <= tol:
        raise Unclassified("could not find a top-height vector", pattern=s)
    return best


def _canonical_zeta_sqrt(theta, n_b: int):
    """Angle z with exp(-2 pi i z)^2 = conj(lam) * (-1)^(n_b+1) where
    lam = exp(-2 pi i theta): z = -theta/2 - (n_b + 1)/4 mod 1."""
    if is_exact(theta):
        return mod1(-Fraction(theta) / 2 - Fraction(n_b + 1, 4))
    return mod1(-float(theta) / 2.0 - (n_b + 1) / 4.0)


def _snap_zeta(value: complex, theta, n_b: int, tol: float = 0.2):
    """Snap the phase of a nonzero complex pairing value to one of the two
    admissible unit invariants (candidates +-zeta0)."""
    z0 = _canonical_zeta_sqrt(theta, n_b)
    phase_angle = mod1(-cmath.phase(value) / (2 * math.pi))
    d0 = circle_dist(phase_angle, z0)
    half = Fraction(1, 2) if is_exact(z0) else 0.5
    d1 = circle_dist(phase_angle, mod1(z0 + half))
    if min(d0, d1) > tol:
        raise Unclassified(f"pairing phase {phase_angle} is not near either "
                           f"admissible invariant", pattern=(theta, n_b))
    return z0 if d0 <= d1 else mod1(z0 + half)


def classify(P: SeifertPair, tol: float = 1e-8) -> list[IrrType]:
    """Irreducible type multiset of a pair.

    Covered eigenvalue patterns: off-circle eigenvalues (descriptors
    without sign data), on-circle semisimple eigenvalues of any
    multiplicity, and a single Jordan block per on-circle eigenvalue.
    Everything else raises Unclassified with the offending pattern.
    """
    G = P.G
    n = P.n
    Gf = np.asarray(G, dtype=float)
    M_f = np.linalg.solve(Gf.T, Gf)
    groups = None
    M_e = None
    if P.is_exact:
        M_e = mx.solve_exact(G.T.copy(), G)
        groups = _exact_eigdata(M_e, tol)
    if groups is None:
        groups = _numeric_eigdata(M_f, tol)

    out: list[IrrType] = []
    for g in groups:
        if g.kind == "real":
            lam = g.lam                     # +1 or -1
            lam_angle = Fraction(0) if lam == 1 else Fraction(1, 2)
            semisimple = all(s == 1 for s in g.sizes)
            if semisimple:
                if lam == 1:
                    if P.is_exact:
                        B = nullspace_matrix_exact(M_e, 1)
                        F = B.T.copy().dot(G).dot(B)
                        p, z, m = mx.signature_exact(F)
                    else:
                        B = scipy.linalg.null_space(M_f - np.eye(n), rcond=1e-10)
                        F = B.T @ Gf @ B
                        p, z, m = mx.signature_numeric((F + F.T) / 2, 1e-8)
                    if z:
                        raise Unclassified("degenerate restricted form at eigenvalue 1",
                                           pattern=(1, g.sizes))
                    out.extend([IrrType("F1", lam_angle, 1, eps=1)] * p)
                    out.extend([IrrType("F1", lam_angle, 1, eps=-1)] * m)
                else:
                    if g.mult % 2 != 0:
                        raise Unclassified("odd-dimensional semisimple eigenspace at -1",
                                           pattern=(-1, g.sizes))
                    out.extend([IrrType("F2real", lam_angle, 1)] * (g.mult // 2))
            elif len(g.sizes) == 1:
                s = g.sizes[0]
                if (lam == 1 and s % 2 == 0) or (lam == -1 and s % 2 == 1):
                    raise Unclassified("single-block size parity impossible for a real pair",
                                       pattern=(lam, g.sizes))
                if P.is_exact:
                    eps = _single_block_sign_exact(M_e, G, lam, s)
                else:
                    eps = _single_block_sign_numeric(M_f, Gf, lam, s)
                out.append(IrrType("F1", lam_angle, s, eps=eps))
            else:
                raise Unclassified("several Jordan blocks with one of size >= 2",
                                   pattern=(lam, g.sizes))
        elif g.kind == "pair":
            theta = g.lam
            lam_c = angle_to_point(theta)
            semisimple = all(s == 1 for s in g.sizes)
            if semisimple:
                B = scipy.linalg.null_space(M_f.astype(complex) - lam_c * np.eye(n), rcond=1e-10)
                if B.shape[1] != g.mult:
                    raise Unclassified("numeric eigenspace dimension mismatch",
                                       pattern=(theta, g.sizes))
                z0 = _canonical_zeta_sqrt(theta, 1)
                zeta0_c = angle_to_point(z0)
                Phi = B.T @ Gf @ np.conj(B) / zeta0_c
                Phi = (Phi + np.conj(Phi.T)) / 2
                w = np.linalg.eigvalsh(Phi)
                p = int(np.sum(w > 1e-8 * max(1.0, np.abs(w).max())))
                m = int(np.sum(w < -1e-8 * max(1.0, np.abs(w).max())))
                if p + m != g.mult:
                    raise Unclassified("degenerate sesquilinear form on an eigenspace",
                                       pattern=(theta, g.sizes))
                half = Fraction(1, 2) if is_exact(z0) else 0.5
                out.extend([IrrType("F2complex", theta, 1, zeta=z0).normalized()] * p)
                out.extend([IrrType("F2complex", theta, 1,
                                    zeta=mod1(z0 + half)).normalized()] * m)
            elif len(g.sizes) == 1:
                s = g.sizes[0]
                A = M_f.astype(complex) - lam_c * np.eye(n)
                v = _top_vector(A, s)
                K = M_f.astype(complex) / lam_c - np.eye(n)
                w = np.linalg.matrix_power(K, s - 1) @ v
                val = v @ Gf @ np.conj(w)
                zeta = _snap_zeta(complex(val), theta, s)
                out.append(IrrType("F2complex", theta, s, zeta=zeta).normalized())
            else:
                raise Unclassified("several Jordan blocks at a conjugate pair",
                                   pattern=(theta, g.sizes))
        elif g.kind == "hyper_real":
            for s in g.sizes:
                out.append(IrrType("F2hyper", float(g.lam), s))
        else:
            for s in g.sizes:
                out.append(IrrType("F4hyper", complex(g.lam), s))
    total = sum(t.dim for t in out)
    if total != n:
        raise Unclassified(f"classified dimensions sum to {total}, not {n}",
                           pattern=[t.label() for t in out])
    return sorted(out, key=IrrType.sort_key)


def nullspace_matrix_exact(M_e: np.ndarray, lam) -> np.ndarray:
    n = M_e.shape[0]
    A = M_e.copy()
    for i in range(n):
        A[i, i] = A[i, i] - lam
    basis = mx.nullspace_exact(A)
    B = np.empty((n, len(basis)), dtype=object)
    for j, v in enumerate(basis):
        for i in range(n):
            B[i, j] = v[i]
    return B


def _single_block_sign_exact(M_e: np.ndarray, G: np.ndarray, lam: int, s: int) -> int:
    n = M_e.shape[0]
    K = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            K[i, j] = lam * M_e[i, j] - (1 if i == j else 0)
    Ks = mx.mat_pow(K, s)
    Ksm = mx.mat_pow(K, s - 1)
    null = mx.nullspace_exact(Ks)
    v = None
    for cand in null:
        w = [sum(Ksm[i, j] * cand[j] for j in range(n)) for i in range(n)]
        if any(x != 0 for x in w):
            v = cand
            break
    if v is None:
        raise Unclassified("no top-height vector found exactly", pattern=(lam, s))
    w = [sum(Ksm[i, j] * v[j] for j in range(n)) for i in range(n)]
    val = sum(v[i] * sum(G[i, j] * w[j] for j in range(n)) for i in range(n))
    if val == 0:
        raise Unclassified("vanishing top pairing", pattern=(lam, s))
    return 1 if val > 0 else -1


def _single_block_sign_numeric(M_f: np.ndarray, Gf: np.ndarray, lam: int, s: int) -> int:
    A = M_f - lam * np.eye(M_f.shape[0])
    v = np.real(_top_vector(A.astype(complex), s))
    K = lam * M_f - np.eye(M_f.shape[0])
    w = np.linalg.matrix_power(K, s - 1) @ v
    val = float(v @ Gf @ w)
    if abs(val) < 1e-10:
        raise Unclassified("vanishing top pairing", pattern=(lam, s))
    return 1 if val > 0 else -1


def iso_equal(P1: SeifertPair, P2: SeifertPair, tol: float = 1e-8) -> bool:
    """Isomorphy of two pairs, decided through the classification."""
    return types_multiset_equal(classify(P1, tol), classify(P2, tol))


# ---------------------------------------------------------------------------
# signature table of the symmetric form per irreducible type
# ---------------------------------------------------------------------------

def type_signature(t: IrrType):
    """Signature (s+, s0, s-) of the symmetric form on one irreducible
    summand (table lookup)."""
    n = t.n
    if t.family == "F1":
        if _angle_is(t.lam, 0):
            if n % 4 == t.eps % 4:
                return ((n + 1) // 2, 0, (n - 1) // 2)
            return ((n - 1) // 2, 0, (n + 1) // 2)
        if (n - 1) % 4 == t.eps % 4:
            return (n // 2, 1, (n - 2) // 2)
        return ((n - 2) // 2, 1, n // 2)
    if t.family == "F2real":
        if _angle_is(t.lam, 0):
            return (n, 0, n)
        return (n - 1, 2, n - 1)
    if t.family == "F2complex":
        if n % 2 == 0:
            return (n, 0, n)
        t = t.normalized()
        zc = _canonical_zeta_table(t.lam, n)
        if _angle_is(t.zeta, zc, tol=1e-7):
            return (n - 1, 0, n + 1)
        half = Fraction(1, 2) if is_exact(zc) else 0.5
        if _angle_is(t.zeta, mod1(zc + half), tol=1e-7):
            return (n + 1, 0, n - 1)
        raise ValueError(f"zeta {t.zeta} is not an admissible invariant for {t.label()}")
    if t.family == "F2hyper":
        return (n, 0, n)
    if t.family == "F4hyper":
        return (2 * n, 0, 2 * n)
    raise ValueError(f"unknown family {t.family}")


def _canonical_zeta_table(theta, n: int):
    """Angle of (conj(lam)+1)/|lam+1| * i^(n+1) for lam = exp(-2 pi i theta)
    with theta in (0, 1/2): equals exp(i pi (theta + (n+1)/2))."""
    if is_exact(theta):
        return mod1(-Fraction(theta) / 2 - Fraction(n + 1, 4))
    return mod1(-float(theta) / 2.0 - (n + 1) / 4.0)


# ---------------------------------------------------------------------------
# enhancements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Enhancement:
    """A decomposition into blocks, each carrying one irreducible type and
    one ladder.  For pair types (non-single ladders) the stored ladder is
    either representative of the partner pair; the block covers both."""

    m: int
    blocks: tuple  # of (IrrType, SppLadder)

    def spectral_pairs(self) -> Spp:
        out = Spp()
        for _, lad in self.blocks:
            out = out + lad.members()
            if not lad.is_single:
                out = out + lad.partner().members()
        return out


def check_enhancement(P: SeifertPair, E: Enhancement, signed: bool = False,
                      tol: float = ANGLE_TOL) -> bool:
    """True iff every block's sign data matches the (signed) polarized
    phase formula for its ladder."""
    dims = 0
    for typ, lad in E.blocks:
        want = irr_type_from_ladder(lad.alpha, E.m, lad.l, signed, tol)
        if want.family != typ.family or want.n != typ.n:
            return False
        if not want.matches(typ, max(tol, 1e-7)):
            return False
        dims += typ.dim if not (typ.family == "F1" and not lad.is_single) else 2 * typ.dim
    assert dims == P.n, "enhancement blocks must fill the space"
    return True


def enhancement_from_hor(M_hor) -> Enhancement:
    """Enhancement carried by a banded family member: one block per
    eigenvalue pair of the attached companion matrix."""
    from .hor import hor_enhancement
    entries = hor_enhancement(M_hor)
    blocks = []
    seen_pairs = set()
    for kappa_angle, lad, typ, _ in entries:
        key = round(min(float(mod1(kappa_angle)), float(mod1(-kappa_angle))), 9)
        if not lad.is_single:
            if key in seen_pairs:
                continue
            seen_pairs.add(key)
        blocks.append((typ, lad))
    return Enhancement(1, tuple(blocks))


# ---------------------------------------------------------------------------
# semiorthogonal data (basis / splitting / flag)
# ---------------------------------------------------------------------------

@dataclass
class SemiorthogonalData:
    eps: tuple                 # signs of L on the one-dimensional pieces
    splitting: list            # one vector per piece (exact or float)
    flag: list                 # flag bases, flag[j] spans U_{j+1}
    triangular: np.ndarray | None   # the Gram in T(n, R) if all eps = +1


def _as_columns(vectors, n, exact):
    B = np.empty((n, len(vectors)), dtype=object if exact else float)
    for j, v in enumerate(vectors):
        for i in range(n):
            B[i, j] = v[i]
    return B


def semiorthogonal(P: SeifertPair, basis_or_flag) -> SemiorthogonalData:
    """Convert between the equivalent data of a semiorthogonal structure.

    Input is either n basis vectors (rows or a list of vectors) or a
    complete flag (list of n nested bases, the j-th with j vectors).
    Output: the sign tuple, the canonical one-dimensional splitting
    H^(j) = U_j cap (right orthogonal of U_{j-1}), the flag, and, when
    every sign is +1, the unit-triangular Gram of the normalised basis.

    Raises DegenerateFlag(j) when U_j + its right orthogonal fail to span,
    or when L vanishes on a piece.
    """
    G = P.G
    n = P.n
    exact = P.is_exact
    items = [list(u) if not isinstance(u, np.ndarray) else list(u) for u in basis_or_flag]
    if items and np.ndim(items[0]) == 1:
        # a basis: n vectors; the flag is spanned by the leading vectors
        flag = [[items[i] for i in range(j + 1)] for j in range(n)]
    else:
        flag = items
    if len(flag) != n or any(len(flag[j]) != j + 1 for j in range(n)):
        raise ValueError("flag must consist of n nested bases of dimensions 1..n")

    def vec(v):
        return [x if exact and is_exact(x) else float(x) for x in v]

    splitting = []
    eps = []
    Gf = np.asarray(G, dtype=float)
    for j in range(1, n + 1):
        Uj = [vec(v) for v in flag[j - 1]]
        rows_prev = [vec(v) for v in flag[j - 2]] if j >= 2 else []
        if exact:
            Umat = _as_columns(Uj, n, True)
            # right orthogonal of U_{j-1}: kernel of the L(u, .) rows
            if rows_prev:
                R = np.empty((len(rows_prev), n), dtype=object)
                for r, u in enumerate(rows_prev):
                    for c in range(n):
                        R[r, c] = sum(u[t] * G[t, c] for t in range(n))
            else:
                R = np.empty((0, n), dtype=object)
            # Eq-style direct sum check: U_j + U_j^{perp R} spans everything
            rows_j = np.empty((j, n), dtype=object)
            for r, u in enumerate(Uj):
                for c in range(n):
                    rows_j[r, c] = sum(u[t] * G[t, c] for t in range(n))
            perp_j = mx.nullspace_exact(rows_j)
            span = np.empty((n, j + len(perp_j)), dtype=object)
            for c, u in enumerate(Uj):
                for i in range(n):
                    span[i, c] = u[i]
            for c, u in enumerate(perp_j):
                for i in range(n):
                    span[i, j + c] = u[i]
            if mx.rank_exact(span) != n:
                raise DegenerateFlag(j)
            if rows_prev:
                A = R.dot(Umat)
                coeffs = mx.nullspace_exact(A)
            else:
                coeffs = [[Fraction(1)]]
            if len(coeffs) != 1:
                raise DegenerateFlag(j)
            h = [sum(coeffs[0][t] * Umat[i, t] for t in range(j)) for i in range(n)]
            val = sum(h[i] * sum(G[i, c] * h[c] for c in range(n)) for i in range(n))
            if val == 0:
                raise DegenerateFlag(j)
            eps.append(1 if val > 0 else -1)
            splitting.append(h)
        else:
            Umat = np.array(Uj, dtype=float).T
            rows_j = np.array(Uj, dtype=float) @ Gf
            perp = scipy.linalg.null_space(rows_j, rcond=1e-10)
            span = np.hstack([Umat, perp]) if perp.size else Umat
            if np.linalg.matrix_rank(span, tol=1e-9) != n:
                raise DegenerateFlag(j)
            if rows_prev:
                A = (np.array(rows_prev, dtype=float) @ Gf) @ Umat
                null = scipy.linalg.null_space(A, rcond=1e-10)
                if null.shape[1] != 1:
                    raise DegenerateFlag(j)
                h = Umat @ null[:, 0]
            else:
                h = Umat[:, 0]
            val = float(h @ Gf @ h)
            if abs(val) < 1e-12:
                raise DegenerateFlag(j)
            eps.append(1 if val > 0 else -1)
            splitting.append(list(h))

    triangular = None
    if all(e == 1 for e in eps):
        H = np.array([[float(x) for x in h] for h in splitting], dtype=float).T
        scale = np.array([1 / math.sqrt(float(H[:, j] @ Gf @ H[:, j])) for j in range(n)])
        Hn = H * scale[None, :]
        W = Hn.T @ Gf @ Hn
        triangular = W.T  # unit upper triangular member
    return SemiorthogonalData(tuple(eps), splitting, flag, triangular)
