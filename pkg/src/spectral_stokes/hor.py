"""The two banded families of unit upper-triangular matrices.

A family point is canonically a sorted angle tuple (:class:`HorScal`);
the symmetric polynomial and the banded matrix are derived views.  The
defining symmetry is ``beta_j + beta_{n+1-j} = 1`` for ``k = 1`` and
``beta_1 = 0`` with ``beta_j + beta_{n+2-j} = 1`` for ``k = 2``; angles
live in ``[0, 1]`` (the representative 1 is kept at the top end for
ordering; it denotes the same circle point as 0, and the spectral-pair
output is independent of how ties across the symmetry axis are ordered).

For every member the n-th power of the attached companion matrix equals
``(-1)^k S^{-1} S^t``, which is what makes eigenvalue tracking from the
identity matrix unambiguous and yields the spectrum
``alpha_j = n beta_j - j + k/2``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.linalg
import scipy.optimize

from . import matrices as mx
from .errors import (CollisionInsideSimplex, NotArithmeticGroup, NotInFamily,
                     PhaseViolation)
from .polycore import (CIRCLE_TOL, RealPoly, angle_to_point, circle_dist,
                       companion_matrix, galois_closed_mults, is_exact,
                       jordan_chain_vectors, mod1, palindrome_class,
                       point_to_angle, poly_from_cyclotomic_mults,
                       poly_from_float_angles, totient, unit_circle_angles)
from .spectra import Spp, SppLadder

BETA_TOL = 1e-9


def _num_eq(a, b, tol=BETA_TOL):
    if is_exact(a) and is_exact(b):
        return a == b
    return abs(float(a) - float(b)) <= tol


@dataclass(frozen=True)
class HorScal:
    """A family point in angle coordinates: k in {1, 2} and sorted angles."""

    k: int
    beta: tuple

    def __post_init__(self):
        if self.k not in (1, 2):
            raise NotInFamily("k must be 1 or 2")
        b = self.beta
        n = len(b)
        if n < 1:
            raise NotInFamily("need at least one angle")
        for x in b:
            if float(x) < -BETA_TOL or float(x) > 1 + BETA_TOL:
                raise NotInFamily(f"angle {x} outside [0, 1]")
        for i in range(n - 1):
            if float(b[i]) > float(b[i + 1]) + BETA_TOL:
                raise NotInFamily("angles must be nondecreasing")
        if self.k == 1:
            for j in range(n):
                if not _num_eq(b[j] + b[n - 1 - j], 1):
                    raise NotInFamily(f"beta_{j+1} + beta_{n-j} != 1")
        else:
            if not _num_eq(b[0], 0):
                raise NotInFamily("k=2 requires beta_1 = 0")
            for j in range(1, n):
                if not _num_eq(b[j] + b[n - j], 1):
                    raise NotInFamily(f"beta_{j+1} + beta_{n+1-j} != 1")

    @property
    def n(self) -> int:
        return len(self.beta)

    @property
    def is_exact(self) -> bool:
        return all(is_exact(x) for x in self.beta)


def gamma_base(n: int, k: int) -> HorScal:
    """The distinguished interior point with angles (j - k/2)/n."""
    return HorScal(k, tuple(Fraction(2 * j - k, 2 * n) for j in range(1, n + 1)))


def free_dimension(n: int, k: int) -> int:
    if n % 2 == 1:
        return (n - 1) // 2
    return n // 2 if k == 1 else (n - 2) // 2


def scal_from_free(n: int, k: int, free) -> HorScal:
    """Rebuild the full angle tuple from the free simplex coordinates
    (sorted values in [0, 1/2])."""
    free = list(free)
    if len(free) != free_dimension(n, k):
        raise NotInFamily("wrong number of free coordinates")
    exact = all(is_exact(x) for x in free)
    half = Fraction(1, 2) if exact else 0.5
    zero = 0 if exact else 0.0
    middle = [half] if (n - k) % 2 == 0 else []
    if k == 1:
        beta = free + middle + [1 - x for x in reversed(free)]
    else:
        beta = [zero] + free + middle + [1 - x for x in reversed(free)]
    return HorScal(k, tuple(beta))


def scal_free_coordinates(b: HorScal):
    n, k = b.n, b.k
    d = free_dimension(n, k)
    return tuple(b.beta[1:1 + d]) if b.k == 2 else tuple(b.beta[:d])


def sample_scal(n: int, k: int, rng, denominator: int | None = None,
                margin: float = 0.0) -> HorScal:
    """Uniform sample of the family via sorted uniforms in [0, 1/2].

    With ``denominator`` set, coordinates are rationalised to that grid
    (exact mode sampling).  A positive ``margin`` keeps the free
    coordinates inside [margin, 1/2 - margin]: numeric checks with a
    fixed sign tolerance need samples bounded away from the walls where
    the symmetric form degenerates.
    """
    d = free_dimension(n, k)
    us = sorted(rng.random() for _ in range(d))
    if denominator:
        free = sorted(Fraction(round(u * denominator), 2 * denominator) for u in us)
    else:
        free = [margin + u * (0.5 - 2 * margin) for u in us]
    return scal_from_free(n, k, free)


# ---------------------------------------------------------------------------
# scal <-> polynomial <-> matrix
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HorMatrix:
    """Banded family member: S_{ij} = p_{n-(j-i)} above the unit diagonal."""

    k: int
    n: int
    S: np.ndarray
    p: RealPoly


def scal_to_poly(b: HorScal) -> RealPoly:
    """Expand prod (x - exp(-2 pi i beta_j)); exact (integer coefficients)
    whenever the angle multiset is a union of full primitive-root orbits."""
    if b.is_exact:
        counts: dict = {}
        for x in b.beta:
            key = mod1(Fraction(x))
            counts[key] = counts.get(key, 0) + 1
        mults = galois_closed_mults(counts.items())
        if mults is not None:
            return poly_from_cyclotomic_mults(mults)
    return poly_from_float_angles(b.beta)


def scal_from_angles(angles, k: int, tol: float = CIRCLE_TOL) -> HorScal:
    """Family coordinates from an (angle, multiplicity) root multiset.

    The multiplicity of the root 1 splits between the representatives 0
    and 1 symmetrically (k = 1: evenly; k = 2: the extra copy leads)."""
    ones = 0
    rest = []
    for beta, m in angles:
        if _num_eq(beta, 0, tol):
            ones = m
        else:
            rest.extend([beta] * m)
    rest.sort(key=float)
    exact = all(is_exact(x) for x in rest)
    zero, one = (0, 1) if exact else (0.0, 1.0)
    if k == 1:
        if ones % 2 != 0:
            raise NotInFamily("k=1 needs even multiplicity of the root 1")
        beta = [zero] * (ones // 2) + rest + [one] * (ones // 2)
    else:
        if ones % 2 != 1:
            raise NotInFamily("k=2 needs odd multiplicity of the root 1")
        beta = [zero] * ((ones + 1) // 2) + rest + [one] * ((ones - 1) // 2)
    return HorScal(k, tuple(beta))


def poly_to_scal(p: RealPoly, k: int, tol: float = CIRCLE_TOL) -> HorScal:
    """Sorted family coordinates of a symmetric polynomial; verifies the
    k-symmetry.  Raises NotInFamily if p is not in the family."""
    kk, _ = palindrome_class(p, tol)
    if kk != k:
        raise NotInFamily(f"polynomial has symmetry class {kk}, not {k}")
    return scal_from_angles(unit_circle_angles(p, tol), k, tol)


def poly_to_matrix(p: RealPoly, k: int, tol: float = CIRCLE_TOL,
                   check: bool = True) -> HorMatrix:
    if check:
        kk, _ = palindrome_class(p, tol)
        if kk != k:
            raise NotInFamily(f"polynomial has symmetry class {kk}, not {k}")
    n = p.degree
    exact = p.is_exact
    S = np.empty((n, n), dtype=object if exact else float)
    for i in range(n):
        for j in range(n):
            if i > j:
                S[i, j] = 0 if exact else 0.0
            elif i == j:
                S[i, j] = 1 if exact else 1.0
            else:
                S[i, j] = p.coeffs[n - (j - i)]
    return HorMatrix(k, n, S, p)


def scal_to_matrix(b: HorScal) -> HorMatrix:
    # membership was validated on the angle side; skip the root finding
    return poly_to_matrix(scal_to_poly(b), b.k, check=False)


def matrix_to_scal(M: HorMatrix) -> HorScal:
    return poly_to_scal(M.p, M.k)


def r_matrix(M: HorMatrix) -> np.ndarray:
    """The companion matrix whose n-th power is (-1)^k S^{-1} S^t."""
    return companion_matrix(M.p)


# ---------------------------------------------------------------------------
# the spectrum recipe
# ---------------------------------------------------------------------------

def recipe_spectrum(b: HorScal) -> list:
    """alpha_j = n beta_j - j + k/2 in family order (not sorted by size)."""
    n, k = b.n, b.k
    if b.is_exact:
        return [n * Fraction(x) - j + Fraction(k, 2) for j, x in enumerate(b.beta, start=1)]
    return [n * float(x) - j + k / 2.0 for j, x in enumerate(b.beta, start=1)]


def recipe_ladder_groups(b: HorScal, tol: float = BETA_TOL):
    """(circle point angle, ladder) pairs: the alphas attached to a common
    circle point form a run alpha, alpha+1, ..., alpha+l and become the
    ladder with first number alpha, center 1, length l + 1."""
    alphas = recipe_spectrum(b)
    groups: list[tuple[object, list]] = []
    for beta, a in zip(b.beta, alphas):
        key = mod1(beta)
        placed = False
        for gk, vals in groups:
            if (is_exact(gk) and is_exact(key) and gk == key) or \
                    (not (is_exact(gk) and is_exact(key)) and circle_dist(gk, key) <= tol):
                vals.append(a)
                placed = True
                break
        if not placed:
            groups.append((key, [a]))
    out = []
    for key, vals in groups:
        vals.sort(key=float)
        l = len(vals) - 1
        for i in range(l):
            if not _num_eq(vals[i + 1] - vals[i], 1, 1e-7):
                raise NotArithmeticGroup(
                    f"alphas for circle point at angle {key} are not consecutive: {vals}")
        out.append((key, SppLadder(vals[0], 1, l)))
    return out


def recipe_ladders(b: HorScal, tol: float = BETA_TOL) -> list[SppLadder]:
    return [lad for _, lad in recipe_ladder_groups(b, tol)]


def recipe_spectral_pairs(b: HorScal) -> Spp:
    out = Spp()
    for lad in recipe_ladders(b):
        out = out + lad.members()
    return out


def is_realizable_spectrum(candidate, n: int, k: int, tol: float = BETA_TOL):
    """Whether n numbers can be ordered into a valid family spectrum.

    Conditions on the ordering: the k-symmetry (alpha_j + alpha_{n+1-j} = 0
    for k=1; alpha_1 = 0 and alpha_j + alpha_{n+2-j} = 0 for k=2), steps
    alpha_{j+1} >= alpha_j - 1, and for k=1 additionally alpha_1 >= -1/2.
    Returns (ok, witness ordering or None).
    """
    cand = sorted(candidate, key=float, reverse=True)
    if len(cand) != n:
        return False, None
    order: list = []
    used = [False] * n

    def sym_partner_pos(j):
        # 1-based position whose value must be the negative of position j
        return (n + 1 - j) if k == 1 else (n + 2 - j if j >= 2 else None)

    def feasible(j, val):
        if j > 1 and float(val) < float(order[-1]) - 1 - tol:
            return False
        if k == 1 and j == 1 and float(val) < -0.5 - tol:
            return False
        if k == 2 and j == 1 and not _num_eq(val, 0, tol):
            return False
        pos = sym_partner_pos(j)
        if pos is not None and pos < j:
            if not _num_eq(order[pos - 1] + val, 0, tol):
                return False
        return True

    def search(j):
        if j > n:
            return True
        seen = set()
        for i in range(n):
            if used[i]:
                continue
            key = round(float(cand[i]), 12)
            if key in seen:
                continue
            seen.add(key)
            if not feasible(j, cand[i]):
                continue
            used[i] = True
            order.append(cand[i])
            if search(j + 1):
                return True
            order.pop()
            used[i] = False
        return False

    if search(1):
        return True, list(order)
    return False, None


def negate_poly_transform(p: RealPoly, k: int):
    """(-1)^n p(-x) lands in the family with k~ = k + n mod 2 (in {1, 2})
    and has the same spectral pairs."""
    kk, _ = palindrome_class(p)
    if kk != k:
        raise NotInFamily(f"polynomial has symmetry class {kk}, not {k}")
    n = p.degree
    q = p.of_minus_x()
    if n % 2 == 1:
        q = -q
    k2 = 2 - (k + n) % 2
    return q, k2


# ---------------------------------------------------------------------------
# matrix identities
# ---------------------------------------------------------------------------

def verify_power_identity(M: HorMatrix, tol: float = 1e-9):
    """Check (-1)^k S^{-1} S^t = R^n and R^t S^t R = S^t.

    Exact equality for exact members, tolerance comparison otherwise.
    Returns (ok, details) with residuals when a check fails.
    """
    S, n, k = M.S, M.n, M.k
    R = companion_matrix(M.p)
    mono = mx.solve_unit_upper(S, S.T.copy())
    sign = -1 if k == 1 else 1
    lhs = sign * mono
    rhs = mx.mat_pow(R, n)
    St = S.T.copy()
    back = R.T.copy().dot(St).dot(R)
    exact = mx.is_exact_matrix(S)
    ok1 = mx.mat_eq(lhs, rhs, 0.0 if exact else tol)
    ok2 = mx.mat_eq(back, St, 0.0 if exact else tol)
    details = {}
    if not ok1:
        details["power_residual"] = np.asarray(lhs, dtype=float) - np.asarray(rhs, dtype=float)
    if not ok2:
        details["invariance_residual"] = np.asarray(back, dtype=float) - np.asarray(St, dtype=float)
    return ok1 and ok2, details


def pl_factor_product(S: np.ndarray, k: int, tol: float = 1e-9):
    """The n twisted reflection factors whose product is (-1)^k S^{-1} S^t.

    Works for any unit upper-triangular S (the identity is purely
    algebraic).  Returns (factors, ok).
    """
    n = S.shape[0]
    exact = mx.is_exact_matrix(S)
    sign = -1 if k == 1 else 1
    factors = []
    for j in range(1, n + 1):
        F = np.zeros((n, n), dtype=object if exact else float)
        if exact:
            F[:] = 0
        row = [-S[j - 1, t] for t in range(j, n)] + \
              [sign * S[t, j - 1] for t in range(j - 1)] + [sign * 1]
        for c, v in enumerate(row):
            F[0, c] = v
        for i in range(1, n):
            F[i, i - 1] = 1
        factors.append(F)
    prod = factors[0]
    for F in factors[1:]:
        prod = prod.dot(F)
    mono = mx.solve_unit_upper(S, S.T.copy())
    ok = mx.mat_eq(prod, sign * mono, 0.0 if exact else tol)
    return factors, ok


def dual_basis_matrix(M: HorMatrix):
    """R^{-t}: the matrix of the cyclic automorphism in the left-dual basis.

    Verified to consist of an identity block with last column
    (-p_0, ..., -p_{n-1}), i.e. it shifts dual basis vectors up by one.
    """
    R = companion_matrix(M.p)
    n = M.n
    if mx.is_exact_matrix(R):
        X = mx.solve_exact(R.T.copy(), mx.identity(n))
    else:
        X = np.linalg.solve(np.asarray(R, dtype=float).T, np.eye(n))
    p = M.p.coeffs
    exact = mx.is_exact_matrix(R)

    def eq(a, b):
        return a == b if exact else abs(float(a) - float(b)) <= 1e-9
    for i in range(n):
        for j in range(n):
            if j == n - 1:
                want = -p[i]
            elif i == j + 1:
                want = 1
            else:
                want = 0
            if not eq(X[i, j], want):
                raise AssertionError("dual-basis matrix does not have the shifted-cycle shape")
    return X


# ---------------------------------------------------------------------------
# enhancement data and the signature law
# ---------------------------------------------------------------------------

def hor_enhancement(M: HorMatrix, tol: float = 1e-6):
    """Eigenvalue-wise enhancement of a family member.

    For each circle point kappa among the eigenvalues of the companion
    matrix: the ladder from the recipe, the irreducible class it forces
    in a polarized enhancement, and a numeric verification that the
    pairing phase of L(a, N^l conj(a)) equals pi (2 alpha + l) / 2.
    Returns a list of (kappa_angle, ladder, irr_type, phase_ok).
    """
    from .seifert import irr_type_from_ladder

    b = matrix_to_scal(M)
    Sf = np.asarray(M.S, dtype=float)
    out = []
    for kappa_angle, lad in recipe_ladder_groups(b):
        alpha = lad.alpha
        l = lad.l
        typ = irr_type_from_ladder(alpha, 1, l, signed=False)
        # exact angles keep the chain relation verified in exact arithmetic
        kappa = kappa_angle if (is_exact(kappa_angle) and M.p.is_exact) \
            else angle_to_point(kappa_angle)
        vecs = jordan_chain_vectors(M.p, kappa, l)
        w = vecs[l] @ Sf.T @ np.conj(vecs[0])
        want = math.pi * (2 * float(alpha) + l) / 2.0
        got = cmath.phase(complex(w))
        diff = (got - want + math.pi) % (2 * math.pi) - math.pi
        if abs(diff) > tol:
            raise PhaseViolation(
                f"pairing phase {got:.9f} != predicted {want:.9f} at angle {kappa_angle}")
        out.append((kappa_angle, lad, typ, True))
    return out


def is_signature(M: HorMatrix, tol: float = 1e-6, neq_tol: float = 1e-7,
                 scal: HorScal | None = None):
    """Predicted and computed signature of S + S^t away from eigenvalue -1.

    Predicted: s_+ counts spectral numbers congruent mod 2 to the open
    interval (-1/2, 1/2); numbers congruent to 1/2 mod 1 belong to the
    eigenvalue -1 and are excluded; s_- fills up dim H_{!=-1}; s_0 = 0.
    Computed: signature of S + S^t restricted to the sum of generalized
    eigenspaces of S^{-1} S^t away from -1 (ordered real Schur form).

    ``scal`` short-circuits the angle recovery when the member was built
    from angle coordinates in the first place.
    """
    b = scal if scal is not None else matrix_to_scal(M)
    alphas = recipe_spectrum(b)
    s_plus = 0
    minus_one = 0
    for a in alphas:
        if is_exact(a):
            if mod1(a) == Fraction(1, 2):
                minus_one += 1
                continue
            r = a % 2
            if r < Fraction(1, 2) or r > Fraction(3, 2):
                s_plus += 1
        else:
            if abs(mod1(a) - 0.5) <= 1e-9:
                minus_one += 1
                continue
            r = float(a) % 2.0
            if r < 0.5 or r > 1.5:
                s_plus += 1
    dim = M.n - minus_one
    predicted = (s_plus, 0, dim - s_plus)

    w = restricted_form_eigenvalues(M, neq_tol)
    plus = int(np.sum(w > tol))
    minus = int(np.sum(w < -tol))
    computed = (plus, len(w) - plus - minus, minus)
    return predicted, computed


def restricted_form_eigenvalues(M: HorMatrix, neq_tol: float = 1e-7) -> np.ndarray:
    """Eigenvalues of S + S^t restricted to the generalized eigenspaces of
    S^{-1} S^t away from -1 (ordered real Schur basis)."""
    Sf = np.asarray(M.S, dtype=float)
    Mono = np.linalg.solve(Sf, Sf.T)
    _, Z, sdim = scipy.linalg.schur(
        Mono, output="real",
        sort=lambda re, im: (re + 1.0) ** 2 + im ** 2 > neq_tol ** 2)
    if sdim == 0:
        return np.zeros(0)
    Q1 = Z[:, :sdim]
    return np.linalg.eigvalsh(Q1.T @ (Sf + Sf.T) @ Q1)


# ---------------------------------------------------------------------------
# path tracking inside the family simplex
# ---------------------------------------------------------------------------

@dataclass
class PathTrack:
    times: np.ndarray
    betas: np.ndarray    # shape (steps+1, n), continuous lifts
    alphas: np.ndarray   # shape (steps+1, n)
    endpoint: list


def simplex_path_track(target: HorMatrix, steps: int | None = None,
                       collision_tol: float = 1e-12,
                       endpoint_tol: float = 1e-8) -> PathTrack:
    """Track eigenvalue angles of the companion matrix along the straight
    scal-coordinate segment from the distinguished interior point to the
    target, and read off the spectrum at the end.

    Eigenvalues stay pairwise distinct strictly inside the simplex; a
    collision before the endpoint raises CollisionInsideSimplex.  The
    endpoint is checked against the closed-form spectrum.
    """
    n, k = target.n, target.k
    if steps is None:
        steps = 64 * n
    b1 = matrix_to_scal(target)
    g = gamma_base(n, k)
    gf = np.array([float(x) for x in g.beta])
    bf = np.array([float(x) for x in b1.beta])
    times = np.linspace(0.0, 1.0, steps + 1)
    lifts = np.empty((steps + 1, n))
    lifts[0] = gf
    current = gf.copy()
    for s, t in enumerate(times[1:], start=1):
        if t >= 1.0:
            # the eigenvalue multiset at the target is part of its data;
            # only the matching of strands to angles is resolved numerically
            # (a float eigensolver would lose accuracy at multiple roots)
            ang = np.array([float(mod1(x)) for x in b1.beta])
        else:
            beta_t = (1 - t) * gf + t * bf
            p = poly_from_float_angles(beta_t)
            R = companion_matrix(p)
            eig = np.linalg.eigvals(np.asarray(R, dtype=float))
            ang = np.array([point_to_angle(z) for z in eig])
        if t < 1.0:
            srt = np.sort(ang)
            gaps = np.diff(srt)
            wrap = 1.0 - srt[-1] + srt[0]
            if n > 1 and min(gaps.min(initial=np.inf), wrap) < collision_tol:
                raise CollisionInsideSimplex(f"eigenvalue collision at r={t}")
        cost = np.abs(current[:, None] % 1.0 - ang[None, :])
        cost = np.minimum(cost, 1.0 - cost)
        rows, cols = scipy.optimize.linear_sum_assignment(cost)
        nxt = current.copy()
        for i, j in zip(rows, cols):
            d = (ang[j] - current[i] + 0.5) % 1.0 - 0.5
            nxt[i] = current[i] + d
        current = nxt
        lifts[s] = current
    gammas = gf
    alphas = n * (lifts - gammas[None, :])
    endpoint = list(alphas[-1])
    expected = [float(a) for a in recipe_spectrum(b1)]
    for got, want in zip(endpoint, expected):
        if abs(got - want) > endpoint_tol:
            raise AssertionError(
                f"tracked endpoint {got} != recipe value {want}")
    return PathTrack(times, lifts, alphas, endpoint)


# ---------------------------------------------------------------------------
# exact members from root-of-unity data
# ---------------------------------------------------------------------------

def _cyclotomic_degree_candidates(n: int):
    out = []
    d = 1
    bound = 2 * n * n + 2
    while d <= bound:
        if totient(d) <= n:
            out.append(d)
        d += 1
    return out


def _fix_parity(mults: dict[int, int], k: int) -> dict[int, int] | None:
    """Adjust multiplicities of the degree-1 factors so the constant term
    matches the family: the factor with root 1 occurs an even number of
    times for k=1 and an odd number for k=2."""
    want_odd = (k == 2)
    e1 = mults.get(1, 0)
    if (e1 % 2 == 1) == want_odd:
        return mults
    out = dict(mults)
    if e1 > 0:
        out[1] = e1 - 1
        out[2] = out.get(2, 0) + 1
        if out[1] == 0:
            del out[1]
        return out
    if out.get(2, 0) > 0:
        out[2] -= 1
        out[1] = 1
        if out[2] == 0:
            del out[2]
        return out
    return None


def sample_cyclotomic_mults(n: int, k: int, rng) -> dict[int, int]:
    """Random multiset of root-of-unity orbit indices with total degree n
    and the parity of the root-1 orbit matching k."""
    cands = _cyclotomic_degree_candidates(n)
    while True:
        mults: dict[int, int] = {}
        remaining = n
        if k == 2:
            mults[1] = 1
            remaining -= 1
        while remaining > 0:
            opts = [d for d in cands if totient(d) <= remaining]
            d = opts[rng.randrange(len(opts))]
            mults[d] = mults.get(d, 0) + 1
            remaining -= totient(d)
        fixed = _fix_parity(mults, k)
        if fixed is not None:
            return fixed


def sample_cyclotomic_member(n: int, k: int, rng) -> HorMatrix:
    mults = sample_cyclotomic_mults(n, k, rng)
    p = poly_from_cyclotomic_mults(mults)
    return poly_to_matrix(p, k)


def enumerate_cyclotomic_mults(n: int, k: int, limit: int | None = None):
    """All multisets of orbit indices with total degree n and the right
    parity (optionally capped at ``limit`` results)."""
    cands = _cyclotomic_degree_candidates(n)
    results = []

    def rec(idx: int, remaining: int, acc: dict):
        if limit is not None and len(results) >= limit:
            return
        if remaining == 0:
            want_odd = (k == 2)
            if (acc.get(1, 0) % 2 == 1) == want_odd:
                results.append(dict(acc))
            return
        if idx >= len(cands):
            return
        d = cands[idx]
        phi = totient(d)
        max_m = remaining // phi
        for m in range(max_m, -1, -1):
            if m:
                acc[d] = m
            rec(idx + 1, remaining - m * phi, acc)
            if m:
                del acc[d]

    rec(0, n, {})
    return results


def in_unit_circle_set(S: np.ndarray, tol: float = 1e-6) -> bool:
    """Membership test for general unit upper-triangular matrices: all
    eigenvalues of S^{-1} S^t within ``tol`` of the unit circle."""
    Sf = np.asarray(S, dtype=float)
    if not mx.is_unit_upper_triangular(S, tol=1e-9):
        return False
    eig = np.linalg.eigvals(np.linalg.solve(Sf, Sf.T))
    return bool(np.all(np.abs(np.abs(eig) - 1.0) <= tol))
