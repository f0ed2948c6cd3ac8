"""Exact and floating arithmetic for real polynomials with unit-circle roots.

Conventions used everywhere in the package:

* A unit-circle point is encoded by its *angle* ``b``, the point being
  ``exp(-2*pi*i*b)``.  In exact mode angles are ``fractions.Fraction``
  values, in numeric mode ``float``.  Angles live in ``[0, 1)`` except
  where a caller deliberately keeps the representative ``1`` for the
  point ``1`` (ordered family coordinates do this).
* Polynomials are dense coefficient sequences, constant term first,
  with ``int``/``Fraction`` entries in exact mode and ``float`` in
  numeric mode.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import MultiplicityTooLow, NotPolynomial, RootOffCircle

TWO_PI = 2.0 * math.pi

#: default tolerance for "is this root on the unit circle"
CIRCLE_TOL = 1e-9
#: roots whose angles differ by less than this are merged into one multiple root
CLUSTER_TOL = 1e-7


# ---------------------------------------------------------------------------
# scalars and angles
# ---------------------------------------------------------------------------

def is_exact(x) -> bool:
    """True for ``int``/``Fraction`` scalars (exact mode), False for floats."""
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def mod1(x):
    """Reduce an angle into ``[0, 1)``, preserving exactness."""
    return x % 1 if is_exact(x) else x % 1.0


def circle_dist(a, b) -> float:
    """Distance of two angles on the circle of circumference 1."""
    d = abs(float(mod1(a) - mod1(b)))
    return min(d, 1.0 - d)


def angle_eq(a, b, tol: float = CIRCLE_TOL) -> bool:
    if is_exact(a) and is_exact(b):
        return mod1(a) == mod1(b)
    return circle_dist(a, b) <= tol


def angle_to_point(b) -> complex:
    """The unit-circle point ``exp(-2*pi*i*b)``."""
    return cmath.exp(-2j * math.pi * float(b))


def point_to_angle(z: complex):
    """Angle in ``[0, 1)`` of a (nearly) unit-modulus complex number."""
    return (-cmath.phase(z) / TWO_PI) % 1.0


def conj_angle(b):
    """Angle of the complex conjugate point."""
    return mod1(-b)


def parse_rational(s):
    """Parse "p/q" or a plain integer/decimal string into Fraction or float."""
    if isinstance(s, (int, Fraction)):
        return s
    if isinstance(s, float):
        return s
    text = str(s).strip()
    if "/" in text:
        return Fraction(text)
    try:
        return int(text)
    except ValueError:
        return float(text)


def format_number(x, precision: int = 12) -> str:
    if isinstance(x, bool):
        return str(int(x))
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return f"{float(x):.{precision}g}"


def _tidy(x):
    """Normalise Fraction-with-denominator-1 to int; leave floats alone."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def snap_angle(b: float, max_den: int = 4096, tol: float = 1e-12):
    """Return the rational angle closest to ``b`` if it is extremely close.

    Used to recover exact angles from float computations whose inputs were
    rational.  Returns a Fraction on success, the float otherwise.
    """
    cand = Fraction(mod1(b)).limit_denominator(max_den)
    if circle_dist(cand, b) <= tol:
        return mod1(cand)
    return mod1(b)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class RealPoly:
    """Dense univariate polynomial, coefficients low degree first.

    Exact when every coefficient is an ``int`` or ``Fraction``.  The zero
    polynomial is ``RealPoly([0])`` with degree 0 by convention; all
    paper-facing polynomials here are monic of degree >= 1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_tidy(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        self.coeffs = tuple(cs)

    # -- basic structure ----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs)

    @property
    def is_integer(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, RealPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RealPoly({list(self.coeffs)!r})"

    def __call__(self, x):
        acc = 0 * x if not isinstance(x, (int, float, complex, Fraction)) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- ring operations ----------------------------------------------------
    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return RealPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RealPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, RealPoly):
            a, b = self.coeffs, other.coeffs
            out = [0] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if ca == 0:
                    continue
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
            return RealPoly(out)
        return RealPoly([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def divmod(self, other: "RealPoly"):
        """Polynomial division; exact when both operands are exact."""
        if other.coeffs == (0,):
            raise ZeroDivisionError("division by the zero polynomial")
        rem = [Fraction(c) if is_exact(c) else c for c in self.coeffs]
        d = list(other.coeffs)
        dn = d[-1]
        qd = len(rem) - len(d)
        if qd < 0:
            return RealPoly([0]), RealPoly(rem)
        quot = [0] * (qd + 1)
        for i in range(qd, -1, -1):
            c = rem[i + len(d) - 1]
            if is_exact(c) and is_exact(dn):
                f = Fraction(c, 1) / Fraction(dn, 1) if not isinstance(c, Fraction) else c / dn
            else:
                f = c / dn
            quot[i] = f
            if f != 0:
                for j, dc in enumerate(d):
                    rem[i + j] -= f * dc
        return RealPoly(quot), RealPoly(rem)

    def exact_div(self, other: "RealPoly") -> "RealPoly":
        q, r = self.divmod(other)
        if any(c != 0 for c in r.coeffs):
            raise NotPolynomial(f"{other!r} does not divide {self!r}")
        return q

    def derivative(self) -> "RealPoly":
        if self.degree == 0:
            return RealPoly([0])
        return RealPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def of_minus_x(self) -> "RealPoly":
        """p(-x)."""
        return RealPoly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def to_float(self) -> "RealPoly":
        return RealPoly([float(c) for c in self.coeffs])

    # -- serialization -------------------------------------------------------
    def to_json(self):
        return [format_number(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "RealPoly":
        return cls([parse_rational(c) for c in data])

    @classmethod
    def x_power_minus_1(cls, r: int) -> "RealPoly":
        return cls([-1] + [0] * (r - 1) + [1])


def poly_from_float_angles(angles) -> RealPoly:
    """Expand ``prod (x - exp(-2*pi*i*b))`` in floating point.

    The angle multiset must be closed under conjugation so the product is
    real; the tiny imaginary residue is dropped.
    """
    coeffs = np.array([1.0 + 0.0j])
    for b in angles:
        root = angle_to_point(b)
        coeffs = np.convolve(coeffs, np.array([-root, 1.0 + 0.0j]))
    return RealPoly([float(c.real) for c in coeffs])


# ---------------------------------------------------------------------------
# cyclotomic machinery
# ---------------------------------------------------------------------------

def totient(d: int) -> int:
    result, n, p = d, d, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _divisors(d: int):
    out = []
    i = 1
    while i * i <= d:
        if d % i == 0:
            out.append(i)
            if i != d // i:
                out.append(d // i)
        i += 1
    return sorted(out)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> RealPoly:
    """The d-th cyclotomic polynomial, exact integer coefficients."""
    p = RealPoly.x_power_minus_1(d)
    for e in _divisors(d):
        if e != d:
            p = p.exact_div(cyclotomic_polynomial(e))
    return p


def cyclotomic_angles(d: int):
    """Angles of the primitive d-th roots of unity, as Fractions in [0, 1)."""
    if d == 1:
        return [Fraction(0)]
    return [Fraction(j, d) for j in range(1, d) if math.gcd(j, d) == 1]


def factor_cyclotomic(p: RealPoly):
    """Split an integer polynomial into cyclotomic factors.

    Returns ``(mults, remainder)`` where ``mults`` maps d to the
    multiplicity of the d-th cyclotomic polynomial and ``remainder`` has no
    root-of-unity roots.  Candidates with phi(d) <= deg are screened by a
    cheap float evaluation at a primitive d-th root before the exact trial
    division, which keeps degrees in the thousands tractable.
    """
    if not p.is_integer or not p.is_monic:
        raise ValueError("cyclotomic factorization needs a monic integer polynomial")
    mults: dict[int, int] = {}
    rem = p
    d = 1
    # phi(d) >= sqrt(d/2) for every d, so phi(d) <= D implies d <= 2 D^2
    bound = 2 * p.degree * p.degree + 2
    while d <= bound and rem.degree > 0:
        if totient(d) <= rem.degree:
            z = cmath.exp(-2j * math.pi / d)
            scale = max(abs(float(c)) for c in rem.coeffs)
            if abs(rem(z)) > 1e-6 * max(scale, 1.0) * (rem.degree + 1):
                d += 1
                continue
            phi_d = cyclotomic_polynomial(d)
            while rem.degree >= phi_d.degree:
                q, r = rem.divmod(phi_d)
                if any(c != 0 for c in r.coeffs):
                    break
                mults[d] = mults.get(d, 0) + 1
                rem = RealPoly([_tidy(Fraction(c)) for c in q.coeffs])
        d += 1
    return mults, rem


def poly_from_cyclotomic_mults(mults: dict[int, int]) -> RealPoly:
    p = RealPoly([1])
    for d, m in sorted(mults.items()):
        q = cyclotomic_polynomial(d)
        for _ in range(m):
            p = p * q
    return p


def angles_from_cyclotomic_mults(mults: dict[int, int]):
    out = []
    for d, m in sorted(mults.items()):
        for b in cyclotomic_angles(d):
            out.append((b, m))
    return sorted(out)


def galois_closed_mults(angles) -> dict[int, int] | None:
    """If a rational angle multiset is a union of full primitive-root orbits,
    return the orbit multiplicities, else None.

    ``angles`` is an iterable of (Fraction angle, multiplicity).
    """
    counts: dict[Fraction, int] = {}
    for b, m in angles:
        if not is_exact(b):
            return None
        counts[mod1(Fraction(b))] = counts.get(mod1(Fraction(b)), 0) + m
    mults: dict[int, int] = {}
    while counts:
        b = next(iter(counts))
        d = b.denominator
        orbit = cyclotomic_angles(d)
        m = counts.get(orbit[0], 0)
        if m <= 0:
            return None
        for a in orbit:
            if counts.get(a, 0) < m:
                return None
        for a in orbit:
            counts[a] -= m
            if counts[a] == 0:
                del counts[a]
        mults[d] = mults.get(d, 0) + m
    return mults


# ---------------------------------------------------------------------------
# angle multisets of polynomial roots
# ---------------------------------------------------------------------------

def _cluster_angles(angles: list[float], tol: float):
    """Group a sorted list of float angles into (representative, mult) pairs,
    merging across the 0/1 seam."""
    if not angles:
        return []
    angles = sorted(mod1(a) for a in angles)
    groups: list[list[float]] = [[angles[0]]]
    for a in angles[1:]:
        if a - groups[-1][-1] <= tol:
            groups[-1].append(a)
        else:
            groups.append([a])
    # wrap-around merge
    if len(groups) > 1 and (1.0 - groups[-1][-1]) + groups[0][0] <= tol:
        head = groups.pop()
        groups[0] = [a - 1.0 for a in head] + groups[0]
    out = []
    for g in groups:
        rep = mod1(math.fsum(g) / len(g))
        out.append((snap_angle(rep), len(g)))
    return sorted(out, key=lambda t: float(t[0]))


def unit_circle_angles(p: RealPoly, tol: float = CIRCLE_TOL):
    """All roots of a monic real polynomial as (angle, multiplicity) pairs.

    Integer polynomials are factored exactly into cyclotomic factors; any
    non-cyclotomic part and all inexact inputs go through numeric root
    finding with every root checked against the unit circle.

    Raises RootOffCircle if a root is farther than ``tol`` from the circle.
    """
    if not p.is_monic:
        raise ValueError("polynomial must be monic")
    if p.degree == 0:
        return []
    exact_part: list = []
    numeric_target = None
    if p.is_integer:
        mults, rem = factor_cyclotomic(p)
        for d, m in sorted(mults.items()):
            for b in cyclotomic_angles(d):
                exact_part.append((b, m))
        numeric_target = rem if rem.degree > 0 else None
    else:
        numeric_target = p
    numeric_part: list = []
    if numeric_target is not None:
        roots = np.roots(np.array([float(c) for c in reversed(numeric_target.coeffs)]))
        raw = []
        for z in roots:
            dist = abs(abs(z) - 1.0)
            if dist > tol:
                raise RootOffCircle(complex(z), dist)
            raw.append(point_to_angle(complex(z)))
        numeric_part = _cluster_angles(raw, CLUSTER_TOL)
    merged: dict = {}
    for b, m in exact_part + numeric_part:
        key = mod1(b)
        merged[key] = merged.get(key, 0) + m
    out = sorted(merged.items(), key=lambda t: float(t[0]))
    assert sum(m for _, m in out) == p.degree
    return out


def angles_total(angles) -> int:
    return sum(m for _, m in angles)


def flatten_angles(angles):
    out = []
    for b, m in angles:
        out.extend([b] * m)
    return out


# ---------------------------------------------------------------------------
# signed products  prod (x^r - 1)^e
# ---------------------------------------------------------------------------

def _mul_xr_minus_1(coeffs: list, r: int) -> list:
    n = len(coeffs)
    out = [0] * (n + r)
    for i, c in enumerate(coeffs):
        out[i + r] += c
        out[i] -= c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _div_xr_minus_1(coeffs: list, r: int) -> list:
    """Exact division by (x^r - 1); raises NotPolynomial on a remainder."""
    n = len(coeffs) - 1
    if n < r:
        raise NotPolynomial("quotient would have negative degree")
    q = [0] * (n - r + 1)
    rem = list(coeffs)
    for i in range(n, r - 1, -1):
        c = rem[i]
        if c != 0:
            q[i - r] = c
            rem[i] = 0
            rem[i - r] += c
    if any(c != 0 for c in rem):
        raise NotPolynomial("(x^r - 1) does not divide the product")
    return q


def expand_signed_product(factors) -> RealPoly:
    """Expand ``prod (x^r - 1)^e`` with e in {+1, -1} into a monic integer
    polynomial.

    Raises NotPolynomial if the formal product is not a polynomial.
    """
    coeffs = [1]
    for r, e in sorted(factors, key=lambda t: (t[1] != 1, t[0])):
        if r < 1:
            raise ValueError("factor exponents r must be positive")
        if e == 1:
            coeffs = _mul_xr_minus_1(coeffs, r)
        elif e == -1:
            coeffs = _div_xr_minus_1(coeffs, r)
        else:
            raise ValueError("exponent e must be +1 or -1")
    p = RealPoly(coeffs)
    if not p.is_monic:
        raise NotPolynomial("signed product did not produce a monic polynomial")
    return p


# ---------------------------------------------------------------------------
# palindromic classification
# ---------------------------------------------------------------------------

def palindrome_class(p: RealPoly, tol: float = CIRCLE_TOL):
    """Classify the coefficient symmetry of a monic polynomial.

    Returns ``(k, p0)`` where k=1 for p_j = p_{n-j}, k=2 for p_j = -p_{n-j}
    (in both cases all roots must lie on the unit circle), and k=None
    otherwise.  For a classified polynomial ``p0 == (-1)**(k-1)`` holds.
    """
    if not p.is_monic:
        raise ValueError("polynomial must be monic")
    n = p.degree
    c = p.coeffs
    p0 = c[0]

    def close(a, b):
        if is_exact(a) and is_exact(b):
            return a == b
        return abs(float(a) - float(b)) <= tol

    sym = all(close(c[j], c[n - j]) for j in range(n + 1))
    asym = all(close(c[j], -c[n - j]) for j in range(n + 1))
    if not (sym or asym):
        return None, p0
    try:
        unit_circle_angles(p, tol=max(tol, CIRCLE_TOL))
    except RootOffCircle:
        return None, p0
    k = 1 if sym else 2
    expected = 1 if k == 1 else -1
    assert close(p0, expected), f"p0={p0} contradicts k={k}"
    return k, p0


# ---------------------------------------------------------------------------
# companion matrices and Jordan chains
# ---------------------------------------------------------------------------

def companion_matrix(p: RealPoly) -> np.ndarray:
    """Companion matrix with top row (-p_{n-1}, ..., -p_0) and an identity
    block below-left; its characteristic polynomial is p."""
    if not p.is_monic or p.degree < 1:
        raise ValueError("need a monic polynomial of degree >= 1")
    n = p.degree
    exact = p.is_exact
    A = np.zeros((n, n), dtype=object if exact else float)
    if exact:
        A[:] = 0
    for j in range(n):
        A[0, j] = -p.coeffs[n - 1 - j]
    for i in range(1, n):
        A[i, i - 1] = 1
    return A


def falling_factorial(a, b: int):
    out = 1
    for i in range(b):
        out *= a - i
    return out


class CycVec:
    """Element of Q(zeta_D) with zeta = exp(-2*pi*i/D), stored as a dense
    Fraction coefficient vector over zeta^0 .. zeta^{D-1}.

    Only the operations needed for exact Jordan-chain verification are
    implemented; equality reduces modulo the D-th cyclotomic polynomial.
    """

    __slots__ = ("D", "c")

    def __init__(self, D: int, coeffs=None):
        self.D = D
        self.c = [Fraction(0)] * D if coeffs is None else list(coeffs)

    @classmethod
    def root_power(cls, D: int, t: int, scale=1) -> "CycVec":
        v = cls(D)
        v.c[t % D] = Fraction(scale)
        return v

    def __add__(self, other):
        out = CycVec(self.D)
        out.c = [a + b for a, b in zip(self.c, other.c)]
        return out

    def __sub__(self, other):
        out = CycVec(self.D)
        out.c = [a - b for a, b in zip(self.c, other.c)]
        return out

    def scaled(self, s) -> "CycVec":
        s = Fraction(s)
        out = CycVec(self.D)
        out.c = [a * s for a in self.c]
        return out

    def shifted(self, t: int) -> "CycVec":
        """Multiplication by zeta^t."""
        out = CycVec(self.D)
        for i, a in enumerate(self.c):
            out.c[(i + t) % self.D] = a
        return out

    def is_zero(self) -> bool:
        if all(a == 0 for a in self.c):
            return True
        rem = RealPoly(self.c).divmod(cyclotomic_polynomial(self.D))[1]
        return all(a == 0 for a in rem.coeffs)

    def to_complex(self) -> complex:
        return sum(float(a) * cmath.exp(-2j * math.pi * i / self.D)
                   for i, a in enumerate(self.c) if a != 0) + 0j


def _root_multiplicity(p: RealPoly, kappa, tol: float) -> int:
    """Multiplicity of kappa (complex or exact angle) as a root of p."""
    if is_exact(kappa) and p.is_exact:
        angles = unit_circle_angles(p) if p.is_integer else None
        if angles is not None:
            for b, m in angles:
                if is_exact(b) and mod1(b) == mod1(Fraction(kappa)):
                    return m
            return 0
        kappa = angle_to_point(kappa)
    z = complex(kappa) if not is_exact(kappa) else angle_to_point(kappa)
    q = p
    m = 0
    scale = max(abs(float(c)) for c in p.coeffs)
    while q.degree >= 0 and abs(complex(q(z))) <= tol * max(scale, 1.0):
        m += 1
        if q.degree == 0:
            break
        q = q.derivative()
    return m


def jordan_chain_vectors(p: RealPoly, kappa, l: int, tol: float = 1e-8):
    """Jordan chain v_0..v_l of the companion matrix of p at the root kappa.

    ``kappa`` is either a complex number or an exact angle (Fraction), in
    which case the defining relation (kappa^{-1} R - E) v_j = j v_{j-1}
    is verified in exact cyclotomic arithmetic.  The vectors returned are
    complex numpy arrays; entry t (from the top, t = n-1 .. 0) of v_j is
    ``falling_factorial(t, j) * kappa^t``.
    """
    n = p.degree
    if _root_multiplicity(p, kappa, tol) < l + 1:
        raise MultiplicityTooLow(f"root has multiplicity < {l + 1}")
    exact_angle = is_exact(kappa) and p.is_exact
    z = angle_to_point(kappa) if is_exact(kappa) else complex(kappa)
    vectors = []
    for j in range(l + 1):
        v = np.zeros(n, dtype=complex)
        for t in range(n - 1, j - 1, -1):
            v[n - 1 - t] = falling_factorial(t, j) * z ** t
        vectors.append(v)

    R = companion_matrix(p)
    if exact_angle:
        b = mod1(Fraction(kappa))
        D = b.denominator if b != 0 else 1
        a = b.numerator % D
        # exact vectors over Q(zeta_D); kappa = zeta^a, kappa^{-1} = zeta^{-a}
        ev = []
        for j in range(l + 1):
            col = [CycVec.root_power(D, (a * t) % D, falling_factorial(t, j))
                   if t >= j else CycVec(D)
                   for t in range(n - 1, -1, -1)]
            ev.append(col)
        Rq = [[Fraction(R[i, j2]) for j2 in range(n)] for i in range(n)]
        for j in range(1, l + 1):
            for i in range(n):
                acc = CycVec(D)
                for t in range(n):
                    if Rq[i][t] != 0:
                        acc = acc + ev[j][t].scaled(Rq[i][t])
                lhs = acc.shifted(-a) - ev[j][i]  # (kappa^{-1} R - E) v_j, row i
                if not (lhs - ev[j - 1][i].scaled(j)).is_zero():
                    raise AssertionError("exact Jordan chain relation failed")
        # j = 0: (kappa^{-1} R - E) v_0 = 0
        for i in range(n):
            acc = CycVec(D)
            for t in range(n):
                if Rq[i][t] != 0:
                    acc = acc + ev[0][t].scaled(Rq[i][t])
            if not (acc.shifted(-a) - ev[0][i]).is_zero():
                raise AssertionError("exact eigenvector relation failed")
    else:
        Rf = np.array([[float(R[i, j2]) for j2 in range(n)] for i in range(n)])
        scale = max(np.abs(vectors[0]).max(), 1.0)
        for j in range(l + 1):
            prev = vectors[j - 1] if j > 0 else np.zeros(n, dtype=complex)
            resid = (Rf @ vectors[j]) / z - vectors[j] - j * prev
            if np.abs(resid).max() > tol * scale * n:
                raise AssertionError("numeric Jordan chain relation failed")
    return vectors


_COS_TABLE = {
    Fraction(1): Fraction(0),
    Fraction(1, 2): Fraction(1, 6),
    Fraction(0): Fraction(1, 4),
    Fraction(-1, 2): Fraction(1, 3),
    Fraction(-1): Fraction(1, 2),
}


def beta_from_cos(c):
    """Angle b in [0, 1/2] with cos(2*pi*b) = c; exact for the five rational
    cosine values (Niven), float otherwise."""
    if is_exact(c) and Fraction(c) in _COS_TABLE:
        return _COS_TABLE[Fraction(c)]
    return math.acos(float(c)) / TWO_PI


def alpha_from_sin(s):
    """Value a in [-1/2, 1/2] with sin(pi*a) = s; exact for s in
    {0, +-1/2, +-1}, float otherwise."""
    if is_exact(s):
        table = {Fraction(0): Fraction(0), Fraction(1, 2): Fraction(1, 6),
                 Fraction(-1, 2): Fraction(-1, 6), Fraction(1): Fraction(1, 2),
                 Fraction(-1): Fraction(-1, 2)}
        if Fraction(s) in table:
            return table[Fraction(s)]
    return math.asin(float(s)) / math.pi
