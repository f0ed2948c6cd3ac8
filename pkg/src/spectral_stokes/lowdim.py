"""Closed-form treatment of the 2x2 and 3x3 unit-triangular sets.

For n = 2 everything is a function of the single off-diagonal entry a
with |a| <= 2.  For n = 3 membership and the stratification are governed
by f(a1, a2, a3) = 4 + a1 a2 a3 - (a1^2 + a2^2 + a3^2): the set is
0 <= f <= 4, the monodromy characteristic polynomial is
(x - 1)(x^2 - (f - 2) x + 1), and the boundary pieces are told apart by
the exact signature of S + S^t together with the four cone points.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from . import matrices as mx
from .errors import OutOfFamily, OutOfT
from .polycore import (alpha_from_sin, beta_from_cos, is_exact, mod1)
from .seifert import IrrType
from .spectra import Spp, SppLadder


class Stratum3(str, Enum):
    IDENTITY = "Identity"
    INTERIOR_POS = "InteriorPos"
    BOUNDARY_POS_SPHERE = "BoundaryPosSphere"
    EXCEPTIONAL = "Exceptional"
    BOUNDARY_IND_CONE = "BoundaryIndCone"
    INTERIOR_IND = "InteriorInd"
    JORDAN3_BOUNDARY = "Jordan3Boundary"
    OUTSIDE = "Outside"


EXCEPTIONAL_POINTS = ((2, 2, 2), (-2, -2, 2), (-2, 2, -2), (2, -2, -2))


def s3_matrix(a) -> np.ndarray:
    a1, a2, a3 = a
    return mx.to_matrix([[1, a1, a3], [0, 1, a2], [0, 0, 1]])


def f3(a):
    """4 + a1 a2 a3 - (a1^2 + a2^2 + a3^2), exact for exact input."""
    a1, a2, a3 = a
    return 4 + a1 * a2 * a3 - (a1 * a1 + a2 * a2 + a3 * a3)


def member3(a) -> bool:
    v = f3(a)
    return 0 <= v <= 4


def char_poly3(a):
    """Characteristic polynomial of S^{-1}S^t: (x-1)(x^2-(f-2)x+1)."""
    from .polycore import RealPoly
    f = f3(a)
    return RealPoly([1, -(f - 2), 1]) * RealPoly([-1, 1])


@dataclass
class Classification3:
    stratum: Stratum3
    types: list            # IrrType multiset ([] for Outside)
    char_poly: object
    f: object


def _interior_pair_type(f, sign_flip: bool) -> IrrType:
    """F2complex summand with eigenvalue angle theta from
    2 cos(2 pi theta) = f - 2, invariant exp(pi i theta), negated on the
    indefinite components."""
    c = f - 2
    theta = beta_from_cos(Fraction(c, 2) if is_exact(c) else float(c) / 2.0)
    half = Fraction(1, 2) if is_exact(theta) else 0.5
    zeta = mod1(-theta / 2) if not sign_flip else mod1(-theta / 2 + half)
    return IrrType("F2complex", theta, 1, zeta=zeta)


def classify3(a) -> Classification3:
    """Stratum, irreducible types and monodromy polynomial of a 3x3 point.

    The f-value decides interior/boundary; on f = 0 the four cone points
    are exceptional and the remaining points split by the exact signature
    of S + S^t ((2,1,0) on the definite side, (1,1,1) on the indefinite
    side); f = 4 away from the identity is the triple-Jordan boundary.
    """
    a = tuple(a)
    f = f3(a)
    cp = char_poly3(a)
    one = IrrType("F1", Fraction(0), 1, eps=1)
    if f < 0 or f > 4:
        return Classification3(Stratum3.OUTSIDE, [], cp, f)
    S = s3_matrix(a)
    sym = S + S.T
    if f == 4:
        if all(x == 0 for x in a):
            return Classification3(Stratum3.IDENTITY, [one] * 3, cp, f)
        return Classification3(Stratum3.JORDAN3_BOUNDARY,
                               [IrrType("F1", Fraction(0), 3, eps=1)], cp, f)
    if f == 0:
        if a in EXCEPTIONAL_POINTS:
            return Classification3(Stratum3.EXCEPTIONAL,
                                   [one, IrrType("F2real", Fraction(1, 2), 1)], cp, f)
        sig = mx.signature_exact(sym) if mx.is_exact_matrix(sym) \
            else mx.signature_numeric(np.asarray(sym, dtype=float))
        if sig == (2, 1, 0):
            return Classification3(Stratum3.BOUNDARY_POS_SPHERE,
                                   [one, IrrType("F1", Fraction(1, 2), 2, eps=1)], cp, f)
        if sig == (1, 1, 1):
            return Classification3(Stratum3.BOUNDARY_IND_CONE,
                                   [one, IrrType("F1", Fraction(1, 2), 2, eps=-1)], cp, f)
        raise AssertionError(f"unexpected boundary signature {sig} at {a}")
    sig = mx.signature_exact(sym) if mx.is_exact_matrix(sym) \
        else mx.signature_numeric(np.asarray(sym, dtype=float))
    if sig == (3, 0, 0):
        return Classification3(Stratum3.INTERIOR_POS,
                               [one, _interior_pair_type(f, False)], cp, f)
    if sig == (1, 0, 2):
        return Classification3(Stratum3.INTERIOR_IND,
                               [one, _interior_pair_type(f, True)], cp, f)
    raise AssertionError(f"unexpected interior signature {sig} at {a}")


def solve2(a):
    """(beta1, alpha1, spectral pairs, types) of the 2x2 member with
    off-diagonal entry a; exact whenever the angles are rational.

    beta1 in [0, 1/2] satisfies 2 cos(2 pi beta1) = -a, alpha1 in
    [-1/2, 1/2] satisfies 2 sin(pi alpha1) = a.  Raises OutOfT for
    |a| > 2.
    """
    if abs(float(a)) > 2:
        raise OutOfT(f"|{a}| > 2")
    half = Fraction(1, 2) if is_exact(a) else 0.5
    beta1 = beta_from_cos(Fraction(-a, 2) if is_exact(a) else -float(a) / 2.0)
    alpha1 = alpha_from_sin(Fraction(a, 2) if is_exact(a) else float(a) / 2.0)
    if abs(float(a)) == 2:
        spp = SppLadder(-half, 1, 1).members()
        types = [IrrType("F1", Fraction(1, 2), 2, eps=1)]
    elif float(a) == 0:
        spp = Spp([(0 * half, 1), (0 * half, 1)])
        types = [IrrType("F1", Fraction(0), 1, eps=1)] * 2
    else:
        spp = Spp([(alpha1, 1), (-alpha1, 1)])
        theta = mod1(alpha1) if float(alpha1) > 0 else mod1(-alpha1)
        zeta = mod1(-theta / 2)
        types = [IrrType("F2complex", theta, 1, zeta=zeta)]
    return beta1, alpha1, spp, types


def hor1_line3(p1):
    """The one-parameter slice of 3x3 members with constant band p1.

    Returns (beta tuple, alpha tuple, spectral pairs); p1 must lie in
    [-1, 3].  beta1 satisfies cos(2 pi beta1) = (1 - p1)/2 and increases
    with p1, as does alpha1 = 3 beta1 - 1/2.
    """
    from .hor import HorScal, recipe_spectral_pairs
    if not -1 <= float(p1) <= 3:
        raise OutOfFamily(f"band value {p1} outside [-1, 3]")
    c = Fraction(1 - p1, 2) if is_exact(p1) else (1 - float(p1)) / 2.0
    beta1 = beta_from_cos(c)
    half = Fraction(1, 2) if is_exact(beta1) else 0.5
    beta = (beta1, half, 1 - beta1)
    alpha = tuple(3 * b - j + half for j, b in enumerate(beta, start=1))
    b = HorScal(1, beta)
    spp = recipe_spectral_pairs(b)
    return beta, alpha, spp


def scan3(step=Fraction(1, 4), lo=-4, hi=4):
    """Classification of every grid point of [lo, hi]^3 inside the set.

    Yields (a, f, stratum, types)."""
    vals = []
    v = Fraction(lo)
    while v <= hi:
        vals.append(v)
        v += Fraction(step)
    for a1 in vals:
        for a2 in vals:
            for a3 in vals:
                a = (a1, a2, a3)
                if not member3(a):
                    continue
                c = classify3(a)
                yield a, c.f, c.stratum, c.types
