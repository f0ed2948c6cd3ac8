"""Sign-group and basis-mutation actions on unit-triangular matrices,
orbit exploration, desk-scale conjecture experiments, and eigenvalue
tracking along user paths.

The sign group {+-1}^n acts by diagonal conjugation; the mutation at
position i replaces the basis pair (v_i, v_{i+1}) by
(v_{i+1} - s_{i,i+1} v_i, v_i), which keeps the Gram matrix
unit-triangular and the monodromy class unchanged.  Both actions
preserve the characteristic polynomial of S^{-1} S^t.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np
import scipy.optimize

from . import matrices as mx
from .errors import LeftT
from .polycore import point_to_angle


def sign_act(eps, S: np.ndarray) -> np.ndarray:
    """diag(eps) S diag(eps) for eps in {+-1}^n."""
    n = S.shape[0]
    eps = tuple(eps)
    assert len(eps) == n and all(e in (1, -1) for e in eps)
    out = S.copy()
    for i in range(n):
        for j in range(n):
            out[i, j] = eps[i] * eps[j] * S[i, j]
    return out


def braid_act(i: int, S: np.ndarray, direction: int = 1) -> np.ndarray:
    """Basis mutation at positions (i, i+1), 1-based; direction -1 is the
    inverse move.  Unit-triangularity is restored exactly; the (i, i+1)
    entry flips sign and the monodromy stays similar.
    """
    n = S.shape[0]
    assert 1 <= i <= n - 1
    exact = mx.is_exact_matrix(S)
    G = S.T.copy()
    c = S[i - 1, i]
    B = mx.identity(n, exact) if exact else np.eye(n)
    if direction == 1:
        # v_i' = v_{i+1} - c v_i, v_{i+1}' = v_i
        B[i - 1, i - 1] = -c
        B[i, i - 1] = 1
        B[i - 1, i] = 1
        B[i, i] = 0
    else:
        # v_i' = v_{i+1}, v_{i+1}' = v_i - c v_{i+1}
        B[i - 1, i - 1] = 0
        B[i, i - 1] = 1
        B[i - 1, i] = 1
        B[i, i] = -c
    G2 = B.T.copy().dot(G).dot(B)
    S2 = G2.T.copy()
    assert mx.is_unit_upper_triangular(S2, tol=1e-9), "mutation must preserve the shape"
    return S2


def matrix_key(S: np.ndarray) -> tuple:
    return tuple(tuple(S[i, j] for j in range(S.shape[1]))
                 for i in range(S.shape[0]))


def sign_canonical(S: np.ndarray) -> tuple:
    """Lexicographically smallest entry tuple over the sign orbit
    (eps and -eps act identically, so eps_1 = +1 is fixed)."""
    n = S.shape[0]
    best = None
    for mask in range(1 << (n - 1)):
        eps = [1] + [1 if (mask >> t) & 1 == 0 else -1 for t in range(n - 1)]
        key = matrix_key(sign_act(eps, S))
        if best is None or key < best:
            best = key
    return best


@dataclass
class OrbitReport:
    nodes: set
    exhausted: bool
    generations: int


def orbit_explore(S: np.ndarray, depth: int = 6, budget: int = 10000) -> OrbitReport:
    """Bounded breadth-first exploration of the mutation/sign orbit.

    Nodes are canonicalised by the smallest sign-orbit representative;
    the characteristic polynomial of the monodromy is asserted invariant
    on every node.  ``exhausted`` reports whether the walk was cut off
    by depth or budget (orbits may be infinite).
    """
    n = S.shape[0]
    start = sign_canonical(S)
    base_cp = mx.char_poly_exact(mx.solve_unit_upper(S, S.T.copy())) \
        if mx.is_exact_matrix(S) else None
    seen = {start}
    frontier = deque([(start, 0)])
    exhausted = False
    gens = 0
    while frontier:
        key, d = frontier.popleft()
        gens = max(gens, d)
        if d >= depth:
            exhausted = True
            continue
        cur = mx.to_matrix([list(r) for r in key])
        for i in range(1, n):
            for direction in (1, -1):
                nxt = braid_act(i, cur, direction)
                if base_cp is not None:
                    cp = mx.char_poly_exact(mx.solve_unit_upper(nxt, nxt.T.copy()))
                    assert cp == base_cp, "mutation changed the monodromy class"
                ck = sign_canonical(nxt)
                if ck not in seen:
                    if len(seen) >= budget:
                        exhausted = True
                        continue
                    seen.add(ck)
                    frontier.append((ck, d + 1))
    return OrbitReport(seen, exhausted, gens)


# ---------------------------------------------------------------------------
# eigenvalue-stratum experiment
# ---------------------------------------------------------------------------

@dataclass
class Conjecture16Report:
    groups: dict          # char poly coeffs -> list of (label, spectrum)
    violations: list      # (coeffs, label1, sp1, label2, sp2)

    def to_json(self):
        return {
            "groups": [
                {"char_poly": [str(c) for c in key],
                 "members": [{"label": lab, "spectrum": [str(x) for x in sp]}
                             for lab, sp in vals]}
                for key, vals in sorted(self.groups.items())
            ],
            "violations": [
                {"char_poly": [str(c) for c in key], "a": la, "b": lb,
                 "sp_a": [str(x) for x in sa], "sp_b": [str(x) for x in sb]}
                for key, la, sa, lb, sb in self.violations
            ],
        }


def conjecture16_check(pool) -> Conjecture16Report:
    """Group banded family members by the characteristic polynomial of
    S^{-1} S^t and compare spectra inside each group.

    ``pool`` is a list of (label, HorMatrix).  Agreement everywhere
    supports the eigenvalue-stratum expectation; any violation is
    reported with full data, never suppressed.
    """
    from .hor import matrix_to_scal, recipe_spectrum

    groups: dict = {}
    for label, M in pool:
        mono = mx.solve_unit_upper(M.S, M.S.T.copy())
        cp = mx.char_poly_exact(mono) if mx.is_exact_matrix(M.S) else None
        key = cp.coeffs if cp is not None else tuple(
            round(float(c), 9) for c in np.poly(np.asarray(mono, dtype=float))[::-1])
        sp = sorted(recipe_spectrum(matrix_to_scal(M)), key=float)
        groups.setdefault(key, []).append((label, sp))
    violations = []
    for key, vals in groups.items():
        ref_label, ref = vals[0]
        for lab, sp in vals[1:]:
            same = len(sp) == len(ref) and all(
                (x == y if not isinstance(x, float) and not isinstance(y, float)
                 else abs(float(x) - float(y)) <= 1e-9)
                for x, y in zip(sp, ref))
            if not same:
                violations.append((key, ref_label, ref, lab, sp))
    return Conjecture16Report(groups, violations)


# ---------------------------------------------------------------------------
# tracking along arbitrary paths
# ---------------------------------------------------------------------------

@dataclass
class GenericTrack:
    times: np.ndarray
    alphas: np.ndarray
    collisions: list          # (r, i, j) tracked indices that met
    path_dependent: bool

    @property
    def endpoint(self):
        return list(self.alphas[-1])


def generic_path_track(path, steps: int = 256, circle_tol: float = 1e-6,
                       collision_tol: float = 1e-6) -> GenericTrack:
    """Continue the n eigenvalue angles of S^{-1} S^t along a piecewise
    linear path of unit upper-triangular matrices, starting from the
    identity matrix with all angles 0.

    Every sample must stay in the unit-circle-eigenvalue set (LeftT is
    raised otherwise).  Parameters where two tracked angles collide are
    reported; results are flagged path/choice dependent in that case.
    """
    mats = [np.asarray(S, dtype=float) for S in path]
    n = mats[0].shape[0]
    if not np.allclose(mats[0], np.eye(n)):
        raise ValueError("path must start at the identity matrix")
    times = np.linspace(0.0, 1.0, steps + 1)
    segs = len(mats) - 1
    current = np.zeros(n)
    lifts = np.empty((steps + 1, n))
    lifts[0] = current
    collisions = []
    # a collision is a genuine meeting: strands that start together (all
    # angles vanish at the identity) are not ambiguous until they separate
    separated = np.zeros((n, n), dtype=bool)
    for s, t in enumerate(times[1:], start=1):
        x = t * segs
        seg = min(int(x), segs - 1)
        loc = x - seg
        S = (1 - loc) * mats[seg] + loc * mats[seg + 1]
        if not mx.is_unit_upper_triangular(S, tol=1e-7):
            raise LeftT(t, "sample is not unit upper triangular")
        eig = np.linalg.eigvals(np.linalg.solve(S, S.T))
        if np.any(np.abs(np.abs(eig) - 1.0) > circle_tol):
            worst = float(np.max(np.abs(np.abs(eig) - 1.0)))
            raise LeftT(t, f"eigenvalue off the circle by {worst:.2e}")
        ang = np.array([point_to_angle(z) for z in eig])
        cost = np.abs(current[:, None] % 1.0 - ang[None, :])
        cost = np.minimum(cost, 1.0 - cost)
        rows, cols = scipy.optimize.linear_sum_assignment(cost)
        nxt = current.copy()
        for i, j in zip(rows, cols):
            d = (ang[j] - current[i] + 0.5) % 1.0 - 0.5
            nxt[i] = current[i] + d
        for i in range(n):
            for j in range(i + 1, n):
                close = abs((nxt[i] - nxt[j] + 0.5) % 1.0 - 0.5) < collision_tol
                if close and separated[i, j]:
                    collisions.append((float(t), i, j))
                elif not close:
                    separated[i, j] = True
        current = nxt
        lifts[s] = current
    # the lifted angle of an eigenvalue exp(-2 pi i alpha) is alpha itself
    return GenericTrack(times, lifts, collisions, bool(collisions))
