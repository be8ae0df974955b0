"""MWS code constructions.

Geometric families return :class:`~mwscodes.pg.ProjectiveSystem` objects and
are checked through hyperplane characters.  The algebraic induction works on
:class:`~mwscodes.code.LinearCode` objects and is checked by enumeration.
Every public constructor verifies its output before returning it.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

import numpy as np

from . import code as cd
from . import pg
from .code import LinearCode, RepetitionVector
from .errors import (
    LengthTooLarge,
    NotMWS,
    PairwiseVMismatch,
    PropertyAViolated,
    PropertyBViolated,
    PropertyViolated,
    UnsupportedQ,
    VerificationFailed,
)
from .gf import make_field

log = logging.getLogger(__name__)


def _checked(sys: pg.ProjectiveSystem, what: str) -> pg.ProjectiveSystem:
    if not cd.mws_via_characters(sys).mws:
        raise VerificationFailed(f"{what} produced a system with repeated characters")
    return sys


# -- geometric families ---------------------------------------------------------

def geometric(q: int, k: int) -> pg.ProjectiveSystem:
    """Every point P_i of PG(k-1,q), in canonical order, with multiplicity 2^i."""
    if k < 2:
        raise ValueError("geometric construction needs k >= 2")
    pts = pg.enumerate_points(q, k)
    return _checked(pg.ProjectiveSystem(q, k, {p: 1 << i for i, p in enumerate(pts)}),
                    "geometric")


def optimal_k2(q: int) -> pg.ProjectiveSystem:
    """Point i of the projective line gets multiplicity i; length q(q+1)/2."""
    pts = pg.enumerate_points(q, 2)
    return _checked(pg.ProjectiveSystem(q, 2, {p: i for i, p in enumerate(pts)}), "optimal_k2")


def fano_732() -> pg.ProjectiveSystem:
    """Triangle e1, e2, e3 of the Fano plane with multiplicities 1, 2, 4."""
    mults = {(1, 0, 0): 1, (0, 1, 0): 2, (0, 0, 1): 4}
    return _checked(pg.ProjectiveSystem(2, 3, mults), "fano_732")


# Affine grid of the PG(2,3) diagram, keyed by (x, y) in {-1,0,1}^2, plus the
# four points at infinity keyed by direction.  Affine (x, y) is [1 : x : y].
_PLANE_3233_GRID = {
    (-1, 1): 1, (0, 1): 2, (1, 1): 3,
    (-1, 0): 1, (0, 0): 0, (1, 0): 0,
    (-1, -1): 8, (0, -1): 4, (1, -1): 1,
}
_PLANE_3233_IDEAL = {(1, 0): 0, (1, 1): 0, (1, -1): 0, (0, 1): 12}


def plane_3233() -> pg.ProjectiveSystem:
    """The [32,3]_3 system read off the affine-grid picture of PG(2,3)."""
    mults = {(1, x % 3, y % 3): m for (x, y), m in _PLANE_3233_GRID.items()}
    mults.update({(0, dx % 3, dy % 3): m for (dx, dy), m in _PLANE_3233_IDEAL.items()})
    return _checked(pg.ProjectiveSystem(3, 3, mults), "plane_3233")


def triangle_3d(q: int) -> pg.ProjectiveSystem:
    """Weighted triangle in PG(2,q), q > 3.

    With P=e1, Q=e2, R=e3 the off-vertex points of <P,R>, <P,Q>, <Q,R> are
    P_i, Q_i, R_i (canonical order) and carry i, i*q, i*q^2.  For odd q the
    point R_{(q-1)/2} is emptied and its weight moves to the vertex P.
    """
    if q <= 3:
        raise UnsupportedQ("triangle_3d needs q > 3; use fano_732 / plane_3233")
    F = make_field(q)
    nonzero = sorted(F.elements())[1:]
    mults: dict[tuple[int, ...], int] = {}
    for i, a in enumerate(nonzero, start=1):
        mults[(1, 0, a)] = i          # P_i on <P,R>
        mults[(1, a, 0)] = i * q      # Q_i on <P,Q>
        mults[(0, 1, a)] = i * q * q  # R_i on <Q,R>
    if q % 2:
        half = (q - 1) // 2
        mults[(0, 1, nonzero[half - 1])] = 0
        mults[(1, 0, 0)] = half * q * q
    return _checked(pg.ProjectiveSystem(q, 3, mults), "triangle_3d")


def lift_apex_weight(q: int, k: int, t: int) -> int:
    return q ** (t + k) if q % 2 and k % 2 == 0 else 0


def lift_length(n: int, q: int, k: int, t: int) -> int:
    """Length after :func:`lift` of an [n,k]_q system with parameter t."""
    return (n + sum(i * q ** (t + j) for j in range(k) for i in range(1, q))
            + lift_apex_weight(q, k, t))


def lift(sys: pg.ProjectiveSystem, t: int | None = None) -> pg.ProjectiveSystem:
    """Raise the dimension of an MWS system by one.

    PG(k-1,q) becomes the hyperplane x_k = 0 of PG(k,q).  With T_j = e_j and
    P = e_k, the point T_j + alpha^i P gets multiplicity i * q^(t+j).
    ``t`` defaults to the least value with n < q^t.

    For odd q and even k, a hyperplane through P containing every other line
    <P, T_j> carries (q-1)/2 into exactly the digits a hyperplane missing P
    can show, so P itself gets weight q^(t+k) to lift all hyperplanes through
    P above the rest.  N < q^(t+k+1) still holds.
    """
    q, k, n = sys.q, sys.k, sys.n
    if k < 2:
        raise ValueError("lift needs k >= 2")
    if t is None:
        t = 0
        while q**t <= n:
            t += 1
    if n >= q**t:
        raise LengthTooLarge(f"n={n} is not below q^t={q**t}")
    if not pg.spans(sys):
        raise NotMWS("support does not span the ambient space")
    if not cd.mws_via_characters(sys).mws:
        raise NotMWS("input system has repeated hyperplane characters")
    F = sys.field
    mults = {pt + (0,): m for pt, m in sys.mults.items()}
    for j in range(k):
        for i in range(1, q):
            pt = tuple(1 if c == j else 0 for c in range(k)) + (F.alpha_pow(i),)
            mults[pt] = i * q ** (t + j)
    apex = lift_apex_weight(q, k, t)
    if apex:
        mults[(0,) * k + (1,)] = apex
    out = pg.ProjectiveSystem(q, k + 1, mults)
    assert out.n == lift_length(n, q, k, t)
    return _checked(out, "lift")


def projective_chain(q: int, k: int) -> list[pg.ProjectiveSystem]:
    """Systems for dimensions 3..k: the k=3 plane, then repeated lifts."""
    if k < 3:
        raise ValueError("chain starts at k=3")
    start = {2: fano_732, 3: plane_3233}.get(q)
    chain = [start() if start else triangle_3d(q)]
    while chain[-1].k < k:
        chain.append(lift(chain[-1]))
    return chain


# -- hyperplane avoidance ----------------------------------------------------------

def _primitive_rows(rows: np.ndarray) -> np.ndarray:
    """Divide each integer row by its gcd and make the first nonzero entry positive."""
    if rows.size == 0:
        return rows.reshape(0, rows.shape[1] if rows.ndim == 2 else 0)
    g = np.gcd.reduce(np.abs(rows), axis=1)
    g[g == 0] = 1
    rows = rows // g[:, None]
    lead = np.take_along_axis(rows, (rows != 0).argmax(axis=1)[:, None], axis=1)
    return rows * np.where(lead < 0, -1, 1)


def _dedup(rows: np.ndarray) -> list[tuple[int, ...]]:
    if len(rows) == 0:
        return []
    return [tuple(int(x) for x in r) for r in np.unique(_primitive_rows(rows), axis=0)]


@dataclass(frozen=True)
class HyperplaneAvoidanceProblem:
    """Integer normals r must avoid: r . v != 0 for every v in ``normals``.

    ``x1`` holds the codeword-pair normals, ``x2`` the per-codeword ones;
    ``normals`` is their union, deduplicated up to sign and scaling.
    """

    q: int
    x1: tuple[tuple[int, ...], ...]
    x2: tuple[tuple[int, ...], ...]
    normals: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self):
        union = _dedup(np.array(list(self.x1) + list(self.x2), dtype=np.int64)
                       .reshape(-1, self.q - 1))
        if any(not any(v) for v in union):
            raise ValueError("zero normal in avoidance problem")
        object.__setattr__(self, "normals", tuple(union))

    @classmethod
    def from_normals(cls, q: int, normals: Sequence[Sequence[int]]):
        return cls(q, tuple(tuple(v) for v in normals), ())

    @property
    def D(self) -> int:
        return len(self.normals)


def _rotated_counts(C: LinearCode, words: np.ndarray, i: int) -> np.ndarray:
    """Rows (c[alpha^(i-1)], c[alpha^(i-2)], ..., c[alpha^(i-q+1)])."""
    F = C.field
    counts = cd._count_rows(F, words)
    cols = [F.alpha_pow(i - j) for j in range(1, F.q)]
    return counts[:, cols]


def build_avoidance_problem(C: LinearCode) -> HyperplaneAvoidanceProblem:
    """Normals whose hyperplanes r must avoid so C(r) has properties (A) and (B)."""
    F = C.field
    q = F.q
    if q < 3:
        raise UnsupportedQ("avoidance problems are defined for q >= 3")
    words = cd.all_codewords(C)
    nz = words[words.any(axis=1)]
    counts = cd._count_rows(F, nz)
    zero_col = counts[:, [0]]
    x2_parts = []
    for ell in range(1, q):
        shifted_l = counts[:, [F.alpha_pow(ell - j) for j in range(1, q)]]
        x2_parts.append(shifted_l - zero_col)
        for i in range(1, ell):
            shifted_i = counts[:, [F.alpha_pow(i - j) for j in range(1, q)]]
            x2_parts.append(shifted_i - shifted_l)
    x2 = np.concatenate(x2_parts) if x2_parts else np.zeros((0, q - 1), dtype=np.int64)
    if len(x2) and (x2 == 0).all(axis=1).any():
        raise PropertyBViolated("a nonzero codeword has repeated entry counts")
    U = _rotated_counts(C, words, 1)
    a_idx, b_idx = np.triu_indices(len(U), k=1)
    x1 = U[a_idx] - U[b_idx]
    if (x1 == 0).all(axis=1).any():
        raise PairwiseVMismatch("two distinct codewords share an entry distribution")
    return HyperplaneAvoidanceProblem(q, tuple(_dedup(x1)), tuple(_dedup(x2)))


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Non-negative vectors of length ``parts`` summing to ``total``, lexicographically."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def sz_budget(D: int, q: int) -> int:
    """Upper bound on box vectors in D hyperplanes with side m = D."""
    m = max(D, 2)
    return D * (m ** (q - 2) - 1)


def _avoids(normals: np.ndarray, cand: np.ndarray) -> np.ndarray:
    if normals.size == 0:
        return np.ones(len(cand), dtype=bool)
    return (cand @ normals.T != 0).all(axis=1)


def find_r(problem: HyperplaneAvoidanceProblem, max_candidates: int = 10**6) -> RepetitionVector:
    """Smallest-R vector avoiding every hyperplane, ties broken lexicographically.

    The exhaustive scan stops after ``min(max_candidates, sz_budget)``
    candidates; the Vandermonde vectors (1, t, ..., t^(q-2)) then finish the job.
    """
    q = problem.q
    normals = np.array(problem.normals, dtype=np.int64).reshape(-1, q - 1)
    budget = min(max_candidates, max(sz_budget(problem.D, q), 1))
    seen = 0
    R = 1
    while seen < budget:
        gen = compositions(R, q - 1)
        while True:
            batch = list(itertools.islice(gen, min(4096, budget - seen)))
            if not batch:
                break
            seen += len(batch)
            ok = _avoids(normals, np.array(batch, dtype=np.int64))
            if ok.any():
                return RepetitionVector(batch[int(ok.argmax())])
            if seen >= budget:
                break
        R += 1
    log.info("find_r: exhaustive budget %d spent, using Vandermonde fallback", budget)
    return vandermonde_r(problem)


def vandermonde_r(problem: HyperplaneAvoidanceProblem) -> RepetitionVector:
    q = problem.q
    for t in itertools.count(1):
        cand = [t**e for e in range(q - 1)]
        if all(sum(a * b for a, b in zip(cand, v)) != 0 for v in problem.normals):
            return RepetitionVector(tuple(cand))
    raise AssertionError("unreachable")


# -- dimension steps ------------------------------------------------------------------

def extend_dim_1(C: LinearCode) -> LinearCode:
    """[n,k] MWS with (A)  ->  [2n+1, k+1] MWS: pad with zeros, add all-ones."""
    if not cd.property_A(C):
        raise PropertyAViolated("extend_dim_1 needs property (A)")
    if not cd.is_mws(C):
        raise NotMWS("extend_dim_1 needs an MWS code")
    n = C.n
    top = np.concatenate([C.G, np.zeros((C.k, n + 1), dtype=np.int64)], axis=1)
    out = LinearCode(C.field, np.vstack([top, np.ones((1, 2 * n + 1), dtype=np.int64)]))
    if not cd.is_mws(out):
        raise VerificationFailed("extend_dim_1 output is not MWS")
    return out


def extend_dim_2_length(n: int, q: int, T: int) -> int:
    return (q - 1) * n + (q - 2) + (T + 1) * (q - 2) * (q - 3) // 2


def extend_dim_2(C: LinearCode, T: int | None = None) -> LinearCode:
    """[n,k] MWS with (A), (B)  ->  [N, k+1] MWS with (B), for q >= 3.

    The new row is 1 (n times), then alpha^i repeated n+1+(i-1)(T+1) times
    for i = 1..q-2.
    """
    F = C.field
    q = F.q
    if q < 3:
        raise UnsupportedQ("extend_dim_2 needs q >= 3")
    if not cd.property_A(C):
        raise PropertyAViolated("extend_dim_2 needs property (A)")
    if not cd.property_B(C):
        raise PropertyBViolated("extend_dim_2 needs property (B)")
    actual = cd.max_entry_count(C)
    if T is None:
        T = actual
    elif T < actual:
        raise PropertyViolated(f"T={T} is below the largest entry count {actual}")
    n = C.n
    x = [1] * n
    for i in range(1, q - 1):
        x += [F.alpha_pow(i)] * (n + 1 + (i - 1) * (T + 1))
    N = len(x)
    assert N == extend_dim_2_length(n, q, T)
    top = np.concatenate([C.G, np.zeros((C.k, N - n), dtype=np.int64)], axis=1)
    out = LinearCode(F, np.vstack([top, np.array(x, dtype=np.int64)[None, :]]))
    if not cd.is_mws(out) or not cd.property_B(out):
        raise VerificationFailed("extend_dim_2 output lost MWS or (B)")
    return out


# -- algebraic induction -----------------------------------------------------------------

def base_code(q: int) -> LinearCode:
    """[q(q-1)/2, 1] code generated by alpha^i repeated i+1 times, i = 0..q-2."""
    F = make_field(q)
    c = [F.alpha_pow(i) for i in range(q - 1) for _ in range(i + 1)]
    return LinearCode(F, [c])


@dataclass
class AlgebraicState:
    """One dimension of the induction.

    ``repeated`` is C_k(r_k); ``T`` its largest nonzero entry count.  The
    final state of a run has ``r`` and ``repeated`` set to None.
    """

    k: int
    code: LinearCode
    r: RepetitionVector | None = None
    repeated: LinearCode | None = None
    T: int | None = None
    D: int | None = None

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def R(self) -> int | None:
        return None if self.r is None else self.r.R


def algebraic(q: int, k: int, r_overrides: Mapping[int, Sequence[int]] | None = None,
              final_step: str = "dim2", max_candidates: int = 10**6) -> list[AlgebraicState]:
    """Run the induction up to dimension k and return every intermediate state.

    ``r_overrides`` maps a dimension to a repetition vector to use instead of
    the search result (it must still avoid every hyperplane).  With
    ``final_step="dim1"`` the last dimension step pads with zeros and adds the
    all-ones word, which keeps MWS but not (B).
    """
    if q < 3:
        raise UnsupportedQ("the algebraic construction needs q >= 3")
    if k < 1:
        raise ValueError("k must be >= 1")
    if final_step not in ("dim1", "dim2"):
        raise ValueError("final_step must be 'dim1' or 'dim2'")
    r_overrides = dict(r_overrides or {})
    states = []
    C = base_code(q)
    for dim in range(1, k + 1):
        state = AlgebraicState(dim, C)
        states.append(state)
        if not cd.is_mws(C):
            raise VerificationFailed(f"C_{dim} is not MWS")
        if dim == k:
            break
        if not cd.property_B(C):
            raise VerificationFailed(f"C_{dim} lost property (B)")
        problem = build_avoidance_problem(C)
        state.D = problem.D
        if dim in r_overrides:
            r = RepetitionVector(tuple(r_overrides[dim]))
            cand = np.array([r.r], dtype=np.int64)
            normals = np.array(problem.normals, dtype=np.int64).reshape(-1, q - 1)
            if not _avoids(normals, cand)[0]:
                raise PropertyViolated(f"r={r.r} lies on an avoidance hyperplane")
        else:
            r = find_r(problem, max_candidates)
        Cr = cd.repetition_code(C, r)
        if not (cd.property_A(Cr) and cd.property_B(Cr)):
            raise VerificationFailed(f"C_{dim}(r) misses (A) or (B)")
        state.r, state.repeated = r, Cr
        state.T = cd.max_entry_count(Cr)
        log.debug("k=%d n=%d r=%s T=%d", dim, C.n, r.r, state.T)
        if dim + 1 == k and final_step == "dim1":
            C = extend_dim_1(Cr)
        else:
            C = extend_dim_2(Cr, state.T)
    return states
