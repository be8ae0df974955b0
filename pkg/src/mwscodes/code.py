"""Linear codes over GF(q): weights, entry distributions, repetition codes.

A :class:`LinearCode` stores its generator matrix as a read-only numpy array
of element encodings.  Codewords are numpy rows.  Everything that scans the
code goes through chunked matrix products so memory stays bounded.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import pg
from .errors import (
    DegenerateCode,
    DimensionMismatch,
    TooLargeToEnumerate,
    TooLongToMaterialize,
    ZeroRepetition,
)
from .gf import FieldSpec, make_field

MAX_REPRESENTATIVES = 10**7
MAX_CODEWORDS = 10**7
MAX_LENGTH = 10**8
_CHUNK_CELLS = 1 << 22


class LinearCode:
    """A k-dimensional subspace of GF(q)^n given by a k x n generator matrix."""

    def __init__(self, field: FieldSpec | int, G, *, allow_degenerate: bool = False,
                 check_rank: bool = True):
        F = make_field(field) if isinstance(field, int) else field
        G = np.array(G, dtype=np.int64)
        if G.ndim == 1:
            G = G[None, :]
        if G.ndim != 2 or G.shape[0] < 1 or G.shape[1] < 1:
            raise DimensionMismatch(f"bad generator shape {G.shape}")
        if G.min() < 0 or G.max() >= F.q:
            raise ValueError(f"generator entries must lie in [0, {F.q})")
        G.setflags(write=False)
        self.field = F
        self.G = G
        if check_rank and pg.rank(F, G.tolist()) != self.k:
            raise ValueError("generator rows are linearly dependent")
        if not allow_degenerate and not G.any(axis=0).all():
            raise DegenerateCode("generator matrix has an all-zero column")

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def k(self) -> int:
        return self.G.shape[0]

    @property
    def n(self) -> int:
        return self.G.shape[1]

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}]_{self.q})"

    def __eq__(self, other):
        return (isinstance(other, LinearCode) and self.field == other.field
                and np.array_equal(self.G, other.G))

    def __hash__(self):
        return hash((self.q, self.G.tobytes()))

    def encode(self, messages) -> np.ndarray:
        """Rows ``v G`` for every message row ``v``."""
        F = self.field
        V = np.asarray(messages, dtype=np.int64).reshape(-1, self.k)
        out = np.zeros((V.shape[0], self.n), dtype=np.int64)
        for i in range(self.k):
            col = V[:, i:i + 1]
            if col.any():
                out = F.vadd(out, F.vmul(col, self.G[i][None, :]))
        return out


def _chunk_rows(C: LinearCode) -> int:
    return max(1, _CHUNK_CELLS // max(C.n, 1))


def _messages(q: int, k: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    powers = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % q


def iter_codeword_chunks(C: LinearCode) -> Iterator[np.ndarray]:
    """All q^k codewords (the zero word first), in message-index order."""
    total = C.q**C.k
    if total > MAX_CODEWORDS:
        raise TooLargeToEnumerate(f"{total} codewords exceed the guard {MAX_CODEWORDS}")
    step = _chunk_rows(C)
    for start in range(0, total, step):
        yield C.encode(_messages(C.q, C.k, start, min(total, start + step)))


def all_codewords(C: LinearCode) -> np.ndarray:
    return np.concatenate(list(iter_codeword_chunks(C)))


def iter_representative_chunks(C: LinearCode) -> Iterator[np.ndarray]:
    count = pg.theta(C.q, C.k - 1)
    if count > MAX_REPRESENTATIVES:
        raise TooLargeToEnumerate(f"{count} representatives exceed the guard")
    pts = pg.point_array(C.q, C.k)
    step = _chunk_rows(C)
    for start in range(0, count, step):
        yield C.encode(pts[start:start + step])


def codeword_representatives(C: LinearCode) -> Iterator[np.ndarray]:
    """One nonzero codeword ``vG`` per canonical message point ``v``."""
    for chunk in iter_representative_chunks(C):
        yield from chunk


def weight(c) -> int:
    return int(np.count_nonzero(np.asarray(c)))


def representative_weights(C: LinearCode) -> np.ndarray:
    return np.concatenate([np.count_nonzero(ch, axis=1) for ch in iter_representative_chunks(C)])


def weight_set(C: LinearCode) -> list[int]:
    """Sorted distinct weights of the nonzero codewords."""
    return sorted(set(representative_weights(C).tolist()))


def is_mws(C: LinearCode) -> bool:
    return len(weight_set(C)) == pg.theta(C.q, C.k - 1)


def weight_distribution(C: LinearCode) -> list[int]:
    """``A[i]`` = number of codewords of weight i, for i = 0..n, over all q^k words."""
    A = np.zeros(C.n + 1, dtype=np.int64)
    for chunk in iter_codeword_chunks(C):
        A += np.bincount(np.count_nonzero(chunk, axis=1), minlength=C.n + 1)
    return A.tolist()


# -- entry distributions ----------------------------------------------------

def _count_rows(F: FieldSpec, words: np.ndarray) -> np.ndarray:
    """Per-row counts of each field value, columns indexed by encoding."""
    words = np.atleast_2d(words)
    if F.q <= 64:
        return np.stack([(words == v).sum(axis=1) for v in range(F.q)], axis=1)
    offs = words + (np.arange(words.shape[0])[:, None] * F.q)
    return np.bincount(offs.ravel(), minlength=words.shape[0] * F.q).reshape(-1, F.q)


def _v_order(F: FieldSpec) -> np.ndarray:
    # slot order (alpha^1, ..., alpha^(q-1), 0)
    return np.array([F.alpha_pow(i) for i in range(1, F.q)] + [0], dtype=np.int64)


def distributions(F: FieldSpec, words) -> np.ndarray:
    """Row-wise entry distribution vectors, one per codeword row."""
    return _count_rows(F, np.asarray(words, dtype=np.int64))[:, _v_order(F)]


def distribution(c, F: FieldSpec | int) -> tuple[int, ...]:
    """V(c) = (c[alpha], c[alpha^2], ..., c[alpha^(q-1)], c[0])."""
    F = make_field(F) if isinstance(F, int) else F
    return tuple(int(x) for x in distributions(F, np.asarray(c)[None, :])[0])


def count_of(c, value: int) -> int:
    """c[value]: number of coordinates equal to ``value``."""
    return int(np.count_nonzero(np.asarray(c) == value))


# -- repetition codes ---------------------------------------------------------

@dataclass(frozen=True)
class RepetitionVector:
    r: tuple[int, ...]

    def __post_init__(self):
        r = tuple(int(x) for x in self.r)
        if any(x < 0 for x in r):
            raise ValueError("repetition counts must be non-negative")
        if not any(r):
            raise ZeroRepetition("repetition vector is identically zero")
        object.__setattr__(self, "r", r)

    @property
    def R(self) -> int:
        return sum(self.r)

    def __iter__(self):
        return iter(self.r)

    def __len__(self):
        return len(self.r)


def repetition_code(C: LinearCode, r: RepetitionVector | Sequence[int]) -> LinearCode:
    """Generalized r-repetition: r_i copies of alpha^i * G, for i = 1..q-1."""
    if not isinstance(r, RepetitionVector):
        r = RepetitionVector(tuple(r))
    F = C.field
    if len(r) != F.q - 1:
        raise DimensionMismatch(f"repetition vector needs {F.q - 1} entries, got {len(r)}")
    blocks = []
    for i, reps in enumerate(r.r, start=1):
        if reps:
            scaled = F.vmul(F.alpha_pow(i), C.G)
            blocks.extend([scaled] * reps)
    return LinearCode(F, np.concatenate(blocks, axis=1), allow_degenerate=True,
                      check_rank=False)


# -- properties (A) and (B) ---------------------------------------------------

def property_A(C: LinearCode) -> bool:
    """True iff c -> c[alpha] is injective over all q^k codewords.

    Scaling permutes the code, so one beta is as good as any other.
    """
    a = C.field.alpha
    seen = np.concatenate([np.count_nonzero(ch == a, axis=1) for ch in iter_codeword_chunks(C)])
    return len(np.unique(seen)) == seen.size


def property_B(C: LinearCode) -> bool:
    """True iff every nonzero codeword has pairwise distinct V(c) entries."""
    F = C.field
    for chunk in iter_codeword_chunks(C):
        V = np.sort(distributions(F, chunk), axis=1)
        nonzero = chunk.any(axis=1)
        ties = (np.diff(V, axis=1) == 0).any(axis=1)
        if (ties & nonzero).any():
            return False
    return True


def max_entry_count(C: LinearCode) -> int:
    """T = max of c[beta] over nonzero codewords c and nonzero beta."""
    F = C.field
    best = 0
    for chunk in iter_representative_chunks(C):
        best = max(best, int(distributions(F, chunk)[:, :-1].max()))
    return best


# -- codes <-> projective systems -----------------------------------------------

def code_from_system(sys: pg.ProjectiveSystem) -> LinearCode:
    """Generator matrix with m(P) copies of each support point as columns."""
    n = sys.n
    if n > MAX_LENGTH:
        raise TooLongToMaterialize(f"length {n} exceeds {MAX_LENGTH}; use characters")
    if not pg.spans(sys):
        raise DimensionMismatch("support does not span PG(k-1,q); rows would be dependent")
    pts = np.array(sys.support, dtype=np.int64).reshape(-1, sys.k)
    reps = np.array(list(sys.mults.values()), dtype=np.int64)
    G = np.repeat(pts, reps, axis=0).T
    return LinearCode(sys.field, G, check_rank=False, allow_degenerate=True)


def system_from_code(C: LinearCode) -> pg.ProjectiveSystem:
    """Projective classes of the generator columns, with multiplicities."""
    F = C.field
    if not C.G.any(axis=0).all():
        raise DegenerateCode("generator matrix has an all-zero column")
    counts = Counter(map(tuple, C.G.T.tolist()))
    mults: dict[tuple[int, ...], int] = {}
    for col, m in counts.items():
        pt = pg.canonicalize(F, col)
        mults[pt] = mults.get(pt, 0) + m
    return pg.ProjectiveSystem(C.q, C.k, mults)


@dataclass(frozen=True)
class CharacterReport:
    mws: bool
    characters: list[int]
    weights: list[int]


def mws_via_characters(sys: pg.ProjectiveSystem) -> CharacterReport:
    """MWS check from hyperplane characters alone (no codeword enumeration).

    ``characters`` is sorted; ``weights`` is the multiset {n - ch(H)}, sorted.
    """
    chars = pg.all_characters(sys)
    n = sys.n
    return CharacterReport(
        mws=len(set(chars)) == len(chars),
        characters=sorted(chars),
        weights=sorted(n - c for c in chars),
    )
