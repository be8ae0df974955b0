"""Finite fields GF(q) realized through discrete log / exp tables.

Elements are plain integers in ``range(q)``.  For a prime field the integer is
the residue mod p; for ``q = p**m`` it is the base-p packing
``c_0 + c_1 p + ... + c_{m-1} p^{m-1}`` of the polynomial-basis coefficients,
so ``alpha`` (the class of the indeterminate) encodes as ``p``.

Scalar helpers live on :class:`FieldSpec` (``add``, ``mul``...) together with
numpy-vectorized counterparts (``vadd``, ``vmul``...) used by the codeword
enumerators.  :class:`FieldElement` is a thin operator-overloading wrapper for
interactive use.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .errors import DivisionByZero, FieldMismatch, NotPrimePower, TooLarge

MAX_Q = 1 << 16
_ADD_TABLE_LIMIT = 256


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``, or raise NotPrimePower."""
    if q < 2:
        raise NotPrimePower(f"q={q} is not a prime power")
    p = next(d for d in itertools.count(2) if d * d > q or q % d == 0)
    if q % p:
        p = q
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotPrimePower(f"q={q} has at least two distinct prime factors")
    return p, m


def _mul_by_x(digits: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    # x^m = -(f_0 + f_1 x + ... + f_{m-1} x^{m-1})
    top = digits[-1]
    out = [0] + digits[:-1]
    if top:
        out = [(c - top * f) % p for c, f in zip(out, modulus)]
    return out


def _pack(digits: list[int], p: int) -> int:
    v = 0
    for c in reversed(digits):
        v = v * p + c
    return v


def _power_cycle(p: int, m: int, modulus: tuple[int, ...]) -> list[int] | None:
    """Encodings of x^0, x^1, ..., x^(q-2) if x has order q-1, else None."""
    q = p**m
    cur = [1] + [0] * (m - 1)
    seq = [1]
    for _ in range(q - 2):
        cur = _mul_by_x(cur, modulus, p)
        v = _pack(cur, p)
        if v == 1:
            return None
        seq.append(v)
    if _pack(_mul_by_x(cur, modulus, p), p) != 1:
        return None
    return seq


def _smallest_primitive_root(p: int) -> int:
    for g in range(1, p):
        x, order = g, 1
        while x != 1:
            x = x * g % p
            order += 1
        if order == p - 1:
            return g
    raise AssertionError("unreachable: every prime field has a primitive root")


class FieldSpec:
    """Concrete realization of GF(q).

    ``modulus`` holds the non-leading coefficients ``(f_0, ..., f_{m-1})`` of
    the monic primitive polynomial (empty for prime fields).  ``exp_table[j]``
    is ``alpha**j`` for ``0 <= j < q-1``; ``log_table[0]`` is -1.
    """

    __slots__ = (
        "p", "m", "q", "modulus", "alpha", "exp_table", "log_table",
        "_exp2", "_digits", "_powers", "_add_tab", "_neg_tab",
    )

    def __init__(self, p: int, m: int, modulus: tuple[int, ...], exp_seq: list[int]):
        self.p, self.m, self.q = p, m, p**m
        self.modulus = tuple(modulus)
        q = self.q
        exp = np.asarray(exp_seq, dtype=np.int64)
        self.alpha = int(exp[1]) if q > 2 else 1
        self.exp_table = exp
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        self.log_table = log
        self._exp2 = np.concatenate([exp, exp])
        vals = np.arange(q, dtype=np.int64)
        self._powers = p ** np.arange(m, dtype=np.int64)
        self._digits = (vals[:, None] // self._powers[None, :]) % p
        self._neg_tab = ((-self._digits) % p) @ self._powers
        self._add_tab = None
        if m > 1 and p != 2 and q <= _ADD_TABLE_LIMIT:
            self._add_tab = self._digit_add(vals[:, None], vals[None, :])
        for arr in (self.exp_table, self.log_table, self._exp2, self._digits,
                    self._neg_tab, self._powers):
            arr.setflags(write=False)

    def __repr__(self):
        return f"FieldSpec(q={self.q}, modulus={list(self.modulus)}, alpha={self.alpha})"

    def __eq__(self, other):
        return (isinstance(other, FieldSpec) and self.q == other.q
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.q, self.modulus))

    def __reduce__(self):
        return (make_field, (self.q,))

    # -- scalar arithmetic on encodings ------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.vadd(a, b))

    def neg(self, a: int) -> int:
        return int(self._neg_tab[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp2[self.log_table[a] + self.log_table[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return int(self.exp_table[(-self.log_table[a]) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if e == 0 else 0
        return int(self.exp_table[(int(self.log_table[a]) * e) % (self.q - 1)])

    def alpha_pow(self, e: int) -> int:
        """``alpha**e`` with the exponent taken mod q-1."""
        return int(self.exp_table[e % (self.q - 1)])

    # -- vectorized arithmetic ---------------------------------------------

    def _digit_add(self, a, b):
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._powers

    def vadd(self, a, b):
        if self.m == 1:
            return (np.asarray(a) + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        if self._add_tab is not None:
            return self._add_tab[a, b]
        return self._digit_add(a, b)

    def vneg(self, a):
        return self._neg_tab[a]

    def vmul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        prod = self._exp2[self.log_table[a] + self.log_table[b]]
        return np.where((a == 0) | (b == 0), 0, prod)

    def elements(self):
        return range(self.q)

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)


@lru_cache(maxsize=None)
def make_field(q: int) -> FieldSpec:
    """Build the canonical GF(q).

    Prime fields use the smallest primitive root.  Extension fields use the
    lexicographically smallest monic primitive polynomial of degree m,
    comparing coefficient vectors constant term first, with alpha = x.
    """
    if q > MAX_Q:
        raise TooLarge(f"q={q} exceeds the supported maximum {MAX_Q}")
    p, m = prime_power(q)
    if m == 1:
        g = _smallest_primitive_root(p)
        seq = [1]
        for _ in range(p - 2):
            seq.append(seq[-1] * g % p)
        return FieldSpec(p, 1, (), seq)
    for coeffs in itertools.product(range(p), repeat=m):
        if coeffs[0] == 0:
            continue
        seq = _power_cycle(p, m, coeffs)
        if seq is not None:
            return FieldSpec(p, m, coeffs, seq)
    raise AssertionError(f"no primitive polynomial of degree {m} over GF({p})")


class FieldElement:
    """An element of a specific :class:`FieldSpec` with operator support."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        value = int(value)
        if not 0 <= value < field.q:
            raise ValueError(f"{value} is not an element of GF({field.q})")
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"GF({self.field.q}) vs GF({other.field.q})")
            return other.value
        if isinstance(other, int):
            if not 0 <= other < self.field.q:
                raise ValueError(f"{other} is not an element of GF({self.field.q})")
            return other
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(self.field, v)

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.mul(self.value, self.field.inv(b)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inv(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field.q, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF{self.field.q}({self.value})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inv()


def pow(a: FieldElement, e: int) -> FieldElement:  # noqa: A001
    return a**e
