"""Length bounds and recurrence estimates, all in exact integer arithmetic."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb

from .construct import extend_dim_2_length, lift_length
from .gf import prime_power
from .pg import theta


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def lower_bound(q: int, k: int) -> int:
    """ceil(q * theta_q(k-1) / 2): no [n,k]_q MWS code is shorter (k >= 2)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return _ceil_div(q * theta(q, k - 1), 2)


def lower_bound_propA(q: int, k: int) -> int:
    """ceil((q^(k+2) - 3q + 2) / (4(q-1))) for MWS codes with property (A)."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return _ceil_div(q ** (k + 2) - 3 * q + 2, 4 * (q - 1))


def d_bound(q: int, k: int) -> int:
    """Upper bound on the number of distinct avoidance hyperplanes at step k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return comb(q**k, 2) + (q**k - 1) * (q - 1)


def r_bound(q: int, k: int) -> int:
    """Upper bound on the smallest feasible R at step k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return (q - 1) * comb(q**k, 2) + (q**k - 1) * (q - 1) ** 2


def geometric_length(q: int, k: int) -> int:
    return 2 ** theta(q, k - 1) - 1


def triangle_length(q: int) -> int:
    """Length of the k = 3 starting plane used for every q."""
    if q == 2:
        return 7
    if q == 3:
        return 32
    return (q - 1) * (q**3 + q**2 + q) // 2


def lift_chain_lengths(q: int, k_max: int) -> dict[int, int]:
    """Lengths of the k=3 plane and its successive lifts (least t each time)."""
    n = triangle_length(q)
    out = {3: n}
    for k in range(3, k_max):
        t = 0
        while q**t <= n:
            t += 1
        n = lift_length(n, q, k, t)
        out[k + 1] = n
    return out


def lift_chain_bound(q: int, k: int) -> int:
    """q^((k^2+k-4)/2); the chain's length at dimension k >= 3 is below it."""
    return q ** ((k * k + k - 4) // 2)


@dataclass(frozen=True)
class RecurrenceStep:
    k: int
    n: int
    T: int
    R: int


def recurrence_estimates(q: int, k_max: int) -> list[RecurrenceStep]:
    """Worst-case (n, T, R) for the algebraic induction, k = 1..k_max.

    Starts from n=1, T=q-1, R=q(q-1)/2 with r = (1, ..., q-1) after sorting.
    Later steps take R from :func:`r_bound` and bound the weighted sum of the
    sorted r entries by setting every entry to ceil(R / (q-1)).  The length
    step adds q-2 padding coordinates, as :func:`extend_dim_2` does; at q=3
    that is the familiar +1.
    """
    if q < 3:
        raise ValueError("the recurrences assume q >= 3")
    prime_power(q)
    n, T, R = 1, q - 1, q * (q - 1) // 2
    weighted = sum(j * (j + 1) for j in range(q - 1))
    steps = [RecurrenceStep(1, n, T, R)]
    for k in range(1, k_max):
        n, T = (extend_dim_2_length(R * n, q, T),
                R * n + (T + 1) * weighted)
        R = r_bound(q, k + 1)
        weighted = _ceil_div(R, q - 1) * (q - 2) * (q - 1) // 2
        steps.append(RecurrenceStep(k + 1, n, T, R))
    return steps


def final_length_estimate(q: int, k: int) -> int:
    """2 R n + 1 from step k-1: the last dimension step padding with all-ones."""
    if k < 2:
        raise ValueError("k must be >= 2")
    prev = recurrence_estimates(q, k - 1)[-1]
    return 2 * prev.R * prev.n + 1


@dataclass(frozen=True)
class BoundsReport:
    q: int
    k: int
    theta: int
    lb_general: int
    lb_propA: int
    geometric_n: int
    triangle_n: int | None
    lift_chain_n: int | None
    lift_chain_bound: int | None
    D_k: int
    R_k: int
    n_rec: int | None
    T_rec: int | None

    def as_dict(self) -> dict:
        return asdict(self)


def bounds_report(q: int, k: int) -> BoundsReport:
    prime_power(q)
    if k < 2:
        raise ValueError("k must be >= 2")
    rec = recurrence_estimates(q, k)[-1] if q >= 3 else None
    return BoundsReport(
        q=q,
        k=k,
        theta=theta(q, k - 1),
        lb_general=lower_bound(q, k),
        lb_propA=lower_bound_propA(q, k),
        geometric_n=geometric_length(q, k),
        triangle_n=triangle_length(q) if k == 3 else None,
        lift_chain_n=lift_chain_lengths(q, k)[k] if k >= 3 else None,
        lift_chain_bound=lift_chain_bound(q, k) if k >= 3 else None,
        D_k=d_bound(q, k),
        R_k=r_bound(q, k),
        n_rec=rec.n if rec else None,
        T_rec=rec.T if rec else None,
    )
