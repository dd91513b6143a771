"""Mirror transform and the shift-difference operators with their case tables.

The mirror identity S_m(A, K) = S_m(m - A, m - 2 - K) is proven for
n = 2, 3; for larger n it is an empirical observation only and is
checked, never assumed.

The two-variable difference

    delta = S_m({a1, a2}, K) - S_m({a1+1, a2}, K-1)

always lies in {-1, 0, +1} on 1 <= K <= floor(m/2)-1 and is classified
into four cases by whether a1+a2 wraps past m and whether the a2 tail
term max(0, a2+K-m+1) is active.  The three-variable difference
decomposes into three such deltas.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Instance, eval_closed
from .exceptions import DomainError, TableViolationError

#: Proven difference value for each case id (wrap, tail) ->
#: (F,F)->1: 0, (F,T)->2: -1, (T,F)->3: +1, (T,T)->4: 0.
CASE_VALUES = {1: 0, 2: -1, 3: 1, 4: 0}


@dataclass(frozen=True)
class DeltaCase:
    """Case classification of the two-variable difference."""

    case_id: int
    cond_sum: bool   # a1 + a2 >= m
    cond_tail: bool  # a2 + K - m + 1 > 0


@dataclass(frozen=True)
class DeltaRecord:
    """Value and case of one two-variable difference."""

    value: int
    case: DeltaCase


@dataclass(frozen=True)
class BoxRecord:
    """Three-variable difference and the three deltas it decomposes into.

    value = components[0].value - components[1].value - components[2].value
    """

    value: int
    components: tuple[DeltaRecord, DeltaRecord, DeltaRecord]


@dataclass(frozen=True)
class CaseBConditions:
    """Truth values of the six predicates governing the +1 configuration.

    The three-variable difference can only equal +1 when the pair
    (a1, (a2+a3) mod m) gives +1 (c1a AND c1b) while both (a1, a2) and
    (a1, a3) give 0 (c2a XOR c2b, c3a XOR c3b).
    """

    c1a: bool  # a1 + ((a2+a3) mod m) >= m
    c1b: bool  # ((a2+a3) mod m) + K - m + 1 <= 0
    c2a: bool  # a1 + a2 >= m
    c2b: bool  # a2 + K - m + 1 <= 0
    c3a: bool  # a1 + a3 >= m
    c3b: bool  # a3 + K - m + 1 <= 0

    @property
    def plus_one_config(self) -> bool:
        return (self.c1a and self.c1b) and (self.c2a != self.c2b) and (self.c3a != self.c3b)


def mirror(inst: Instance) -> Instance:
    """Map (A, K) to (m - A mod m, m - 2 - K).

    Requires a bounded instance with 0 <= K <= m-2 (K = m-1 lies outside
    the identity's range).  Elements equal to 0 map to 0, keeping the
    image bounded.  The S value is provably equal for n = 2, 3 and
    empirically equal for larger n.
    """
    m = inst.m
    if not inst.is_bounded:
        raise DomainError("mirror requires a bounded instance (a_i, K <= m-1)")
    if not 0 <= inst.k <= m - 2:
        raise DomainError(f"mirror requires k in [0, {m - 2}], got {inst.k}")
    return Instance(m, tuple((m - v) % m for v in inst.a), m - 2 - inst.k)


def _check_delta_domain(m: int, pair: tuple[int, ...], k: int) -> None:
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    if any(not 0 <= v <= m - 1 for v in pair):
        raise DomainError(f"elements must be in [0, {m - 1}], got {pair}")
    if not 1 <= k <= m // 2 - 1:
        raise DomainError(f"k must be in [1, {m // 2 - 1}], got {k}")


def classify_delta(m: int, a1: int, a2: int, k: int) -> DeltaCase:
    """Case id from the (wrap, tail) condition pair."""
    cond_sum = a1 + a2 >= m
    cond_tail = a2 + k - m + 1 > 0
    case_id = {(False, False): 1, (False, True): 2, (True, False): 3, (True, True): 4}[
        (cond_sum, cond_tail)
    ]
    return DeltaCase(case_id, cond_sum, cond_tail)


def delta(m: int, a1: int, a2: int, k: int) -> DeltaRecord:
    """Two-variable difference S({a1,a2},K) - S({a1+1,a2},K-1), classified.

    Defined only on the proven domain 1 <= K <= floor(m/2)-1 with
    0 <= a1, a2 <= m-1; out-of-range calls are errors, not
    extrapolations.
    """
    _check_delta_domain(m, (a1, a2), k)
    value = eval_closed(Instance(m, (a1, a2), k)) - eval_closed(Instance(m, (a1 + 1, a2), k - 1))
    case = classify_delta(m, a1, a2, k)
    if value != CASE_VALUES[case.case_id]:
        raise TableViolationError(
            f"delta({m}, {a1}, {a2}, {k}) = {value} but case {case.case_id} "
            f"requires {CASE_VALUES[case.case_id]}"
        )
    return DeltaRecord(value, case)


def box(m: int, a1: int, a2: int, a3: int, k: int) -> BoxRecord:
    """Three-variable difference S({a1,a2,a3},K) - S({a1+1,a2,a3},K-1).

    Also computed as delta(a1, (a2+a3) mod m) - delta(a1, a2) -
    delta(a1, a3); the two routes must agree.
    """
    _check_delta_domain(m, (a1, a2, a3), k)
    direct = eval_closed(Instance(m, (a1, a2, a3), k)) - eval_closed(
        Instance(m, (a1 + 1, a2, a3), k - 1)
    )
    components = (
        delta(m, a1, (a2 + a3) % m, k),
        delta(m, a1, a2, k),
        delta(m, a1, a3, k),
    )
    decomposed = components[0].value - components[1].value - components[2].value
    if direct != decomposed:
        raise TableViolationError(
            f"box({m}, {a1}, {a2}, {a3}, {k}): direct {direct} != decomposition {decomposed}"
        )
    return BoxRecord(direct, components)


def case_b_conditions(m: int, a1: int, a2: int, a3: int, k: int) -> CaseBConditions:
    """Pure predicate report for the +1 configuration of the box operator.

    Intended for sorted a1 >= a2 >= a3 on floor(m/3) <= K <= floor(m/2)-1,
    but evaluates the predicates verbatim for any inputs.
    """
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    s23 = (a2 + a3) % m
    return CaseBConditions(
        c1a=a1 + s23 >= m,
        c1b=s23 + k - m + 1 <= 0,
        c2a=a1 + a2 >= m,
        c2b=a2 + k - m + 1 <= 0,
        c3a=a1 + a3 >= m,
        c3b=a3 + k - m + 1 <= 0,
    )
