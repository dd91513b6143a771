"""Exact evaluation of alternating floor-function sums.

The central object is the Jacobsthal--Tverberg sum

    S_m(A, K) = sum_{k=0}^{K} sum_{T subseteq A} (-1)^(n-|T|) * floor((k + sum(T)) / m)

for a modulus m >= 1, a multiset A of n >= 1 nonnegative integers and a
prefix bound K >= 0.  Two evaluation routes are provided:

* ``eval_direct`` -- the definitional double sum.  Slow (O(K * 2^n)) but
  free of any algebraic shortcut; it is the oracle every other evaluator
  is audited against.
* ``eval_closed`` -- a closed form over subset sums, valid for
  0 <= K <= m-1, with cost O(2^n) independent of K.

All arithmetic is exact.  Instances whose worst-case intermediates would
not fit in a signed 64-bit word are rejected up front instead of being
allowed to grow silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exceptions import DomainError, InstanceTooLargeError

_I64_MAX = 2**63 - 1


def _check_width(m: int, a: Sequence[int], k: int) -> None:
    # Worst case: 2^n terms, each at most (floor(total/m)+1)*(K+1) + K + total.
    total = sum(a)
    worst = (1 << len(a)) * ((total // m + 1) * (k + 1) + k + total)
    if worst > _I64_MAX:
        raise InstanceTooLargeError(
            f"worst-case intermediate {worst} exceeds 64-bit range "
            f"(n={len(a)}, sum(A)={total}, K={k})"
        )


@dataclass(frozen=True)
class Instance:
    """A problem triple: modulus ``m``, multiset ``a``, prefix bound ``k``.

    The multiset is canonicalised to descending order on construction;
    the sum is symmetric in its elements.  A *bounded* instance (the
    range on which every bound theorem is stated) additionally has all
    elements and ``k`` in ``[0, m-1]``.
    """

    m: int
    a: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise DomainError(f"modulus must be >= 1, got {self.m}")
        values = tuple(sorted(self.a, reverse=True))
        if not values:
            raise DomainError("the multiset must contain at least one element")
        if values[-1] < 0:
            raise DomainError(f"multiset elements must be >= 0, got {values[-1]}")
        if self.k < 0:
            raise DomainError(f"prefix bound must be >= 0, got {self.k}")
        _check_width(self.m, values, self.k)
        object.__setattr__(self, "a", values)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def is_bounded(self) -> bool:
        return self.a[0] <= self.m - 1 and self.k <= self.m - 1


def _signed_subset_sums(a: Sequence[int]) -> list[tuple[int, int]]:
    """All 2^n pairs (sign, subset sum), sign = (-1)^(n - |T|).

    Entry j covers the subset whose mask is j: bit i set iff a[i] taken.
    """
    pairs = [(1, 0)]
    for v in a:
        # Leaving v out flips the sign (n grows, |T| does not); taking it
        # keeps the sign and shifts the sum.
        pairs = [(-sg, s) for sg, s in pairs] + [(sg, s + v) for sg, s in pairs]
    return pairs


@dataclass(frozen=True)
class SubsetTerm:
    """One signed term of the inclusion-exclusion expansion."""

    mask: int
    subset_sum: int
    sign: int


def subset_terms(a: Sequence[int]) -> list[SubsetTerm]:
    """The 2^n signed subset terms of a multiset, in mask order.

    ``sign`` is +1 exactly when the subset size has the parity of n.
    The evaluators work from the same expansion internally; this view
    exists for inspection and testing.
    """
    values = tuple(a)
    if not values or min(values) < 0:
        raise DomainError("the multiset must be nonempty with elements >= 0")
    return [SubsetTerm(mask, s, sg)
            for mask, (sg, s) in enumerate(_signed_subset_sums(values))]


def inner_term(m: int, a: Sequence[int], k: int) -> int:
    """The alternating subset-floor sum at a single k.

    For n=2 this is Jacobsthal's f_m({a1,a2}, k).  Summing it over
    k = 0..K gives S_m(A, K).
    """
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    values = tuple(a)
    if not values or min(values) < 0:
        raise DomainError("the multiset must be nonempty with elements >= 0")
    _check_width(m, values, k)
    return sum(sg * ((k + s) // m) for sg, s in _signed_subset_sums(values))


def eval_direct(inst: Instance) -> int:
    """Definitional double sum; the oracle for every other evaluator.

    Equals ``sum(inner_term(inst.m, inst.a, k) for k in range(inst.k + 1))``;
    the subset sums are hoisted out of the k loop since they do not
    depend on k.
    """
    m = inst.m
    pairs = _signed_subset_sums(inst.a)
    return sum(sg * ((k + s) // m) for k in range(inst.k + 1) for sg, s in pairs)


def eval_onevar_closed(m: int, a1: int, k: int) -> int:
    """Closed form for the one-element sum S_m({a1}, K), 0 <= K <= m-1.

    a1 may exceed m-1 (the one-element sum is not m-periodic), but the
    formula is only proven on the stated K range and K >= m is rejected.
    """
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    if a1 < 0:
        raise DomainError(f"a1 must be >= 0, got {a1}")
    if not 0 <= k <= m - 1:
        raise DomainError(f"k must be in [0, {m - 1}], got {k}")
    return (a1 // m) * (k + 1) + max(0, a1 % m + k - m + 1)


def eval_closed(inst: Instance) -> int:
    """Closed form: inclusion-exclusion of one-element closed forms.

    S_m(A, K) = sum over subsets T of (-1)^(n-|T|) *
                [ floor(s_T/m)*(K+1) + max(0, (s_T mod m) + K - m + 1) ]

    Valid for 0 <= K <= m-1 (the range the one-element form is proven
    on); the empty subset contributes max(0, K-m+1) = 0 there, so it
    needs no special case.  Cost O(2^n), independent of K.
    """
    m, k = inst.m, inst.k
    if not 0 <= k <= m - 1:
        raise DomainError(f"closed form requires k in [0, {m - 1}], got {k}")
    acc = 0
    for sg, s in _signed_subset_sums(inst.a):
        acc += sg * ((s // m) * (k + 1) + max(0, s % m + k - m + 1))
    return acc


def eval_closed_all_k(m: int, a: Sequence[int]) -> list[int]:
    """Closed-form values [S_m(A, 0), ..., S_m(A, m-1)] in one pass.

    Computes the same closed form as ``eval_closed`` with the subset
    terms grouped by residue: a signed histogram h[r] of subset-sum
    residues and the signed total g of subset-sum quotients determine

        S_m(A, K) = g*(K+1) + sum_r h[r] * max(0, r + K - m + 1).

    Requires 0 <= a_i <= m-1 (reduce first; cf. ``reduce_instance``).
    Cost O(n*m + m) per multiset, shared across all K.
    """
    if m < 1:
        raise DomainError(f"modulus must be >= 1, got {m}")
    values = tuple(a)
    if not values:
        raise DomainError("the multiset must contain at least one element")
    if min(values) < 0 or max(values) > m - 1:
        raise DomainError("eval_closed_all_k requires 0 <= a_i <= m-1")
    _check_width(m, values, m - 1)

    h = [0] * m
    h[0] = 1
    g = 0
    for v in values:
        # Subsets taking v move residue r to (r+v) mod m and gain a
        # quotient carry exactly when r >= m-v; subsets leaving v out
        # flip sign, cancelling the old quotient total.
        g = sum(h[m - v:]) if v else 0
        rotated = h[m - v:] + h[:m - v] if v else h
        h = [rot - old for rot, old in zip(rotated, h)]

    # Suffix sums turn the max() tail into an O(1) lookup per K.
    csuf = [0] * (m + 1)
    wsuf = [0] * (m + 1)
    for r in range(m - 1, -1, -1):
        csuf[r] = csuf[r + 1] + h[r]
        wsuf[r] = wsuf[r + 1] + h[r] * r
    out = []
    for k in range(m):
        t = m - k  # residues r >= t have an active tail term
        out.append(g * (k + 1) + wsuf[t] + (k - m + 1) * csuf[t])
    return out


def reduce_instance(inst: Instance) -> Instance:
    """Replace every element by its residue mod m; S is invariant for n >= 2.

    Rejected for n=1, where the sum is not m-periodic in the element.
    """
    if inst.n < 2:
        raise DomainError("reduction is only value-preserving for n >= 2")
    return Instance(inst.m, tuple(v % inst.m for v in inst.a), inst.k)
