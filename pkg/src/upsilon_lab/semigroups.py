"""Formal semigroups of L-space-form Alexander polynomials.

Expanding Delta(t)/(1-t) as a power series yields sum_{s in S} t^s for a set
S of nonnegative integers, the formal semigroup.  Its complement in Z splits
as the negative integers plus a finite gap sequence a_1 < ... < a_g with
a_g = 2g - 1, and that gap sequence is the canonical encoding here: a
FormalSemigroup stores only the gaps, membership is a binary search plus a
sign test.

Despite the name, the set S need not be closed under addition; the closure
test below reports a witness pair when it is not.
"""

from __future__ import annotations

from bisect import bisect_left
from math import gcd
from typing import Iterable

from .errors import BadParameters, NotLSpaceForm
from .laurent import IntLaurentPoly


class FormalSemigroup:
    """Gap-sequence encoding of a formal semigroup.

    >>> S = FormalSemigroup([1, 2, 4, 6, 9])
    >>> S.genus, S.contains(3), S.contains(4)
    (5, True, False)
    """

    __slots__ = ("_gaps",)

    def __init__(self, gaps: Iterable[int] = ()):
        gap_list = [int(a) for a in gaps]
        for prev, cur in zip(gap_list, gap_list[1:]):
            if cur <= prev:
                raise ValueError("gap sequence must be strictly increasing")
        if gap_list and gap_list[0] < 1:
            raise ValueError("gaps must be positive integers")
        g = len(gap_list)
        if g and gap_list[-1] != 2 * g - 1:
            raise ValueError(
                f"top gap must be 2g-1 = {2 * g - 1}, got {gap_list[-1]}"
            )
        self._gaps = tuple(gap_list)

    @property
    def gaps(self) -> tuple[int, ...]:
        return self._gaps

    @property
    def genus(self) -> int:
        return len(self._gaps)

    @property
    def surgery_threshold(self) -> int:
        """Smallest r with r-surgery an L-space: 2g - 1 (equals -1 for g=0)."""
        return 2 * self.genus - 1

    def contains(self, s: int) -> bool:
        if s < 0:
            return False
        i = bisect_left(self._gaps, s)
        return not (i < len(self._gaps) and self._gaps[i] == s)

    def elements_below(self, bound: int) -> list[int]:
        """Members of S in [0, bound)."""
        return [s for s in range(max(bound, 0)) if self.contains(s)]

    def count_gaps_at_least(self, m: int) -> int:
        """The gap-counting function I(m) = #{i in G : i >= m}.

        The gap set G includes all negative integers, so for m <= 0 this is
        the closed form g + |m| rather than a materialized count.
        """
        if m <= 0:
            return len(self._gaps) - m
        return len(self._gaps) - bisect_left(self._gaps, m)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FormalSemigroup):
            return self._gaps == other._gaps
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._gaps)

    def __repr__(self) -> str:
        return f"FormalSemigroup(gaps={list(self._gaps)})"

    # -- conversions ---------------------------------------------------------

    @classmethod
    def from_alexander(cls, delta: IntLaurentPoly) -> "FormalSemigroup":
        """Read off S from the power series expansion of Delta/(1-t).

        The coefficient of t^m in the expansion is the partial sum of
        Delta's coefficients up to exponent m; for an L-space-form input
        those sums are always 0 or 1 and S is the set of exponents where the
        sum is 1.  Raises NotLSpaceForm with the offending exponent when a
        partial sum leaves {0, 1}, and on any other shape violation.

        The gate here is the partial-sum structure itself (which is the
        alternating property seen through the expansion) plus deg = 2g, so
        the round trip with to_alexander covers every valid gap sequence;
        the stricter shape predicate stays in
        IntLaurentPoly.is_lspace_form for boundary validation.
        """
        if delta.is_zero:
            raise NotLSpaceForm("zero polynomial")
        if delta.min_exp != 0 or delta.coeff(0) != 1:
            raise NotLSpaceForm("polynomial is not in knot-normal form")
        top = delta.max_exp
        psum = 0
        gaps = []
        for e in range(top + 1):
            psum += delta.coeff(e)
            if psum not in (0, 1):
                raise NotLSpaceForm(
                    f"partial coefficient sum {psum} at exponent {e}", exponent=e
                )
            if psum == 0:
                gaps.append(e)
        if psum != 1:
            raise NotLSpaceForm(f"Delta(1) = {psum}, expected 1")
        if 2 * len(gaps) != top:
            raise NotLSpaceForm(
                f"degree {top} does not equal twice the gap count {len(gaps)}"
            )
        return cls(gaps)

    def to_alexander(self) -> IntLaurentPoly:
        """Restore Delta = 1 + (t - 1) * sum_i t^{a_i}."""
        terms: dict[int, int] = {0: 1}
        for a in self._gaps:
            terms[a + 1] = terms.get(a + 1, 0) + 1
            terms[a] = terms.get(a, 0) - 1
        return IntLaurentPoly(terms)

    # -- predicates -----------------------------------------------------------

    def is_closed_under_addition(self) -> tuple[bool, tuple[int, int] | None]:
        """Whether s + s' stays in S for all members.

        Only sums below 2g need checking (everything from 2g on is in S).
        Returns (True, None) or (False, witness) with the lexicographically
        first failing pair (s, s'), s <= s'.
        """
        bound = 2 * self.genus
        members = self.elements_below(bound)
        for i, s in enumerate(members):
            for sp in members[i:]:
                total = s + sp
                if total >= bound:
                    break
                if not self.contains(total):
                    return False, (s, sp)
        return True, None

    def symmetry_check(self) -> bool:
        """Alexander symmetry seen through the gap set.

        True iff s in S <=> 2g-1-s not in S for 0 <= s <= 2g-1.  Trivially
        true for the unknot (g = 0).
        """
        n = 2 * self.genus
        return all(self.contains(s) != self.contains(n - 1 - s) for s in range(n))

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {"genus": self.genus, "gaps": list(self._gaps)}

    @classmethod
    def from_json(cls, data: dict) -> "FormalSemigroup":
        s = cls(data["gaps"])
        if "genus" in data and int(data["genus"]) != s.genus:
            raise ValueError("genus field disagrees with gap count")
        return s


def torus_semigroup(p: int, q: int) -> FormalSemigroup:
    """The rank-two semigroup <p, q> = {ap + bq : a, b >= 0} of T(p, q).

    Requires 1 < p < q coprime; the genus is (p-1)(q-1)/2.
    """
    if not (1 < p < q):
        raise BadParameters(f"need 1 < p < q, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise BadParameters(f"p={p} and q={q} are not coprime")
    bound = (p - 1) * (q - 1)
    reachable = [False] * (bound + 1)
    reachable[0] = True
    for step in (p, q):
        for i in range(step, bound + 1):
            if reachable[i - step]:
                reachable[i] = True
    gaps = [e for e in range(1, bound) if not reachable[e]]
    return FormalSemigroup(gaps)


def genus_of(delta: IntLaurentPoly) -> int:
    """Genus read from an L-space-form polynomial: deg/2."""
    return FormalSemigroup.from_alexander(delta).genus


def surgery_threshold_of(delta: IntLaurentPoly) -> int:
    """2g - 1, the smallest L-space surgery slope."""
    return FormalSemigroup.from_alexander(delta).surgery_threshold
