"""Braid words and Alexander polynomials of their closures.

A braid word in B_s is a sequence of nonzero integers, letter +-i meaning
the standard generator sigma_i or its inverse.  The Alexander polynomial of
the closure comes from the reduced Burau representation:

    Delta(t) * (t^s - 1) = (unit) * det(I - B(word)) * (t - 1),

where B is the (s-1)-dimensional reduced Burau matrix.  The determinant is
taken by fraction-free elimination directly over the Laurent ring, and the
unit ambiguity is fixed by shifting the minimum exponent to 0 and scaling
the sign so that Delta(1) = +1.

This gives an independent oracle for every Alexander polynomial stored with a braid
word elsewhere in the package.
"""

from __future__ import annotations

import re
from typing import Iterable

from .errors import DisconnectedClosure, NotAKnot, NotPositiveBraid, UnknownName
from .laurent import IntLaurentPoly, determinant


class BraidWord:
    """A word in the braid group B_strands.

    >>> b = BraidWord(2, [1, 1, 1])
    >>> b.alexander_of_closure()
    IntLaurentPoly('1 - t + t^2')
    """

    __slots__ = ("_strands", "_letters")

    def __init__(self, strands: int, letters: Iterable[int] = ()):
        if strands < 2:
            raise ValueError("a braid group needs at least 2 strands")
        letts = tuple(int(x) for x in letters)
        for x in letts:
            if x == 0 or abs(x) >= strands:
                raise ValueError(f"letter {x} is not a generator of B_{strands}")
        self._strands = strands
        self._letters = letts

    @property
    def strands(self) -> int:
        return self._strands

    @property
    def letters(self) -> tuple[int, ...]:
        return self._letters

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BraidWord):
            return self._strands == other._strands and self._letters == other._letters
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._strands, self._letters))

    def __repr__(self) -> str:
        return f"BraidWord(strands={self._strands}, letters={list(self._letters)})"

    def to_json(self) -> dict:
        return {"strands": self._strands, "word": list(self._letters)}

    @classmethod
    def from_json(cls, data: dict) -> "BraidWord":
        return cls(int(data["strands"]), data["word"])

    # -- combinatorics ---------------------------------------------------------

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self._letters)

    def permutation(self) -> tuple[int, ...]:
        """Where each strand position ends up after the word (0-indexed)."""
        perm = list(range(self._strands))
        for x in self._letters:
            i = abs(x) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return tuple(perm)

    def closure_components(self) -> int:
        """Number of cycles of the underlying permutation."""
        perm = self.permutation()
        seen = [False] * self._strands
        cycles = 0
        for start in range(self._strands):
            if seen[start]:
                continue
            cycles += 1
            i = start
            while not seen[i]:
                seen[i] = True
                i = perm[i]
        return cycles

    def is_knot_closure(self) -> bool:
        return self.closure_components() == 1

    def stabilized(self) -> "BraidWord":
        """Embed into B_{strands+1} and append sigma_strands (Markov move)."""
        return BraidWord(self._strands + 1, self._letters + (self._strands,))

    def positive_braid_genus(self) -> int:
        """Seifert genus of the closure of a positive word: (c - s + 1)/2.

        Requires every letter positive and a connected (single-component)
        closure, where the Bennequin surface realizes the genus.
        """
        if any(x < 0 for x in self._letters):
            raise NotPositiveBraid("word contains inverse letters")
        if not self.is_knot_closure():
            raise DisconnectedClosure(
                f"closure has {self.closure_components()} components"
            )
        return (len(self._letters) - self._strands + 1) // 2

    # -- Burau ---------------------------------------------------------------------

    def reduced_burau(self) -> list[list[IntLaurentPoly]]:
        """Product of reduced Burau matrices, (s-1) x (s-1) over Z[t, t^-1]."""
        n = self._strands - 1
        matrix = _identity(n)
        for letter in self._letters:
            matrix = _mat_mul(matrix, _burau_generator(self._strands, letter))
        return matrix

    def alexander_of_closure(self) -> IntLaurentPoly:
        """Alexander polynomial of the closure, normalized so Delta(1) = +1."""
        if not self.is_knot_closure():
            raise NotAKnot(
                f"closure has {self.closure_components()} components, need 1"
            )
        n = self._strands - 1
        burau = self.reduced_burau()
        i_minus_b = [
            [
                (IntLaurentPoly.one() if i == j else IntLaurentPoly.zero()) - burau[i][j]
                for j in range(n)
            ]
            for i in range(n)
        ]
        det = determinant(i_minus_b)
        t = IntLaurentPoly.t()
        numerator = det * (t - 1)
        denominator = IntLaurentPoly.monomial(self._strands) - 1
        delta = numerator.exact_div(denominator)
        delta = delta.shifted(-delta.min_exp)
        at_one = delta(1)
        if abs(at_one) != 1:
            raise NotAKnot(f"Delta(1) = {at_one}; the closure is not a knot")
        return -delta if at_one < 0 else delta


def _identity(n: int) -> list[list[IntLaurentPoly]]:
    one, zero = IntLaurentPoly.one(), IntLaurentPoly.zero()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def _mat_mul(
    a: list[list[IntLaurentPoly]], b: list[list[IntLaurentPoly]]
) -> list[list[IntLaurentPoly]]:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = IntLaurentPoly.zero()
            for k in range(n):
                if not a[i][k].is_zero and not b[k][j].is_zero:
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def _burau_generator(strands: int, letter: int) -> list[list[IntLaurentPoly]]:
    """Reduced Burau image of sigma_i^{+-1} in B_strands.

    Convention: sigma_i acts on the (s-1)-dimensional module by the identity
    except in column i-1 (0-indexed), where the diagonal entry is -t with a
    t above (when present) and a 1 below (when present); the inverse follows
    by inverting that block.
    """
    n = strands - 1
    i = abs(letter)
    mat = _identity(n)
    if letter > 0:
        mat[i - 1][i - 1] = IntLaurentPoly.monomial(1, -1)
        if i >= 2:
            mat[i - 2][i - 1] = IntLaurentPoly.t()
        if i <= n - 1:
            mat[i][i - 1] = IntLaurentPoly.one()
    else:
        mat[i - 1][i - 1] = IntLaurentPoly.monomial(-1, -1)
        if i >= 2:
            mat[i - 2][i - 1] = IntLaurentPoly.one()
        if i <= n - 1:
            mat[i][i - 1] = IntLaurentPoly.monomial(-1, 1)
    return mat


# -- named words -------------------------------------------------------------------

_FAMILY_PREFIX = (2, 1, 3, 2)
_FAMILY_TWIST = (1, 2, 3)
_FAMILY_SUFFIX = (2, 3) * 6

_NAME_WITH_ARG = re.compile(r"^(K[12])\((\d+)\)$")


def family_braid(which: str, n: int) -> BraidWord:
    """The 4-braid whose closure is the family knot K1(n) or K2(n)."""
    if which not in ("K1", "K2"):
        raise UnknownName(f"family member must be K1 or K2, got {which!r}")
    if n < 1:
        raise ValueError("family parameter n must be >= 1")
    cancel = -2 if which == "K1" else -3
    letters = _FAMILY_PREFIX + _FAMILY_TWIST * (4 * n) + (cancel,) + _FAMILY_SUFFIX
    return BraidWord(4, letters)


def named_braid(name: str, n: int | None = None) -> BraidWord:
    """Built-in words: "t09847", "v2871", "K1"/"K2" (with n), or "K1(3)" style."""
    match = _NAME_WITH_ARG.match(name)
    if match:
        name, n = match.group(1), int(match.group(2))
    if name == "t09847":
        return BraidWord(4, (2, 1, 3, 2) * 3 + (2, 1, 1, 2) + (1,))
    if name == "v2871":
        return BraidWord(4, (2, 1, 3, 2) * 3 + (2, 1, 1, 2) + (1, 1, 1))
    if name in ("K1", "K2"):
        if n is None:
            raise UnknownName(f"{name} needs the twist parameter n, e.g. {name}(2)")
        return family_braid(name, n)
    raise UnknownName(f"no built-in braid word named {name!r}")


def torus_braid(p: int, q: int) -> BraidWord:
    """The standard p-strand word (sigma_1 ... sigma_{p-1})^q closing to T(p, q)."""
    if p < 2 or q < 1:
        raise ValueError("need p >= 2 and q >= 1")
    return BraidWord(p, tuple(range(1, p)) * q)
