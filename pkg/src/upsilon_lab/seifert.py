"""The arithmetic L-space test for small Seifert fibered spaces.

M(e0; r1, r2, r3) denotes e0-surgery on the unknot with three meridians
carrying (-1/r_i)-surgeries.  Two normalization moves preserve the manifold:
shifting a ratio by 1 against e0, and reversing orientation (negate
everything).  After normalizing the ratios into [0, 1), the only criterion
implemented here applies to the shape

    M(-1; r1 >= r2 >= r3 > 0):

if no coprime pair m > a > 0 satisfies a/m > r1, (m-a)/m > r2 and 1/m > r3,
the manifold (with either orientation) is an L-space.  Only this sufficiency
direction is implemented: an obstruction pair or an unusable normal form
yields Undecided, never a negative verdict, because the converse is not
established by this criterion.

Every LSpace verdict carries the full empty-search certificate: the m range
implied by 1/m > r3 and, per m, why no admissible a exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BadOrdering
from .rationals import format_rational


@dataclass(frozen=True)
class SeifertForm:
    """A small Seifert presentation M(e0; r1, r2, r3); ratios auto-reduced."""

    e0: int
    ratios: tuple[Fraction, Fraction, Fraction]

    def __init__(self, e0: int, ratios):
        object.__setattr__(self, "e0", int(e0))
        rs = tuple(Fraction(r) for r in ratios)
        if len(rs) != 3:
            raise ValueError("exactly three ratios required")
        object.__setattr__(self, "ratios", rs)

    def __str__(self) -> str:
        body = ", ".join(format_rational(r) for r in self.ratios)
        return f"M({self.e0}; {body})"

    def to_json(self) -> dict:
        return {"e0": self.e0, "ratios": [format_rational(r) for r in self.ratios]}


def negate(s: SeifertForm) -> SeifertForm:
    """Orientation reversal: -M(e0; r) = M(-e0; -r)."""
    return SeifertForm(-s.e0, tuple(-r for r in s.ratios))


def normalize(s: SeifertForm) -> SeifertForm:
    """Push each ratio into [0, 1), absorbing integer shifts into e0.

    r -> r - floor(r) costs e0 -> e0 + floor(r) per ratio.  Zero ratios are
    dropped to the end, the rest sorted descending.  Idempotent.
    """
    e0 = s.e0
    fracs = []
    for r in s.ratios:
        shift = r.numerator // r.denominator
        e0 += shift
        fracs.append(r - shift)
    nonzero = sorted((r for r in fracs if r != 0), reverse=True)
    zeros = [Fraction(0)] * (3 - len(nonzero))
    return SeifertForm(e0, tuple(nonzero + zeros))


def coprime_obstruction(
    r1: Fraction, r2: Fraction, r3: Fraction, with_certificate: bool = False
):
    """Search for coprime m > a > 0 with a/m > r1, (m-a)/m > r2, 1/m > r3.

    Requires 1 >= r1 >= r2 >= r3 > 0 (the r3 > 0 bound makes the search
    finite: m < 1/r3).  Returns the lexicographically least pair (m, a) or
    None; with_certificate additionally returns the per-m exhaustion record.
    """
    if not (1 >= r1 >= r2 >= r3 >= 0):
        raise BadOrdering(f"need 1 >= r1 >= r2 >= r3 >= 0, got {r1}, {r2}, {r3}")
    if r3 == 0:
        raise BadOrdering("r3 = 0 leaves the search unbounded; reject upstream")
    inv = 1 / r3
    m_max = inv.numerator // inv.denominator
    if inv.denominator == 1:
        m_max -= 1  # strict inequality 1/m > r3
    certificate = {"m_max": m_max, "per_m": []}
    for m in range(2, m_max + 1):
        # a/m > r1 and (m-a)/m > r2 pin a to the open interval (r1*m, (1-r2)*m).
        lo = r1 * m
        hi = (1 - r2) * m
        candidates = [a for a in range(1, m) if lo < a < hi]
        coprime = [a for a in candidates if gcd(a, m) == 1]
        if coprime:
            pair = (m, coprime[0])
            return (pair, certificate) if with_certificate else pair
        if not candidates:
            reason = (
                f"no integer a with {format_rational(lo)} < a < {format_rational(hi)}"
            )
        else:
            reason = f"candidates {candidates} all share a factor with {m}"
        certificate["per_m"].append({"m": m, "reason": reason})
    return (None, certificate) if with_certificate else None


@dataclass(frozen=True)
class LSpaceVerdict:
    """Either a certified LSpace or Undecided with the blocking reason."""

    is_lspace: bool
    detail: str
    certificate: dict | None = None

    def to_json(self) -> dict:
        out = {"verdict": "LSpace" if self.is_lspace else "Undecided", "detail": self.detail}
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


def decide(s: SeifertForm) -> LSpaceVerdict:
    """Try the criterion on the manifold and on its reverse.

    Certifies LSpace when either side normalizes to (-1; r1 >= r2 >= r3 > 0)
    and the coprime-pair search comes back empty; otherwise reports why each
    side was unusable.  Never claims NotLSpace.
    """
    blockers = []
    for side, form in (("M", s), ("-M", negate(s))):
        ns = normalize(form)
        if ns.e0 != -1:
            blockers.append(f"{side} normalizes to e0 = {ns.e0}, criterion needs -1")
            continue
        r1, r2, r3 = ns.ratios
        if r3 == 0:
            blockers.append(f"{side} has a zero ratio after normalization")
            continue
        pair, certificate = coprime_obstruction(r1, r2, r3, with_certificate=True)
        if pair is None:
            certificate = {
                "side": side,
                "normalized": ns.to_json(),
                "m_range": [2, certificate["m_max"]],
                "per_m": certificate["per_m"],
            }
            return LSpaceVerdict(
                True,
                f"empty coprime-pair search for {side} = {ns}",
                certificate,
            )
        blockers.append(f"{side} = {ns} admits obstruction pair (m, a) = {pair}")
    return LSpaceVerdict(False, "; ".join(blockers))
