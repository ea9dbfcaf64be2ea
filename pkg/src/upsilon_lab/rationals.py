"""Exact rational parsing and formatting.

Rationals are serialized as strings everywhere ("5", "-2/3"), never as
floats, so JSON output can be diffed exactly.
"""

from __future__ import annotations

from fractions import Fraction


def parse_rational(text: str | int) -> Fraction:
    """Parse "p/q" or "p" (ints also accepted) into a Fraction.

    >>> parse_rational("-2/3")
    Fraction(-2, 3)
    >>> parse_rational("7")
    Fraction(7, 1)
    """
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(text.strip())


def format_rational(value: Fraction | int) -> str:
    """Render a rational as "p" or "p/q" with q > 0.

    >>> format_rational(Fraction(-2, 3))
    '-2/3'
    >>> format_rational(Fraction(4, 2))
    '2'
    """
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def fixed6(value: Fraction | int) -> str:
    """Fixed-point decimal with 6 digits, computed in integer arithmetic.

    Used only for SVG coordinates (presentation, not data), where byte-exact
    deterministic output matters.

    >>> fixed6(Fraction(1, 3))
    '0.333333'
    >>> fixed6(Fraction(-5, 4))
    '-1.250000'
    """
    f = Fraction(value)
    scaled = f * 10**6
    # Round half away from zero so the sign never flips the digit pattern.
    n, d = scaled.numerator, scaled.denominator
    q, r = divmod(abs(n), d)
    if 2 * r >= d:
        q += 1
    sign = "-" if n < 0 and q > 0 else ""
    whole, frac = divmod(q, 10**6)
    return f"{sign}{whole}.{frac:06d}"
