"""Exact rational parsing and formatting helpers.

Everything in the core is a fractions.Fraction.  Decimal input strings are
converted exactly ("0.5" becomes 1/2), so a box loaded from JSON written by
a float-producing pipeline still analyses exactly.
"""

from fractions import Fraction

from .errors import ParseError


def rat(value) -> Fraction:
    """Coerce a number or string ("1/2", "0.25", "3") to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # treat a float as the decimal literal it prints as, not its binary value
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {value!r}") from exc
    raise ParseError(f"not a rational: {value!r}")


def rat_str(q: Fraction) -> str:
    """Canonical string form, "num/den" or bare integer."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rat_dec(q: Fraction, places: int = 12) -> str:
    """Decimal approximation for plotting pipelines; exact when it terminates."""
    q = Fraction(q)
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, rem = divmod(q.numerator, q.denominator)
    if rem == 0:
        return f"{sign}{whole}"
    digits = []
    for _ in range(places):
        rem *= 10
        d, rem = divmod(rem, q.denominator)
        digits.append(str(d))
        if rem == 0:
            break
    return f"{sign}{whole}." + "".join(digits)
