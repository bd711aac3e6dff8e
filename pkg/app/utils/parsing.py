"""
Text parsers shared by the models and the command line
"""

import re
from fractions import Fraction
from typing import List, Tuple

from .errors import InvalidInputError

_PI_FORM = re.compile(
    r"^(?P<sign>[+-]?)\s*(?P<coef>[0-9./]*)\s*\*?\s*pi\s*(?:/\s*(?P<den>[0-9]+))?$",
    re.IGNORECASE,
)
_GRID = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def parse_rational(text) -> Fraction:
    """Exact rational from an int, a Fraction, or a decimal/fraction string"""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise InvalidInputError(f"Refusing float {text!r}; pass the value as a string for an exact rational")
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InvalidInputError(f"Not a rational number: {text!r}") from e


def parse_quantity(text) -> Tuple[Fraction, bool]:
    """Split '3/4pi', '-pi/2', '2*pi' or '0.25' into (coefficient, is_pi_multiple)"""
    if not isinstance(text, str):
        return parse_rational(text), False
    cleaned = text.strip().replace("π", "pi")
    match = _PI_FORM.match(cleaned)
    if not match:
        return parse_rational(cleaned), False
    coef = parse_rational(match.group("coef")) if match.group("coef") else Fraction(1)
    if match.group("den"):
        den = int(match.group("den"))
        if den == 0:
            raise InvalidInputError(f"Zero denominator in {text!r}")
        coef /= den
    if match.group("sign") == "-":
        coef = -coef
    return coef, True


def parse_int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise InvalidInputError(f"Expected comma-separated integers, got {text!r}") from e


def parse_rational_list(text: str) -> List[Fraction]:
    return [parse_rational(part) for part in text.split(",") if part.strip()]


def parse_pair(text: str) -> Tuple[int, int]:
    values = parse_int_list(text)
    if len(values) != 2:
        raise InvalidInputError(f"Expected two integers 'k,m', got {text!r}")
    return values[0], values[1]


def parse_grid(text: str) -> List[int]:
    """'-3..3' -> [-3, ..., 3]"""
    match = _GRID.match(text)
    if not match:
        raise InvalidInputError(f"Expected an integer range 'a..b', got {text!r}")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise InvalidInputError(f"Empty range {text!r}")
    return list(range(lo, hi + 1))
