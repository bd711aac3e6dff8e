from fractions import Fraction
from typing import Annotated, Any, Tuple

from pydantic import BaseModel, BeforeValidator, ConfigDict, PlainSerializer

from ..utils.parsing import parse_rational


def _to_fraction(value: Any) -> Fraction:
    if isinstance(value, float):
        return Fraction(value)
    return parse_rational(value)


def _to_complex(value: Any) -> complex:
    if isinstance(value, (list, tuple)):
        re, im = value
        return complex(float(re), float(im))
    return complex(value)


def _sorted_pair(value: Any) -> Tuple[int, int]:
    a, b = (int(x) for x in value)
    return (a, b) if a <= b else (b, a)


# Exact rational; JSON form is the string "p/q"
Rational = Annotated[
    Fraction,
    BeforeValidator(_to_fraction),
    PlainSerializer(lambda f: str(f), return_type=str, when_used="json"),
]

# Complex number; JSON form is [re, im]
ComplexValue = Annotated[
    complex,
    BeforeValidator(_to_complex),
    PlainSerializer(lambda z: [z.real, z.imag], return_type=list, when_used="json"),
]

# Unordered pair {k, m} stored with k < m
IntPair = Annotated[Tuple[int, int], BeforeValidator(_sorted_pair)]


class FrozenModel(BaseModel):
    """Immutable value object shared by every domain type"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def to_dict(self) -> dict:
        return self.model_dump(mode="json")
