from dataclasses import dataclass
from fractions import Fraction

from .exceptions import ParameterError


@dataclass(frozen=True, order=True, init=False)
class HalfInteger:
    """Exact half-integer, stored as twice its value.

    Used for hyperbolicity values, Gromov products and bow-metric thresholds
    so that no comparison ever goes through floating point.

    Parameters:
    -----------
    doubled: int
        Twice the represented value, keyword only; use HalfInteger.of for
        the value itself.
    """
    doubled: int

    def __init__(self, *, doubled):
        object.__setattr__(self, "doubled", int(doubled))

    @classmethod
    def of(cls, value):
        """ Build from an int, a Fraction with denominator 1 or 2, or a float that is a half-integer """
        if isinstance(value, HalfInteger):
            return value
        frac = Fraction(value)
        if (frac * 2).denominator != 1:
            raise ParameterError("{} is not a half-integer".format(value))
        return cls(doubled=int(frac * 2))

    @classmethod
    def parse(cls, text):
        """ Parse '3', '3/2', '1.5' """
        text = str(text).strip()
        try:
            return cls.of(Fraction(text))
        except (ValueError, ZeroDivisionError):
            raise ParameterError("cannot read half-integer from '{}'".format(text))

    def to_fraction(self):
        return Fraction(self.doubled, 2)

    def floor(self):
        return self.doubled // 2

    def ceil(self):
        return -((-self.doubled) // 2)

    def is_integer(self):
        return self.doubled % 2 == 0

    def __add__(self, other):
        other = HalfInteger.of(other)
        return HalfInteger(doubled=self.doubled + other.doubled)

    def __sub__(self, other):
        other = HalfInteger.of(other)
        return HalfInteger(doubled=self.doubled - other.doubled)

    def __neg__(self):
        return HalfInteger(doubled=-self.doubled)

    def __float__(self):
        return self.doubled / 2

    def __str__(self):
        if self.is_integer():
            return str(self.doubled // 2)
        return "{}/2".format(self.doubled)


ZERO = HalfInteger(doubled=0)
HALF = HalfInteger(doubled=1)
ONE = HalfInteger(doubled=2)


def ceil_half(k):
    """ ceil(k/2) for an integer k """
    return -((-k) // 2)
