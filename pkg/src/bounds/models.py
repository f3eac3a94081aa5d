"""Bound models: queries, evaluation traces and certified real intervals."""

import math
from decimal import Decimal
from fractions import Fraction
from typing import Any, Literal, Tuple, Union

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    field_serializer,
    field_validator,
    model_validator,
)

Number = Union[int, Fraction]


class RealInterval(BaseModel):
    """Closed interval [lo, hi] with exact rational endpoints enclosing a real."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lo: Fraction
    hi: Fraction

    @field_validator("lo", "hi", mode="before")
    @classmethod
    def _coerce(cls, value: Any) -> Fraction:
        if isinstance(value, float):
            raise ValueError("interval endpoints must be exact rationals, not floats")
        return Fraction(value)

    @model_validator(mode="after")
    def _ordered(self) -> "RealInterval":
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")
        return self

    @field_serializer("lo", "hi")
    def _serialize(self, value: Fraction) -> str:
        return f"{value.numerator}/{value.denominator}"

    @classmethod
    def exact(cls, value: Number) -> "RealInterval":
        """Degenerate interval [value, value]."""
        return cls(lo=value, hi=value)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, value: Number) -> bool:
        return self.lo <= value <= self.hi

    def certainly_le(self, other: Union["RealInterval", Number]) -> bool:
        """Every point of self is <= every point of other."""
        return self.hi <= _as_interval(other).lo

    def certainly_gt(self, other: Union["RealInterval", Number]) -> bool:
        """Every point of self is > every point of other."""
        return self.lo > _as_interval(other).hi

    def __add__(self, other: Union["RealInterval", Number]) -> "RealInterval":
        other = _as_interval(other)
        return RealInterval(lo=self.lo + other.lo, hi=self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self) -> "RealInterval":
        return RealInterval(lo=-self.hi, hi=-self.lo)

    def __sub__(self, other: Union["RealInterval", Number]) -> "RealInterval":
        return self + -_as_interval(other)

    def __rsub__(self, other: Number) -> "RealInterval":
        return _as_interval(other) - self

    def __mul__(self, other: Union["RealInterval", Number]) -> "RealInterval":
        other = _as_interval(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RealInterval(lo=min(products), hi=max(products))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "RealInterval":
        if exponent < 0:
            raise ValueError("only nonnegative integer powers are supported")
        if self.lo >= 0:
            return RealInterval(lo=self.lo ** exponent, hi=self.hi ** exponent)
        result = RealInterval.exact(1)
        for _ in range(exponent):
            result = result * self
        return result

    def to_decimal(self, digits: int) -> Tuple[str, str]:
        """Outward-rounded decimal endpoints with the given number of places."""
        scale = 10 ** digits
        lo = Decimal(math.floor(self.lo * scale)).scaleb(-digits)
        hi = Decimal(math.ceil(self.hi * scale)).scaleb(-digits)
        return str(lo), str(hi)

    def __str__(self) -> str:
        lo, hi = self.to_decimal(12)
        return f"[{lo}, {hi}]"


def _as_interval(value: Union[RealInterval, Number]) -> RealInterval:
    if isinstance(value, RealInterval):
        return value
    return RealInterval.exact(value)


class BoundQuery(BaseModel):
    """A (t, n) request for one of the parametrized bounds g or h."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["g", "h"]
    t: int = Field(..., ge=0, description="forbidden-structure parameter")
    n: int = Field(..., ge=0, description="vertex count")

    @property
    def block(self) -> int:
        """Vertices per forbidden block: 3 for triangles, 2 for edges."""
        return 3 if self.kind == "g" else 2

    @property
    def m(self) -> int:
        """Vertices left after t blocks; negative when clamping applies."""
        return self.n - self.block * self.t

    @property
    def needs_clamp(self) -> bool:
        return self.m < 0

    def clamped(self) -> "BoundQuery":
        """The query with t replaced by floor(n / block) when n is too small."""
        if not self.needs_clamp:
            return self
        return BoundQuery(kind=self.kind, t=self.n // self.block, n=self.n)


class GBoundEvaluation(BaseModel):
    """Trace of one evaluation of g_t(n)."""

    model_config = ConfigDict(frozen=True)

    query: BoundQuery
    effective_t: int
    m: int
    case: Literal["even", "odd", "odd-triangle-free"]
    clamped: bool
    value: int


class HBoundEvaluation(BaseModel):
    """Trace of one evaluation of h_t(n) = 2^t c^(n-2t)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    query: BoundQuery
    effective_t: int
    exponent: int
    clamped: bool
    precision: Fraction
    interval: RealInterval

    @field_serializer("precision")
    def _serialize_precision(self, value: Fraction) -> str:
        return f"{value.numerator}/{value.denominator}"
