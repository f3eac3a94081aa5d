"""Construction family models."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from shared.exceptions import DomainError


class FamilyKind(str, Enum):
    """Graph families the generator can build."""

    MOON_MOSER = "moon_moser"
    HUJTER_TUZA = "hujter_tuza"
    G_EXTREMAL = "g_extremal"
    CYCLE = "cycle"
    COMPLETE = "complete"
    MATCHING = "matching"


# Smallest vertex count each family accepts
MINIMUM_VERTICES = {
    FamilyKind.MOON_MOSER: 3,
    FamilyKind.HUJTER_TUZA: 4,
    FamilyKind.G_EXTREMAL: 0,
    FamilyKind.CYCLE: 3,
    FamilyKind.COMPLETE: 0,
    FamilyKind.MATCHING: 0,
}


class FamilySpec(BaseModel):
    """
    A request for one member of a family.

    n is always the vertex count of the result; t is used by g_extremal only.
    """

    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    n: int = Field(..., ge=0)
    t: Optional[int] = Field(None, ge=0)
    alternative: bool = False

    @model_validator(mode="after")
    def _check_parameters(self) -> "FamilySpec":
        minimum = MINIMUM_VERTICES[self.kind]
        if self.n < minimum:
            raise DomainError(f"{self.kind.value} needs n >= {minimum} (got n={self.n})")

        if self.kind is FamilyKind.MATCHING and self.n % 2:
            raise DomainError(f"matching needs an even vertex count (got n={self.n})")

        if self.kind is FamilyKind.G_EXTREMAL:
            if self.t is None:
                raise DomainError("g_extremal needs t")
            if 3 * self.t > self.n:
                raise DomainError(f"g_extremal needs 3t <= n (got t={self.t}, n={self.n})")
            if self.t == 0 and self.n % 2 and self.n < 5:
                raise DomainError(f"g_extremal(0, {self.n}) is undefined for odd n below 5")
        elif self.t is not None:
            raise DomainError(f"{self.kind.value} takes no t parameter")

        if self.alternative and not (self.kind is FamilyKind.MOON_MOSER and self.n % 3 == 1):
            raise DomainError("the alternative witness exists only for moon_moser with n = 1 mod 3")

        return self
