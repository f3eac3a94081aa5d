"""Structure metric models."""

from pydantic import BaseModel, ConfigDict, Field, model_validator


class StructureProfile(BaseModel):
    """The three parameters the extremal bounds are indexed by."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0)
    triangle_free: bool
    triangle_matching_number: int = Field(..., ge=0)
    induced_matching_number: int = Field(..., ge=0)

    @model_validator(mode="after")
    def _check_consistency(self) -> "StructureProfile":
        if self.triangle_free != (self.triangle_matching_number == 0):
            raise ValueError("triangle_free must match a zero triangle matching number")
        if self.triangle_matching_number > self.n // 3:
            raise ValueError("triangle matching number exceeds n/3")
        if self.induced_matching_number > self.n // 2:
            raise ValueError("induced matching number exceeds n/2")
        return self
