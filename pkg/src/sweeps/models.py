"""Sweep models: theorems, per-parameter maxima, findings and reports."""

from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Union

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    computed_field,
    field_serializer,
    model_validator,
)

from bounds.models import RealInterval
from shared.models import Verdict

Bound = Union[int, RealInterval]

# Key of the single running maximum in mm/ht sweeps
OVERALL = -1


class Theorem(str, Enum):
    """Extremal statement a sweep checks."""

    MM = "mm"
    HT = "ht"
    MAIN = "main"
    KP2 = "kp2"

    @property
    def triangle_free_only(self) -> bool:
        """Whether only triangle-free graphs are admissible."""
        return self in (Theorem.HT, Theorem.KP2)

    @property
    def per_parameter(self) -> bool:
        """Whether maxima are tracked per structural parameter value."""
        return self in (Theorem.MAIN, Theorem.KP2)

    @property
    def minimum_vertices(self) -> int:
        """Smallest n for which every admissible graph has a defined bound."""
        return {Theorem.MM: 3, Theorem.HT: 4, Theorem.MAIN: 4, Theorem.KP2: 1}[self]


class ParameterMaximum(BaseModel):
    """Largest MIS count seen for one parameter value (or overall)."""

    model_config = ConfigDict(frozen=True)

    parameter: Optional[int] = None
    max_mis: int
    bound: Bound
    witness: str = Field(..., description="graph6 of the first graph attaining max_mis")
    attained: bool
    graphs: int = Field(..., ge=1, description="graphs with this parameter value")

    @model_validator(mode="after")
    def _attained_means_exact(self) -> "ParameterMaximum":
        if self.attained and not (isinstance(self.bound, int) and self.max_mis == self.bound):
            raise ValueError("attained requires an integer bound equal to max_mis")
        return self


class Violation(BaseModel):
    """A graph whose MIS count exceeds its bound."""

    model_config = ConfigDict(frozen=True)

    key: int = Field(..., description="labeled graph index or corpus line number")
    graph6: str
    mis: int
    bound: Bound
    parameter: Optional[int] = None


class InconclusiveCase(BaseModel):
    """A graph the h enclosure could not decide at the tightest precision."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    key: int
    graph6: str
    mis: int
    parameter: int
    interval: RealInterval
    precision: Fraction

    @field_serializer("precision")
    def _serialize_precision(self, value: Fraction) -> str:
        return f"{value.numerator}/{value.denominator}"


class SweepReport(BaseModel):
    """Outcome of one sweep over labeled graphs or a corpus."""

    theorem: Theorem
    n: int
    source: str = Field(..., description="'labeled' or the corpus path")
    exhaustive: bool
    per_parameter: Dict[int, ParameterMaximum] = Field(default_factory=dict)
    overall: Optional[ParameterMaximum] = None
    violations: List[Violation] = Field(default_factory=list)
    inconclusive: List[InconclusiveCase] = Field(default_factory=list)
    graphs_scanned: int = 0
    graphs_checked: int = 0
    elapsed: float = Field(0.0, description="wall-clock seconds")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def verdict(self) -> Verdict:
        if self.violations:
            return Verdict.FAIL
        if self.inconclusive:
            return Verdict.INCONCLUSIVE
        if self.graphs_checked == 0:
            return Verdict.PASS_VACUOUS
        return Verdict.PASS

    def maxima(self) -> List[ParameterMaximum]:
        """All recorded maxima, by parameter value."""
        if self.overall is not None:
            return [self.overall]
        return [self.per_parameter[t] for t in sorted(self.per_parameter)]
