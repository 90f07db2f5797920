"""Enums and document schemas for the IMM geometry toolkit"""

import enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator


# ---------- ENUMS ----------
class OutputFormat(str, enum.Enum):
    JSON = "json"
    CSV = "csv"
    PLAIN = "plain"


class ComponentKind(str, enum.Enum):
    SING = "sing"            # component of the singular locus
    JACOBIAN = "jacobian"    # component of the (n-2)-nd Jacobian locus


class ExitCode(enum.IntEnum):
    SUCCESS = 0
    VERIFICATION_FAILURE = 1
    INPUT_ERROR = 2
    GUARD_EXCEEDED = 3


class MoveKind(str, enum.Enum):
    GLUE = "glue"
    SHIFT = "shift"


# ---------- RATIONAL TEXT ----------
def parse_rational_text(text: Union[str, int]) -> Fraction:
    """
    Parse "p/q" or "p" into an exact rational

    Raises:
        ValueError: If the text is not an exact rational
    """
    if isinstance(text, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(text, int):
        return Fraction(text)
    cleaned = text.strip()
    if not cleaned or any(ch in cleaned for ch in ".eE"):
        raise ValueError(f"'{text}' is not of the form p/q")
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"'{text}' is not of the form p/q") from exc


def format_rational(value: Fraction) -> str:
    """Lossless "p/q" text (denominator omitted when it is 1)"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# ---------- DOCUMENT SCHEMAS ----------
class RunConfig(BaseModel):
    """Echo of the parameters a command ran with"""
    model_config = ConfigDict(use_enum_values=True)

    n: int = Field(ge=1)
    q: int = Field(ge=1)
    seed: int = Field(ge=0, lt=2**64)
    trials: int = Field(ge=1)
    output_format: OutputFormat = OutputFormat.JSON


class PointFile(BaseModel):
    """A point (X_1, ..., X_n) with blocks[a-1][i-1][j-1] = entry (i, j) of X_a"""
    n: int = Field(ge=1)
    q: int = Field(ge=1)
    blocks: List[List[List[Union[str, int]]]]

    @field_validator("blocks")
    @classmethod
    def entries_are_rationals(cls, blocks):
        for a, block in enumerate(blocks):
            for i, row in enumerate(block):
                for j, entry in enumerate(row):
                    try:
                        parse_rational_text(entry)
                    except ValueError as exc:
                        raise ValueError(f"blocks[{a}][{i}][{j}]: {exc}") from exc
        return blocks

    @model_validator(mode="after")
    def shape_matches(self):
        if len(self.blocks) != self.n:
            raise ValueError(f"expected {self.n} blocks, found {len(self.blocks)}")
        for a, block in enumerate(self.blocks):
            if len(block) != self.q:
                raise ValueError(f"blocks[{a}] has {len(block)} rows, expected {self.q}")
            for i, row in enumerate(block):
                if len(row) != self.q:
                    raise ValueError(f"blocks[{a}][{i}] has {len(row)} entries, expected {self.q}")
        return self

    def rational_blocks(self) -> List[List[List[Fraction]]]:
        return [[[parse_rational_text(e) for e in row] for row in block] for block in self.blocks]


class ComponentRecord(BaseModel):
    """One irreducible component with its certificate data"""
    model_config = ConfigDict(use_enum_values=True)

    kind: ComponentKind
    label: str
    defining_data: Dict[str, Any]
    dim: int = Field(ge=0)
    dim_oracle: Optional[int] = None
    representative: List[List[List[str]]]


class CatalogDocument(BaseModel):
    """Machine-readable component catalog"""
    model_config = ConfigDict(use_enum_values=True)

    tool_version: str
    config: RunConfig
    kind: ComponentKind
    components: List[ComponentRecord]
    summary: Dict[str, Any] = Field(default_factory=dict)


class CheckResult(BaseModel):
    """One line of a verification report"""
    check: str
    value: Any
    passed: Optional[bool] = None


class ReportDocument(BaseModel):
    """Pass/fail report of the symmetry and Hessian commands"""
    model_config = ConfigDict(use_enum_values=True)

    tool_version: str
    config: RunConfig
    command: str
    checks: List[CheckResult] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def add(self, check: str, value: Any, passed: Optional[bool] = None) -> "ReportDocument":
        self.checks.append(CheckResult(check=check, value=value, passed=passed))
        return self
