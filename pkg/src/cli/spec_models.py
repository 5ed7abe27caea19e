"""
Spec Models Module

Pydantic models for problem specs, corpus bounds and run reports.
"""

import hashlib
import json
from typing import Any, Dict, List, Optional, Union

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    field_serializer,
    field_validator,
    model_validator,
)

SAFE_INTEGER = 2 ** 53


def _to_int(value: Any) -> int:
    if isinstance(value, bool):
        raise ValueError("booleans are not integers")
    if isinstance(value, str):
        return int(value.strip())
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(f"non-integer value {value}")
        return int(value)
    return int(value)


def _to_json_int(value: int) -> Union[int, str]:
    """Integers beyond the exactly representable double range travel as strings."""
    return str(value) if abs(value) >= SAFE_INTEGER else value


class SpecOptions(BaseModel):
    """Per-spec options; command-line flags override them."""

    model_config = ConfigDict(extra='forbid')

    truncation: int = Field(default=4, ge=0)
    seed: int = 0
    window: int = Field(default=0, ge=0)


class ProblemSpec(BaseModel):
    """
    A torus embedding, parameter and options.

    Attributes:
        rho: n rows of k integers
        declared_n: Optional row count (JSON key "n"), checked against rho
        lam: The parameter lambda (JSON key "lambda")
        p: Period
        options: Truncation, perturbation seed and render window radius
        name: Optional display name
    """

    model_config = ConfigDict(populate_by_name=True, extra='forbid')

    rho: List[List[int]]
    lam: List[int] = Field(alias='lambda')
    p: int = Field(ge=2)
    declared_n: Optional[int] = Field(default=None, alias='n', ge=1)
    k: Optional[int] = Field(default=None, ge=0)
    options: SpecOptions = Field(default_factory=SpecOptions)
    name: Optional[str] = None

    @field_validator('rho', mode='before')
    @classmethod
    def _parse_rho(cls, value: Any) -> List[List[int]]:
        return [[_to_int(v) for v in row] for row in value]

    @field_validator('lam', mode='before')
    @classmethod
    def _parse_lambda(cls, value: Any) -> List[int]:
        return [_to_int(v) for v in value]

    @field_validator('p', mode='before')
    @classmethod
    def _parse_p(cls, value: Any) -> int:
        return _to_int(value)

    @field_validator('declared_n', mode='before')
    @classmethod
    def _parse_n(cls, value: Any) -> Optional[int]:
        return None if value is None else _to_int(value)

    @model_validator(mode='after')
    def _check_shape(self) -> 'ProblemSpec':
        widths = {len(row) for row in self.rho}
        if not self.rho:
            raise ValueError("rho needs at least one row")
        if len(widths) > 1:
            raise ValueError("rho rows have different lengths")
        if self.declared_n is not None and self.declared_n != len(self.rho):
            raise ValueError(f"rho has {len(self.rho)} rows but n = {self.declared_n}")
        width = widths.pop()
        if self.k is not None and width and self.k != width:
            raise ValueError(f"rho has {width} columns but k = {self.k}")
        rank = width if width else (self.k or 0)
        if len(self.lam) != rank:
            raise ValueError(f"lambda has length {len(self.lam)}, expected {rank}")
        return self

    @field_serializer('rho')
    def _dump_rho(self, rho: List[List[int]]) -> List[List[Union[int, str]]]:
        return [[_to_json_int(v) for v in row] for row in rho]

    @field_serializer('lam')
    def _dump_lambda(self, lam: List[int]) -> List[Union[int, str]]:
        return [_to_json_int(v) for v in lam]

    @property
    def n(self) -> int:
        return len(self.rho)

    @property
    def rank(self) -> int:
        """k, also when rho has no columns."""
        width = len(self.rho[0])
        return width if width else len(self.lam)

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(by_alias=True, exclude_none=True)

    def digest(self) -> str:
        """sha256 of the canonical JSON form."""
        text = json.dumps(self.to_json_dict(), sort_keys=True)
        return hashlib.sha256(text.encode()).hexdigest()


class CorpusBounds(BaseModel):
    """Ranges for randomly generated specs."""

    model_config = ConfigDict(extra='forbid')

    n_min: int = Field(default=1, ge=1)
    n_max: int = Field(default=6, ge=1, le=6)
    k_min: int = Field(default=0, ge=0)
    k_max: int = Field(default=3, ge=0, le=3)
    p_max: int = Field(default=11, ge=2, le=11)
    entry_max: int = Field(default=3, ge=1, le=3)

    @model_validator(mode='after')
    def _check_ranges(self) -> 'CorpusBounds':
        if self.n_min > self.n_max:
            raise ValueError("n_min exceeds n_max")
        if self.k_min > self.k_max or self.k_min > self.n_max:
            raise ValueError("k_min is out of range")
        return self


class RunReport(BaseModel):
    """
    Result of one command.

    Attributes:
        command: Command name
        passed: Whether every internal check passed
        exit_code: 0 pass, 1 check failed, 2 invalid spec
        spec_digest: sha256 of the spec, when there is one
        results: Per-step structured results
        provenance: Route of every numeric table and the checks exercised
        timings: Seconds per step, only when enabled
    """

    command: str
    passed: bool
    exit_code: int
    spec_digest: Optional[str] = None
    results: Dict[str, Any] = Field(default_factory=dict)
    provenance: Dict[str, Any] = Field(default_factory=dict)
    warnings: List[str] = Field(default_factory=list)
    timings: Optional[Dict[str, float]] = None

    def to_json(self) -> str:
        return json.dumps(self.model_dump(exclude_none=True), sort_keys=True, indent=2)
