"""Result records shared by the verification routines and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from .exact import format_rational


@dataclass(frozen=True)
class IdentityCheck:
    """One exact identity evaluated at one parameter point."""

    identity: str
    params: Dict[str, str]
    residual_zero: Optional[bool]  # None when the check was skipped
    n: Optional[int] = None
    detail: str = ""

    def to_json_obj(self) -> Dict[str, Any]:
        obj: Dict[str, Any] = {
            "identity": self.identity,
            "params": self.params,
            "residual_zero": self.residual_zero,
        }
        if self.n is not None:
            obj["n"] = self.n
        if self.detail:
            obj["detail"] = self.detail
        return obj


@dataclass(frozen=True)
class ActionCheck:
    """Outcome of applying an operator to P_n and comparing with c * Q_m.

    ``proportional`` says whether the image is a multiple of the target
    polynomial at all; ``constant_match`` whether the multiple equals the
    closed-form prediction.  Keeping them apart separates a wrong target from
    a wrong normalization.
    """

    n: int
    kind: str
    target_degree: int
    predicted: Any
    observed: Any
    proportional: bool
    constant_match: bool
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.proportional and self.constant_match

    def to_json_obj(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "kind": self.kind,
            "target_degree": self.target_degree,
            "predicted": format_rational(self.predicted),
            "observed": None if self.observed is None else format_rational(self.observed),
            "proportional": self.proportional,
            "constant_match": self.constant_match,
            **self.extra,
        }
