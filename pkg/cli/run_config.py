import os
from dataclasses import dataclass, replace
from typing import Optional

from errors import DomainError

COMMANDS = (
    "bernoulli",
    "polylog",
    "potential",
    "sin-expansion",
    "check-identity",
    "check-theorem",
    "check-recursion",
    "solve-recursion",
    "gv-resum",
    "gv-check",
)
FORMATS = ("table", "json")

DEFAULT_GENUS = 6
DEFAULT_QDEG = 20
DEFAULT_KCUT = 20


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"environment variable {name} must be an integer, got {raw!r}")


@dataclass(frozen=True)
class RunConfig:
    command: str
    genus_cut: int = DEFAULT_GENUS
    q_cut: int = DEFAULT_QDEG
    k_cut: int = DEFAULT_KCUT
    order: Optional[int] = None
    index: Optional[int] = None
    alpha: Optional[str] = None
    input_path: Optional[str] = None
    output_format: str = "table"
    closed: bool = False

    @classmethod
    def from_env(cls, command: str) -> "RunConfig":
        """Defaults, overridden by GWDIFF_GENUS / GWDIFF_QDEG / GWDIFF_KCUT / GWDIFF_FORMAT"""
        return cls(
            command=command,
            genus_cut=_env_int("GWDIFF_GENUS", DEFAULT_GENUS),
            q_cut=_env_int("GWDIFF_QDEG", DEFAULT_QDEG),
            k_cut=_env_int("GWDIFF_KCUT", DEFAULT_KCUT),
            output_format=os.environ.get("GWDIFF_FORMAT", "table"),
        )

    def with_overrides(self, **overrides) -> "RunConfig":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise DomainError(f"unknown command {self.command!r}")
        if self.output_format not in FORMATS:
            raise DomainError(f"output format must be one of {FORMATS}, got {self.output_format!r}")
        for name in ("genus_cut", "q_cut", "k_cut"):
            if getattr(self, name) < 1:
                raise DomainError(f"{name} must be positive, got {getattr(self, name)}")
        if self.command == "bernoulli" and (self.index is None or self.index < 0):
            raise DomainError("bernoulli needs --n with a non-negative value")
        if self.command == "polylog" and self.order is None:
            raise DomainError("polylog needs --order")
        if self.command == "polylog" and self.closed and self.order > 0:
            raise DomainError("closed forms exist only for --order <= 0")
        if self.command == "gv-check" and not self.alpha:
            raise DomainError("gv-check needs --alpha")
        return self
