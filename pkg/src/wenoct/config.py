"""Run configuration: flat ``key = value`` files with command-line overrides."""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from pathlib import Path

from .grid import ConfigurationError
from .problems import get_problem
from .timestepper import ENERGY_OPTIONS, SCHEMES, SolverConfig

FORMATS = ("csv", "vtk")


@dataclass(frozen=True)
class RunConfig:
    problem: str = "orszag_tang"
    mesh: tuple | None = None
    cfl: float = 3.0
    t_final: float | None = None
    scheme: str = "ct"
    energy_option: str = "conserve"
    nu: float = 0.1
    out: str = "out"
    format: str = "csv"
    diag_every: int = 1
    max_steps: int | None = None
    slice_axis: int = 1
    slice_position: float | None = None

    def __post_init__(self):
        spec = get_problem(self.problem)
        if not self.cfl > 0:
            raise ConfigurationError(f"cfl must be positive, got {self.cfl}")
        if self.scheme not in SCHEMES:
            raise ConfigurationError(f"scheme must be one of {SCHEMES}")
        if self.energy_option not in ENERGY_OPTIONS:
            raise ConfigurationError(f"energy must be one of {ENERGY_OPTIONS}")
        if self.format not in FORMATS:
            raise ConfigurationError(f"format must be one of {FORMATS}")
        if self.mesh is not None:
            if len(self.mesh) != spec.ndim:
                raise ConfigurationError(f"{self.problem} needs {spec.ndim} mesh sizes")
            if any(n < 16 for n in self.mesh):
                raise ConfigurationError("mesh must have at least 16 points per axis")
        if self.t_final is not None and self.t_final < 0:
            raise ConfigurationError("t_final must be non-negative")

    @property
    def spec(self):
        return get_problem(self.problem)

    def resolved_mesh(self) -> tuple:
        return tuple(self.mesh) if self.mesh is not None else self.spec.mesh

    def resolved_t_final(self) -> float:
        return self.t_final if self.t_final is not None else self.spec.t_final

    def solver(self) -> SolverConfig:
        return SolverConfig(
            cfl=self.cfl,
            scheme=self.scheme,
            energy_option=self.energy_option,
            nu=self.nu,
            max_steps=self.max_steps,
            diag_every=self.diag_every,
        )


# config-file keys mirror the CLI flags
ALIASES = {"tfinal": "t_final", "energy": "energy_option"}


def parse_mesh(text) -> tuple:
    if isinstance(text, (tuple, list)):
        return tuple(int(v) for v in text)
    try:
        return tuple(int(v) for v in str(text).replace("x", ",").split(",") if v.strip())
    except ValueError:
        raise ConfigurationError(f"bad mesh specification {text!r}") from None


def _coerce(key: str, value):
    if value is None:
        return None
    types = {f.name: f.type for f in fields(RunConfig)}
    t = types[key]
    if key == "mesh":
        return parse_mesh(value)
    try:
        if "float" in str(t):
            return float(value)
        if "int" in str(t):
            return int(value)
    except ValueError:
        raise ConfigurationError(f"bad value for {key}: {value!r}") from None
    return str(value)


def parse_config_text(text: str) -> dict:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigurationError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        key = ALIASES.get(key.replace("-", "_"), key.replace("-", "_"))
        if key not in {f.name for f in fields(RunConfig)}:
            raise ConfigurationError(f"line {lineno}: unknown key {key!r}")
        out[key] = value
    return out


def build_config(path: str | Path | None = None, **overrides) -> RunConfig:
    """File values first, then non-``None`` overrides."""
    values = parse_config_text(Path(path).read_text()) if path else {}
    for key, value in overrides.items():
        key = ALIASES.get(key, key)
        if value is not None:
            values[key] = value
    coerced = {k: _coerce(k, v) for k, v in values.items()}
    return replace(RunConfig(problem=coerced.pop("problem", "orszag_tang")), **coerced)
