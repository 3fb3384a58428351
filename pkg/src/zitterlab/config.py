"""Run configuration: an INI-style key = value file with section headers.

Example::

    [params]
    a = 1
    A = -4

    [run]
    tau_end = 20
    step = 1e-3
    seed = 42
    sample_count = 1000
    sample_every = 10

    [helix]
    omega = 0.70710678
    phase = 0

Simulation takes exactly one of ``[helix]`` (omega, phase) or ``[initial]``
(u0, udot0, uddot0 as comma-separated four-vectors). A sweep reads ``[sweep]``
with comma-separated ``A_over_a`` and either ``omega`` or ``k0`` lists.
Keys are case-sensitive (``a`` and ``A`` are different couplings).
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field
from pathlib import Path

from .errors import RankConditionError
from .lagrangians import BoppParams
from .minkowski import FourVector

MODES = ("check", "simulate", "sweep")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class HelixSpec:
    omega: float
    phase: float = 0.0


@dataclass(frozen=True)
class InitialData:
    u0: FourVector
    udot0: FourVector
    uddot0: FourVector


@dataclass(frozen=True)
class SweepGrid:
    A_over_a: tuple[float, ...]
    omega: tuple[float, ...] = ()
    k0: tuple[float, ...] = ()

    def points(self) -> list[tuple[float, str, float]]:
        key, values = ("omega", self.omega) if self.omega else ("k0", self.k0)
        return [(r, key, v) for r in self.A_over_a for v in values]


@dataclass(frozen=True)
class RunConfig:
    params: BoppParams
    mode: str
    tau_end: float = 20.0
    step: float = 1e-3
    seed: int = 42
    sample_count: int = 1000
    sample_every: int = 10
    out: Path = Path(".")
    workers: int = 1
    initial: InitialData | None = None
    helix: HelixSpec | None = None
    sweep: SweepGrid | None = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}")
        if not self.tau_end > 0 or not self.step > 0:
            raise ConfigError("tau_end and step must be positive")
        if self.sample_count < 1:
            raise ConfigError("sample_count must be at least 1 (an empty suite is not a pass)")
        if self.sample_every < 1 or self.workers < 1:
            raise ConfigError("sample_every and workers must be at least 1")
        if self.mode == "simulate" and (self.initial is None) == (self.helix is None):
            raise ConfigError("simulate needs exactly one of [initial] or [helix]")
        if self.mode == "sweep":
            if self.sweep is None or not self.sweep.points():
                raise ConfigError("sweep needs a non-empty [sweep] grid")


def _floats(text: str) -> tuple[float, ...]:
    return tuple(float(t) for t in text.replace(";", ",").split(",") if t.strip())


def _vector(text: str) -> FourVector:
    vals = _floats(text)
    if len(vals) != 4:
        raise ConfigError(f"expected four components, got {text!r}")
    return FourVector(*vals)


def default_config(mode: str = "check") -> RunConfig:
    return RunConfig(BoppParams(1.0, 1.0), mode)


def load_config(
    path: str | Path | None,
    mode: str,
    *,
    seed: int | None = None,
    out: str | Path | None = None,
) -> RunConfig:
    """Parse ``path`` (or use defaults when None) for the given subcommand."""
    cp = configparser.ConfigParser(inline_comment_prefixes=("#",))
    cp.optionxform = str
    if path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                cp.read_file(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        except configparser.Error as exc:
            raise ConfigError(f"malformed config {path}: {exc}") from exc
    try:
        prm = cp["params"] if cp.has_section("params") else {}
        try:
            params = BoppParams(float(prm.get("a", 1.0)), float(prm.get("A", 1.0)))
        except RankConditionError as exc:
            raise ConfigError(str(exc)) from exc
        run = cp["run"] if cp.has_section("run") else {}
        cfg_mode = run.get("mode", mode)
        if cfg_mode != mode:
            raise ConfigError(f"config declares mode {cfg_mode!r} but the {mode!r} command was run")
        kwargs = dict(
            tau_end=float(run.get("tau_end", 20.0)),
            step=float(run.get("step", 1e-3)),
            seed=int(run.get("seed", 42)),
            sample_count=int(run.get("sample_count", 1000)),
            sample_every=int(run.get("sample_every", 10)),
            out=Path(run.get("out", ".")),
            workers=int(run.get("workers", 1)),
        )
        if seed is not None:
            kwargs["seed"] = seed
        if out is not None:
            kwargs["out"] = Path(out)
        if cp.has_section("helix"):
            h = cp["helix"]
            kwargs["helix"] = HelixSpec(float(h["omega"]), float(h.get("phase", 0.0)))
        if cp.has_section("initial"):
            i = cp["initial"]
            zero = "0,0,0,0"
            kwargs["initial"] = InitialData(
                _vector(i["u0"]), _vector(i.get("udot0", zero)), _vector(i.get("uddot0", zero))
            )
        if cp.has_section("sweep"):
            s = cp["sweep"]
            omega, k0 = _floats(s.get("omega", "")), _floats(s.get("k0", ""))
            if omega and k0:
                raise ConfigError("[sweep] takes either omega or k0, not both")
            kwargs["sweep"] = SweepGrid(_floats(s.get("A_over_a", "")), omega, k0)
        return RunConfig(params, mode, **kwargs)
    except ConfigError:
        raise
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"invalid config value: {exc}") from exc
