from field.modes import build_mode_set
from propagator.grid import Grid, build_grid
from propagator.potentials import Free, Harmonic, Potential, polynomial_potential
from scenario.params import *
from zigzag.scenario import ZigzagScenario
from zigzag.tau_map import TauMap, build_tau_map
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Dict, Tuple
import json


class ConfigError(ValueError):
    """The scenario configuration cannot be parsed or is inconsistent."""


@dataclass(frozen=True)
class ScenarioConfig:
    mode: str = default_mode
    potential_kind: str = default_potential["kind"]
    omega: float = default_potential["omega"]
    # V(q) = sum_k coefficients[k] q^k, for the polynomial kind
    coefficients: Tuple[float, ...] = ()
    t_a: float = default_times["t_a"]
    t_d: float = default_times["t_d"]
    t_c: float = default_times["t_c"]
    t_f: float = default_times["t_f"]
    grid_n: int = default_grid["n"]
    grid_extent: float = default_grid["extent"]
    slices_per_unit_time: int = default_slices_per_unit_time
    tolerances: Dict[str, float] = field(default_factory=lambda: dict(default_tolerances))
    mass: float = default_field["mass"]
    p_max: float = default_field["p_max"]
    n_modes: int = default_field["n_modes"]
    output_dir: str = default_output_dir
    seed: int = default_seed
    probes: int = default_probes
    negative_control: bool = False
    plot: bool = False

    @classmethod
    def from_dict(cls, data: dict) -> "ScenarioConfig":
        """
        Reads the nested JSON layout: {"mode", "potential": {"kind", "omega", "coefficients"},
        "times": {...}, "grid": {"n", "extent"}, "slices_per_unit_time", "tolerances": {...},
        "field": {"mass", "p_max", "n_modes"}, "output_dir", "seed", "probes",
        "negative_control", "plot"}. Missing keys take their defaults.
        """
        if not isinstance(data, dict):
            raise ConfigError("A scenario config must be a JSON object")
        known = {"mode", "potential", "times", "grid", "slices_per_unit_time", "tolerances",
                 "field", "output_dir", "seed", "probes", "negative_control", "plot"}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError("Unknown config keys: %s" % ", ".join(unknown))

        values = {}
        for key in ("mode", "slices_per_unit_time", "output_dir", "seed", "probes",
                    "negative_control", "plot"):
            if key in data:
                values[key] = data[key]

        potential = _section(data, "potential", ("kind", "omega", "coefficients"))
        if "kind" in potential:
            values["potential_kind"] = potential["kind"]
        if "omega" in potential:
            values["omega"] = potential["omega"]
        if "coefficients" in potential:
            if not isinstance(potential["coefficients"], list):
                raise ConfigError("Potential coefficients must be a list, got %r" %
                                  (potential["coefficients"],))
            values["coefficients"] = tuple(potential["coefficients"])

        values.update(_section(data, "times", ("t_a", "t_d", "t_c", "t_f")))
        grid = _section(data, "grid", ("n", "extent"))
        values.update({"grid_" + key: value for key, value in grid.items()})
        values.update(_section(data, "field", ("mass", "p_max", "n_modes")))

        tolerances = _section(data, "tolerances", tuple(default_tolerances))
        values["tolerances"] = {**default_tolerances, **tolerances}
        return cls(**values)

    def to_dict(self) -> dict:
        """The nested JSON layout read by from_dict."""
        return {
            "mode": self.mode,
            "potential": {"kind": self.potential_kind, "omega": self.omega,
                          "coefficients": list(self.coefficients)},
            "times": {"t_a": self.t_a, "t_d": self.t_d, "t_c": self.t_c, "t_f": self.t_f},
            "grid": {"n": self.grid_n, "extent": self.grid_extent},
            "slices_per_unit_time": self.slices_per_unit_time,
            "tolerances": dict(sorted(self.tolerances.items())),
            "field": {"mass": self.mass, "p_max": self.p_max, "n_modes": self.n_modes},
            "output_dir": str(self.output_dir),
            "seed": self.seed,
            "probes": self.probes,
            "negative_control": self.negative_control,
            "plot": self.plot,
        }

    def with_overrides(self, **overrides) -> "ScenarioConfig":
        """Replaces the fields given a value other than None."""
        names = {f.name for f in fields(self)}
        changes = {k: v for k, v in overrides.items() if v is not None}
        unknown = sorted(set(changes) - names)
        if unknown:
            raise ConfigError("Unknown config fields: %s" % ", ".join(unknown))
        return replace(self, **changes)

    ## Building the scenario objects
    def tau_map(self) -> TauMap:
        try:
            return build_tau_map(self.t_a, self.t_d, self.t_c, self.t_f)
        except (TypeError, ValueError) as e:
            raise ConfigError("Invalid times: %s" % e) from e

    def potential(self) -> Potential:
        if self.potential_kind == "free":
            return Free()
        if self.potential_kind == "harmonic":
            return Harmonic(float(self.omega))
        return polynomial_potential(self.coefficients)

    def grid(self) -> Grid:
        return build_grid(self.grid_n, -self.grid_extent, self.grid_extent)

    def scenario(self) -> ZigzagScenario:
        return ZigzagScenario(self.tau_map(), self.potential(), self.grid(),
                              slices_per_unit_time=self.slices_per_unit_time,
                              probe_count=self.probes, probe_seed=self.seed)

    def validate(self) -> "ScenarioConfig":
        """
        Checks the config is consistent with its mode. Problems are raised as ConfigError.
        """
        if self.mode not in modes:
            raise ConfigError("Unknown mode %r, expected one of %s" % (self.mode, modes))
        if self.potential_kind not in potential_kinds:
            raise ConfigError("Unknown potential kind %r, expected one of %s" %
                              (self.potential_kind, potential_kinds))
        if self.mode == "analytic" and self.potential_kind == "polynomial":
            raise ConfigError("Closed-form kernels only exist for free and harmonic potentials; "
                              "run polynomial potentials in grid mode")
        if self.mode == "field" and self.negative_control:
            raise ConfigError("The negative control applies to analytic and grid modes only")
        for name in ("slices_per_unit_time", "grid_n", "n_modes", "seed", "probes"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError("%s must be an integer, got %r" % (name, value))
        if not isinstance(self.output_dir, str):
            raise ConfigError("output_dir must be a path string, got %r" % (self.output_dir,))
        for name in ("negative_control", "plot"):
            if not isinstance(getattr(self, name), bool):
                raise ConfigError("%s must be true or false" % name)
        for name, value in self.tolerances.items():
            if name not in default_tolerances:
                raise ConfigError("Unknown tolerance %r" % name)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not value > 0:
                raise ConfigError("Tolerance %s must be a positive number, got %r" %
                                  (name, value))

        self.tau_map()
        try:
            if self.mode == "field":
                build_mode_set(self.mass, self.p_max, self.n_modes)
            else:
                self.scenario()
        except (TypeError, ValueError) as e:
            raise ConfigError(str(e)) from e
        return self


def _section(data: dict, name: str, keys) -> dict:
    section = data.get(name, {})
    if not isinstance(section, dict):
        raise ConfigError("Config section %r must be an object" % name)
    unknown = sorted(set(section) - set(keys))
    if unknown:
        raise ConfigError("Unknown keys in %r: %s" % (name, ", ".join(unknown)))
    return dict(section)


def load_config(path) -> ScenarioConfig:
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as config_file:
            data = json.load(config_file)
    except OSError as e:
        raise ConfigError("Cannot read config %s: %s" % (path, e.strerror)) from e
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise ConfigError("Config %s is not valid JSON: %s" % (path, e)) from e
    return ScenarioConfig.from_dict(data)
