"""Experiment configuration: one JSON document, overridable from the CLI.

Keys (all optional unless a subcommand needs them)::

    functions     list of function specs (or "function": one spec)
                    {"id", "family", "params", "N"}
                    {"id", "coeffs": [[re, im], ...]}
                    {"id", "coeffs_file": "path.json"}
                    {"id", "random": {"count", "degree"}}   uses "seed"
    measures      list of measure specs (or "measure": one spec), see
                  dirichlet_approx.measures.measure_from_config
    arrays        names ("fejer", "vallee_poussin", "taylor_truncation") or
                  {"type": "table", "name", "rows", "M", "L"}
    n_list        strictly increasing integers
    nodes_r, nodes_theta   area quadrature sizes (64, 256)
    threshold     rel_err limit for verify-identity (1e-5)
    power_alphas  alphas for the power-weight comparison
    truncations   truncation degrees for the norm convergence-in-N helper
    N_max, tol    validate-array sweep (512, 0.05)
    output        CSV path
    seed          seed for random functions (0)

Relative paths inside the document resolve against its directory.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .kernels import WeightArray, array_by_name, table_array
from .measures import DiskMeasure, measure_from_config
from .series import CoefficientSeries, Kind, coefficients_from_json, load_coefficients, make_family


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class FunctionSpec:
    """A named test function, rebuildable at another truncation degree."""

    id: str
    series: CoefficientSeries
    family: str | None = None
    params: tuple = ()

    def truncated(self, N: int) -> CoefficientSeries:
        if self.family is None:
            raise ConfigError(f"function {self.id!r} is not a family and cannot be re-truncated")
        return make_family(self.family, self.params, N)


@dataclass(frozen=True)
class ExperimentConfig:
    functions: tuple = ()
    measures: tuple = ()
    arrays: tuple = ()
    n_list: tuple = ()
    nodes_r: int = 64
    nodes_theta: int = 256
    threshold: float = 1e-5
    power_alphas: tuple = ()
    truncations: tuple = ()
    N_max: int = 512
    tol: float = 0.05
    output: str | None = None
    seed: int = 0
    source: str | None = field(default=None, compare=False)

    def override(self, **kwargs):
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})

    def check(self):
        if self.n_list:
            check_n_list(self.n_list)
        if self.nodes_r < 1 or self.nodes_theta < 1:
            raise ConfigError("node counts must be positive")
        if not self.threshold >= 0:
            raise ConfigError("threshold must be >= 0")
        return self


def check_n_list(n_list):
    n_list = tuple(int(n) for n in n_list)
    if not n_list or any(n < 0 for n in n_list):
        raise ConfigError("n_list must be a nonempty list of nonnegative integers")
    if any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ConfigError("n_list must be strictly increasing")
    return n_list


def _parse_function(spec, base: Path, rng, index):
    if not isinstance(spec, dict):
        raise ConfigError("function spec must be a JSON object")
    fid = str(spec.get("id", f"f{index}"))
    if "family" in spec:
        params = tuple(spec.get("params", ()))
        N = int(spec.get("N", 0))
        return [FunctionSpec(fid, make_family(spec["family"], params, N), spec["family"], params)]
    if "coeffs" in spec:
        return [FunctionSpec(fid, coefficients_from_json(json.dumps(spec["coeffs"])))]
    if "coeffs_file" in spec:
        path = Path(spec["coeffs_file"])
        if not path.is_absolute():
            path = base / path
        return [FunctionSpec(fid, load_coefficients(path, Kind(spec.get("kind", "exact_polynomial"))))]
    if "random" in spec:
        r = spec["random"]
        count, degree = int(r.get("count", 1)), int(r["degree"])
        out = []
        for i in range(count):
            c = rng.standard_normal(degree + 1) + 1j * rng.standard_normal(degree + 1)
            out.append(FunctionSpec(f"{fid}_{i}", CoefficientSeries(c)))
        return out
    raise ConfigError(f"function spec {fid!r} needs one of family/coeffs/coeffs_file/random")


def parse_array(spec) -> WeightArray:
    if isinstance(spec, str):
        return array_by_name(spec)
    if isinstance(spec, dict) and spec.get("type") == "table":
        return table_array(spec["rows"], spec.get("name", "table"), spec.get("M"), spec.get("L"))
    if isinstance(spec, dict) and "name" in spec:
        return array_by_name(spec["name"])
    raise ConfigError(f"cannot interpret weight array spec {spec!r}")


def _listify(data, plural, singular):
    if plural in data:
        value = data[plural]
        if not isinstance(value, list):
            raise ConfigError(f"{plural!r} must be a list")
        return value
    if singular in data:
        return [data[singular]]
    return []


def parse_config(data: dict, base: Path | None = None) -> ExperimentConfig:
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    base = base or Path.cwd()
    try:
        seed = int(data.get("seed", 0))
        rng = np.random.default_rng(seed)
        functions = []
        for i, spec in enumerate(_listify(data, "functions", "function")):
            functions.extend(_parse_function(spec, base, rng, i))
        measures: list[DiskMeasure] = []
        for i, spec in enumerate(_listify(data, "measures", "measure")):
            mu = measure_from_config(spec)
            measures.append(mu)
        arrays = [parse_array(a) for a in data.get("arrays", [])]
        cfg = ExperimentConfig(
            functions=tuple(functions),
            measures=tuple(measures),
            arrays=tuple(arrays),
            n_list=tuple(int(n) for n in data.get("n_list", ())),
            nodes_r=int(data.get("nodes_r", 64)),
            nodes_theta=int(data.get("nodes_theta", 256)),
            threshold=float(data.get("threshold", 1e-5)),
            power_alphas=tuple(float(a) for a in data.get("power_alphas", ())),
            truncations=tuple(int(n) for n in data.get("truncations", ())),
            N_max=int(data.get("N_max", 512)),
            tol=float(data.get("tol", 0.05)),
            output=data.get("output"),
            seed=seed,
        )
    except ConfigError:
        raise
    except (ValueError, TypeError, KeyError, OSError) as exc:
        raise ConfigError(str(exc)) from exc
    if cfg.output is not None and not Path(cfg.output).is_absolute():
        cfg = replace(cfg, output=str(base / cfg.output))
    return cfg.check()


def load_config(path) -> ExperimentConfig:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return replace(parse_config(data, path.parent), source=str(path))


def bundled(name: str) -> Path:
    return Path(__file__).with_name("data") / name
