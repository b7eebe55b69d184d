"""Run configuration: JSON descriptors for instances, cocycles and witnesses.

Complex scalars appear in configs as ``[re, im]`` pairs (plain numbers are
accepted and read as real).  Matrices are nested arrays of such pairs.
Descriptor shapes:

* instance: ``{"type": "group_algebra_zd", "d": 2, "star": true}``,
  ``{"type": "symmetric_star", "generators": ["x", "xstar"],
  "involution": [["x", "xstar"]]}``, or ``{"type": "sweedler_h4"}``.
* cocycle: ``{"type": "zd_matrix", "matrix": ...}``,
  ``{"type": "z_polynomial", "coeffs": [[p, q, c], ...]}``,
  ``{"type": "primitive_bilinear", "matrix": ...}``,
  ``{"type": "grouplike_table", "entries": [[k, l, c], ...], "expr": "..."}``
  or ``{"type": "zero"}``.
* witness (optional): ``{"type": "grouplike_expression", "expr": "-(k**3)/3"}``,
  ``{"type": "pbw_trivializer"}`` or ``{"type": "zero"}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import BialgebraInstance
from .convolution import Cochain, cochain_scale, zero_cochain
from . import instances as inst_mod

COMMANDS = ("validate", "deform", "antipode", "split", "trivial-check", "full-report")

DEFAULT_T_GRID = [-1.0, -0.5, 0.0, 0.5, 1.0]
DEFAULT_TOLERANCES = {"law": 1e-8, "strict": 1e-12, "eq": 1e-9, "prune": 1e-12}
DEFAULT_SAMPLER = {"coord_bound": 5, "max_degree": 4, "max_support": 3}


class ConfigError(Exception):
    """The run configuration cannot be parsed or resolved."""


def parse_complex(value) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    raise ConfigError(f"cannot read {value!r} as a complex scalar")


def encode_complex(z: complex) -> list:
    z = complex(z)
    return [z.real + 0.0, z.imag + 0.0]


def parse_matrix(rows) -> list:
    if not isinstance(rows, list) or not rows:
        raise ConfigError("matrix must be a non-empty nested array")
    return [[parse_complex(v) for v in row] for row in rows]


@dataclass
class RunConfig:
    instance: dict
    cocycle: dict
    witness: dict | None = None
    t_grid: list = field(default_factory=lambda: list(DEFAULT_T_GRID))
    seed: int = 20240817
    sample_budget: int = 200
    tolerances: dict = field(default_factory=lambda: dict(DEFAULT_TOLERANCES))
    sampler: dict = field(default_factory=lambda: dict(DEFAULT_SAMPLER))
    require_star: bool = False
    command: str = "full-report"
    tabulate: list = field(default_factory=list)

    @classmethod
    def from_dict(cls, raw: dict) -> "RunConfig":
        if not isinstance(raw, dict):
            raise ConfigError("configuration must be a JSON object")
        unknown = set(raw) - {
            "instance", "cocycle", "witness", "t_grid", "seed", "sample_budget",
            "tolerances", "sampler", "require_star", "command", "tabulate",
        }
        if unknown:
            raise ConfigError(f"unknown configuration fields: {sorted(unknown)}")
        if "instance" not in raw or "cocycle" not in raw:
            raise ConfigError("configuration needs 'instance' and 'cocycle' descriptors")
        cfg = cls(
            instance=dict(raw["instance"]),
            cocycle=dict(raw["cocycle"]),
            witness=dict(raw["witness"]) if raw.get("witness") else None,
            t_grid=[float(t) for t in raw.get("t_grid", DEFAULT_T_GRID)],
            seed=int(raw.get("seed", 20240817)),
            sample_budget=int(raw.get("sample_budget", 200)),
            tolerances={**DEFAULT_TOLERANCES, **raw.get("tolerances", {})},
            sampler={**DEFAULT_SAMPLER, **raw.get("sampler", {})},
            require_star=bool(raw.get("require_star", False)),
            command=str(raw.get("command", "full-report")),
            tabulate=[list(p) for p in raw.get("tabulate", [])],
        )
        if not cfg.t_grid:
            raise ConfigError("t_grid must not be empty")
        if cfg.sample_budget < 1:
            raise ConfigError("sample_budget must be >= 1")
        if cfg.command not in COMMANDS:
            raise ConfigError(f"unknown command {cfg.command!r}; choose from {COMMANDS}")
        return cfg

    def to_dict(self) -> dict:
        return {
            "instance": self.instance,
            "cocycle": self.cocycle,
            "witness": self.witness,
            "t_grid": [float(t) for t in self.t_grid],
            "seed": self.seed,
            "sample_budget": self.sample_budget,
            "tolerances": {k: float(v) for k, v in sorted(self.tolerances.items())},
            "sampler": {k: int(v) for k, v in sorted(self.sampler.items())},
            "require_star": self.require_star,
            "command": self.command,
            "tabulate": self.tabulate,
        }


def load_config(path: str) -> RunConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read configuration {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"configuration {path!r} is not valid JSON: {exc}") from exc
    return RunConfig.from_dict(raw)


# -- descriptor resolution -------------------------------------------------------


def build_instance(desc: dict, tolerances: dict | None = None) -> BialgebraInstance:
    kind = desc.get("type")
    if kind == "group_algebra_zd":
        d = int(desc.get("d", 1))
        inst = inst_mod.group_algebra_zd(d, with_star=bool(desc.get("star", True)))
    elif kind == "symmetric_star":
        gens = desc.get("generators")
        if not gens:
            raise ConfigError("symmetric_star needs a non-empty 'generators' list")
        involution = None
        if desc.get("involution"):
            involution = {}
            for pair in desc["involution"]:
                if len(pair) != 2:
                    raise ConfigError(f"involution entries are pairs, got {pair!r}")
                involution[pair[0]] = pair[1]
                involution[pair[1]] = pair[0]
        try:
            inst = inst_mod.symmetric_star_algebra(gens, involution=involution)
        except Exception as exc:
            raise ConfigError(str(exc)) from exc
    elif kind == "sweedler_h4":
        inst = inst_mod.sweedler_h4()
    else:
        raise ConfigError(f"unknown instance type {kind!r}")
    if tolerances:
        inst.eq_eps = float(tolerances.get("eq", inst.eq_eps))
        inst.prune_eps = float(tolerances.get("prune", inst.prune_eps))
    return inst


def build_cocycle(desc: dict, instance: BialgebraInstance) -> Cochain:
    kind = desc.get("type")
    try:
        if kind == "zd_matrix":
            return inst_mod.make_zd_matrix_cocycle(instance, parse_matrix(desc["matrix"]))
        if kind == "z_polynomial":
            coeffs = [(int(p), int(q), parse_complex(c)) for p, q, c in desc["coeffs"]]
            return inst_mod.make_z_polynomial_cocycle(instance, coeffs)
        if kind == "primitive_bilinear":
            return inst_mod.make_primitive_bilinear_cocycle(instance, parse_matrix(desc["matrix"]))
        if kind == "grouplike_table":
            table = {}
            for k, l, c in desc.get("entries", []):
                table[(tuple(int(a) for a in k), tuple(int(a) for a in l))] = parse_complex(c)
            return inst_mod.make_grouplike_expression_cochain(
                instance, desc.get("expr", ""), arity=2, table=table or None
            )
        if kind == "zero":
            return zero_cochain(instance, 2)
    except ConfigError:
        raise
    except KeyError as exc:
        raise ConfigError(f"cocycle descriptor missing field {exc}") from exc
    except Exception as exc:
        raise ConfigError(f"cannot build cocycle {kind!r}: {exc}") from exc
    raise ConfigError(f"unknown cocycle type {kind!r}")


def build_witness(desc: dict, instance: BialgebraInstance, cocycle: Cochain) -> Cochain:
    kind = desc.get("type")
    try:
        if kind == "grouplike_expression":
            return inst_mod.make_grouplike_expression_cochain(
                instance, desc["expr"], arity=1
            )
        if kind == "pbw_trivializer":
            # the normal-order functional psi satisfies L + d(psi) = 0 when the
            # cocycle is symmetric on generators, so -psi is the witness of L
            psi = inst_mod.make_trivializing_functional(instance, cocycle)
            return cochain_scale(-1.0, psi, name="pbw_witness")
        if kind == "zero":
            return zero_cochain(instance, 1)
    except ConfigError:
        raise
    except KeyError as exc:
        raise ConfigError(f"witness descriptor missing field {exc}") from exc
    except Exception as exc:
        raise ConfigError(f"cannot build witness {kind!r}: {exc}") from exc
    raise ConfigError(f"unknown witness type {kind!r}")


def parse_key(instance: BialgebraInstance, raw):
    """Read a basis key from its JSON form (list of ints, or name string)."""
    if isinstance(raw, str):
        key = raw
    elif isinstance(raw, list):
        key = tuple(int(a) for a in raw)
    else:
        raise ConfigError(f"cannot read basis key {raw!r}")
    try:
        instance.check_key(key)
    except Exception as exc:
        raise ConfigError(str(exc)) from exc
    return key
