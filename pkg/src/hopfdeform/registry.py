"""Built-in example configurations, one per worked deformation family.

Each entry is a complete run configuration; coordinate bounds are chosen
so that every exponential stays well inside double range at the stated
absolute tolerances.
"""
from __future__ import annotations

import copy

_REGISTRY: dict[str, dict] = {
    "oscillator": {
        "description": "canonical antisymmetric pairing on C[x,x*]; the deformed "
        "commutator [x,x*]_t = t is the oscillator relation at t=1",
        "config": {
            "instance": {
                "type": "symmetric_star",
                "generators": ["x", "xstar"],
                "involution": [["x", "xstar"]],
            },
            "cocycle": {
                "type": "primitive_bilinear",
                "matrix": [[[0.0, 0.0], [0.5, 0.0]], [[-0.5, 0.0], [0.0, 0.0]]],
            },
            "witness": None,
            "t_grid": [-1.0, -0.5, 0.0, 0.5, 1.0],
            "seed": 1101,
            "sample_budget": 200,
            "sampler": {"coord_bound": 5, "max_degree": 4, "max_support": 3},
            "require_star": True,
            "command": "full-report",
            "tabulate": [[[1, 0], [0, 1]], [[0, 1], [1, 0]]],
        },
    },
    "z-cubic": {
        "description": "cubic coboundary on the group algebra of Z: a trivial "
        "deformation with constant antipodes",
        "config": {
            "instance": {"type": "group_algebra_zd", "d": 1},
            "cocycle": {
                "type": "z_polynomial",
                "coeffs": [[2, 1, [1.0, 0.0]], [1, 2, [1.0, 0.0]]],
            },
            "witness": {"type": "grouplike_expression", "expr": "-(k**3)/3"},
            "t_grid": [-1.0, -0.5, 0.0, 0.5, 1.0],
            "seed": 1102,
            "sample_budget": 200,
            "sampler": {"coord_bound": 1, "max_degree": 4, "max_support": 3},
            "require_star": False,
            "command": "full-report",
            "tabulate": [[[1], [1]], [[1], [-1]]],
        },
    },
    "zd-matrix": {
        "description": "matrix cocycle k·A·l^T on Z^2; splits into a coboundary "
        "part and the antisymmetric part of A",
        "config": {
            "instance": {"type": "group_algebra_zd", "d": 2},
            "cocycle": {
                "type": "zd_matrix",
                "matrix": [[[0.0, 0.0], [1.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
            },
            "witness": None,
            "t_grid": [-1.0, -0.5, 0.0, 0.5, 1.0],
            "seed": 1103,
            "sample_budget": 200,
            "sampler": {"coord_bound": 2, "max_degree": 4, "max_support": 3},
            "require_star": False,
            "command": "full-report",
            "tabulate": [[[1, 0], [0, 1]], [[1, 1], [1, -1]]],
        },
    },
    "group-hermitian": {
        "description": "hermitian matrix cocycle on Z^2 (a star-deformation); the "
        "splitting keeps only the purely imaginary part",
        "config": {
            "instance": {"type": "group_algebra_zd", "d": 2},
            "cocycle": {
                "type": "zd_matrix",
                "matrix": [[[1.0, 0.0], [0.5, 0.5]], [[0.5, -0.5], [1.0, 0.0]]],
            },
            "witness": None,
            "t_grid": [-1.0, -0.5, 0.0, 0.5, 1.0],
            "seed": 1104,
            "sample_budget": 200,
            "sampler": {"coord_bound": 1, "max_degree": 4, "max_support": 3},
            "require_star": True,
            "command": "full-report",
            "tabulate": [[[1, 0], [0, 1]], [[1, 1], [0, 1]]],
        },
    },
}


def example_names() -> list[str]:
    return sorted(_REGISTRY)


def example_description(name: str) -> str:
    return _REGISTRY[name]["description"]


def example_config(name: str) -> dict:
    if name not in _REGISTRY:
        raise KeyError(f"no built-in example {name!r}; known: {example_names()}")
    return copy.deepcopy(_REGISTRY[name]["config"])
