"""Deterministic constructors of defective nodal instances whose nodes are
rational points known in closed form, plus seeded random controls.

All families use products of linear forms instead of generic forms: the
declared nodes become explicit grid points with small integer coordinates,
and the constructor audits every one of them (all must be A_1).  The
constructors are pure functions of their parameters, so serialized output
is identical across runs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .defect import DoubleSolid, NodalHypersurface
from .ideals import PointSet, normalize_point
from .polynomials import GradedPoly, product


@dataclass(frozen=True)
class GridParams:
    """Grid values for the product-of-linear-forms constructions."""

    d: int
    a_values: tuple[int, ...]
    b_values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a_values", tuple(self.a_values))
        object.__setattr__(self, "b_values", tuple(self.b_values))
        for name, vals in (("a", self.a_values), ("b", self.b_values)):
            if len(set(vals)) != len(vals):
                raise ValueError(f"{name}-values must be pairwise distinct")

    @classmethod
    def plane_defaults(cls, d: int) -> "GridParams":
        return cls(d, tuple(range(1, d)), tuple(range(1, d)))

    @classmethod
    def double_solid_defaults(cls, d: int) -> "GridParams":
        return cls(d, tuple(range(1, d + 1)), tuple(range(1, 2 * d)))

    def to_dict(self) -> dict:
        return {"d": self.d, "a_values": list(self.a_values), "b_values": list(self.b_values)}


def plane_family(params: GridParams) -> NodalHypersurface:
    """Degree-d threefold x0 * prod(x2 - a_i x4) + x1 * prod(x3 - b_j x4)
    in P^4, with the (d-1)^2 declared nodes (0:0:a_i:b_j:1)."""
    d = params.d
    if d < 3:
        raise ValueError("plane family needs d >= 3")
    if len(params.a_values) != d - 1 or len(params.b_values) != d - 1:
        raise ValueError("plane family needs d-1 values on each axis")
    x = [GradedPoly.variable(5, i) for i in range(5)]
    fa = product([x[2] - a * x[4] for a in params.a_values])
    fb = product([x[3] - b * x[4] for b in params.b_values])
    f = x[0] * fa + x[1] * fb
    nodes = PointSet([(0, 0, a, b, 1) for a in params.a_values for b in params.b_values])
    return NodalHypersurface.build(f, nodes)


def double_solid_family(params: GridParams) -> DoubleSolid:
    """Branch surface h^2 + x3*g of degree 2d in P^3, h and g products of
    linear forms; the d(2d-1) declared nodes are (1:a_i:b_j:0)."""
    d = params.d
    if d < 2:
        raise ValueError("double solid family needs d >= 2")
    if len(params.a_values) != d or len(params.b_values) != 2 * d - 1:
        raise ValueError("double solid family needs d and 2d-1 values")
    x = [GradedPoly.variable(4, i) for i in range(4)]
    h = product([x[1] - a * x[0] for a in params.a_values])
    g = product([x[2] - b * x[0] for b in params.b_values])
    f = h * h + x[3] * g
    nodes = PointSet([(1, a, b, 0) for a in params.a_values for b in params.b_values])
    return DoubleSolid.build(d, f, nodes)


def ci_family_highdim(
    n: int,
    d: int,
    values: tuple[tuple[int, ...], ...] | None = None,
    cell_budget: int = 5_000_000,
) -> NodalHypersurface:
    """Hypersurface sum_i x_i f_i in P^{2n+2} with an (n+1)-dimensional grid
    of (d-1)^{n+1} declared nodes.

    f_i is a product of d-1 linear forms in the variable x_{n+1+i} and the
    homogenizer x_{2n+2}; the nodes are the grid points with x_0..x_n = 0
    and x_{n+1+i} running over each axis's values.
    """
    if n < 1 or d < 3:
        raise ValueError("need n >= 1 and d >= 3")
    if values is None:
        values = tuple(tuple(range(1, d)) for _ in range(n + 1))
    values = tuple(tuple(v) for v in values)
    if len(values) != n + 1 or any(len(v) != d - 1 for v in values):
        raise ValueError("need n+1 axes of d-1 values each")
    for axis in values:
        if len(set(axis)) != len(axis):
            raise ValueError("axis values must be pairwise distinct")
    nvars = 2 * n + 3
    from .macaulay import binomial

    cells = (d - 1) ** (n + 1) * binomial(d + nvars - 1, nvars - 1)
    if cells > cell_budget:
        raise ValueError(
            f"instance needs {cells} evaluation cells, over the budget {cell_budget}"
        )
    x = [GradedPoly.variable(nvars, i) for i in range(nvars)]
    f = GradedPoly.zero(nvars, d)
    for i in range(n + 1):
        fi = product([x[n + 1 + i] - c * x[nvars - 1] for c in values[i]])
        f = f + x[i] * fi
    coords_list = []
    grid = [()]
    for axis in values:
        grid = [g + (c,) for g in grid for c in axis]
    for combo in grid:
        coords_list.append((0,) * (n + 1) + combo + (1,))
    nodes = PointSet(coords_list)
    return NodalHypersurface.build(f, nodes)


def random_points_control(count: int, nvars: int, seed: int) -> PointSet:
    """Seeded, reproducible random rational points, pairwise distinct."""
    if count < 1:
        raise ValueError("need at least one point")
    rng = random.Random(seed)
    seen = set()
    points = []
    while len(points) < count:
        coords = tuple(rng.randint(-997, 997) for _ in range(nvars))
        if not any(coords):
            continue
        key = normalize_point(coords)
        if key in seen:
            continue
        seen.add(key)
        points.append(coords)
    return PointSet(points)


def instance_to_json(instance, family: str, params=None, n=None, seed=None) -> dict:
    """Serialize a family instance with its construction manifest."""
    manifest = {
        "family": family,
        "d": getattr(instance, "d", getattr(instance, "degree", None)),
        "n": n,
        "params": params.to_dict() if isinstance(params, GridParams) else params,
        "seed": seed,
    }
    return {
        "manifest": manifest,
        "f": instance.f.to_json_dict(),
        "nodes": instance.nodes.to_json_list(),
    }


def probe_undeclared_singular_points(f: GradedPoly, nodes: PointSet, p: int = 11) -> list:
    """Finite-field sweep findings not accounted for by the declared nodes.

    Warn-only evidence: reports F_p-rational singular points of f mod p
    whose classes differ from every declared node's reduction.
    """
    from .defect import sweep_singular_points

    declared = set()
    for rep in nodes.int_reps():
        coords = [c % p for c in rep]
        lead = next((i for i, c in enumerate(coords) if c), None)
        if lead is None:
            continue  # node reduces badly mod p; cannot account for it
        inv = pow(coords[lead], -1, p)
        declared.add(tuple(c * inv % p for c in coords))
    return [pt for pt in sweep_singular_points(f, p) if pt not in declared]
