"""Family constructors: audited nodes, determinism, and the mod-p probe."""

import json

import pytest

from defectk.defect import defect, tangent_codim
from defectk.families import (
    GridParams,
    ci_family_highdim,
    double_solid_family,
    instance_to_json,
    plane_family,
    probe_undeclared_singular_points,
    random_points_control,
)
from defectk.macaulay import ci_pnd


def test_plane_family_examples():
    inst = plane_family(GridParams(4, (1, 2, 3), (1, 2, 3)))
    assert len(inst.nodes) == 9
    assert all(r.is_node for r in inst.audit)
    inst = plane_family(GridParams(3, (1, 2), (1, 2)))
    assert len(inst.nodes) == 4
    with pytest.raises(ValueError):
        GridParams(4, (1, 1, 3), (1, 2, 3))  # duplicate a-values
    with pytest.raises(ValueError):
        plane_family(GridParams(2, (1,), (1,)))  # d >= 3
    with pytest.raises(ValueError):
        plane_family(GridParams(4, (1, 2), (1, 2, 3)))  # |a| != d-1


def test_double_solid_family_examples():
    inst = double_solid_family(GridParams(2, (1, 2), (1, 2, 3)))
    assert len(inst.nodes) == 6
    assert all(r.is_node for r in inst.audit)
    assert inst.f.degree == 4 and inst.f.nvars == 4
    inst = double_solid_family(GridParams.double_solid_defaults(3))
    assert len(inst.nodes) == 15
    with pytest.raises(ValueError):
        double_solid_family(GridParams(2, (1, 2, 3), (1, 2, 3)))  # |a| != d


def test_ci_family_highdim_examples():
    inst = ci_family_highdim(2, 3)
    assert inst.nvars == 7 and len(inst.nodes) == 8
    assert tangent_codim(inst.nodes, 3) == ci_pnd(2, 3) == 8

    inst = ci_family_highdim(2, 4)
    assert len(inst.nodes) == 27
    assert defect(inst.nodes, 3 * 4 - 7).defect == 1

    with pytest.raises(ValueError):
        ci_family_highdim(2, 4, cell_budget=100)


def test_ci_family_matches_plane_shape_at_n1():
    inst = ci_family_highdim(1, 4)
    plane = plane_family(GridParams.plane_defaults(4))
    assert inst.f == plane.f
    assert inst.nodes == plane.nodes


def test_constructors_deterministic_serialization():
    a = instance_to_json(plane_family(GridParams.plane_defaults(5)), "plane",
                         GridParams.plane_defaults(5))
    b = instance_to_json(plane_family(GridParams.plane_defaults(5)), "plane",
                         GridParams.plane_defaults(5))
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_random_points_control():
    pts = random_points_control(8, 5, seed=1)
    assert len(pts) == 8 and pts.nvars == 5
    assert random_points_control(8, 5, seed=1) == pts
    assert random_points_control(8, 5, seed=2) != pts
    with pytest.raises(ValueError):
        random_points_control(0, 5, seed=1)


def test_random_nine_points_have_no_defect():
    # unlike the grid, generic 9 points in P^4 impose independent cubic conditions
    for seed in range(20):
        pts = random_points_control(9, 5, seed)
        assert defect(pts, 3).defect == 0


def test_probe_reports_undeclared_singular_line():
    # the product construction leaves the line x2=x3=x4=0 singular; the
    # mod-11 sweep must find exactly its 12 rational points and nothing else
    inst = plane_family(GridParams.plane_defaults(4))
    findings = probe_undeclared_singular_points(inst.f, inst.nodes, 11)
    assert len(findings) == 12
    assert all(pt[2] == pt[3] == pt[4] == 0 for pt in findings)


def test_probe_double_solid_small():
    inst = double_solid_family(GridParams.double_solid_defaults(2))
    findings = probe_undeclared_singular_points(inst.f, inst.nodes, 11)
    assert findings == [(0, 0, 0, 1)]
