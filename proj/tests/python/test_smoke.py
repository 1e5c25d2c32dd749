"""Smoke tests for the _core extension module."""

import json
import math

import pytest

try:
    import bergman_toolkit as bt
except ImportError:
    import _core as bt  # build-tree module, no package wrapper


def test_geometry():
    w, z = 0.3 + 0.1j, -0.2 + 0.4j
    assert abs(bt.mobius(w, bt.mobius(w, z)) - z) < 1e-14
    assert bt.bergman_kernel(0, 0) == 1.0
    assert abs(bt.bergman_metric(z, w) - bt.bergman_metric(w, z)) < 1e-14
    center, radius = bt.hyperbolic_disk(0.0, 0.25)
    assert center == 0.0
    assert 0 < radius < 1


def test_quadrature_and_berezin():
    rule = bt.QuadratureRule.build(32, 64)
    assert abs(bt.integrate(lambda z: abs(z) ** 2, rule) - 0.5) < 1e-12
    f = bt.Symbol.polynomial([0.0, 1.0])
    # |z|^2~(0) = 1/2 and the reproducing property for analytic u
    assert abs(bt.berezin_mod_squared(f, 0.0, rule) - 0.5) < 1e-12
    bt_val = bt.berezin_transform(lambda z: z, 0.4 + 0.2j, rule)
    assert abs(bt_val - (0.4 + 0.2j)) < 1e-8


def test_symbols_json():
    f = bt.Symbol.from_json(
        json.dumps({"type": "poly", "coeffs": [[1.0, 0.0], [0.5, -0.5]]})
    )
    assert abs(f.eval(0.2) - (1.1 - 0.1j)) < 1e-14
    rule = bt.QuadratureRule.build(32, 64)
    one = bt.Symbol.polynomial([1.0])
    assert abs(one.l2_norm(rule) - 1.0) < 1e-12


def test_toeplitz():
    z = bt.Symbol.polynomial([0.0, 1.0])
    mat = bt.toeplitz_matrix(z, 3)
    assert abs(mat[1][0] - math.sqrt(0.5)) < 1e-14
    rule = bt.QuadratureRule.build(32, 64)
    norm = bt.product_norm(z, z, 16, rule)
    assert 0.5 < norm <= 1.0
    lhs, rhs = bt.kernel_action(z, z, 0.3, 0.4, 32, rule)
    assert abs(lhs - rhs) < 1e-8


def test_schur():
    rule = bt.QuadratureRule.build_graded(64, 64, 3.0)
    params = bt.SchurParameters(0.125)
    one = bt.Symbol.polynomial([1.0])
    s0 = bt.s_operator(one, 0.0, params, rule)
    assert abs(s0 - 4.0 / 3.0) < 1e-3
    with pytest.raises(ValueError):
        bt.SchurParameters(0.5)


def test_run_scenario():
    scenario = {
        "name": "smoke",
        "f": {"type": "poly", "coeffs": [[0.0, 0.0], [1.0, 0.0]]},
        "g": {"type": "poly", "coeffs": [[1.0, 0.0]]},
        "radii": [0.5, 0.75],
        "angles": 8,
        "truncations": [4, 8],
        "rule": [16, 32],
    }
    report = json.loads(bt.run_scenario("boundedness", json.dumps(scenario)))
    assert report["mode"] == "boundedness"
    assert report["comparison"]["norm_at_largest_N"] > 0
