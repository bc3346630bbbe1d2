import json
import math
import os
import sys

module_dir = os.environ.get("BOHRLAB_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)

import _bohrlab as bl  # noqa: E402

WORK_RADIUS = math.exp(-math.pi)


def test_modular_constants():
    assert abs(bl.eval_j(WORK_RADIUS) - 0.5) < 1e-10
    assert abs(abs(bl.eval_j(-WORK_RADIUS)) - 1.0) < 1e-10


def test_modular_coefficients_prefix():
    m = bl.modular_coefficients(8)
    assert m[:4] == [16.0, 128.0, 704.0, 3072.0]
    assert all(v > 0 for v in m)


def test_bohr_majorant_geometric():
    coeffs = [1.0] * 65
    out = bl.bohr_majorant(coeffs, 1.0 / 3.0)
    assert abs(out["value"] - 1.5) < 1e-12


def test_extract_coefficients_exponential():
    coeffs = bl.extract_coefficients(lambda z: complex(math.e) ** z, 0.5, 8)
    assert abs(coeffs[3] - 1.0 / 6.0) < 1e-12


def test_density_and_radius():
    assert abs(bl.density_unit_disk(0.5) - 4.0 / 3.0) < 1e-15
    assert abs(bl.univalence_radius(1.0) - (2.0 - math.sqrt(3.0))) < 1e-15
    assert abs(bl.working_radius() - WORK_RADIUS) < 1e-18


def test_classical_suite_passes():
    report = json.loads(bl.run_suites(["classical"], 64, 42))
    assert report["summary"]["failed"] == 0
    assert len(report["records"]) >= 3
