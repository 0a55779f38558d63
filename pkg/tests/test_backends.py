"""Compiled kernel vs pure-Python kernel: outputs must be identical."""

import random
import subprocess
import sys

import pytest

from sidonlab import _kernel_py, backend, polyfp

compiled = pytest.importorskip(
    "sidonlab._kernel", reason="compiled kernel not built"
)


def random_curve(rng, p, genus):
    while True:
        f = tuple(rng.randrange(p) for _ in range(2 * genus + 1)) + (1,)
        if polyfp.is_squarefree(f, p):
            return f


def test_identity_constants_match():
    assert compiled.IDENTITY == _kernel_py.IDENTITY == ((1,), ())


@pytest.mark.parametrize("p", [3, 5, 7, 11, 101, 10007])
def test_affine_counts_match(p):
    rng = random.Random(p)
    for _ in range(5):
        f = tuple(rng.randrange(p) for _ in range(5)) + (1,)
        assert compiled.count_points_affine(p, f) == _kernel_py.count_points_affine(p, f)


@pytest.mark.parametrize("p,genus", [(3, 2), (5, 2), (7, 2), (3, 3), (5, 3)])
def test_enumerations_match(p, genus):
    rng = random.Random(100 * p + genus)
    for _ in range(3):
        f = random_curve(rng, p, genus)
        a = compiled.enumerate_reduced_divisors(p, f, genus)
        b = _kernel_py.enumerate_reduced_divisors(p, f, genus)
        assert a == b


@pytest.mark.parametrize("p,genus", [(3, 2), (7, 2), (5, 3)])
def test_arithmetic_matches(p, genus):
    rng = random.Random(9000 + p + genus)
    f = random_curve(rng, p, genus)
    divisors = _kernel_py.enumerate_reduced_divisors(p, f, genus)
    for _ in range(200):
        d1 = rng.choice(divisors)
        d2 = rng.choice(divisors)
        assert compiled.cantor_add(p, f, d1, d2) == _kernel_py.cantor_add(p, f, d1, d2)
        assert compiled.cantor_neg(p, f, d1) == _kernel_py.cantor_neg(p, f, d1)
    for _ in range(40):
        d1 = rng.choice(divisors)
        n = rng.randrange(-30, 200)
        assert compiled.scalar_mul(p, f, d1, n) == _kernel_py.scalar_mul(p, f, d1, n)


def test_backend_selection_reports_compiled():
    assert backend.BACKEND_NAME == "cython"
    assert backend.available_backends() == ("cython", "python")
    assert backend.kernel is compiled


def test_backend_env_override_forces_python():
    code = (
        "from sidonlab import backend; "
        "print(backend.BACKEND_NAME); "
        "import sidonlab._kernel_py as k; "
        "assert backend.kernel is k"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"SIDONLAB_BACKEND": "python", "PATH": "/usr/bin:/bin"},
    )
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == "python"


def test_backend_env_rejects_unknown():
    code = "import sidonlab.backend"
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"SIDONLAB_BACKEND": "rust", "PATH": "/usr/bin:/bin"},
    )
    assert out.returncode != 0
    assert "SIDONLAB_BACKEND" in out.stderr
