from __future__ import annotations

import numpy as np
import pytest

from degprinc import _pykernels, kernels
from degprinc.coxeter import catalog
from degprinc.invariants import basic_invariants
from degprinc.kernels import CompiledSystem

try:
    from degprinc import _ckernels
except ImportError:
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def _systems():
    for g in (catalog("B", 4), catalog("F4"), catalog("H3")):
        yield g.label, list(basic_invariants(g).polys)


def test_backend_is_reported():
    assert kernels.BACKEND in ("cython", "python")
    if _ckernels is not None:
        assert kernels.BACKEND == "cython" or __import__("os").environ.get("DEGPRINC_PURE") == "1"


@pytest.mark.parametrize("label,polys", list(_systems()))
def test_fallback_matches_direct_evaluation(label, polys):
    rng = np.random.default_rng(1)
    cs = CompiledSystem.from_polys(polys)
    for x in rng.normal(size=(5, cs.nvars)):
        vals, jac = kernels.eval_system(cs, x)
        assert np.allclose(vals, [p.eval(x) for p in polys], rtol=1e-10)
        for i, p in enumerate(polys):
            grad = [q.eval(x) for q in p.gradient()]
            assert np.allclose(jac[i], grad, rtol=1e-9, atol=1e-12)


@needs_c
@pytest.mark.parametrize("label,polys", list(_systems()))
def test_compiled_agrees_with_fallback(label, polys):
    rng = np.random.default_rng(2)
    cs = CompiledSystem.from_polys(polys)
    cp = polys[-1].compiled()
    x = rng.normal(size=cs.nvars)
    pts = rng.normal(size=(200, cs.nvars))
    for m_args in [
        ("eval_grad", (cp.exps, cp.coeffs, cp.maxdeg, x)),
        ("eval_system", (cs.exps, cs.coeffs, cs.offsets, cs.maxdeg, x)),
        ("eval_values", (cp.exps, cp.coeffs, cp.maxdeg, pts)),
    ]:
        name, args = m_args
        a, b = getattr(_pykernels, name)(*args), getattr(_ckernels, name)(*args)
        for u, v in zip(a if isinstance(a, tuple) else (a,), b if isinstance(b, tuple) else (b,)):
            assert np.allclose(u, v, rtol=1e-11, atol=1e-12)


def test_values_at_many_points():
    p = basic_invariants(catalog("B", 3)).polys[1]
    pts = np.random.default_rng(3).normal(size=(50, 3))
    got = kernels.eval_values(p.compiled(), pts)
    assert np.allclose(got, [p.eval(x) for x in pts])


def test_pure_switch_selects_fallback():
    import os
    import subprocess
    import sys

    out = subprocess.run([sys.executable, "-c", "from degprinc import kernels; print(kernels.BACKEND)"],
                         env={**os.environ, "DEGPRINC_PURE": "1"}, capture_output=True, text=True,
                         check=True)
    assert out.stdout.strip() == "python"
