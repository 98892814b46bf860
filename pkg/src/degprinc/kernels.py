"""Numeric polynomial kernels, compiled when available.

The Cython extension ``degprinc._ckernels`` is used if it was built; the numpy
implementation in ``degprinc._pykernels`` is the fallback.  Setting the
environment variable ``DEGPRINC_PURE=1`` forces the fallback.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _pykernels

if os.environ.get("DEGPRINC_PURE") == "1":
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
        BACKEND = "python"


@dataclass(frozen=True)
class CompiledPoly:
    """Float snapshot of a polynomial: exponent matrix and coefficients."""

    nvars: int
    exps: np.ndarray
    coeffs: np.ndarray
    maxdeg: int

    @classmethod
    def from_terms(cls, nvars: int, terms) -> "CompiledPoly":
        items = list(terms.items())
        exps = np.array([e for e, _ in items], dtype=np.int_).reshape(len(items), nvars)
        coeffs = np.array([float(c) for _, c in items], dtype=float)
        maxdeg = int(exps.max()) if exps.size else 0
        return cls(nvars, exps, coeffs, maxdeg)


@dataclass(frozen=True)
class CompiledSystem:
    """Several polynomials in the same variables, evaluated together."""

    nvars: int
    exps: np.ndarray
    coeffs: np.ndarray
    offsets: np.ndarray
    maxdeg: int

    @classmethod
    def from_polys(cls, polys: Sequence) -> "CompiledSystem":
        cps = [p.compiled() for p in polys]
        n = polys[0].nvars
        exps = np.concatenate([c.exps for c in cps]) if cps else np.zeros((0, n), dtype=np.int_)
        coeffs = np.concatenate([c.coeffs for c in cps]) if cps else np.zeros(0)
        offsets = np.cumsum([0] + [c.exps.shape[0] for c in cps]).astype(np.int_)
        maxdeg = max((c.maxdeg for c in cps), default=0)
        return cls(n, np.ascontiguousarray(exps), coeffs, offsets, maxdeg)

    def __len__(self):
        return self.offsets.shape[0] - 1


def eval_grad(cp: CompiledPoly, x: np.ndarray):
    """Value and gradient of a compiled polynomial at ``x``."""
    return _impl.eval_grad(cp.exps, cp.coeffs, cp.maxdeg, np.ascontiguousarray(x, dtype=float))


def eval_system(cs: CompiledSystem, x: np.ndarray):
    """Values (m,) and Jacobian (m, n) of a compiled system at ``x``."""
    return _impl.eval_system(cs.exps, cs.coeffs, cs.offsets, cs.maxdeg,
                             np.ascontiguousarray(x, dtype=float))


def eval_values(cp: CompiledPoly, pts: np.ndarray) -> np.ndarray:
    """Values at each row of ``pts``."""
    return _impl.eval_values(cp.exps, cp.coeffs, cp.maxdeg, np.ascontiguousarray(pts, dtype=float))
