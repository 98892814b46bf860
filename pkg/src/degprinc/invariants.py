"""Basic invariants for the catalog groups and symmetric-function rewriting."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

import numpy as np

from .coxeter import GroupDescriptor, GroupError, is_invariant, reynolds, root_system
from .field import Coefficient
from .parabolic import ambient_degrees
from .poly import Polynomial, elementary, parse, power_sum

VARIANTS = ("powersum", "elementary", "product", "F4", "H4-surrogate")


class VariantError(ValueError):
    pass


@dataclass(frozen=True)
class BasicInvariantSet:
    """Basic invariants ``polys`` of ``group`` in ascending degree."""

    group: GroupDescriptor
    variant: str
    polys: tuple
    tie: tuple = (1, 0)

    @property
    def degrees(self) -> tuple:
        return tuple(p.degree() for p in self.polys)

    @property
    def ties(self) -> list[int]:
        """0-based ``i`` with ``deg(polys[i]) == deg(polys[i + 1])``."""
        d = self.degrees
        return [i for i in range(len(d) - 1) if d[i] == d[i + 1]]

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]

    def first(self, k: int) -> list[Polynomial]:
        return list(self.polys[:k])


def _dihedral(m: int) -> Polynomial:
    """``Re((x + i y)^m)``."""
    terms = {}
    for j in range(0, m + 1, 2):
        terms[(m - j, j)] = Coefficient(comb(m, j) * (-1) ** (j // 2))
    return Polynomial(2, terms)


def f4_second() -> Polynomial:
    """Degree-6 basic invariant of F4, scaled to take the value 1 at ``e1``."""
    g = parse("5 y1 y2 - 4 y3", "y", nvars=3)
    sq = [Polynomial(4, {tuple(2 if i == j else 0 for i in range(4)): 1}) for j in range(4)]
    return g.compose([power_sum(4, k) for k in (1, 2, 3)]).compose(sq)


def _generic_point(n: int, seed: int = 7) -> list[Fraction]:
    rng = np.random.default_rng(seed)
    return [Fraction(int(v), 17) for v in rng.integers(-40, 41, size=n)]


def _independent_reynolds(g: GroupDescriptor, lower: list[Polynomial], degree: int) -> Polynomial:
    """An averaged monomial of ``degree`` that raises the Jacobian rank of ``lower``."""
    from .arrangement import jacobian_rank

    n = root_system(g).ambient
    pt = _generic_point(n)
    candidates = [(degree,) + (0,) * (n - 1)]
    for i in range(1, n):
        candidates.append((degree - 2,) + tuple(2 if j == i else 0 for j in range(1, n)))
        candidates.append((degree - 1,) + tuple(1 if j == i else 0 for j in range(1, n)))
    for e in candidates:
        p = reynolds(g, Polynomial(n, {e: 1}))
        if p.is_zero():
            continue
        basics = lower + [p]
        if jacobian_rank(basics, _float_if_irrational(pt, p), len(basics) - 1) == len(basics):
            return p
    raise GroupError(f"no independent invariant of degree {degree} found for {g.label}")


def _float_if_irrational(pt, p):
    return pt if p.is_rational() else [float(v) for v in pt]


@lru_cache(maxsize=None)
def _exceptional(g: GroupDescriptor, count: int) -> tuple:
    n = g.ambient
    polys = [power_sum(n, 1, squares=True)]
    for d in g.degrees[1:count]:
        if g.family == "F4" and d == 6:
            polys.append(f4_second())
        else:
            polys.append(_independent_reynolds(g, polys, d))
    return tuple(polys)


def default_variant(g: GroupDescriptor) -> str:
    return {"A": "powersum", "B": "powersum", "D": "product", "F4": "F4",
            "H4": "H4-surrogate"}.get(g.family, "powersum")


def basic_invariants(g: GroupDescriptor, variant: str | None = None, tie=(1, 0),
                     count: int | None = None) -> BasicInvariantSet:
    """Basic invariants of ``g`` in ascending degree.

    For type A the group acts on ``R^(n+1)`` and the list starts with the
    degree-1 invariant.  For D_n with n even the invariant at the repeated
    degree n is ``alpha*s_n + beta*e_n`` with ``tie = (alpha, beta)``.
    Exceptional types are built from averaged monomials; ``count`` limits how
    many are constructed (the top degrees of H4 are expensive).
    """
    variant = variant or default_variant(g)
    if variant not in VARIANTS:
        raise VariantError(f"unknown variant {variant!r}")
    f, n = g.family, g.param
    if g.extra_dims:
        raise VariantError("basic invariants are provided for essential actions only")
    polys: list[Polynomial]
    if f == "A":
        m = n + 1
        if variant == "powersum":
            polys = [power_sum(m, k) for k in range(1, m + 1)]
        elif variant == "elementary":
            polys = [elementary(m, k) for k in range(1, m + 1)]
        else:
            raise VariantError(f"variant {variant} does not apply to {g.label}")
    elif f == "B":
        if variant != "powersum":
            raise VariantError(f"variant {variant} does not apply to {g.label}")
        polys = [power_sum(n, k, squares=True) for k in range(1, n + 1)]
    elif f == "D":
        if variant not in ("product", "powersum"):
            raise VariantError(f"variant {variant} does not apply to {g.label}")
        h = n // 2
        en = elementary(n, n)
        polys = []
        for k in range(1, n + 1):
            if k <= h:
                polys.append(power_sum(n, k, squares=True))
            elif k == h + 1:
                polys.append(en)
            else:
                polys.append(power_sum(n, k - 1, squares=True))
        if n % 2 == 0:
            a, b = (Coefficient.coerce(Fraction(v)) for v in tie)
            if not b and not a:
                raise VariantError("tie coefficients must not both vanish")
            sn = power_sum(n, h, squares=True)
            polys[h - 1] = sn.scale(a) + en.scale(b)
            # the partner at the same degree keeps the pair independent
            polys[h] = en if not b else sn
        polys.sort(key=lambda p: p.degree())
    elif f == "I2":
        if variant != "powersum":
            raise VariantError(f"variant {variant} does not apply to {g.label}")
        polys = [power_sum(2, 1, squares=True), _dihedral(n)]
    elif f in ("F4", "H3", "H4"):
        allowed = {"F4": ("F4", "powersum"), "H3": ("powersum",), "H4": ("H4-surrogate", "powersum")}
        if variant not in allowed[f]:
            raise VariantError(f"variant {variant} does not apply to {g.label}")
        polys = list(_exceptional(g, count or len(g.degrees)))
    else:
        raise VariantError(f"no invariant polynomials are constructed for {g.label}")
    if count is not None:
        polys = polys[:count]
    return BasicInvariantSet(g, variant, tuple(polys), tuple(tie))


def check_basic_set(bis: BasicInvariantSet) -> dict:
    """Exact invariance and a rank certificate at a fixed rational point."""
    from .arrangement import jacobian_rank

    g = bis.group
    exact = root_system(g).exact
    inv = [is_invariant(g, p) if exact else _float_invariant(g, p) for p in bis.polys]
    pt = _generic_point(root_system(g).ambient)
    pts = pt if all(p.is_rational() for p in bis.polys) and exact else [float(v) for v in pt]
    rk = jacobian_rank(list(bis.polys), pts, len(bis.polys) - 1)
    degs_ok = list(bis.degrees) == list(ambient_degrees(g))[:len(bis.polys)]
    return {"invariant": all(inv), "jacobian_rank": rk, "independent": rk == len(bis.polys),
            "degrees_match": degs_ok}


def _float_invariant(g: GroupDescriptor, p: Polynomial, tol: float = 1e-9) -> bool:
    from .coxeter import generate_group

    mats = generate_group(g).float_matrices()
    rng = np.random.default_rng(3)
    x = rng.normal(size=(5, p.nvars))
    base = [p.eval(v) for v in x]
    return all(abs(p.eval(m @ v) - b) <= tol * max(1.0, abs(b)) for m in mats for v, b in zip(x, base))


# ---------------------------------------------------------------------------
# symmetric functions


class NotSymmetricError(ValueError):
    pass


def is_symmetric(p: Polynomial) -> bool:
    n = p.nvars
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if p.permute(perm) != p:
            return False
    return True


@lru_cache(maxsize=None)
def elementary_in_power_sums(n: int) -> tuple:
    """``E[k]`` expresses ``e_k`` in power-sum coordinates ``y_1..y_n`` (Newton)."""
    ys = [Polynomial.var(n, i) for i in range(n)]
    e = [Polynomial.constant(n, 1)]
    for k in range(1, n + 1):
        acc = Polynomial(n, {})
        for i in range(1, k + 1):
            term = e[k - i] * ys[i - 1]
            acc = acc + term if i % 2 == 1 else acc - term
        e.append(acc.scale(Fraction(1, k)))
    return tuple(e)


def newton_rewrite(sym: Polynomial, n: int | None = None) -> Polynomial:
    """``F`` in ``y_1..y_n`` with ``F(s_1, ..., s_n) = sym``."""
    n = n or sym.nvars
    if sym.nvars != n:
        raise ValueError("variable count mismatch")
    if not is_symmetric(sym):
        raise NotSymmetricError("input is not symmetric")
    es = [elementary(n, k) for k in range(n + 1)]
    es[0] = Polynomial.constant(n, 1)
    epow = elementary_in_power_sums(n)
    rest = sym
    out = Polynomial(n, {})
    # peel off the lexicographically largest monomial each step
    while not rest.is_zero():
        lead = max(rest.terms)
        c = rest.terms[lead]
        expo = [lead[i] - (lead[i + 1] if i + 1 < n else 0) for i in range(n)]
        mono_x = Polynomial.constant(n, 1)
        mono_y = Polynomial.constant(n, 1)
        for k, a in enumerate(expo, start=1):
            if a:
                mono_x = mono_x * es[k] ** a
                mono_y = mono_y * epow[k] ** a
        rest = rest - mono_x.scale(c)
        out = out + mono_y.scale(c)
    return out


# ---------------------------------------------------------------------------
# sparsity bookkeeping


@dataclass
class SparseObjective:
    """``F(y_1..y_k)`` to be read as ``F(pi_1, ..., pi_k)``."""

    F: Polynomial
    basis: BasicInvariantSet
    k: int = field(default=0)

    def __post_init__(self):
        if not self.k:
            self.k = max([i + 1 for i in range(self.F.nvars) if self.F.degree_in(i) > 0], default=1)
        if self.k > len(self.basis):
            raise ValueError(f"objective uses y{self.k} but only {len(self.basis)} invariants exist")

    def y_poly(self) -> Polynomial:
        """``F`` padded to all basic invariants."""
        if self.F.nvars == len(self.basis):
            return self.F
        m = len(self.basis)
        return Polynomial(m, {tuple(e) + (0,) * (m - len(e)): c for e, c in self.F.terms.items()})

    def composed(self) -> Polynomial:
        F = self.y_poly()
        used = max([i + 1 for i in range(F.nvars) if F.degree_in(i) > 0], default=0)
        if used == 0:
            return Polynomial.constant(self.basis.group.ambient,
                                       F.coefficient((0,) * F.nvars))
        G = Polynomial(used, {e[:used]: c for e, c in F.terms.items()})
        return G.compose(list(self.basis.polys[:used]))


def sparsity_certificate(g: GroupDescriptor, k: int) -> dict:
    """Whether the first ``k`` basic invariants span a basis-independent ring."""
    degs = ambient_degrees(g)
    if not 1 <= k <= len(degs):
        raise ValueError(f"k must be in 1..{len(degs)}")
    if k == len(degs) or degs[k] > degs[k - 1]:
        status = "independent"
    else:
        status = "tie-ambiguous"
    out = {"group": g.label, "k": k, "status": status, "degrees": list(degs)}
    if status == "tie-ambiguous" and g.family == "D":
        out["note"] = f"invariant at degree {degs[k - 1]} is alpha*s_{g.param} + beta*e_{g.param}"
    return out


__all__ = [
    "BasicInvariantSet", "NotSymmetricError", "SparseObjective", "VariantError", "basic_invariants",
    "check_basic_set", "default_variant", "elementary_in_power_sums", "f4_second", "is_symmetric",
    "newton_rewrite", "sparsity_certificate",
]
