"""Reflection arrangements: hyperplanes, flats, strata and their parameterizations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from numbers import Rational
from typing import Sequence

import numpy as np

from .coxeter import GroupDescriptor, GroupError, generate_group, root_system
from .field import Coefficient
from .linalg import dot, nullspace, numeric_rank, rank, rref
from .poly import Polynomial

REL_TOL = 1e-9


@dataclass(frozen=True)
class Flat:
    """An intersection of reflection hyperplanes.

    ``normals`` are the indices (into the root list) of the positive roots
    vanishing on the flat; ``key`` is the reduced row echelon form of their
    span, and ``basis`` is the canonical basis of the flat read off from it.
    """

    dim: int
    key: tuple
    basis: tuple
    normals: tuple

    def contains(self, x) -> bool:
        rs_rows = self.key
        return all(abs(sum(float(a) * float(b) for a, b in zip(r, x))) < 1e-9 for r in rs_rows)

    def basis_matrix(self) -> np.ndarray:
        """Columns span the flat (``ambient x dim`` floats)."""
        n = len(self.basis[0]) if self.basis else 0
        return np.array([[float(v[i]) for v in self.basis] for i in range(n)]).reshape(n, self.dim)


def _is_exact_point(p) -> bool:
    return all(isinstance(x, (int, Rational, Coefficient)) and not isinstance(x, bool)
               for x in p)


def _flat_from_roots(g: GroupDescriptor, idx: Sequence[int]) -> Flat:
    rs = root_system(g)
    n = rs.ambient
    vecs = [rs.roots[i] for i in idx]
    if rs.exact:
        red, _ = rref(vecs) if vecs else ([], [])
        basis = tuple(tuple(v) for v in nullspace(red, n)) if red else tuple(
            tuple(Coefficient(int(i == j)) for i in range(n)) for j in range(n))
        key = tuple(red)
        pos = [i for i in rs.positive
               if all(not x for x in _reduce(rs.roots[i], red))]
    else:
        a = np.array([[float(x) for x in v] for v in vecs]).reshape(len(vecs), n)
        r = numeric_rank(a) if len(vecs) else 0
        if r:
            _, _, vt = np.linalg.svd(a)
            normal = vt[:r]
            basis = tuple(tuple(v) for v in vt[r:])
        else:
            normal = np.zeros((0, n))
            basis = tuple(tuple(float(i == j) for i in range(n)) for j in range(n))
        fr = rs.float_roots()
        resid = fr - (fr @ normal.T) @ normal
        pos = [i for i in rs.positive if np.linalg.norm(resid[i]) < 1e-9]
        key = tuple(pos)
    return Flat(len(basis), key, basis, tuple(pos))


def _reduce(v, red):
    v = list(v)
    for row in red:
        c = next(i for i, x in enumerate(row) if x)
        if v[c]:
            f = v[c]
            v = [a - f * b for a, b in zip(v, row)]
    return v


def hyperplanes(g: GroupDescriptor) -> list[Flat]:
    """One flat per pair of opposite roots."""
    rs = root_system(g)
    return [_flat_from_roots(g, [i]) for i in rs.positive]


@lru_cache(maxsize=None)
def _root_subsystem(g: GroupDescriptor, subset: tuple) -> frozenset:
    """Indices of all roots in the span of the simple roots in ``subset``."""
    rs = root_system(g)
    flat = _flat_from_roots(g, [rs.simple[i] for i in subset])
    neg = {rs.key(tuple(-x for x in rs.roots[i])): None for i in flat.normals}
    out = set(flat.normals)
    for i, r in enumerate(rs.roots):
        if rs.key(r) in neg:
            out.add(i)
    return frozenset(out)


@lru_cache(maxsize=None)
def _flat_orbits(g: GroupDescriptor, codim: int) -> list:
    """Vanishing-root sets of all flats of codimension ``codim``, by orbit."""
    grp = generate_group(g)
    rank_ = len(root_system(g).simple)
    orbits = []
    seen: set = set()
    for sub in combinations(range(rank_), codim):
        base = _root_subsystem(g, sub)
        if base in seen:
            continue
        orbit = {frozenset(perm[i] for i in base) for perm in grp.perms}
        seen |= orbit
        orbits.append((sub, sorted(orbit, key=sorted)))
    return orbits


def flats(g: GroupDescriptor, dim: int, essential: bool = True) -> list[Flat]:
    """All flats of the given dimension.

    ``dim`` counts dimensions inside the essential part when ``essential`` is
    true (the default); otherwise it is the ambient dimension.
    """
    rs = root_system(g)
    fixed = g.fixed_dim
    amb = dim + fixed if essential else dim
    codim = rs.ambient - amb
    if not 0 <= codim <= len(rs.simple):
        return []
    out = []
    pos = set(rs.positive)
    for _, orbit in _flat_orbits(g, codim):
        for roots in orbit:
            out.append(_flat_from_roots(g, sorted(i for i in roots if i in pos)))
    return out


def flat_representatives(g: GroupDescriptor, dim: int) -> list[tuple[tuple, Flat]]:
    """One flat per orbit of ``dim``-dimensional flats (ambient dimension).

    Each is the fixed space of a standard parabolic subgroup; the subset of
    simple nodes is returned with it.
    """
    rs = root_system(g)
    codim = rs.ambient - dim
    if not 0 <= codim <= len(rs.simple):
        return []
    if g.order <= 200_000:
        reps = [sub for sub, _ in _flat_orbits(g, codim)]
    else:
        reps = list(combinations(range(len(rs.simple)), codim))
    return [(sub, _flat_from_roots(g, [rs.simple[i] for i in sub])) for sub in reps]


def count_flats_by_pairs(g: GroupDescriptor) -> int:
    """Number of codimension-2 flats, from spans of pairs of positive roots."""
    rs = root_system(g)
    seen = set()
    for i, j in combinations(rs.positive, 2):
        seen.add(_flat_from_roots(g, [i, j]).normals)
    return len(seen)


def vanishing_roots(g: GroupDescriptor, p) -> list[int]:
    """Positive roots orthogonal to ``p`` (exactly, or to relative tolerance)."""
    rs = root_system(g)
    if len(p) != rs.ambient:
        raise ValueError(f"point has {len(p)} coordinates, {g.label} acts on R^{rs.ambient}")
    if rs.exact and _is_exact_point(p):
        q = [Coefficient.coerce(x) for x in p]
        return [i for i in rs.positive if not dot(rs.roots[i], q)]
    x = np.array([float(v) for v in p])
    fr = rs.float_roots()
    nx = np.linalg.norm(x)
    if nx == 0:
        return list(rs.positive)
    vals = np.abs(fr @ x) / (np.linalg.norm(fr, axis=1) * nx)
    return [i for i in rs.positive if vals[i] <= REL_TOL]


def stratum_dim(g: GroupDescriptor, p, essential: bool = False) -> int:
    """Smallest ``i`` with ``p`` in the ``i``-stratum: ambient minus the rank of vanishing roots.

    With ``essential`` the dimension of the group's fixed space is subtracted.
    """
    rs = root_system(g)
    idx = vanishing_roots(g, p)
    if not idx:
        r = 0
    elif rs.exact and _is_exact_point(p):
        r = rank([rs.roots[i] for i in idx])
    else:
        r = numeric_rank(rs.float_roots()[idx], 1e-9)
    d = rs.ambient - r
    return d - g.fixed_dim if essential else d


# ---------------------------------------------------------------------------
# patterns for the classical families


@dataclass(frozen=True)
class StratumPattern:
    """Points with ``len(mult)`` free values repeated by multiplicity, then ``zeros`` zeros.

    For type D, ``sign = -1`` negates the final coordinate of the last block.
    """

    family: str
    mult: tuple
    zeros: int = 0
    sign: int = 1

    @property
    def free(self) -> int:
        return len(self.mult)

    @property
    def n(self) -> int:
        return sum(self.mult) + self.zeros

    def to_json(self) -> dict:
        out = {"family": self.family, "free": self.free, "multiplicities": list(self.mult),
               "zeros": self.zeros}
        if self.family == "D":
            out["sign"] = self.sign
        return out

    def __str__(self):
        s = "{" + ",".join(map(str, self.mult)) + "}"
        if self.family != "A":
            s += f" z={self.zeros}"
        if self.sign < 0:
            s += " sign=-1"
        return s

    def matrix(self) -> np.ndarray:
        """Linear map ``t -> embed(t)`` as an ``n x free`` matrix."""
        m = np.zeros((self.n, self.free))
        row = 0
        for j, k in enumerate(self.mult):
            m[row:row + k, j] = 1.0
            row += k
        if self.sign < 0:
            m[sum(self.mult) - 1, self.free - 1] = -1.0
        return m


def partitions(n: int, maxparts: int, maxpart: int | None = None):
    """Partitions of ``n`` into at most ``maxparts`` parts, descending lexicographic."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    if maxparts == 0:
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - first, maxparts - 1, first):
            yield (first,) + rest


def patterns(family: str, n: int, k: int) -> list[StratumPattern]:
    """Every pattern whose points lie in the ``k``-stratum, up to the group action."""
    family = family.upper()
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    out = []
    if family == "A":
        return [StratumPattern("A", p) for p in partitions(n, k)]
    if family not in ("B", "D"):
        raise ValueError(f"patterns are defined for A, B, D, not {family}")
    for z in range(n + 1):
        cap = k - 1 if (family == "D" and z == 1) else k
        for p in partitions(n - z, cap):
            out.append(StratumPattern(family, p, z))
            if family == "D" and z == 0 and p and all(m % 2 == 0 for m in p):
                out.append(StratumPattern(family, p, z, -1))
    return out


def maximal_patterns(family: str, n: int, k: int) -> list[StratumPattern]:
    """Patterns not contained in another pattern of the list; enough for optimization."""
    family = family.upper()
    k = min(k, n)
    if family == "A":
        return [StratumPattern("A", p) for p in partitions(n, k) if len(p) == k]
    out = []
    for z in range(n - k + 1):
        if family == "D" and z == 1:
            continue  # covered by z = 0 with a one-element block at value 0
        for p in partitions(n - z, k):
            if len(p) != k:
                continue
            out.append(StratumPattern(family, p, z))
            if family == "D" and z == 0 and all(m % 2 == 0 for m in p):
                out.append(StratumPattern(family, p, z, -1))
    return out


def embed(pat: StratumPattern, t: Sequence) -> list:
    """The point of the pattern with free values ``t`` (exact if ``t`` is)."""
    if len(t) != pat.free:
        raise ValueError(f"pattern has {pat.free} free values, got {len(t)}")
    x = []
    for v, m in zip(t, pat.mult):
        x += [v] * m
    if pat.sign < 0:
        x[-1] = -x[-1]
    x += [0] * pat.zeros
    return x


# ---------------------------------------------------------------------------
# Jacobian criterion


def jacobian(basics: Sequence[Polynomial], p, k: int):
    """Rows are the gradients of the first ``k + 1`` basics at ``p``."""
    polys = list(basics[:k + 1])
    if _is_exact_point(p) and all(q.is_rational() for q in polys):
        return [[d.eval_exact(p) for d in q.gradient()] for q in polys], True
    from .kernels import CompiledSystem, eval_system

    _, jac = eval_system(CompiledSystem.from_polys(polys), np.array([float(v) for v in p]))
    return jac, False


def jacobian_rank(basics: Sequence[Polynomial], p, k: int) -> int:
    """Rank of the Jacobian of the first ``k + 1`` basics at ``p``."""
    if k + 1 > len(basics):
        raise ValueError(f"need at least {k + 1} basic invariants")
    jac, exact = jacobian(basics, p, k)
    return rank(jac) if exact else numeric_rank(np.asarray(jac), 1e-9)


def random_rational_point(rng: np.random.Generator, n: int, family: str = "A",
                          den: int = 4, span: int = 4) -> list[Fraction]:
    """Rational point with deliberately repeated and zero coordinates."""
    pool = [Fraction(int(rng.integers(-span * den, span * den + 1)), den)
            for _ in range(int(rng.integers(1, n + 1)))]
    pts = []
    for _ in range(n):
        v = pool[int(rng.integers(len(pool)))]
        if family != "A" and rng.random() < 0.5:
            v = -v
        if family != "A" and rng.random() < 0.15:
            v = Fraction(0)
        pts.append(v)
    return pts


__all__ = [
    "Flat", "GroupError", "StratumPattern", "count_flats_by_pairs", "embed", "flat_representatives",
    "flats", "hyperplanes", "jacobian", "jacobian_rank", "maximal_patterns", "partitions",
    "patterns", "random_rational_point", "stratum_dim", "vanishing_roots",
]
