"""Catalog of finite reflection groups: degrees, roots, diagrams, elements."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Sequence

import numpy as np

from .field import ONE, PHI, ZERO, Coefficient
from .linalg import dot, nullspace, solve_square
from .poly import Polynomial

FAMILIES = ("A", "B", "D", "I2", "H3", "H4", "F4", "E6", "E7", "E8")
ORDER_CAP = 10**6


class GroupError(ValueError):
    """Unknown group, bad parameter, or an operation out of scope for it."""


class OrderCapError(GroupError):
    pass


@dataclass(frozen=True)
class GroupDescriptor:
    """A finite reflection group from the catalog.

    ``rank`` is the dimension of the essential action, ``ambient`` the
    dimension of the space the roots live in.  ``extra_dims`` counts trivially
    acted-on coordinates appended by :func:`lift`.
    """

    family: str
    param: int
    rank: int
    degrees: tuple
    ambient: int
    extra_dims: int = 0

    @property
    def essential(self) -> bool:
        return self.ambient == self.rank

    @property
    def label(self) -> str:
        base = f"I2({self.param})" if self.family == "I2" else (
            f"{self.family}{self.param}" if self.family in "ABD" else self.family)
        return base + (f"+R{self.extra_dims}" if self.extra_dims else "")

    @property
    def order(self) -> int:
        return math.prod(self.degrees)

    @property
    def top_degree(self) -> int:
        return self.degrees[-1] if self.degrees else 0

    @property
    def fixed_dim(self) -> int:
        """Dimension of the pointwise fixed subspace in the ambient space."""
        return self.ambient - self.rank

    @property
    def crystallographic(self) -> bool:
        return self.family in ("A", "B", "D", "F4", "E6", "E7", "E8") or (
            self.family == "I2" and self.param in (3, 4, 6))

    def __str__(self):
        return self.label


_EXCEPTIONAL_DEGREES = {
    "H3": (2, 6, 10),
    "H4": (2, 12, 20, 30),
    "F4": (2, 6, 8, 12),
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
}


def catalog(family: str, param: int | None = None) -> GroupDescriptor:
    """Descriptor for ``family`` (``A``, ``B``, ``D``, ``I2``, ``H3``, ...)."""
    family = family.upper()
    if family in _EXCEPTIONAL_DEGREES:
        n = int(family[1])
        if param not in (None, n):
            raise GroupError(f"{family} takes no parameter")
        return GroupDescriptor(family, n, n, _EXCEPTIONAL_DEGREES[family], n)
    if param is None:
        raise GroupError(f"{family} needs a parameter")
    param = int(param)
    if family == "A":
        if param < 1:
            raise GroupError("A_n needs n >= 1")
        return GroupDescriptor("A", param, param, tuple(range(2, param + 2)), param + 1)
    if family == "B":
        if param < 1:
            raise GroupError("B_n needs n >= 1")
        return GroupDescriptor("B", param, param, tuple(range(2, 2 * param + 1, 2)), param)
    if family == "D":
        if param < 2:
            raise GroupError("D_n needs n >= 2")
        degs = sorted(list(range(2, 2 * param - 1, 2)) + [param])
        return GroupDescriptor("D", param, param, tuple(degs), param)
    if family == "I2":
        if param < 3:
            raise GroupError("I2(m) needs m >= 3")
        return GroupDescriptor("I2", param, 2, (2, param), 2)
    raise GroupError(f"unknown family {family!r}")


_GROUP_RE = re.compile(r"^\s*(?:(A|B|D)(\d+)|I2\((\d+)\)|(H3|H4|F4|E6|E7|E8))\s*$", re.I)


def parse_group(text: str) -> GroupDescriptor:
    """Parse ``A5``, ``B4``, ``D6``, ``I2(7)``, ``H3``, ``F4``, ``E8`` and so on."""
    m = _GROUP_RE.match(text)
    if not m:
        raise GroupError(f"cannot parse group {text!r}")
    fam, n, m2, exc = m.groups()
    if fam:
        return catalog(fam.upper(), int(n))
    if m2:
        return catalog("I2", int(m2))
    return catalog(exc.upper())


def lift(g: GroupDescriptor, extra: int = 1) -> GroupDescriptor:
    """The same group acting on ``R^ambient x R^extra``, trivially on the new part."""
    return GroupDescriptor(g.family, g.param, g.rank, g.degrees, g.ambient + extra,
                           g.extra_dims + extra)


def base_group(g: GroupDescriptor) -> GroupDescriptor:
    if not g.extra_dims:
        return g
    return GroupDescriptor(g.family, g.param, g.rank, g.degrees, g.ambient - g.extra_dims)


# ---------------------------------------------------------------------------
# Dynkin diagrams


@dataclass(frozen=True)
class DynkinDiagram:
    """Nodes ``0..r-1``; ``edges`` maps ``(i, j)`` with ``i < j`` to the bond label."""

    nodes: tuple
    edges: tuple  # sorted tuple of ((i, j), m)

    def label(self, i: int, j: int) -> int:
        a, b = min(i, j), max(i, j)
        return dict(self.edges).get((a, b), 2)

    def neighbors(self, i: int) -> list[int]:
        return sorted({b if a == i else a for (a, b), _ in self.edges if i in (a, b)})

    def restrict(self, subset: Sequence[int]) -> "DynkinDiagram":
        keep = sorted(subset)
        idx = {v: k for k, v in enumerate(keep)}
        edges = tuple(sorted(((idx[a], idx[b]), m) for (a, b), m in self.edges
                             if a in idx and b in idx))
        return DynkinDiagram(tuple(range(len(keep))), edges)

    def components(self, subset: Sequence[int] | None = None) -> list[list[int]]:
        todo = set(self.nodes if subset is None else subset)
        comps = []
        while todo:
            start = min(todo)
            stack, comp = [start], {start}
            while stack:
                v = stack.pop()
                for w in self.neighbors(v):
                    if w in todo and w not in comp:
                        comp.add(w)
                        stack.append(w)
            todo -= comp
            comps.append(sorted(comp))
        return sorted(comps)


def _path(labels: Sequence[int]) -> DynkinDiagram:
    r = len(labels) + 1
    return DynkinDiagram(tuple(range(r)), tuple(((i, i + 1), m) for i, m in enumerate(labels)))


@lru_cache(maxsize=None)
def dynkin(g: GroupDescriptor) -> DynkinDiagram:
    """Catalog Dynkin diagram in the usual (Bourbaki) node order."""
    g = base_group(g)
    f, n = g.family, g.param
    if f == "A":
        return _path([3] * (n - 1))
    if f == "B":
        return _path([3] * (n - 2) + [4]) if n >= 2 else _path([])
    if f == "D":
        if n == 2:
            return DynkinDiagram((0, 1), ())
        edges = [((i, i + 1), 3) for i in range(n - 2)] + [((n - 3, n - 1), 3)]
        return DynkinDiagram(tuple(range(n)), tuple(sorted(edges)))
    if f == "I2":
        return _path([n])
    if f == "H3":
        return _path([5, 3])
    if f == "H4":
        return _path([5, 3, 3])
    if f == "F4":
        return _path([3, 4, 3])
    if f in ("E6", "E7", "E8"):
        r = int(f[1])
        edges = [((0, 2), 3), ((1, 3), 3)] + [((i, i + 1), 3) for i in range(2, r - 1)]
        return DynkinDiagram(tuple(range(r)), tuple(sorted(edges)))
    raise GroupError(f"no diagram for {g}")


# ---------------------------------------------------------------------------
# root systems


class UnsupportedGroupError(GroupError):
    pass


@dataclass
class RootSystem:
    """Roots as tuples (exact :class:`Coefficient` or float), with positive/simple indices."""

    group: GroupDescriptor
    roots: list
    positive: list
    simple: list
    exact: bool
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {self.key(r): i for i, r in enumerate(self.roots)}

    @property
    def ambient(self) -> int:
        return len(self.roots[0])

    def key(self, v):
        if self.exact:
            return tuple(v)
        return tuple(round(float(x), 9) + 0.0 for x in v)

    def index(self, v) -> int:
        return self._index[self.key(v)]

    def float_roots(self) -> np.ndarray:
        return np.array([[float(x) for x in r] for r in self.roots])

    def simple_roots(self) -> list:
        return [self.roots[i] for i in self.simple]

    def positive_roots(self) -> list:
        return [self.roots[i] for i in self.positive]

    def reflect(self, alpha, beta):
        """``s_alpha(beta)``."""
        if self.exact:
            c = dot(alpha, beta) * 2 / dot(alpha, alpha)
            return tuple(b - c * a for a, b in zip(alpha, beta))
        a = np.asarray(alpha, float)
        b = np.asarray(beta, float)
        return tuple(b - 2 * a.dot(b) / a.dot(a) * a)

    def permutation(self, alpha) -> tuple:
        """Root permutation induced by the reflection in ``alpha``."""
        return tuple(self.index(self.reflect(alpha, r)) for r in self.roots)


def _signed(vec: Sequence, positions: Sequence[int]):
    """All sign patterns on the nonzero entries at ``positions``."""
    out = []
    for signs in product((1, -1), repeat=len(positions)):
        v = list(vec)
        for s, p in zip(signs, positions):
            v[p] = v[p] * s
        out.append(tuple(v))
    return out


def _unit(n: int, i: int, c=ONE) -> list:
    v = [ZERO] * n
    v[i] = c
    return v


def _even_perms(n: int):
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        if inv % 2 == 0:
            yield p


def _raw_roots(g: GroupDescriptor):
    f, n = g.family, g.param
    half = Coefficient(Fraction(1, 2))
    if f == "A":
        m = n + 1
        return [tuple(_unit(m, i, ONE)[k] - _unit(m, j, ONE)[k] for k in range(m))
                for i in range(m) for j in range(m) if i != j], True
    if f in ("B", "D", "F4"):
        m = 4 if f == "F4" else n
        roots = set()
        for i in range(m):
            for j in range(i + 1, m):
                v = _unit(m, i)
                v[j] = ONE
                roots.update(_signed(v, (i, j)))
        if f in ("B", "F4"):
            for i in range(m):
                roots.update(_signed(_unit(m, i), (i,)))
        if f == "F4":
            roots.update(_signed((half,) * 4, range(4)))
        return sorted(roots, key=lambda v: tuple(float(x) for x in v)), True
    if f in ("H3", "H4"):
        m = int(f[1])
        a, b, c = PHI * half, half, (PHI - ONE) * half  # phi/2, 1/2, 1/(2 phi)
        roots = set()
        for i in range(m):
            roots.update(_signed(_unit(m, i), (i,)))
        base = (a, b, c) if m == 3 else (a, b, c, ZERO)
        for p in _even_perms(m):
            v = tuple(base[p[k]] for k in range(m))
            roots.update(_signed(v, [k for k in range(m) if v[k]]))
        if m == 4:
            roots.update(_signed((half,) * 4, range(4)))
        return sorted(roots, key=lambda v: tuple(float(x) for x in v)), True
    if f == "I2":
        # roots at angles pi/2 + j pi/m, so the mirrors include the x-axis
        roots = []
        for j in range(2 * n):
            t = math.pi / 2 + j * math.pi / n
            roots.append((math.cos(t), math.sin(t)))
        return roots, False
    raise UnsupportedGroupError(f"root data for {g.label} is not provided (diagram data only)")


def _functional(n: int):
    # big gaps: the sign is decided by the first nonzero coordinate
    return [Coefficient(100 ** (n - 1 - i)) for i in range(n)]


def _bond(rs: RootSystem, a, b) -> int:
    """Bond label of two simple roots from the squared cosine of their angle."""
    if rs.exact:
        c2 = dot(a, b) * dot(a, b) / (dot(a, a) * dot(b, b))
        table = {ZERO: 2, Coefficient(Fraction(1, 4)): 3, Coefficient(Fraction(1, 2)): 4,
                 Coefficient(Fraction(3, 8), Fraction(1, 8)): 5, Coefficient(Fraction(3, 4)): 6}
        if c2 not in table:
            raise GroupError(f"unexpected angle between simple roots: cos^2 = {c2}")
        return table[c2]
    x, y = np.asarray(a, float), np.asarray(b, float)
    c = abs(x.dot(y)) / math.sqrt(x.dot(x) * y.dot(y))
    if c < 1e-12:
        return 2
    return int(round(math.pi / math.acos(min(1.0, c))))


def _match_diagram(rs: RootSystem, simple: list[int], target: DynkinDiagram) -> list[int]:
    """Order ``simple`` so the induced diagram equals ``target``."""
    r = len(simple)
    lab = {(i, j): _bond(rs, rs.roots[simple[i]], rs.roots[simple[j]])
           for i in range(r) for j in range(r) if i != j}
    want = {(a, b): m for (a, b), m in target.edges}

    def fits(order):
        k = len(order)
        for j in range(k):
            for i in range(j):
                if lab[(order[i], order[j])] != want.get((i, j), 2):
                    return False
        return True

    def extend(order):
        if len(order) == r:
            return order
        for c in range(r):
            if c not in order and fits(order + [c]):
                res = extend(order + [c])
                if res:
                    return res
        return None

    found = extend([])
    if found is None:
        raise GroupError(f"simple roots do not match the {rs.group.label} diagram")
    return [simple[i] for i in found]


@lru_cache(maxsize=None)
def root_system(g: GroupDescriptor) -> RootSystem:
    """Roots of ``g`` in standard coordinates; simple roots in diagram order."""
    base = base_group(g)
    roots, exact = _raw_roots(base)
    if g.extra_dims:
        pad = (ZERO,) * g.extra_dims if exact else (0.0,) * g.extra_dims
        roots = [tuple(r) + pad for r in roots]
    n = len(roots[0])
    if exact:
        ell = _functional(n)
        positive = [i for i, r in enumerate(roots) if dot(ell, r).sign() > 0]
    else:
        ell = np.array([1.0, 1e-3])
        positive = [i for i, r in enumerate(roots) if np.dot(ell, r) > 1e-12]
    rs = RootSystem(g, list(roots), positive, [], exact)
    # a positive root is simple iff its reflection permutes the other positive roots
    pos = set(positive)
    simple = []
    for i in positive:
        perm = rs.permutation(roots[i])
        if all(perm[j] in pos for j in positive if j != i):
            simple.append(i)
    if len(simple) != base.rank:
        raise GroupError(f"found {len(simple)} simple roots for {g.label}, expected {base.rank}")
    rs.simple = _match_diagram(rs, simple, dynkin(base))
    return rs


def diagram_from_roots(g: GroupDescriptor) -> DynkinDiagram:
    rs = root_system(g)
    s = rs.simple_roots()
    edges = []
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            m = _bond(rs, s[i], s[j])
            if m != 2:
                edges.append(((i, j), m))
    return DynkinDiagram(tuple(range(len(s))), tuple(sorted(edges)))


def reflection_matrix(alpha) -> tuple:
    """Exact matrix of the reflection in ``alpha``."""
    n = len(alpha)
    nn = dot(alpha, alpha)
    return tuple(tuple((ONE if i == j else ZERO) - alpha[i] * alpha[j] * 2 / nn for j in range(n))
                 for i in range(n))


def simple_reflections(g: GroupDescriptor) -> list:
    rs = root_system(g)
    if not rs.exact:
        raise UnsupportedGroupError(f"{g.label} has no exact realization")
    return [reflection_matrix(a) for a in rs.simple_roots()]


# ---------------------------------------------------------------------------
# group elements


class FiniteGroup:
    """All elements of a reflection group as root permutations.

    Matrices are produced on demand: :meth:`float_matrices` as one numpy
    array, :meth:`matrices` exactly.  Row ``i`` of an element ``M`` gives the
    linear form for coordinate ``i`` of ``M x``.
    """

    def __init__(self, g: GroupDescriptor, rs: RootSystem, perms: list):
        self.group = g
        self.roots = rs
        self.perms = perms
        n = rs.ambient
        simple = rs.simple_roots()
        comp = nullspace([list(s) for s in simple], n) if rs.exact else _float_complement(simple, n)
        self._cols = simple + [tuple(c) for c in comp]
        self._ncomp = len(comp)
        self._binv_exact = None
        self._float = None
        self._exact = None

    def __len__(self):
        return len(self.perms)

    def _binv(self):
        # B has the simple roots and the fixed complement as columns
        if self._binv_exact is None:
            n = self.roots.ambient
            b = [[self._cols[j][i] for j in range(n)] for i in range(n)]
            ident = [[ONE if i == j else ZERO for i in range(n)] for j in range(n)]
            cols = solve_square(b, ident)  # cols[j] = column j of B^-1
            self._binv_exact = [[cols[j][i] for j in range(n)] for i in range(n)]
        return self._binv_exact

    def _images(self, perm) -> list:
        rs = self.roots
        imgs = [rs.roots[perm[i]] for i in rs.simple]
        return imgs + self._cols[len(rs.simple):]

    def row(self, perm, i: int) -> tuple:
        """Exact row ``i`` of the matrix of ``perm``."""
        binv = self._binv()
        imgs = self._images(perm)
        n = self.roots.ambient
        return tuple(dot([imgs[k][i] for k in range(n)], [binv[k][j] for k in range(n)])
                     for j in range(n))

    def matrices(self) -> list:
        if self._exact is None:
            n = self.roots.ambient
            self._exact = [tuple(self.row(p, i) for i in range(n)) for p in self.perms]
        return self._exact

    def float_matrices(self) -> np.ndarray:
        if self._float is None:
            rs = self.roots
            fr = rs.float_roots()
            n = rs.ambient
            cols = np.array([[float(x) for x in c] for c in self._cols]).T
            binv = np.linalg.inv(cols)
            perms = np.array(self.perms)
            imgs = np.empty((len(self.perms), n, n))
            for k, s in enumerate(rs.simple):
                imgs[:, :, k] = fr[perms[:, s]]
            for k in range(len(rs.simple), n):
                imgs[:, :, k] = cols[:, k]
            self._float = imgs @ binv
        return self._float


def _float_complement(simple, n):
    a = np.array(simple, dtype=float).reshape(len(simple), n)
    if a.shape[0] == n:
        return []
    _, _, vt = np.linalg.svd(a)
    return [tuple(v) for v in vt[a.shape[0]:]]


@lru_cache(maxsize=8)
def generate_group(g: GroupDescriptor, cap: int = ORDER_CAP) -> FiniteGroup:
    """Breadth-first closure of the simple reflections, as root permutations."""
    if g.order > cap:
        raise OrderCapError(f"|{g.label}| = {g.order} exceeds the cap {cap}")
    rs = root_system(g)
    gens = [rs.permutation(a) for a in rs.simple_roots()]
    ident = tuple(range(len(rs.roots)))
    seen = {ident}
    frontier = [ident]
    elems = [ident]
    while frontier:
        nxt = []
        for h in frontier:
            for s in gens:
                w = tuple(s[i] for i in h)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
                    elems.append(w)
        if len(seen) > cap:
            raise OrderCapError(f"group generation exceeded the cap {cap}")
        frontier = nxt
    return FiniteGroup(g, rs, elems)


def is_invariant(g: GroupDescriptor, p: Polynomial) -> bool:
    """Exact check that ``p`` is fixed by every simple reflection."""
    return all(p.linear_substitute(m) == p for m in simple_reflections(g))


def reynolds(g: GroupDescriptor, p: Polynomial) -> Polynomial:
    """Group average ``(1/|G|) sum_g p(g x)``, computed exactly.

    Elements that agree on the rows of the variables ``p`` actually uses give
    the same term, so those are grouped before substituting.
    """
    grp = generate_group(g)
    if not grp.roots.exact:
        raise UnsupportedGroupError(f"{g.label} has no exact realization")
    n = grp.roots.ambient
    if p.nvars != n:
        raise ValueError(f"polynomial has {p.nvars} variables, {g.label} acts on R^{n}")
    support = [i for i in range(n) if p.degree_in(i) > 0]
    zero = (ZERO,) * n
    counts: dict = {}
    for perm in grp.perms:
        key = tuple(grp.row(perm, i) for i in support)
        counts[key] = counts.get(key, 0) + 1
    total = Polynomial(n, {})
    for key, c in counts.items():
        rows = [zero] * n
        for i, r in zip(support, key):
            rows[i] = r
        total = total + p.linear_substitute(rows, n).scale(c)
    return total.scale(Coefficient(Fraction(1, len(grp))))
