from __future__ import annotations

from itertools import combinations

import numpy as np
import pytest

from degprinc.coxeter import catalog, root_system
from degprinc.parabolic import (ParabolicError, classify_subdiagram, parnum, parnum_detail,
                                secparnum, table1, type_name)

GROUPS = [("A", 3), ("A", 4), ("B", 3), ("B", 4), ("D", 4), ("D", 5), ("I2", 5), ("I2", 8),
          ("H3",), ("F4",), ("H4",)]


def _oracle_top(simple: np.ndarray, sub, ambient: int) -> int:
    """Largest degree of the parabolic subgroup acting on the whole space.

    Uses the Coxeter number h = 2 |positive roots| / rank of each component,
    with the roots obtained by closing the chosen simple roots under their
    reflections.
    """
    top = 1 if ambient > len(sub) else 0
    comps, left = [], set(sub)
    while left:
        stack, comp = [left.pop()], set()
        while stack:
            i = stack.pop()
            comp.add(i)
            for j in list(left):
                if abs(simple[i] @ simple[j]) > 1e-9:
                    left.discard(j)
                    stack.append(j)
        comps.append(sorted(comp))
    for comp in comps:
        roots = [simple[i] for i in comp]
        grew = True
        while grew:
            grew = False
            for a in [simple[i] for i in comp]:
                for b in list(roots):
                    r = b - 2 * (a @ b) / (a @ a) * a
                    if min(np.linalg.norm(r - c) for c in roots) > 1e-9:
                        roots.append(r)
                        grew = True
        top = max(top, len(roots) // len(comp))
    return top


def _oracle_parnum(g, d: int) -> int:
    simple = np.array([[float(x) for x in r] for r in root_system(g).simple_roots()])
    best = None
    for r in range(len(simple) + 1):
        for sub in combinations(range(len(simple)), r):
            if 2 * _oracle_top(simple, sub, g.ambient) > d:
                v = max(0, len(sub) - 1 + g.fixed_dim)
                best = v if best is None else min(best, v)
    return best


@pytest.mark.parametrize("spec", GROUPS)
def test_parnum_against_root_closure(spec):
    g = catalog(*spec)
    for d in range(0, 2 * g.top_degree, max(1, g.top_degree // 6)):
        assert parnum(g, d) == _oracle_parnum(g, d), d


def test_secparnum_reads_doubled_degrees():
    g = catalog("F4")
    assert [secparnum(g, k) for k in range(1, 5)] == [parnum(g, 4), parnum(g, 12),
                                                     parnum(g, 16), 4]
    with pytest.raises(ParabolicError):
        secparnum(g, 0)


def test_witness_and_range_errors():
    r = parnum_detail(catalog("D", 5), 4)
    assert r.value == 1 and r.witness_type == "A2" and r.witness_top == 3
    with pytest.raises(ParabolicError):
        parnum(catalog("B", 3), 2 * 6)
    with pytest.raises(ParabolicError):
        parnum(catalog("B", 3), -1)


def test_subdiagram_names():
    assert classify_subdiagram(catalog("D", 5), [0, 1, 2]).name == "A3"
    assert type_name([catalog("A", 1), catalog("A", 1)]) == "A1xA1"


def test_f4_table_rows():
    rows = table1(catalog("F4")).to_json()["rows"]
    assert [(r["d_from"], r["d_to"], r["parnum"], r["W"]) for r in rows] == [
        (0, 3, 0, "A1"), (4, 7, 1, "B2"), (8, 11, 2, "B3"), (12, 23, 3, "F4")]
