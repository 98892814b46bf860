from __future__ import annotations

import math

import numpy as np
import pytest

from degprinc.coxeter import (GroupError, OrderCapError, UnsupportedGroupError, base_group,
                              catalog, dynkin, generate_group, is_invariant, lift, parse_group,
                              reynolds, root_system)
from degprinc.poly import parse

SMALL = [("A", 3), ("B", 3), ("D", 4), ("I2", 5), ("I2", 8), ("H3",), ("F4",), ("H4",)]


@pytest.mark.parametrize("spec", SMALL)
def test_closure_order_equals_degree_product(spec):
    g = catalog(*spec)
    assert len(generate_group(g)) == math.prod(g.degrees) == g.order


@pytest.mark.parametrize("spec", SMALL)
def test_reflection_count(spec):
    g = catalog(*spec)
    rs = root_system(g)
    assert len(rs.positive_roots()) == sum(d - 1 for d in g.degrees)
    # every root reflects the root set onto itself
    R = rs.float_roots()
    for a in R[:6]:
        S = R - 2 * np.outer(R @ a, a) / (a @ a)
        for s in S:
            assert np.min(np.linalg.norm(R - s, axis=1)) < 1e-9


def test_labels_and_parsing():
    assert parse_group("I2(5)").degrees == (2, 5)
    assert parse_group("B3").label == "B3"
    assert catalog("H4").degrees == (2, 12, 20, 30)
    with pytest.raises(GroupError):
        parse_group("Q3")


def test_lift_adds_fixed_coordinates():
    g = lift(catalog("A", 2))
    assert g.label == "A2+R1" and g.fixed_dim == 2
    assert base_group(g) == catalog("A", 2)


def test_diagram_of_f4():
    d = dynkin(catalog("F4"))
    assert sorted(m for _, m in d.edges) == [3, 3, 4]


def test_caps_and_missing_root_data():
    with pytest.raises(OrderCapError):
        generate_group(catalog("E8"))
    with pytest.raises(UnsupportedGroupError):
        root_system(catalog("E6"))


def test_invariance_and_averaging():
    g = catalog("B", 2)
    assert is_invariant(g, parse("x1^4 + x2^4", nvars=2))
    assert not is_invariant(g, parse("x1^3", nvars=2))
    avg = reynolds(g, parse("x1^4", nvars=2))
    assert avg == parse("1/2*x1^4 + 1/2*x2^4", nvars=2)
