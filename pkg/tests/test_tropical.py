from fractions import Fraction as F

import pytest

from manetti.quotient import CyclicQuotient
from manetti.tropical import (appendix_sequence, displace_edges, nodal_trade, parse_surface,
                              polygon_diagram, resolution_fan, resolve_diagram_cuts,
                              surface_diagram, untrade)


def _fan(s, c):
    D = surface_diagram(s)
    return resolution_fan(D, D.triangle.triple.index(c))


def test_parse_surface():
    assert str(parse_surface("HP:5")) == "HP:5"
    for bad in ["HP5", "P:1,2", "Q:1", "HP:0"]:
        with pytest.raises(ValueError):
            parse_surface(bad)
    with pytest.raises(ValueError):
        surface_diagram("P:1,2,5")


def test_resolution_fan_hp13():
    F13 = _fan("HP:13", 13)
    assert F13.rays[:3] == ((0, -1), (-1, -7), (-5, -34))
    assert F13.chain == (7, 5, 2, 2, 2, 2, 2)
    assert str(F13.singularity) == "1/169(1,25)"


def test_resolution_fan_hp29_singularity():
    F29 = _fan("HP:29", 29)
    assert F29.chain == (5, 2, 2, 2, 2, 2, 10, 2, 2, 2)
    assert F29.singularity.same_as(CyclicQuotient(841, 637))


def test_generic_tables():
    _, t = displace_edges(surface_diagram("P:1,1,4"))
    assert t.row("e1").length == 0 and t.row("e1").displacement == 0
    _, t = displace_edges(surface_diagram("P:1,1,4"), drop=[(0, 4)])
    assert (t.row("e1").length, t.row("e1").displacement) == (4, 1)


def test_btilde_hp34():
    _, t = displace_edges(surface_diagram("HP:34"))
    r = t.row("e4")
    assert r.normal == (-13, -89) and r.btilde == -1


def test_support_errors():
    D = surface_diagram("P:1,4,25")
    with pytest.raises(ValueError):
        displace_edges(D, support=[(100, 100)])
    with pytest.raises(ValueError):
        displace_edges(D, support=[(0, 0)], drop=[(0, 0)])


def test_degenerate_support_is_flagged():
    _, t = displace_edges(surface_diagram("P:1,1,4"), support=[(0, 0)])
    assert any("degenerate" in f for f in t.flags)


def test_trade_and_untrade():
    D = polygon_diagram([(0, 0), (25, 0), (0, 4)])
    T = nodal_trade(D, (25, 0), node=(12, 2))
    assert T.cuts[-1].direction == (-13, 2)
    assert untrade(T, (25, 0)).cuts == D.cuts
    with pytest.raises(ValueError):
        untrade(D, (25, 0))
    with pytest.raises(ValueError):
        nodal_trade(D, (25, 0), node=(1, 1))


def test_appendix_resolution_blows_down_to_f7():
    stages = resolve_diagram_cuts(appendix_sequence()[-1])
    assert stages[-1].directions() == [(0, 1), (1, 0), (7, -1), (-1, 0)]
    assert stages[-1].hirzebruch() == 7


def test_node_defaults_to_barycentre():
    D = surface_diagram("HP:5")
    assert D.node == (F(8, 3), F(8, 3))
