import csv
import io
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from jumpnum.algebra import MonomialIdeal, parse_rational
from jumpnum.jumping import jumps_upto
from jumpnum.svg import ruler_svg, spectrum_csv

NS = {"svg": "http://www.w3.org/2000/svg"}
F = Fraction


def test_ruler_has_one_tick_per_jump_with_exact_values():
    spec = jumps_upto(MonomialIdeal(2, [(3, 0), (0, 4)]), 2)
    root = ET.fromstring(ruler_svg([("(s^3, t^4)", spec.jumps)], spec.cutoff).encode())
    ticks = root.findall(".//svg:line[@class='tick']", NS)
    assert len(ticks) == len(spec.jumps)
    assert [parse_rational(t.get("data-value")) for t in ticks] == list(spec.jumps)
    assert ticks[0].find("svg:title", NS).text == "7/12"


def test_ticks_are_ordered_left_to_right():
    jumps = [F(1, 3), F(1, 2), F(2)]
    root = ET.fromstring(ruler_svg([("a", jumps)], F(2)).encode())
    xs = [float(t.get("x1")) for t in root.findall(".//svg:line[@class='tick']", NS)]
    assert xs == sorted(xs)


def test_stacked_rulers_and_escaped_labels():
    root = ET.fromstring(ruler_svg([("a < b", [F(1)]), ("c & d", [F(1, 2), F(3, 2)])], F(2)).encode())
    groups = root.findall("svg:g", NS)
    assert [g.get("data-label") for g in groups] == ["a < b", "c & d"]
    assert [int(g.get("data-count")) for g in groups] == [1, 2]


def test_empty_row_is_allowed():
    root = ET.fromstring(ruler_svg([("none", [])], F(1)).encode())
    assert not root.findall(".//svg:line[@class='tick']", NS)


def test_cutoff_must_be_positive():
    with pytest.raises(ValueError):
        ruler_svg([("a", [])], F(0))


def test_csv():
    rows = list(csv.DictReader(io.StringIO(spectrum_csv([F(7, 12), F(1)], [1, 2]))))
    assert rows == [{"value": "7/12", "multiplicity": "1"}, {"value": "1/1", "multiplicity": "2"}]
    rows = list(csv.DictReader(io.StringIO(spectrum_csv([F(1)], None))))
    assert rows[0]["multiplicity"] == ""
