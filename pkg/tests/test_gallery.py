import json

import pytest

from orbitclosure import gallery
from orbitclosure.cli import main


@pytest.mark.parametrize("name", sorted(gallery.GALLERY))
def test_fixture_matches_committed_report(name):
    _, drift = gallery.run(name)
    assert drift == []


@pytest.mark.parametrize("name", ["ex1", "ex002"])
def test_cli_and_library_agree(name, capsys):
    assert main(["gallery", name]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["report"] == gallery.normalize(gallery.GALLERY[name]())


def test_committed_sierpinski_contents():
    exp = gallery.load_expected("ex1")
    assert exp["closed_sets"] == [[], [0], [0, 1]]
    assert exp["R"] == [[0, 0], [1, 0], [1, 1]]
    assert exp["R_closed"] is False and exp["flow_pap"] is True
    assert exp["orbit_class_space_hausdorff"] is False


def test_diff_rules():
    assert gallery.diff({"a": 1.0}, {"a": 1.0 + 1e-12}) == []
    assert gallery.diff({"a": 1.0}, {"a": 1.1}) == ["$.a: 1.1 != 1.0"]
    assert gallery.diff({"a": True}, {"a": 1}) == ["$.a: 1 != True"]
    assert gallery.diff({"a": [1, 2]}, {"a": [1]}) == ["$.a: length 1 != 2"]
    assert gallery.diff({"a": 1}, {}) == ["$.a: missing"]
    assert gallery.diff({}, {"b": 1}) == ["$.b: unexpected"]
    assert gallery.diff({"drift": 1e-15}, {"drift": 3e-15}) == []
