import os
from pathlib import Path

import pytest

import nearsp

DATA = Path(os.environ.get("NEARSP_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))

PLURALITY = """\
ballots: orders
candidates: a p b
axis: a p b
attack: ccdc
system: plurality
preferred: p
budget: 1
society: sp
voter w=2: a > p > b
voter w=2: b > p > a
voter: p > a > b
"""


def test_solve_matches_oracle_on_samples():
    files = sorted(DATA.glob("*.elect"))
    assert files
    for path in files:
        inst = nearsp.load(path)
        fast = nearsp.solve(inst)
        slow = nearsp.oracle(inst, oracle_caps=(64, 1000, 8, 1 << 22))
        assert fast.yes == slow.yes, path.name
        if fast.yes:
            assert nearsp.replay(inst, fast.text) == []


def test_deletion_witness():
    inst = nearsp.parse_instance(PLURALITY)
    out = nearsp.solve(inst)
    assert out
    assert out.route == "ccdc_plurality_klocal(k=1)"
    assert len(out.witness["deleted_candidates"]) == 1
    assert out.text.startswith("YES\n")


def test_instance_round_trip():
    inst = nearsp.parse_instance(PLURALITY)
    assert nearsp.parse_instance(inst.emit()) == inst
    assert inst.candidates == ["a", "p", "b"]
    assert inst.preferred == "p"
    assert inst.society_holds


def test_errors():
    with pytest.raises(nearsp.ParseError):
        nearsp.parse_instance("ballots: orders\nnonsense: 1\n")
    with pytest.raises(nearsp.PreconditionError):
        nearsp.dodgson_distance([0, 1], [0, 1, 2])
    inst = nearsp.parse_instance(PLURALITY)
    with pytest.raises(nearsp.CapExceeded):
        nearsp.oracle(inst, oracle_caps=(2, 8, 4, 10))
    assert issubclass(nearsp.CapExceeded, nearsp.Error)


def test_distances():
    axis = [0, 1, 2, 3, 4]
    assert nearsp.is_single_peaked([2, 1, 3, 0, 4], axis)
    assert nearsp.dodgson_distance([0, 4, 1, 2, 3], axis) == 3
    assert nearsp.perception_flip_distance([0, 2, 1, 3, 4], axis) == 1
    assert nearsp.perception_flip_distance([0, 4, 1, 3, 2], axis, kmax=0) is None
    assert nearsp.is_single_caved([0, 4, 3, 1, 2], axis)


def test_reductions():
    gadget = nearsp.reduce_partition("scoring1mav", [1, 2, 3, 4])
    assert nearsp.oracle(gadget, oracle_caps=(64, 1 << 20, 64, 1 << 22)).yes
    assert nearsp.verify_partition([1, 2, 3, 4], gadget) == (True, True, True)
    sets = [(0, 1, 2), (1, 2, 3), (2, 4, 5), (3, 4, 5)]
    g = nearsp.reduce_x3c("ccdcswoon", 6, sets)
    assert nearsp.verify_x3c(6, sets, g) == (True, True, True)


def test_suite():
    assert "dodgson-distance" in nearsp.suite_names()
    r = nearsp.run_suite("dodgson-distance", seed=1)
    assert r["passed"] and r["instances"] == 500
