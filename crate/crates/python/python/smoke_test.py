"""Smoke test for the unsharp extension module.

Run after `pip install --no-build-isolation -e crates/python`:

    python crates/python/python/smoke_test.py
"""

import json
import pathlib

import unsharp

FIXTURES = pathlib.Path(__file__).resolve().parents[3] / "fixtures"


def load(name):
    return unsharp.Poset.from_json((FIXTURES / name).read_text())


def main():
    p1 = load("p1.json")
    assert len(p1) == 8
    assert [p1.neg(x) for x in p1.elements] == [
        ["1"], ["f"], ["a", "c"], ["d"], ["c"], ["0"], ["a"], ["0"],
    ]
    assert p1.neg("ac") == ["b"]
    assert p1.table("neg").splitlines()[1] == "x⁰: 1 f ac d c 0 a 0"
    assert all(passed for _, passed, _ in p1.check_laws())

    p2 = load("p2.json")
    [(law, passed, witness)] = p2.check_laws("neg-antitone-leq")
    assert law == "neg-antitone-leq" and not passed and witness

    p3 = load("p3.json")
    assert p3.imp("d", "e") == ["c", "e"]
    assert p3.conj("d", "e") == ["a", "b"]

    p4 = load("p4.json")
    holds, violations = p4.verify_deductive_system("d,e,1")
    assert holds and not violations
    systems = p4.deductive_systems()
    assert [["1"]] in systems and [["d"], ["e"], ["1"]] in systems
    assert ("a", "c") in p4.theta("d,e,1")

    diamond = unsharp.Poset(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
    assert diamond.leq("0", "1") and not diamond.leq("a", "b")
    assert json.loads(diamond.to_json())["elements"] == ["0", "a", "b", "1"]
    assert "rankdir=BT" in diamond.to_dot()

    assert [len(unsharp.all_bounded_posets(n)) for n in (1, 2, 3)] == [1, 2, 6]
    assert unsharp.random_bounded_poset(9, 0.3, 42).to_json() == unsharp.random_bounded_poset(9, 0.3, 42).to_json()
    checked, failures = unsharp.sweep_all(4)
    assert (checked, failures) == (36, 0)

    try:
        unsharp.Poset(["0", "1"], [("0", "x")])
    except ValueError:
        pass
    else:
        raise AssertionError("unknown label accepted")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
