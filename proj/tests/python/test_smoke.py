import pytest

import ocnet

LOOPY = """\
net loopy
alphabet a
state p
trans p a 0 p
"""

DRAIN = """\
net drain
alphabet a
state q
trans q a -1 q
"""

CYCLE = """\
net cycle
alphabet a
state q1 q2 q3
trans q2 a 1 q1
trans q1 a 0 q3
trans q3 a -1 q2
trans q3 a 1 q3
"""

MACHINE = """\
icm paper
counters 2
state q0 q1 q2
init q0
final q2
trans q0 inc 1 q1
trans q1 dec 2 q2
trans q2 ifz 2 q0
"""


def test_parse_and_roundtrip():
    net = ocnet.parse_net(DRAIN)
    assert net.name == "drain"
    assert net.states == ["q"]
    assert net.alphabet == ["a"]
    assert net.transitions() == [("q", "a", -1, "q")]
    assert net.deterministic and net.complete
    assert str(ocnet.parse_net(str(net))) == str(net)


def test_parse_error_is_a_value_error():
    assert issubclass(ocnet.ParseError, ValueError)
    with pytest.raises(ocnet.ParseError, match="line 2"):
        ocnet.parse_net("net x\nbogus y\n")


def test_inclusion():
    a = ocnet.parse_net(LOOPY)
    b = ocnet.parse_net(DRAIN)
    r = ocnet.include(a, b, ("p", 0), ("q", 3))
    assert r["verdict"] == "not_included"
    assert r["witness"] == ["a", "a", "a"]

    drain = ocnet.parse_net(DRAIN)
    r = ocnet.include(drain, drain, ("q", 2), ("q", 5))
    assert r["verdict"] == "included"
    assert r["certified"] is False

    status, word = ocnet.inclusion_oracle(a, b, ("p", 0), ("q", 3), 10)
    assert (status, word) == ("witness", ["a", "a", "a"])


def test_universality():
    drain = ocnet.parse_net(DRAIN)
    r = ocnet.universal(drain, [("q", 2)], budget=10, shortest=True)
    assert r["verdict"] == "non_universal"
    assert r["witness"] == ["a", "a", "a"]

    status, word = ocnet.universality_oracle(drain, ("q", 2), 5)
    assert (status, word) == ("witness", ["a", "a", "a"])

    loopy = ocnet.parse_net(LOOPY)
    assert ocnet.universal(loopy, [("p", 0)], budget=10)["verdict"] == "universal"

    with pytest.raises(ValueError):
        ocnet.universal(drain, [("missing", 0)])


def test_traces():
    drain = ocnet.parse_net(DRAIN)
    assert ocnet.traces(drain, [("q", 2)], 5) == {(), ("a",), ("a", "a")}


def test_macro_step():
    cycle = ocnet.parse_net(CYCLE)
    m = {"q3": 4}
    for _ in range(3):
        m = ocnet.macro_step(cycle, m, "a")
    assert m == {"q1": 5, "q2": 5, "q3": 7}
    assert ocnet.macro_step(cycle, {}, "a") == {}


def test_machine_reduction_and_decode():
    machine = ocnet.parse_machine(MACHINE)
    assert machine.states == ["q0", "q1", "q2"]
    assert (machine.initial, machine.final) == ("q0", "q2")
    assert str(ocnet.parse_machine(str(machine))) == str(machine)

    red = ocnet.machine_to_net(machine)
    assert red.initial == ("Init", 0)
    assert red.actions["#"] == ("run_start", 0)
    assert red.actions["tau2"] == ("error", 2)

    r = ocnet.universal(red.net, [red.initial], budget=14, shortest=True)
    assert r["verdict"] == "non_universal"
    assert r["witness"] == ["#", "t1", "t2", "$"]

    steps = ocnet.decode_witness(red, r["witness"])
    assert len(steps) == 3
    assert steps[-1]["state"] == "q2"
    assert any(s["error"] and s["counter"] == 2 for s in steps)


def test_counting_gadget():
    net, start = ocnet.counting_gadget(1, 1, 1)
    assert start == {"A": 1, "F1": 1}
    r = ocnet.universal(net, sorted(start.items()), budget=12, shortest=True)
    assert r["verdict"] == "non_universal"
    assert len(r["witness"]) == 9
    assert r["witness"][-1] == "e"


def test_fast_growing():
    assert ocnet.fast_growing(2, 2) == 23
    assert ocnet.fast_growing(0, 10**5) == 10**5 + 1
    assert ocnet.fast_growing_omega(2) == 23
    assert ocnet.fast_growing(2, 10, cap=10**5) == 2**11 * 11 - 1
    with pytest.raises(OverflowError):
        ocnet.fast_growing(3, 3)


def test_weighted_inequality():
    r = ocnet.weighted_inequality(5, 3, 2, 7, 1, 4)
    assert r["holds"] is True
    assert r["steps"] == 5
    assert r["max_scratchpad"] == 3

    big = 2**100
    assert ocnet.weighted_inequality(big, big, 0, big, big, 1)["holds"] is False
    assert ocnet.weighted_inequality(big, big, 1, big, big, 0)["holds"] is True

    with pytest.raises(ValueError):
        ocnet.weighted_inequality(-1, 0, 0, 0, 0, 0)


def test_bound_table():
    t = ocnet.bound_table(1)
    assert (t["f0"], t["f1"], t["c"]) == (9, 27, 1637019)
    assert ocnet.bound_table(2)["f0"] == 25


def test_normalize_pair():
    a = ocnet.parse_net(LOOPY)
    b = ocnet.parse_net(DRAIN)
    a2, b2 = ocnet.normalize_pair(a, b)
    assert a2.alphabet == b2.alphabet
    assert b2.complete


def test_random_generators_are_reproducible():
    assert str(ocnet.rand_net(7)) == str(ocnet.rand_net(7))
    assert ocnet.rand_net(7).name == "rand7"
    assert ocnet.rand_machine(11).name == "randicm11"
