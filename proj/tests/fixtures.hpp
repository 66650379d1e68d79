#pragma once

// Small nets and machines shared across the test binaries. Everything here
// is built through the public API so the tests double as construction
// checks.

#include <string>
#include <vector>

#include "ocnet/ocn.hpp"
#include "ocnet/reductions.hpp"

namespace fx {

/// p -(a,0)-> p. Deterministic and complete; every word is a trace.
inline ocnet::Ocn zero_loop_net() {
    ocnet::Ocn net;
    net.name = "zero-loop";
    net.add_action("a");
    net.add_state("p");
    net.add_transition("p", "a", 0, "p");
    return net;
}

/// state -(a,-1)-> state. Deterministic and complete; T(state:n) is the
/// words of length at most n.
inline ocnet::Ocn drain_loop_net(const std::string& state = "q") {
    ocnet::Ocn net;
    net.name = "drain-loop";
    net.add_action("a");
    net.add_state(state);
    net.add_transition(state, "a", -1, state);
    return net;
}

/// Three states on one letter: q2 feeds q1, q1 forwards to q3, q3 drains
/// into q2 and pumps itself. Declaration order q1, q2, q3.
inline ocnet::Ocn three_state_cycle_net() {
    ocnet::Ocn net;
    net.name = "cycle3";
    net.add_action("a");
    net.add_state("q1");
    net.add_state("q2");
    net.add_state("q3");
    net.add_transition("q2", "a", +1, "q1");
    net.add_transition("q1", "a", 0, "q3");
    net.add_transition("q3", "a", -1, "q2");
    net.add_transition("q3", "a", +1, "q3");
    return net;
}

/// Routes every uncovered (state, action) of `net` to a fresh draining sink,
/// making the net complete without changing its traces from live states
/// beyond the added escape steps.
inline ocnet::Ocn complete_with_sink(ocnet::Ocn net, const std::string& sink = "L") {
    ocnet::StateId l = net.add_state(sink);
    for (ocnet::ActionId x = 0; x < net.alphabet.size(); ++x)
        net.add_transition(l, x, -1, l);
    for (ocnet::StateId s = 0; s < net.states.size(); ++s)
        for (ocnet::ActionId x = 0; x < net.alphabet.size(); ++x)
            if (net.outgoing(s, x).empty()) net.add_transition(s, x, 0, l);
    return net;
}

/// Left half of the ramp pair: two counter-raising loops (t0 t1 t2 gains 3,
/// t3 t4 gains 2) rooted at p0, a neutral hop t5 into the drain state p4,
/// where t6 burns the counter and t7 idles.
inline ocnet::Ocn ramp_a() {
    ocnet::Ocn a;
    a.name = "ramp-a";
    for (int i = 0; i < 8; ++i) a.add_action("t" + std::to_string(i));
    for (const char* s : {"p0", "p1", "p2", "p3", "p4"}) a.add_state(s);
    a.add_transition("p0", "t0", +1, "p1");
    a.add_transition("p1", "t1", +1, "p2");
    a.add_transition("p2", "t2", +1, "p0");
    a.add_transition("p0", "t3", +1, "p3");
    a.add_transition("p3", "t4", +1, "p0");
    a.add_transition("p0", "t5", 0, "p4");
    a.add_transition("p4", "t6", -1, "p4");
    a.add_transition("p4", "t7", 0, "p4");
    return a;
}

/// Right half: both loops gain only 1 here, and t7 needs counter weight in
/// the drain state, so a left run that out-climbs the right one can play t7
/// once the right counter is exhausted. Completed with a draining sink.
inline ocnet::Ocn ramp_b() {
    ocnet::Ocn b;
    b.name = "ramp-b";
    for (int i = 0; i < 8; ++i) b.add_action("t" + std::to_string(i));
    for (const char* s : {"q0", "q1", "q2", "q3", "q4"}) b.add_state(s);
    b.add_transition("q0", "t0", +1, "q1");
    b.add_transition("q1", "t1", 0, "q2");
    b.add_transition("q2", "t2", 0, "q0");
    b.add_transition("q0", "t3", +1, "q3");
    b.add_transition("q3", "t4", 0, "q0");
    b.add_transition("q0", "t5", 0, "q4");
    b.add_transition("q4", "t6", -1, "q4");
    b.add_transition("q4", "t7", -1, "q4");
    return complete_with_sink(b);
}

/// (t0 t1 t2)(t3 t4)^9 t5 (t6)^20: 42 letters. From (p0:0, q0:10) the left
/// counter runs 0,3,21,21,1 and the right one 10,11,20,20,0 over the four
/// segments, leaving t7 enabled on the left and blocked on the right.
inline std::vector<std::string> ramp_witness_word() {
    std::vector<std::string> w{"t0", "t1", "t2"};
    for (int i = 0; i < 9; ++i) {
        w.push_back("t3");
        w.push_back("t4");
    }
    w.push_back("t5");
    for (int i = 0; i < 20; ++i) w.push_back("t6");
    return w;
}

/// Two-counter machine: q0 -inc1-> q1 -dec2-> q2 -ifz2-> q0, final q2.
/// The final state is reachable only by decrementing counter 2, which never
/// gets a deliberate increment, so every reaching run needs an error.
inline ocnet::Icm inc_dec_ifz_machine() {
    ocnet::Icm m;
    m.name = "inc-dec-ifz";
    m.counters = 2;
    for (const char* s : {"q0", "q1", "q2"}) m.add_state(s);
    m.initial = m.state_id("q0");
    m.final_state = m.state_id("q2");
    m.add_transition("q0", ocnet::IcmOp::inc, 1, "q1");
    m.add_transition("q1", ocnet::IcmOp::dec, 2, "q2");
    m.add_transition("q2", ocnet::IcmOp::ifz, 2, "q0");
    return m;
}

/// Same machine with the decrement removed: the final state loses its only
/// incoming transition and becomes unreachable, errors or not.
inline ocnet::Icm inc_ifz_machine() {
    ocnet::Icm m;
    m.name = "inc-ifz";
    m.counters = 2;
    for (const char* s : {"q0", "q1", "q2"}) m.add_state(s);
    m.initial = m.state_id("q0");
    m.final_state = m.state_id("q2");
    m.add_transition("q0", ocnet::IcmOp::inc, 1, "q1");
    m.add_transition("q2", ocnet::IcmOp::ifz, 2, "q0");
    return m;
}

inline std::vector<std::string> word(std::initializer_list<const char*> letters) {
    return {letters.begin(), letters.end()};
}

}  // namespace fx
