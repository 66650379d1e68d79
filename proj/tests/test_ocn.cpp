#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ocnet/normal_form.hpp"
#include "ocnet/ocn.hpp"

#include "fixtures.hpp"

using namespace ocnet;

TEST_CASE("interning is idempotent and transitions deduplicate") {
    Ocn net;
    CHECK(net.add_state("p") == 0);
    CHECK(net.add_state("q") == 1);
    CHECK(net.add_state("p") == 0);
    CHECK(net.add_action("a") == 0);
    CHECK(net.add_action("a") == 0);
    net.add_transition("p", "a", 1, "q");
    net.add_transition("p", "a", 1, "q");
    CHECK(net.transitions.size() == 1);
    net.add_transition("p", "a", 0, "q");
    CHECK(net.transitions.size() == 2);
    CHECK_THROWS_AS(net.add_transition("p", "a", 2, "q"), std::invalid_argument);
    CHECK_THROWS_AS(net.state_id("missing"), std::invalid_argument);
    CHECK(net.has_state("q"));
    CHECK_FALSE(net.has_action("b"));
}

TEST_CASE("steps respect the counter floor") {
    Ocn net = fx::drain_loop_net();
    Process q0{net.state_id("q"), 0};
    CHECK(step(net, q0, "a").empty());
    Process q2{net.state_id("q"), 2};
    auto succ = step(net, q2, "a");
    REQUIRE(succ.size() == 1);
    CHECK(succ[0].counter == 1);
    CHECK(succ[0].state == q2.state);
}

TEST_CASE("step deduplicates equal successors") {
    Ocn net;
    net.add_action("a");
    net.add_state("p");
    net.add_state("q");
    net.add_transition("p", "a", 0, "q");
    net.add_transition("p", "a", -1, "q");
    Process p1{0, 1};
    auto succ = step(net, p1, "a");
    REQUIRE(succ.size() == 2);
    CHECK(succ[0].counter == 0);  // sorted
    CHECK(succ[1].counter == 1);
    Process p0{0, 0};
    CHECK(step(net, p0, "a").size() == 1);
}

TEST_CASE("classification of the fixture nets") {
    NetClass ra = classify_net(fx::ramp_a());
    CHECK(ra.deterministic);
    CHECK_FALSE(ra.complete);
    NetClass rb = classify_net(fx::ramp_b());
    CHECK(rb.deterministic);
    CHECK(rb.complete);
    NetClass cyc = classify_net(fx::three_state_cycle_net());
    CHECK_FALSE(cyc.deterministic);  // q3 has two a-transitions
    CHECK(cyc.complete);
}

TEST_CASE("make_process validates state and counter") {
    Ocn net = fx::drain_loop_net();
    Process p = make_process(net, "q", 3);
    CHECK(p.counter == 3);
    CHECK_THROWS_AS(make_process(net, "nope", 0), std::invalid_argument);
    CHECK_THROWS_AS(make_process(net, "q", -1), std::invalid_argument);
}

TEST_CASE("eliminate_epsilon is the identity on silent-free nets") {
    Ocn net = fx::ramp_a();
    Ocn out = eliminate_epsilon(net);
    CHECK(out.states == net.states);
    CHECK(out.alphabet == net.alphabet);
    CHECK(out.transitions.size() == net.transitions.size());
}

TEST_CASE("a silent hop folds into the next labeled step") {
    Ocn net;
    net.add_action(kEpsilon);
    net.add_action("a");
    for (const char* s : {"p", "q", "r"}) net.add_state(s);
    net.add_transition("p", kEpsilon, -1, "q");
    net.add_transition("q", "a", 0, "r");
    Ocn out = eliminate_epsilon(net);
    CHECK_FALSE(out.has_action(kEpsilon));
    auto ts = out.outgoing(out.state_id("p"), out.action_id("a"));
    REQUIRE(ts.size() == 1);
    CHECK(ts[0].effect == -1);
    CHECK(out.state_name(ts[0].dst) == "r");
}

TEST_CASE("a climb past +1 spreads over a pending state") {
    Ocn net;
    net.add_action(kEpsilon);
    net.add_action("a");
    for (const char* s : {"p", "q", "r"}) net.add_state(s);
    net.add_transition("p", kEpsilon, +1, "q");
    net.add_transition("q", "a", +1, "r");
    net.add_transition("r", "a", 0, "r");
    Ocn out = eliminate_epsilon(net);
    auto first = out.outgoing(out.state_id("p"), out.action_id("a"));
    REQUIRE(first.size() == 1);
    CHECK(first[0].effect == 1);
    CHECK(out.state_name(first[0].dst) == "r+1");
    // The pending state owes one increment and pays it on r's self-loop.
    auto second = out.outgoing(first[0].dst, out.action_id("a"));
    REQUIRE(second.size() == 1);
    CHECK(second[0].effect == 1);
    CHECK(out.state_name(second[0].dst) == "r");
}

TEST_CASE("states on silent cycles become deadlocks") {
    Ocn net;
    net.add_action(kEpsilon);
    net.add_action("a");
    for (const char* s : {"p", "q", "r"}) net.add_state(s);
    net.add_transition("p", kEpsilon, 0, "q");
    net.add_transition("q", kEpsilon, 0, "p");
    net.add_transition("p", "a", 0, "r");
    Ocn out = eliminate_epsilon(net);
    CHECK(out.outgoing(out.state_id("p"), out.action_id("a")).empty());
    CHECK(out.outgoing(out.state_id("q"), out.action_id("a")).empty());
}

TEST_CASE("a silent state drops its own labeled transitions") {
    Ocn net;
    net.add_action(kEpsilon);
    net.add_action("a");
    net.add_state("p");
    net.add_state("q");
    net.add_transition("p", kEpsilon, 0, "q");
    net.add_transition("p", "a", 0, "p");
    net.add_transition("q", "a", 0, "q");
    Ocn out = eliminate_epsilon(net);
    auto ts = out.outgoing(out.state_id("p"), out.action_id("a"));
    REQUIRE(ts.size() == 1);
    CHECK(out.state_name(ts[0].dst) == "q");
}

TEST_CASE("normalize_pair keeps deterministic labels and completes the right net") {
    Ocn a = fx::zero_loop_net();
    Ocn b = fx::drain_loop_net();
    NormalizedPair np = normalize_pair(a, b);
    CHECK(np.label_map.at("a") == "a");
    CHECK(classify_net(np.a).deterministic);
    NetClass cb = classify_net(np.b);
    CHECK(cb.deterministic);
    CHECK(cb.complete);
    CHECK(np.a.has_action(kDollar));
    CHECK(np.b.has_state("L"));
    // $ self-loops on every original state.
    for (StateId s = 0; s < np.a.states.size(); ++s) {
        auto ts = np.a.outgoing(s, np.a.action_id(kDollar));
        REQUIRE(ts.size() == 1);
        CHECK(ts[0].dst == s);
        CHECK(ts[0].effect == 0);
    }
}

TEST_CASE("normalize_pair relabels a nondeterministic left net per transition") {
    Ocn a;
    a.add_action("a");
    a.add_state("p");
    a.add_state("q");
    a.add_transition("p", "a", 0, "p");
    a.add_transition("p", "a", 1, "q");
    Ocn b = fx::drain_loop_net();
    NormalizedPair np = normalize_pair(a, b);
    CHECK(np.a.has_action("t0"));
    CHECK(np.a.has_action("t1"));
    CHECK(np.label_map.at("t0") == "a");
    CHECK(np.label_map.at("t1") == "a");
    CHECK(classify_net(np.a).deterministic);
    // b's lone a-transition is copied under both fresh labels.
    StateId qb = np.b.state_id("q");
    CHECK(np.b.outgoing(qb, np.b.action_id("t0")).size() == 1);
    CHECK(np.b.outgoing(qb, np.b.action_id("t1")).size() == 1);
}

TEST_CASE("normalize_pair rejects eps and reserved labels") {
    Ocn a = fx::zero_loop_net();
    Ocn eps;
    eps.add_action(kEpsilon);
    eps.add_state("p");
    CHECK_THROWS_AS(normalize_pair(eps, a), std::invalid_argument);
    Ocn dollar;
    dollar.add_action(kDollar);
    dollar.add_state("p");
    CHECK_THROWS_AS(normalize_pair(a, dollar), std::invalid_argument);
}

TEST_CASE("right-net labels the left never uses are dropped") {
    Ocn a = fx::zero_loop_net();
    Ocn b;
    b.add_action("a");
    b.add_action("b");
    b.add_state("q");
    b.add_transition("q", "a", -1, "q");
    b.add_transition("q", "b", +1, "q");
    NormalizedPair np = normalize_pair(a, b);
    CHECK_FALSE(np.b.has_action("b"));
}
