#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "ocnet/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "ocnet/universality.hpp"

using namespace ocnet;

namespace {

IcmConfig cfg(StateId s, std::vector<std::int64_t> v) { return IcmConfig{s, std::move(v)}; }

std::vector<Transition> on_action(const Ocn& net, const std::string& act) {
    std::vector<Transition> out;
    ActionId a = net.action_id(act);
    for (const Transition& t : net.transitions)
        if (t.action == a) out.push_back(t);
    return out;
}

}  // namespace

TEST_CASE("successor enumeration honors the dec and ifz guards") {
    Icm m = fx::inc_dec_ifz_machine();

    // q0 can only increment counter 1.
    auto s0 = icm_successors(m, cfg(0, {0, 0}), false);
    REQUIRE(s0.size() == 1);
    CHECK(s0[0] == cfg(1, {1, 0}));

    // q1 wants to decrement counter 2, which sits at zero: stuck.
    CHECK(icm_successors(m, cfg(1, {1, 0}), false).empty());
    auto s1 = icm_successors(m, cfg(1, {1, 1}), false);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0] == cfg(2, {1, 0}));

    // q2 zero-tests counter 2.
    CHECK(icm_successors(m, cfg(2, {1, 1}), false).empty());
    auto s2 = icm_successors(m, cfg(2, {1, 0}), false);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0] == cfg(0, {1, 0}));

    CHECK_THROWS_AS(icm_successors(m, cfg(0, {0}), false), std::invalid_argument);
}

TEST_CASE("error successors add one spontaneous increment per counter") {
    Icm m = fx::inc_dec_ifz_machine();
    auto s = icm_successors(m, cfg(0, {0, 0}), true);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == cfg(1, {1, 0}));  // deliberate move first
    CHECK(s[1] == cfg(0, {1, 0}));
    CHECK(s[2] == cfg(0, {0, 1}));

    // A deliberate self-increment coincides with the error on the same
    // counter; the duplicate config is reported once.
    Icm loop;
    loop.counters = 1;
    loop.add_state("s");
    loop.add_transition("s", IcmOp::inc, 1, "s");
    auto t = icm_successors(loop, cfg(0, {0}), true);
    REQUIRE(t.size() == 1);
    CHECK(t[0] == cfg(0, {1}));
}

TEST_CASE("bounded reachability finds the least-error shortest run") {
    Icm m = fx::inc_dec_ifz_machine();
    auto run = icm_reachable_bounded(m, 12, 12);
    REQUIRE(run.has_value());
    REQUIRE(run->steps.size() == 3);

    // inc1 brings counter 1 up, a spontaneous error feeds counter 2, and
    // dec2 lands in the final state.
    CHECK_FALSE(run->steps[0].is_error);
    CHECK(run->steps[0].transition == 0);
    CHECK(run->steps[0].after == cfg(1, {1, 0}));

    CHECK(run->steps[1].is_error);
    CHECK(run->steps[1].counter == 2);
    CHECK(run->steps[1].after == cfg(1, {1, 1}));

    CHECK_FALSE(run->steps[2].is_error);
    CHECK(run->steps[2].transition == 1);
    CHECK(run->steps[2].counter == 2);
    CHECK(run->steps[2].after == cfg(2, {1, 0}));
}

TEST_CASE("bounded reachability respects its caps") {
    Icm m = fx::inc_dec_ifz_machine();
    CHECK(icm_reachable_bounded(m, 1, 12).has_value());   // run stays within 1
    CHECK(icm_reachable_bounded(m, 12, 3).has_value());   // exactly 3 steps
    CHECK_FALSE(icm_reachable_bounded(m, 12, 2).has_value());
    CHECK_THROWS_AS(icm_reachable_bounded(m, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(icm_reachable_bounded(m, 5, 0), std::invalid_argument);

    // Without the decrement the final state has no incoming transition.
    CHECK_FALSE(icm_reachable_bounded(fx::inc_ifz_machine(), 12, 12).has_value());

    Icm trivial;
    trivial.counters = 1;
    trivial.add_state("s");
    CHECK(icm_reachable_bounded(trivial, 1, 1)->steps.empty());
}

TEST_CASE("obstacle and ignore helpers") {
    Ocn net = fx::zero_loop_net();
    CHECK_THROWS_AS(make_obstacle(net, "p", {"a"}), std::invalid_argument);
    CHECK(make_obstacle(net, "p", {}).transitions.size() == net.transitions.size());

    net.add_state("U");
    Ocn blocked = make_obstacle(net, "p", {"a"});
    Transition to_u{blocked.state_id("p"), blocked.action_id("a"), 0, blocked.state_id("U")};
    CHECK(std::count(blocked.transitions.begin(), blocked.transitions.end(), to_u) == 1);

    Ocn lax = make_ignore(fx::drain_loop_net(), "q", {"b"});
    Transition self{lax.state_id("q"), lax.action_id("b"), 0, lax.state_id("q")};
    CHECK(std::count(lax.transitions.begin(), lax.transitions.end(), self) == 1);
}

TEST_CASE("machine-to-net construction lays out the expected skeleton") {
    ReductionOutput out = icm_to_ocn(fx::inc_dec_ifz_machine());
    const Ocn& net = out.net;

    CHECK(net.name == "inc-dec-ifz-net");
    CHECK(net.states == std::vector<std::string>{"Init", "U", "Z", "q0", "q1", "q2", "C1", "C2"});
    CHECK(net.alphabet ==
          std::vector<std::string>{"#", "$", "t1", "t2", "t3", "tau1", "tau2"});
    CHECK(net.transitions.size() == 56);

    CHECK(out.initial.state == net.state_id("Init"));
    CHECK(out.initial.counter == 0);

    REQUIRE(out.dictionary.size() == 7);
    CHECK(out.dictionary.at("#").kind == ActionMeaning::run_start);
    CHECK(out.dictionary.at("$").kind == ActionMeaning::run_end);
    CHECK(out.dictionary.at("t1").kind == ActionMeaning::transition);
    CHECK(out.dictionary.at("t1").index == 0);
    CHECK(out.dictionary.at("t3").index == 2);
    CHECK(out.dictionary.at("tau1").kind == ActionMeaning::error);
    CHECK(out.dictionary.at("tau1").index == 1);
    CHECK(out.dictionary.at("tau2").index == 2);
}

TEST_CASE("machine-to-net rules per action") {
    ReductionOutput out = icm_to_ocn(fx::inc_dec_ifz_machine());
    const Ocn& net = out.net;
    auto id = [&](const std::string& s) { return net.state_id(s); };

    // '#' hatches the run configuration from Init; silence elsewhere means
    // dropping out, so only Init moves and the rest object.
    auto hash = on_action(net, "#");
    CHECK(hash.size() == 11);
    auto init_hash = net.outgoing(id("Init"), net.action_id("#"));
    REQUIRE(init_hash.size() == 4);
    for (const Transition& t : init_hash) CHECK(t.effect == 0);
    CHECK(init_hash[0].dst == id("q0"));  // the machine's initial state

    // '$' passes only where the macrostate should die: the final state and
    // the counter carriers have no rule at all.
    auto dollar = on_action(net, "$");
    CHECK(dollar.size() == 4);
    CHECK(net.outgoing(id("q2"), net.action_id("$")).empty());
    CHECK(net.outgoing(id("Z"), net.action_id("$")).empty());
    CHECK(net.outgoing(id("q1"), net.action_id("$"))[0].dst == id("U"));

    // t2 announces dec2: C2 drains and Z reseeds it at zero.
    auto z_t2 = net.outgoing(id("Z"), net.action_id("t2"));
    REQUIRE(z_t2.size() == 1);
    CHECK(z_t2[0].dst == id("C2"));
    CHECK(z_t2[0].effect == 0);
    auto c2_t2 = net.outgoing(id("C2"), net.action_id("t2"));
    REQUIRE(c2_t2.size() == 1);
    CHECK(c2_t2[0].effect == -1);

    // t3 announces ifz2: a positive C2 can only move to U.
    auto c2_t3 = net.outgoing(id("C2"), net.action_id("t3"));
    REQUIRE(c2_t3.size() == 2);
    CHECK(((c2_t3[0].dst == id("U") && c2_t3[0].effect == -1) ||
           (c2_t3[1].dst == id("U") && c2_t3[1].effect == -1)));

    // tau2 lets C2 grow while everyone else shrugs; Init objects.
    auto c2_tau2 = net.outgoing(id("C2"), net.action_id("tau2"));
    REQUIRE(c2_tau2.size() == 1);
    CHECK(c2_tau2[0].effect == +1);
    CHECK(net.outgoing(id("q1"), net.action_id("tau2"))[0].dst == id("q1"));
    CHECK(net.outgoing(id("Init"), net.action_id("tau2"))[0].dst == id("U"));

    // U is a sink for the whole alphabet.
    for (ActionId a = 0; a < net.alphabet.size(); ++a) {
        auto u = net.outgoing(id("U"), a);
        REQUIRE(u.size() == 1);
        CHECK(u[0].dst == id("U"));
        CHECK(u[0].effect == 0);
    }
}

TEST_CASE("machine-to-net rejects reserved state names") {
    for (const char* bad : {"Init", "U", "Z", "C2"}) {
        Icm m;
        m.counters = 2;
        m.add_state(bad);
        CHECK_THROWS_AS(icm_to_ocn(m), std::invalid_argument);
    }
}

TEST_CASE("reduced net is non-universal exactly when the machine reaches its goal") {
    ReductionOutput reach = icm_to_ocn(fx::inc_dec_ifz_machine());
    auto res = find_nonuniversality_witness(reach.net, reach.initial,
                                            {.budget = 14, .shortest = true});
    REQUIRE(res.status == UniversalityStatus::non_universal);
    CHECK(res.word == fx::word({"#", "t1", "t2", "$"}));

    ReductionOutput stuck = icm_to_ocn(fx::inc_ifz_machine());
    auto res2 = find_nonuniversality_witness(stuck.net, stuck.initial,
                                             {.budget = 14, .shortest = true});
    CHECK(res2.status != UniversalityStatus::non_universal);
}

TEST_CASE("witness decoding replays the announced run") {
    ReductionOutput out = icm_to_ocn(fx::inc_dec_ifz_machine());

    IcmRun run = decode_witness(out, fx::word({"#", "t1", "t2", "$"}));
    REQUIRE(run.steps.size() == 3);
    CHECK_FALSE(run.steps[0].is_error);
    CHECK(run.steps[0].transition == 0);
    // dec2 fires on a zero counter: the reduction absorbs it as an
    // implicit error increment right before the decrement.
    CHECK(run.steps[1].is_error);
    CHECK(run.steps[1].counter == 2);
    CHECK(run.steps[1].after == cfg(out.machine.state_id("q1"), {1, 1}));
    CHECK(run.steps[2].after == cfg(out.machine.state_id("q2"), {1, 0}));

    // An explicit error letter decodes to the same run.
    IcmRun run2 = decode_witness(out, fx::word({"#", "t1", "tau2", "t2", "$"}));
    REQUIRE(run2.steps.size() == 3);
    CHECK(run2.steps[1].is_error);
    CHECK(run2.steps[2].after == cfg(out.machine.state_id("q2"), {1, 0}));

    // A doubled end marker is tolerated.
    CHECK(decode_witness(out, fx::word({"#", "t1", "t2", "$", "$"})).steps.size() == 3);
}

TEST_CASE("witness decoding rejects malformed words") {
    ReductionOutput out = icm_to_ocn(fx::inc_dec_ifz_machine());
    auto bad = [&](std::initializer_list<const char*> w) {
        CHECK_THROWS_AS(decode_witness(out, fx::word(w)), std::invalid_argument);
    };
    bad({"t1", "t2", "$"});             // missing start marker
    bad({"#", "t1", "t2"});             // missing end marker
    bad({"#", "$"});                    // empty run never reaches q2
    bad({"#", "t1", "zz", "$"});        // unknown letter
    bad({"#", "t1", "#", "t2", "$"});   // marker inside the body
    bad({"#", "t2", "$"});              // t2 fires from q1, not q0
    bad({"#", "t1", "t2", "tau2", "t3", "$"});  // zero-test on positive counter
}

TEST_CASE("counting gadget shape and start macrostate") {
    auto [net, start] = counting_gadget(1, 1, 2);
    CHECK(net.states == std::vector<std::string>{"A", "F0", "F1", "U"});
    CHECK(net.alphabet == std::vector<std::string>{"0", "1", "e"});

    REQUIRE(start.v.size() == 4);
    CHECK(start.v[net.state_id("A")] == 1);
    CHECK(start.v[net.state_id("F1")] == 2);
    CHECK(start.v[net.state_id("F0")] == kBottom);
    CHECK(start.v[net.state_id("U")] == kBottom);

    // A grows on '0', seeds F0 on '1' (staying alive), and dies on 'e'.
    auto a0 = net.outgoing(net.state_id("A"), net.action_id("0"));
    REQUIRE(a0.size() == 1);
    CHECK(a0[0].effect == +1);
    CHECK(net.outgoing(net.state_id("A"), net.action_id("1")).size() == 2);
    CHECK(net.outgoing(net.state_id("A"), net.action_id("e")).empty());

    // F1 drains on '1', tolerates '0', objects to 'e'.
    CHECK(net.outgoing(net.state_id("F1"), net.action_id("1"))[0].effect == -1);
    CHECK(net.outgoing(net.state_id("F1"), net.action_id("0"))[0].dst == net.state_id("F1"));
    CHECK(net.outgoing(net.state_id("F1"), net.action_id("e"))[0].dst == net.state_id("U"));

    CHECK_THROWS_AS(counting_gadget(1, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(counting_gadget(1, 0, -2), std::invalid_argument);
}

TEST_CASE("counting gadget witnesses double with each countdown unit") {
    UniversalityOptions opt{.budget = 20, .shortest = true};
    std::vector<std::size_t> expected{4, 9, 18};
    for (std::int64_t n = 0; n <= 2; ++n) {
        auto [net, start] = counting_gadget(1, 1, n);
        auto res = find_nonuniversality_witness(net, start, opt);
        REQUIRE(res.status == UniversalityStatus::non_universal);
        CHECK(res.word.size() == expected[static_cast<std::size_t>(n)]);
        CHECK(res.word.back() == "e");
    }

    auto [net0, start0] = counting_gadget(1, 1, 0);
    auto res0 = find_nonuniversality_witness(net0, start0, opt);
    CHECK(res0.word == fx::word({"1", "0", "0", "e"}));
}

TEST_CASE("fast-growing hierarchy evaluation") {
    CHECK(fast_growing(0, BigInt(3)) == BigInt(4));
    CHECK(fast_growing(1, BigInt(2)) == BigInt(5));
    CHECK(fast_growing(2, BigInt(2)) == BigInt(23));
    CHECK(fast_growing(2, BigInt(5)) == BigInt(383));

    // Level 1 iterated n times sends x to 2^n (x+1) - 1.
    BigInt v(3);
    for (int i = 0; i < 5; ++i) v = fast_growing(1, v);
    CHECK(v == BigInt(32 * 4 - 1));

    CHECK(fast_growing_omega(BigInt(2)) == BigInt(23));
}

TEST_CASE("fast-growing hierarchy overflow policing") {
    CHECK(fast_growing(0, BigInt(999'999)) == BigInt(1'000'000));
    CHECK_THROWS_AS(fast_growing(0, BigInt(1'000'000)), std::overflow_error);
    CHECK_THROWS_AS(fast_growing(3, BigInt(3)), std::overflow_error);
    CHECK_THROWS_AS(fast_growing(2, BigInt(2), BigInt(22)), std::overflow_error);
    CHECK(fast_growing(2, BigInt(2), BigInt(23)) == BigInt(23));
    CHECK_THROWS_AS(fast_growing(1, BigInt(-1)), std::invalid_argument);
    CHECK_THROWS_AS(fast_growing_omega(BigInt(-2)), std::invalid_argument);
    CHECK_THROWS_AS(fast_growing_omega(BigInt("36893488147419103232")),
                    std::overflow_error);
}
