#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ocnet/difftest.hpp"
#include "ocnet/oracles.hpp"
#include "ocnet/product.hpp"

#include "fixtures.hpp"

using namespace ocnet;

namespace {

Path lift(const ProductGraph& g, NodeId start, const std::vector<std::string>& word) {
    auto p = lift_word(g, start, word);
    REQUIRE(p.has_value());
    return *p;
}

ProductGraph ramp_product() { return build_product(fx::ramp_a(), fx::ramp_b()); }

}  // namespace

TEST_CASE("product nodes cover the full state-pair grid") {
    ProductGraph g = ramp_product();
    CHECK(g.node_count() == 5 * 6);
    NodeId v = g.node_id(3, 4);
    auto [sa, sb] = g.node_states(v);
    CHECK(sa == 3);
    CHECK(sb == 4);
    CHECK(g.node_name(v) == "(p3,q4)");
}

TEST_CASE("product rejects mismatched alphabets") {
    Ocn a = fx::zero_loop_net();
    Ocn b;
    b.add_action("b");
    b.add_state("q");
    b.add_transition("q", "b", 0, "q");
    CHECK_THROWS_AS(build_product(a, b), std::invalid_argument);
}

TEST_CASE("every product edge pairs synchronized transitions") {
    ProductGraph g = ramp_product();
    for (const auto& e : g.edges) {
        auto [sa, sb] = g.node_states(e.src);
        auto [da, db] = g.node_states(e.dst);
        bool found_a = false, found_b = false;
        for (const auto& t : g.a.outgoing(sa, e.action))
            found_a |= (t.dst == da && t.effect == e.effect_a);
        for (const auto& t : g.b.outgoing(sb, e.action))
            found_b |= (t.dst == db && t.effect == e.effect_b);
        CHECK(found_a);
        CHECK(found_b);
    }
}

TEST_CASE("path aggregates track prefix minima") {
    ProductGraph g = ramp_product();
    Path w = lift(g, g.node_id(0, 0), fx::ramp_witness_word());
    CHECK(w.size() == 42);
    CHECK(w.effect_a == 1);    // 3 + 18 + 0 - 20
    CHECK(w.effect_b == -10);  // 1 + 9 + 0 - 20
    CHECK(w.guard_a == 0);
    CHECK(w.guard_b == 10);
    CHECK(w.source() == g.node_id(0, 0));
    CHECK(w.target() == g.node_id(4, 4));
}

TEST_CASE("make_path rejects edges that do not chain") {
    ProductGraph g = ramp_product();
    Path w = lift(g, g.node_id(0, 0), fx::ramp_witness_word());
    std::vector<ProductEdge> bad{w.edges[0], w.edges[5]};
    CHECK_THROWS_AS(make_path(bad), std::logic_error);
}

TEST_CASE("concat and repeat agree with recomputing from scratch") {
    ProductGraph g = ramp_product();
    Path w = lift(g, g.node_id(0, 0), fx::ramp_witness_word());
    for (std::size_t cut : {0u, 1u, 3u, 21u, 22u, 42u}) {
        Path x = prefix(w, cut);
        Path y = make_path({w.edges.begin() + cut, w.edges.end()});
        Path joined = concat(x, y);
        CHECK(joined.edges == w.edges);
        CHECK(joined.effect_a == w.effect_a);
        CHECK(joined.effect_b == w.effect_b);
        CHECK(joined.guard_a == w.guard_a);
        CHECK(joined.guard_b == w.guard_b);
    }
    Path cycle = lift(g, g.node_id(0, 0), fx::word({"t3", "t4"}));
    Path r5 = repeat(cycle, 5);
    std::vector<ProductEdge> edges;
    for (int i = 0; i < 5; ++i)
        edges.insert(edges.end(), cycle.edges.begin(), cycle.edges.end());
    Path direct = make_path(edges);
    CHECK(r5.edges == direct.edges);
    CHECK(r5.effect_a == direct.effect_a);
    CHECK(r5.guard_b == direct.guard_b);
    CHECK(repeat(cycle, 0).empty());
    CHECK_THROWS_AS(repeat(prefix(w, 1), 2), std::logic_error);
}

TEST_CASE("repeat of a draining loop accumulates its guard") {
    ProductGraph g = ramp_product();
    Path drop = lift(g, g.node_id(4, 4), fx::word({"t6"}));
    CHECK(drop.guard_a == 1);
    Path d7 = repeat(drop, 7);
    CHECK(d7.guard_a == 7);
    CHECK(d7.guard_b == 7);
    CHECK(d7.effect_a == -7);
}

TEST_CASE("replay follows the counters and stops at dead guards") {
    ProductGraph g = ramp_product();
    Path w = lift(g, g.node_id(0, 0), fx::ramp_witness_word());
    std::pair<Process, Process> start{{0, 0}, {0, 10}};
    auto end = replay(g, w, start);
    REQUIRE(end.has_value());
    CHECK(end->first.state == 4);
    CHECK(end->first.counter == 1);
    CHECK(end->second.state == 4);
    CHECK(end->second.counter == 0);

    CHECK_FALSE(replay(g, w, {{0, 0}, {0, 9}}).has_value());
    CHECK_THROWS_AS(replay(g, w, {{1, 0}, {0, 10}}), std::invalid_argument);
}

TEST_CASE("witness check needs replay plus a distinguishing end") {
    ProductGraph g = ramp_product();
    Path w = lift(g, g.node_id(0, 0), fx::ramp_witness_word());
    std::pair<Process, Process> start{{0, 0}, {0, 10}};
    CHECK(is_witness(g, w, start));
    CHECK_FALSE(is_witness(g, prefix(w, 41), start));  // b still at counter 1
    CHECK_FALSE(is_witness(g, w, {{0, 0}, {0, 11}}));  // replays, both alive
    CHECK_FALSE(is_witness(g, w, {{0, 0}, {0, 9}}));   // b dies on the way
}

TEST_CASE("distinguishing is monotone in the counters") {
    ProductGraph g = ramp_product();
    // p4 idles on t7 for free while q4 pays 1, so a drained q4 is always
    // distinguishable; a funded one enables everything.
    CHECK(distinguishes(g, Process{4, 0}, Process{4, 0}));
    CHECK(distinguishes(g, Process{4, 1}, Process{4, 0}));
    CHECK(distinguishes(g, Process{4, 5}, Process{4, 0}));
    CHECK_FALSE(distinguishes(g, Process{4, 0}, Process{4, 1}));
    CHECK_FALSE(distinguishes(g, Process{4, 1}, Process{4, 1}));
}

TEST_CASE("slopes compare as extended rationals") {
    CHECK(Slope::of(3, 1) == Slope{3, 1});
    CHECK(Slope::of(-2, -4) == Slope{1, 2});
    CHECK(Slope::of(2, -4) == Slope{-1, 2});
    CHECK(Slope::of(0, 5) == Slope{0, 1});
    CHECK(Slope::of(0, 0) == Slope{0, 1});
    CHECK(Slope::of(4, 0).infinite());
    CHECK(Slope::of(-4, 0).infinite());

    CHECK(Slope::of(1, 2) < Slope::of(2, 3));
    CHECK(Slope::of(-1, 1) < Slope::of(0, 1));
    CHECK(Slope::of(5, 1) < Slope::of(1, 0));
    CHECK(Slope::of(-1, 0) < Slope::of(-100, 1));
    CHECK(Slope::of(2, 1) >= Slope::of(4, 2));
    CHECK(Slope::of(3, 1).str() == "3");
    CHECK(Slope::of(3, 2).str() == "3/2");
}

TEST_CASE("effect signs land in exactly one loop class") {
    for (std::int64_t da = -3; da <= 3; ++da)
        for (std::int64_t db = -3; db <= 3; ++db) {
            bool lt_lt = da < 0 && db < 0;
            bool gt_geq = da > 0 && db >= 0;
            bool leq_geq = da <= 0 && db >= 0;
            bool geq_lt = da >= 0 && db < 0;
            CHECK(int(lt_lt) + int(gt_geq) + int(leq_geq) + int(geq_lt) == 1);
            LoopType want = lt_lt    ? LoopType::lt_lt
                            : gt_geq ? LoopType::gt_geq
                            : leq_geq ? LoopType::leq_geq
                                      : LoopType::geq_lt;
            CHECK(classify_effects(da, db) == want);
        }
    CHECK(classify_effects(0, 0) == LoopType::leq_geq);
    CHECK(classify_effects(-1, 0) == LoopType::leq_geq);
    CHECK(classify_effects(0, -1) == LoopType::geq_lt);
    CHECK(classify_effects(1, -1) == LoopType::geq_lt);
    CHECK(loop_type_name(LoopType::gt_geq) == "(>,>=)");
    CHECK(loop_type_name(LoopType::geq_lt) == "(>=,<)");
}

TEST_CASE("loop enumeration yields anchored simple cycles") {
    ProductGraph g = ramp_product();
    auto loops = enumerate_loops(g);
    CHECK(!loops.empty());
    std::set<std::string> seen;
    for (const auto& l : loops) {
        CHECK(l.path.source() == l.path.target());
        CHECK(l.path.size() <= g.node_count());
        CHECK(l.slope == Slope::of(l.path.effect_a, l.path.effect_b));
        CHECK(l.type == classify_effects(l.path.effect_a, l.path.effect_b));
        // simple: no node repeats except the anchor at both ends
        std::set<NodeId> nodes;
        for (const auto& e : l.path.edges) CHECK(nodes.insert(e.src).second);
        std::string key;
        for (const auto& e : l.path.edges)
            key += std::to_string(e.src) + ":" + std::to_string(e.action) + ";";
        CHECK(seen.insert(key).second);
    }
    auto has = [&](NodeId at, const std::vector<std::string>& word) {
        Path p = lift(g, at, word);
        return std::any_of(loops.begin(), loops.end(),
                           [&](const Loop& l) { return l.path.edges == p.edges; });
    };
    CHECK(has(g.node_id(0, 0), fx::word({"t0", "t1", "t2"})));
    CHECK(has(g.node_id(0, 0), fx::word({"t3", "t4"})));
    CHECK(has(g.node_id(4, 4), fx::word({"t6"})));
    CHECK(has(g.node_id(1, 1), fx::word({"t1", "t2", "t0"})));
}

TEST_CASE("decomposition of the ramp witness") {
    ProductGraph g = ramp_product();
    Path w = lift(g, g.node_id(0, 0), fx::ramp_witness_word());
    Decomposition dec = decompose(w);
    REQUIRE(dec.blocks.size() == 3);
    CHECK(dec.blocks[0].prefix.empty());
    CHECK(dec.blocks[0].loop.size() == 3);
    CHECK(dec.blocks[0].times == 1);
    CHECK(dec.blocks[1].prefix.empty());
    CHECK(dec.blocks[1].loop.size() == 2);
    CHECK(dec.blocks[1].times == 9);
    CHECK(dec.blocks[2].prefix.size() == 1);
    CHECK(dec.blocks[2].loop.size() == 1);
    CHECK(dec.blocks[2].times == 20);
    CHECK(dec.tail.empty());
    CHECK(dec.blocks[0].loop.effect_a == 3);
    CHECK(dec.blocks[0].loop.effect_b == 1);
    CHECK(dec.blocks[1].loop.effect_a == 2);
    CHECK(dec.blocks[1].loop.effect_b == 1);
    CHECK(dec.blocks[2].loop.effect_a == -1);
    CHECK(dec.blocks[2].loop.effect_b == -1);
    CHECK(recompose(dec).edges == w.edges);
    CHECK(is_sane(g, w));
}

TEST_CASE("recompose inverts decompose on random deterministic products") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        GenParams p;
        p.seed = seed;
        p.min_states = 2;
        p.max_states = 4;
        p.alphabet = 2;
        p.density = 1.0;
        p.deterministic = true;
        p.complete = true;
        Ocn a = rand_ocn(p);
        p.seed = seed + 1000;
        Ocn b = rand_ocn(p);
        ProductGraph g = build_product(a, b);
        if (g.edges.empty()) continue;
        // deterministic walk: always take the first outgoing edge
        std::vector<ProductEdge> edges;
        NodeId at = g.edges.front().src;
        for (int step = 0; step < 60 && !g.out[at].empty(); ++step) {
            const ProductEdge& e = g.edges[g.out[at][seed % g.out[at].size()]];
            edges.push_back(e);
            at = e.dst;
        }
        if (edges.empty()) continue;
        Path path = make_path(edges);
        Decomposition dec = decompose(path);
        Path back = recompose(dec);
        CHECK(back.edges == path.edges);
        CHECK(back.guard_a == path.guard_a);
        CHECK(back.guard_b == path.guard_b);
        for (const auto& blk : dec.blocks) {
            CHECK(blk.loop.source() == blk.loop.target());
            CHECK(blk.times >= 1);
        }
    }
}

TEST_CASE("prefix shrinking finds the earliest shifted witness") {
    Ocn a = fx::zero_loop_net();
    Ocn b = fx::drain_loop_net();
    ProductGraph g = build_product(a, b);
    Path w = lift(g, g.node_id(0, 0), fx::word({"a", "a"}));
    std::pair<Process, Process> start{{0, 0}, {0, 2}};
    REQUIRE(is_witness(g, w, start));
    Path shrunk = shrink_to_prefix_witness(g, w, start, 0, 1);
    CHECK(shrunk.size() == 1);
    CHECK(shrink_to_prefix_witness(g, w, start, 5, 2).size() == 2);
    CHECK_THROWS_AS(shrink_to_prefix_witness(g, w, start, 0, 3), std::invalid_argument);

    ProductGraph rg = ramp_product();
    Path rw = lift(rg, rg.node_id(0, 0), fx::ramp_witness_word());
    std::pair<Process, Process> rstart{{0, 0}, {0, 10}};
    CHECK(shrink_to_prefix_witness(rg, rw, rstart, 0, 9).size() == 41);
}
