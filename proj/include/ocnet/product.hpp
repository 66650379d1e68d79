#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ocnet/ocn.hpp"

namespace ocnet {

using NodeId = std::size_t;
using EdgeId = std::size_t;

/// Synchronized step of the two nets: both take an `action`-labeled
/// transition, each applying its own counter effect.
struct ProductEdge {
    NodeId src = 0;
    NodeId dst = 0;
    ActionId action = 0;  // index into the left net's alphabet
    int effect_a = 0;
    int effect_b = 0;

    friend bool operator==(const ProductEdge& x, const ProductEdge& y) {
        return x.src == y.src && x.dst == y.dst && x.action == y.action &&
               x.effect_a == y.effect_a && x.effect_b == y.effect_b;
    }
};

/// Product graph over the full state-pair set; nodes are a-state * |Q_b| +
/// b-state, so node_count() == |Q_a| * |Q_b| regardless of reachability.
struct ProductGraph {
    Ocn a, b;
    std::vector<ProductEdge> edges;
    std::vector<std::vector<EdgeId>> out;  // node -> outgoing edge ids

    std::size_t node_count() const { return a.states.size() * b.states.size(); }
    NodeId node_id(StateId sa, StateId sb) const {
        return sa * b.states.size() + sb;
    }
    std::pair<StateId, StateId> node_states(NodeId v) const {
        return {v / b.states.size(), v % b.states.size()};
    }
    std::string node_name(NodeId v) const;
};

/// Both nets must use the same action names (as a set).
ProductGraph build_product(const Ocn& a, const Ocn& b);

/// Edge sequence with cached aggregates. guard_x is the smallest initial
/// counter on side x that lets the whole path replay: the negated minimum
/// over all prefix effect sums (so 0 <= guard <= length).
struct Path {
    std::vector<ProductEdge> edges;
    std::int64_t effect_a = 0, effect_b = 0;
    std::int64_t guard_a = 0, guard_b = 0;

    std::size_t size() const { return edges.size(); }
    bool empty() const { return edges.empty(); }
    NodeId source() const { return edges.front().src; }
    NodeId target() const { return edges.back().dst; }
};

/// Validates that consecutive edges chain; recomputes the aggregates.
Path make_path(std::vector<ProductEdge> edges);
Path concat(const Path& x, const Path& y);
Path repeat(const Path& loop, std::uint64_t times);
Path prefix(const Path& p, std::size_t len);

/// Walks the path from the given processes. Returns the final processes, or
/// nothing if a guard fails. Throws if the path does not start at `start`.
std::optional<std::pair<Process, Process>> replay(
    const ProductGraph& g, const Path& path,
    const std::pair<Process, Process>& start);

/// True iff some action is enabled from pa but not from pb.
bool distinguishes(const ProductGraph& g, const Process& pa, const Process& pb);

/// True iff the path replays and, at its end, some action is enabled on the
/// (deterministic) a side but not on the (complete) b side.
bool is_witness(const ProductGraph& g, const Path& path,
                const std::pair<Process, Process>& start);

/// Extended rational "a-effect per b-effect" with n/0 = +-inf and 0/0 = 0.
struct Slope {
    std::int64_t num = 0;
    std::int64_t den = 1;  // den == 0 encodes +-infinity (sign in num)

    static Slope of(std::int64_t da, std::int64_t db);
    bool infinite() const { return den == 0; }
    std::string str() const;

    friend bool operator==(const Slope& x, const Slope& y) {
        return x.num == y.num && x.den == y.den;
    }
    friend bool operator<(const Slope& x, const Slope& y);
    friend bool operator<=(const Slope& x, const Slope& y) { return x < y || x == y; }
    friend bool operator>(const Slope& x, const Slope& y) { return y < x; }
    friend bool operator>=(const Slope& x, const Slope& y) { return y <= x; }
};

/// Sign pattern of (effect_a, effect_b); the four cases partition Z^2.
enum class LoopType {
    lt_lt,    // a < 0, b < 0
    gt_geq,   // a > 0, b >= 0
    leq_geq,  // a <= 0, b >= 0
    geq_lt,   // a >= 0, b < 0
};

std::string loop_type_name(LoopType t);
LoopType classify_effects(std::int64_t da, std::int64_t db);

/// A cycle with no proper sub-cycle, anchored at its start node. The same
/// circular edge sequence started at a different node is a different loop.
struct Loop {
    Path path;
    Slope slope;
    LoopType type = LoopType::leq_geq;
};

Loop make_loop(Path cycle);

/// All anchored loops of the graph (each has length <= node_count()).
std::vector<Loop> enumerate_loops(const ProductGraph& g);

/// Maximal blocks pi_i L_i^{l_i} of a path; what remains after the last
/// block is the acyclic tail. Concatenating everything restores the path.
struct DecompositionBlock {
    Path prefix;  // acyclic connector, possibly empty
    Path loop;    // one unrolling
    std::uint64_t times = 0;
};
struct Decomposition {
    std::vector<DecompositionBlock> blocks;
    Path tail;  // acyclic
};

Decomposition decompose(const Path& path);
Path recompose(const Decomposition& dec);

/// Sane: at most F0(|V|) loop blocks and pairwise-distinct loop effect
/// pairs. (The connectors and tail are acyclic by construction.)
bool is_sane(const ProductGraph& g, const Path& path);

/// Given a witness for `start` and a start shift m' >= m, n' <= n, returns
/// the shortest prefix that is a witness for the shifted start.
Path shrink_to_prefix_witness(const ProductGraph& g, const Path& path,
                              const std::pair<Process, Process>& start,
                              std::int64_t m2, std::int64_t n2);

}  // namespace ocnet
