#include "ocnet/product.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ocnet/bounds.hpp"

namespace ocnet {

std::string ProductGraph::node_name(NodeId v) const {
    auto [sa, sb] = node_states(v);
    return "(" + a.state_name(sa) + "," + b.state_name(sb) + ")";
}

ProductGraph build_product(const Ocn& a, const Ocn& b) {
    std::set<std::string> aa(a.alphabet.begin(), a.alphabet.end());
    std::set<std::string> bb(b.alphabet.begin(), b.alphabet.end());
    if (aa != bb)
        throw std::invalid_argument("build_product: nets use different alphabets");

    ProductGraph g;
    g.a = a;
    g.b = b;
    g.out.resize(g.node_count());
    for (const auto& ta : a.transitions) {
        ActionId act_b = b.action_id(a.action_name(ta.action));
        for (const auto& tb : b.transitions) {
            if (tb.action != act_b) continue;
            ProductEdge e;
            e.src = g.node_id(ta.src, tb.src);
            e.dst = g.node_id(ta.dst, tb.dst);
            e.action = ta.action;
            e.effect_a = ta.effect;
            e.effect_b = tb.effect;
            g.out[e.src].push_back(g.edges.size());
            g.edges.push_back(e);
        }
    }
    return g;
}

Path make_path(std::vector<ProductEdge> edges) {
    Path p;
    p.edges = std::move(edges);
    std::int64_t sa = 0, sb = 0, lo_a = 0, lo_b = 0;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (i > 0 && p.edges[i].src != p.edges[i - 1].dst)
            throw std::logic_error("make_path: edges do not chain");
        sa += p.edges[i].effect_a;
        sb += p.edges[i].effect_b;
        lo_a = std::min(lo_a, sa);
        lo_b = std::min(lo_b, sb);
    }
    p.effect_a = sa;
    p.effect_b = sb;
    p.guard_a = -lo_a;
    p.guard_b = -lo_b;
    return p;
}

Path concat(const Path& x, const Path& y) {
    if (x.empty()) return y;
    if (y.empty()) return x;
    if (x.target() != y.source())
        throw std::logic_error("concat: paths do not chain");
    Path p;
    p.edges = x.edges;
    p.edges.insert(p.edges.end(), y.edges.begin(), y.edges.end());
    p.effect_a = x.effect_a + y.effect_a;
    p.effect_b = x.effect_b + y.effect_b;
    p.guard_a = std::max(x.guard_a, y.guard_a - x.effect_a);
    p.guard_b = std::max(x.guard_b, y.guard_b - x.effect_b);
    return p;
}

Path repeat(const Path& loop, std::uint64_t times) {
    if (loop.empty() || times == 0) return times == 0 ? Path{} : loop;
    if (loop.source() != loop.target())
        throw std::logic_error("repeat: path is not a cycle");
    Path p;
    p.edges.reserve(loop.edges.size() * times);
    for (std::uint64_t i = 0; i < times; ++i)
        p.edges.insert(p.edges.end(), loop.edges.begin(), loop.edges.end());
    std::int64_t t = static_cast<std::int64_t>(times);
    p.effect_a = loop.effect_a * t;
    p.effect_b = loop.effect_b * t;
    // The lowest point is inside the first lap if the effect is nonnegative,
    // else inside the last.
    if (loop.effect_a >= 0)
        p.guard_a = loop.guard_a;
    else
        p.guard_a = loop.guard_a - (t - 1) * loop.effect_a;
    if (loop.effect_b >= 0)
        p.guard_b = loop.guard_b;
    else
        p.guard_b = loop.guard_b - (t - 1) * loop.effect_b;
    return p;
}

Path prefix(const Path& p, std::size_t len) {
    if (len > p.size()) throw std::logic_error("prefix: length exceeds path");
    return make_path(std::vector<ProductEdge>(p.edges.begin(), p.edges.begin() + len));
}

std::optional<std::pair<Process, Process>> replay(
    const ProductGraph& g, const Path& path,
    const std::pair<Process, Process>& start) {
    if (start.first.counter < 0 || start.second.counter < 0)
        throw std::invalid_argument("replay: negative counter");
    if (!path.empty() &&
        path.source() != g.node_id(start.first.state, start.second.state))
        throw std::invalid_argument("replay: path does not start at the given processes");
    if (path.guard_a > start.first.counter || path.guard_b > start.second.counter)
        return std::nullopt;
    Process pa{start.first.state, start.first.counter + path.effect_a};
    Process pb{start.second.state, start.second.counter + path.effect_b};
    if (!path.empty()) {
        auto [sa, sb] = g.node_states(path.target());
        pa.state = sa;
        pb.state = sb;
    }
    return std::make_pair(pa, pb);
}

bool distinguishes(const ProductGraph& g, const Process& pa, const Process& pb) {
    for (ActionId x = 0; x < g.a.alphabet.size(); ++x) {
        bool a_can = false;
        for (const auto& t : g.a.transitions)
            if (t.src == pa.state && t.action == x && pa.counter + t.effect >= 0) {
                a_can = true;
                break;
            }
        if (!a_can) continue;
        ActionId xb = g.b.action_id(g.a.action_name(x));
        bool b_can = false;
        for (const auto& t : g.b.transitions)
            if (t.src == pb.state && t.action == xb && pb.counter + t.effect >= 0) {
                b_can = true;
                break;
            }
        if (!b_can) return true;
    }
    return false;
}

bool is_witness(const ProductGraph& g, const Path& path,
                const std::pair<Process, Process>& start) {
    if (!classify_net(g.a).deterministic)
        throw std::invalid_argument("is_witness: left net must be deterministic");
    if (!classify_net(g.b).complete)
        throw std::invalid_argument("is_witness: right net must be complete");
    auto end = replay(g, path, start);
    if (!end) return false;
    return distinguishes(g, end->first, end->second);
}

Slope Slope::of(std::int64_t da, std::int64_t db) {
    Slope s;
    if (db == 0) {
        if (da == 0) return Slope{0, 1};
        return Slope{da > 0 ? 1 : -1, 0};
    }
    if (da == 0) return Slope{0, 1};
    std::int64_t g = std::gcd(std::abs(da), std::abs(db));
    s.num = da / g;
    s.den = db / g;
    if (s.den < 0) {
        s.num = -s.num;
        s.den = -s.den;
    }
    return s;
}

bool operator<(const Slope& x, const Slope& y) {
    if (x.infinite() || y.infinite()) {
        auto rank = [](const Slope& s) -> int {
            if (!s.infinite()) return 0;
            return s.num > 0 ? 1 : -1;
        };
        if (rank(x) != rank(y)) return rank(x) < rank(y);
        if (x.infinite()) return false;  // equal infinities
        // both finite with rank 0: fall through
    }
    return x.num * y.den < y.num * x.den;
}

std::string Slope::str() const {
    if (infinite()) return num > 0 ? "inf" : "-inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

LoopType classify_effects(std::int64_t da, std::int64_t db) {
    if (db >= 0) return da > 0 ? LoopType::gt_geq : LoopType::leq_geq;
    return da >= 0 ? LoopType::geq_lt : LoopType::lt_lt;
}

std::string loop_type_name(LoopType t) {
    switch (t) {
        case LoopType::lt_lt: return "(<,<)";
        case LoopType::gt_geq: return "(>,>=)";
        case LoopType::leq_geq: return "(<=,>=)";
        case LoopType::geq_lt: return "(>=,<)";
    }
    return "?";
}

Loop make_loop(Path cycle) {
    if (cycle.empty() || cycle.source() != cycle.target())
        throw std::logic_error("make_loop: not a cycle");
    Loop l;
    l.slope = Slope::of(cycle.effect_a, cycle.effect_b);
    l.type = classify_effects(cycle.effect_a, cycle.effect_b);
    l.path = std::move(cycle);
    return l;
}

std::vector<Loop> enumerate_loops(const ProductGraph& g) {
    std::vector<Loop> loops;
    std::vector<ProductEdge> cur;
    std::vector<bool> visited(g.node_count(), false);

    for (NodeId anchor = 0; anchor < g.node_count(); ++anchor) {
        // DFS over simple paths from the anchor; closing edge -> loop.
        auto dfs = [&](auto&& self, NodeId at) -> void {
            for (EdgeId ei : g.out[at]) {
                const ProductEdge& e = g.edges[ei];
                if (e.dst == anchor) {
                    cur.push_back(e);
                    loops.push_back(make_loop(make_path(cur)));
                    cur.pop_back();
                } else if (!visited[e.dst]) {
                    visited[e.dst] = true;
                    cur.push_back(e);
                    self(self, e.dst);
                    cur.pop_back();
                    visited[e.dst] = false;
                }
            }
        };
        visited[anchor] = true;
        dfs(dfs, anchor);
        visited[anchor] = false;
    }
    return loops;
}

Decomposition decompose(const Path& path) {
    Decomposition dec;
    if (path.empty()) return dec;

    const auto& e = path.edges;
    const std::size_t k = e.size();
    // Node at position i is the source of edge i (position k = final target).
    auto node_at = [&](std::size_t i) { return i < k ? e[i].src : e[k - 1].dst; };

    std::size_t base = 0;
    std::map<NodeId, std::size_t> pos{{node_at(0), 0}};
    std::size_t j = 1;
    while (j <= k) {
        auto it = pos.find(node_at(j));
        if (it == pos.end()) {
            pos[node_at(j)] = j;
            ++j;
            continue;
        }
        const std::size_t s = it->second;
        const std::size_t len = j - s;
        // Count immediate repetitions of e[s..j).
        std::uint64_t times = 1;
        std::size_t at = j;
        while (at + len <= k &&
               std::equal(e.begin() + s, e.begin() + s + len, e.begin() + at)) {
            at += len;
            ++times;
        }
        DecompositionBlock blk;
        blk.prefix = make_path({e.begin() + base, e.begin() + s});
        blk.loop = make_path({e.begin() + s, e.begin() + s + len});
        blk.times = times;
        dec.blocks.push_back(std::move(blk));
        base = s + times * len;
        pos.clear();
        pos[node_at(base)] = base;
        j = base + 1;
    }
    dec.tail = make_path({e.begin() + base, e.end()});
    return dec;
}

Path recompose(const Decomposition& dec) {
    Path p;
    for (const auto& blk : dec.blocks) {
        p = concat(p, blk.prefix);
        p = concat(p, repeat(blk.loop, blk.times));
    }
    return concat(p, dec.tail);
}

bool is_sane(const ProductGraph& g, const Path& path) {
    Decomposition dec = decompose(path);
    BoundTable t = bound_table(g.node_count());
    if (BigInt(dec.blocks.size()) > t.f0) return false;
    std::set<std::pair<std::int64_t, std::int64_t>> effs;
    for (const auto& blk : dec.blocks)
        if (!effs.insert({blk.loop.effect_a, blk.loop.effect_b}).second)
            return false;
    return true;
}

Path shrink_to_prefix_witness(const ProductGraph& g, const Path& path,
                              const std::pair<Process, Process>& start,
                              std::int64_t m2, std::int64_t n2) {
    if (m2 < start.first.counter || n2 > start.second.counter)
        throw std::invalid_argument(
            "shrink_to_prefix_witness: need m' >= m and n' <= n");
    std::pair<Process, Process> shifted{{start.first.state, m2},
                                        {start.second.state, n2}};
    for (std::size_t len = 0; len <= path.size(); ++len)
        if (is_witness(g, prefix(path, len), shifted)) return prefix(path, len);
    throw std::logic_error(
        "shrink_to_prefix_witness: no prefix qualifies (input was not a witness?)");
}

}  // namespace ocnet
