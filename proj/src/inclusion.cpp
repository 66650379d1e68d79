#include "ocnet/inclusion.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace ocnet {

std::string template_name(const WitnessTemplate& t) {
    switch (t.index()) {
        case 0: return "short";
        case 1: return "form1";
        case 2: return "form2";
        case 3: return "form3";
    }
    throw std::logic_error("template_name: bad variant");
}

namespace {

NodeId anchor_of(const Loop& l) { return l.path.source(); }

void require_connector(const Path& p, NodeId from, NodeId to, const char* what) {
    if (p.empty()) {
        if (from != to)
            throw std::invalid_argument(std::string("template: empty ") + what +
                                        " cannot bridge distinct nodes");
        return;
    }
    if (p.source() != from || p.target() != to)
        throw std::invalid_argument(std::string("template: ") + what +
                                    " does not chain");
}

void require_loop_type(const Loop& l, LoopType t, const char* what) {
    if (l.type != t)
        throw std::invalid_argument(std::string("template: ") + what +
                                    " must have type " + loop_type_name(t) +
                                    ", got " + loop_type_name(l.type));
}

}  // namespace

WitnessTemplate make_short(const Path& path) { return TemplateShort{path}; }

WitnessTemplate make_form1(const ProductGraph&, NodeId start, Path pi0,
                           Loop loop, Path pi1) {
    require_loop_type(loop, LoopType::geq_lt, "form1 loop");
    require_connector(pi0, start, anchor_of(loop), "pi0");
    if (!pi1.empty()) require_connector(pi1, anchor_of(loop), pi1.target(), "pi1");
    return TemplateForm1{std::move(pi0), std::move(loop), std::move(pi1)};
}

WitnessTemplate make_form2(const ProductGraph&, NodeId start, Path pi0,
                           Loop loop0, Path pi1, Loop loop1, Path pi2) {
    require_loop_type(loop0, LoopType::gt_geq, "form2 first loop");
    require_loop_type(loop1, LoopType::lt_lt, "form2 second loop");
    if (!(loop0.slope > loop1.slope))
        throw std::invalid_argument("template: form2 needs S(L0) > S(L1)");
    require_connector(pi0, start, anchor_of(loop0), "pi0");
    require_connector(pi1, anchor_of(loop0), anchor_of(loop1), "pi1");
    if (!pi2.empty()) require_connector(pi2, anchor_of(loop1), pi2.target(), "pi2");
    return TemplateForm2{std::move(pi0), std::move(loop0), std::move(pi1),
                         std::move(loop1), std::move(pi2)};
}

WitnessTemplate make_form3(const ProductGraph&, NodeId start, Path pi0,
                           Loop loop, Path pi1) {
    require_loop_type(loop, LoopType::lt_lt, "form3 loop");
    require_connector(pi0, start, anchor_of(loop), "pi0");
    if (!pi1.empty()) require_connector(pi1, anchor_of(loop), pi1.target(), "pi1");
    return TemplateForm3{std::move(pi0), std::move(loop), std::move(pi1)};
}

namespace {

/// Side-wise (effect, guard) aggregates, composable without materializing
/// edge sequences. Mirrors the closed forms used by concat/repeat.
struct Agg {
    std::int64_t ea = 0, eb = 0, ga = 0, gb = 0;
};

Agg agg_of(const Path& p) { return {p.effect_a, p.effect_b, p.guard_a, p.guard_b}; }

Agg agg_concat(const Agg& x, const Agg& y) {
    Agg r;
    r.ea = x.ea + y.ea;
    r.eb = x.eb + y.eb;
    r.ga = std::max(x.ga, y.ga - x.ea);
    r.gb = std::max(x.gb, y.gb - x.eb);
    return r;
}

Agg agg_repeat(const Agg& l, std::int64_t t) {
    if (t == 0) return {};
    Agg r;
    r.ea = l.ea * t;
    r.eb = l.eb * t;
    r.ga = l.ea >= 0 ? l.ga : l.ga - (t - 1) * l.ea;
    r.gb = l.eb >= 0 ? l.gb : l.gb - (t - 1) * l.eb;
    return r;
}

Agg agg_edge(const ProductEdge& e) {
    return {e.effect_a, e.effect_b, std::max<std::int64_t>(0, -e.effect_a),
            std::max<std::int64_t>(0, -e.effect_b)};
}

std::pair<Process, Process> start_processes(const ProductGraph& g, NodeId node,
                                            std::int64_t m, std::int64_t n) {
    auto [sa, sb] = g.node_states(node);
    return {Process{sa, m}, Process{sb, n}};
}

/// Per-(state, action) step tables for the witness check at a search
/// configuration: the deterministic a side is enabled iff its one
/// transition clears the counter; the b side is blocked iff even its
/// friendliest transition does not.
struct EnabledTables {
    std::vector<std::vector<int>> a_eff;    // 9 = no transition
    std::vector<std::vector<int>> b_best;   // -9 = no transition
    static constexpr int kNone = 9;

    EnabledTables(const Ocn& a, const Ocn& b, const ProductGraph& g) {
        a_eff.assign(a.states.size(), std::vector<int>(a.alphabet.size(), kNone));
        for (const auto& t : a.transitions) a_eff[t.src][t.action] = t.effect;
        b_best.assign(b.states.size(), std::vector<int>(a.alphabet.size(), -kNone));
        for (const auto& t : b.transitions) {
            ActionId xa = g.a.action_id(b.action_name(t.action));
            b_best[t.src][xa] = std::max(b_best[t.src][xa], t.effect);
        }
    }

    bool witness_config(const ProductGraph& g, NodeId v, std::int64_t ca,
                        std::int64_t cb) const {
        auto [sa, sb] = g.node_states(v);
        for (std::size_t x = 0; x < a_eff[sa].size(); ++x) {
            if (a_eff[sa][x] == kNone || ca + a_eff[sa][x] < 0) continue;
            if (b_best[sb][x] == -kNone || cb + b_best[sb][x] < 0) return true;
        }
        return false;
    }
};

/// A pumped candidate spelled as part references, so probing never has to
/// materialize the edge sequence.
struct Part {
    const Path* path;
    std::uint64_t times;
};

constexpr std::size_t kWholePath = std::numeric_limits<std::size_t>::max();

/// Edge count of the earliest witness prefix of the concatenated parts, or
/// nothing once a counter dies or the end passes without a hit. Each edge
/// walked is charged against the enumeration budget.
std::optional<std::size_t> earliest_witness_cut(
    const ProductGraph& g, const EnabledTables& tables, const Part* parts,
    std::size_t nparts, NodeId start_node, std::int64_t m, std::int64_t n,
    const InclusionOptions& opt, SearchStats& stats) {
    NodeId v = start_node;
    std::int64_t ca = m, cb = n;
    std::size_t cut = 0;
    if (tables.witness_config(g, v, ca, cb)) return cut;
    for (std::size_t i = 0; i < nparts; ++i) {
        for (std::uint64_t rep = 0; rep < parts[i].times; ++rep) {
            for (const ProductEdge& e : parts[i].path->edges) {
                if (++stats.paths_enumerated > opt.max_paths) {
                    stats.complete = false;
                    return std::nullopt;
                }
                ca += e.effect_a;
                cb += e.effect_b;
                if (ca < 0 || cb < 0) return std::nullopt;
                v = e.dst;
                ++cut;
                if (tables.witness_config(g, v, ca, cb)) return cut;
            }
        }
    }
    return std::nullopt;
}

Path materialize_cut(const Part* parts, std::size_t nparts, std::size_t cut) {
    std::vector<ProductEdge> edges;
    for (std::size_t i = 0; i < nparts && edges.size() < cut; ++i)
        for (std::uint64_t rep = 0; rep < parts[i].times && edges.size() < cut; ++rep)
            for (const ProductEdge& e : parts[i].path->edges) {
                if (edges.size() == cut) break;
                edges.push_back(e);
            }
    return make_path(std::move(edges));
}

/// Candidate exponents for one pumped loop: the unique value settling the
/// b side at exactly -1 on the closing edge, plus the least overshooting
/// value (whose b-side death happens mid-path and is handled by prefix
/// shrinking).
std::vector<std::int64_t> exponent_candidates(std::int64_t base, std::int64_t den) {
    std::vector<std::int64_t> out;
    std::int64_t want = base + 1;  // l * den == want settles at exactly -1
    if (want <= 0) {
        out.push_back(0);
        return out;
    }
    if (want % den == 0) {
        out.push_back(want / den);
        return out;
    }
    out.push_back(want / den + 1);
    return out;
}

struct OneLoopParts {
    const Path& pi0;
    const Loop& loop;
    const Path& pi1;
};

std::optional<Realization> realize_one_loop(const ProductGraph& g,
                                            const EnabledTables& tables,
                                            const OneLoopParts& parts,
                                            std::int64_t m, std::int64_t n,
                                            const BigInt& exponent_cap,
                                            const InclusionOptions& opt,
                                            SearchStats& stats) {
    const Path& pi0 = parts.pi0;
    const Path& pi1 = parts.pi1;
    const Path& loop = parts.loop.path;
    NodeId start_node = pi0.empty() ? anchor_of(parts.loop) : pi0.source();
    NodeId end_node = pi1.empty() ? anchor_of(parts.loop) : pi1.target();

    std::int64_t den = -loop.effect_b;
    if (den <= 0) throw std::logic_error("realize: pumped loop must drain b");
    std::int64_t base = n + pi0.effect_b + pi1.effect_b;
    Agg a_pi0 = agg_of(pi0), a_loop = agg_of(loop), a_pi1 = agg_of(pi1);

    for (EdgeId eid : g.out[end_node]) {
        const ProductEdge& t = g.edges[eid];
        if (t.effect_b != -1) continue;
        for (std::int64_t l0 : exponent_candidates(base + t.effect_b, den)) {
            if (BigInt(l0) > exponent_cap) continue;
            if (++stats.paths_enumerated > opt.max_paths) {
                stats.complete = false;
                return std::nullopt;
            }
            Agg cand = agg_concat(agg_concat(a_pi0, agg_repeat(a_loop, l0)),
                                  a_pi1);
            if (agg_concat(cand, agg_edge(t)).ga > m) continue;
            Part seq[3] = {{&pi0, 1}, {&loop, static_cast<std::uint64_t>(l0)},
                           {&pi1, 1}};
            std::vector<std::uint64_t> exps{static_cast<std::uint64_t>(l0)};
            if (cand.gb <= n) {
                if (cand.ga <= m &&
                    tables.witness_config(g, end_node, m + cand.ea, n + cand.eb))
                    return Realization{materialize_cut(seq, 3, kWholePath), exps};
            } else if (auto cut = earliest_witness_cut(g, tables, seq, 3,
                                                       start_node, m, n, opt,
                                                       stats)) {
                return Realization{materialize_cut(seq, 3, *cut), exps};
            }
            if (!stats.complete) return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<Realization> realize_two_loops(const ProductGraph& g,
                                             const EnabledTables& tables,
                                             const TemplateForm2& f,
                                             std::int64_t m, std::int64_t n,
                                             const InclusionOptions& opt,
                                             SearchStats& stats) {
    NodeId start_node = f.pi0.empty() ? anchor_of(f.loop0) : f.pi0.source();
    NodeId end_node = f.pi2.empty() ? anchor_of(f.loop1) : f.pi2.target();

    std::int64_t den = -f.loop1.path.effect_b;
    if (den <= 0) throw std::logic_error("realize: second loop must drain b");
    std::int64_t base =
        n + f.pi0.effect_b + f.pi1.effect_b + f.pi2.effect_b;
    Agg a_pi0 = agg_of(f.pi0), a_pi1 = agg_of(f.pi1), a_pi2 = agg_of(f.pi2);
    Agg a_l0 = agg_of(f.loop0.path), a_l1 = agg_of(f.loop1.path);
    if (a_pi0.ga > m) return std::nullopt;  // unreachable regardless of pumping
    std::int64_t eb0 = f.loop0.path.effect_b;  // >= 0 for this loop type

    // cut == kWholePath means the full pumped path is the witness.
    struct ProbeHit {
        std::size_t cut;
        std::int64_t l1;
    };
    auto probe = [&](const ProductEdge& t,
                     std::uint64_t l0) -> std::optional<ProbeHit> {
        std::int64_t sl0 = static_cast<std::int64_t>(l0);
        std::int64_t with_l0 = base + t.effect_b + sl0 * eb0;
        for (std::int64_t l1 : exponent_candidates(with_l0, den)) {
            if (++stats.paths_enumerated > opt.max_paths) {
                stats.complete = false;
                return std::nullopt;
            }
            Agg cand = agg_concat(
                agg_concat(agg_concat(agg_concat(a_pi0, agg_repeat(a_l0, sl0)),
                                      a_pi1),
                           agg_repeat(a_l1, l1)),
                a_pi2);
            if (agg_concat(cand, agg_edge(t)).ga > m) continue;
            Part seq[5] = {{&f.pi0, 1},
                           {&f.loop0.path, l0},
                           {&f.pi1, 1},
                           {&f.loop1.path, static_cast<std::uint64_t>(l1)},
                           {&f.pi2, 1}};
            if (cand.gb <= n) {
                if (cand.ga <= m &&
                    tables.witness_config(g, end_node, m + cand.ea, n + cand.eb))
                    return ProbeHit{kWholePath, l1};
            } else if (auto cut = earliest_witness_cut(g, tables, seq, 5,
                                                       start_node, m, n, opt,
                                                       stats)) {
                return ProbeHit{*cut, l1};
            }
            if (!stats.complete) return std::nullopt;
        }
        return std::nullopt;
    };
    auto build = [&](std::uint64_t l0, const ProbeHit& hit) -> Realization {
        Part seq[5] = {{&f.pi0, 1},
                       {&f.loop0.path, l0},
                       {&f.pi1, 1},
                       {&f.loop1.path, static_cast<std::uint64_t>(hit.l1)},
                       {&f.pi2, 1}};
        return Realization{materialize_cut(seq, 5, hit.cut),
                           {l0, static_cast<std::uint64_t>(hit.l1)}};
    };

    for (EdgeId eid : g.out[end_node]) {
        const ProductEdge& t = g.edges[eid];
        if (t.effect_b != -1) continue;
        if (eb0 == 0) {
            // The first loop only feeds the a side here, so success is
            // monotone in l0: pick off the least witnessing exponent by
            // bisection instead of sweeping the whole width.
            std::optional<ProbeHit> hit = probe(t, opt.form2_width);
            if (!stats.complete) return std::nullopt;
            if (!hit) continue;
            std::uint64_t lo = 0, hi = opt.form2_width;
            while (lo < hi) {
                std::uint64_t mid = lo + (hi - lo) / 2;
                if (auto h = probe(t, mid)) {
                    hi = mid;
                    hit = h;
                } else {
                    lo = mid + 1;
                }
                if (!stats.complete) return std::nullopt;
            }
            return build(hi, *hit);
        }
        for (std::uint64_t l0 = 0; l0 <= opt.form2_width; ++l0) {
            if (auto h = probe(t, l0)) return build(l0, *h);
            if (!stats.complete) return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<Realization> realize_impl(const ProductGraph& g,
                                        const EnabledTables& tables,
                                        const WitnessTemplate& tmpl,
                                        std::int64_t m, std::int64_t n,
                                        const InclusionOptions& opt,
                                        SearchStats& stats) {
    if (m < 0 || n < 0) throw std::invalid_argument("realize: negative counter");
    BigInt cap = BigInt(n) + bound_table(g.node_count()).c;

    if (const auto* s = std::get_if<TemplateShort>(&tmpl)) {
        if (s->path.empty())
            throw std::invalid_argument(
                "realize: short template needs a non-empty path");
        auto start = start_processes(g, s->path.source(), m, n);
        if (is_witness(g, s->path, start)) return Realization{s->path, {}};
        return std::nullopt;
    }
    if (const auto* f1 = std::get_if<TemplateForm1>(&tmpl))
        return realize_one_loop(g, tables, {f1->pi0, f1->loop, f1->pi1}, m, n,
                                cap, opt, stats);
    if (const auto* f2 = std::get_if<TemplateForm2>(&tmpl))
        return realize_two_loops(g, tables, *f2, m, n, opt, stats);
    if (const auto* f3 = std::get_if<TemplateForm3>(&tmpl))
        return realize_one_loop(g, tables, {f3->pi0, f3->loop, f3->pi1}, m, n,
                                cap, opt, stats);
    throw std::logic_error("realize: bad template variant");
}

}  // namespace

std::optional<Realization> realize_template(const ProductGraph& g,
                                            const WitnessTemplate& tmpl,
                                            std::int64_t m, std::int64_t n,
                                            std::uint64_t form2_width) {
    if (!classify_net(g.a).deterministic)
        throw std::invalid_argument("realize: left net must be deterministic");
    if (!classify_net(g.b).complete)
        throw std::invalid_argument("realize: right net must be complete");
    EnabledTables tables(g.a, g.b, g);
    InclusionOptions opt;
    opt.form2_width = form2_width;
    opt.max_paths = std::numeric_limits<std::uint64_t>::max();
    SearchStats stats;
    return realize_impl(g, tables, tmpl, m, n, opt, stats);
}

namespace {

struct ShortSearch {
    const ProductGraph& g;
    const EnabledTables& tables;
    const InclusionOptions& opt;
    SearchStats& stats;
    std::set<std::tuple<NodeId, std::int64_t, std::int64_t>> on_path;
    std::vector<ProductEdge> trail;
    std::optional<Path> found;

    /// Depth-first over replayable paths in edge order, skipping extensions
    /// that revisit a configuration already on the current path (looping on
    /// an identical configuration cannot create new witnesses).
    void run(NodeId v, std::int64_t ca, std::int64_t cb, std::uint64_t depth) {
        if (found || !stats.complete) return;
        if (++stats.paths_enumerated > opt.max_paths) {
            stats.complete = false;
            return;
        }
        if (tables.witness_config(g, v, ca, cb)) {
            found = make_path(trail);
            return;
        }
        if (depth == opt.budget) return;
        for (EdgeId eid : g.out[v]) {
            const ProductEdge& e = g.edges[eid];
            std::int64_t na = ca + e.effect_a, nb = cb + e.effect_b;
            if (na < 0 || nb < 0) continue;
            auto key = std::make_tuple(e.dst, na, nb);
            if (!on_path.insert(key).second) continue;
            trail.push_back(e);
            run(e.dst, na, nb, depth + 1);
            trail.pop_back();
            on_path.erase(key);
            if (found || !stats.complete) return;
        }
    }
};

/// Every edge sequence of length <= budget starting at `from`, in DFS edge
/// order, shortest prefixes first. The empty path is included.
std::vector<Path> connectors_from(const ProductGraph& g, NodeId from,
                                  std::uint64_t budget,
                                  const InclusionOptions& opt,
                                  SearchStats& stats) {
    std::vector<Path> out{Path{}};
    std::vector<ProductEdge> trail;
    auto dfs = [&](auto&& self, NodeId v, std::uint64_t depth) -> void {
        if (!stats.complete || depth == budget) return;
        for (EdgeId eid : g.out[v]) {
            // Storing a length-l connector copies l edges, so charge the
            // copy; a flat per-path charge would let huge budgets exhaust
            // memory before the valve fires.
            stats.paths_enumerated += trail.size() + 1;
            if (stats.paths_enumerated > opt.max_paths) {
                stats.complete = false;
                return;
            }
            const ProductEdge& e = g.edges[eid];
            trail.push_back(e);
            out.push_back(make_path(trail));
            self(self, e.dst, depth + 1);
            trail.pop_back();
        }
    };
    dfs(dfs, from, 0);
    return out;
}

}  // namespace

InclusionResult decide_inclusion(const Ocn& a, const Ocn& b, const Process& pm,
                                 const Process& qn,
                                 const InclusionOptions& opt) {
    if (!classify_net(a).deterministic)
        throw std::invalid_argument("decide_inclusion: left net must be deterministic");
    NetClass cb = classify_net(b);
    if (!cb.deterministic || !cb.complete)
        throw std::invalid_argument(
            "decide_inclusion: right net must be deterministic and complete");
    if (pm.counter < 0 || qn.counter < 0)
        throw std::invalid_argument("decide_inclusion: negative counter");
    if (pm.state >= a.states.size() || qn.state >= b.states.size())
        throw std::invalid_argument("decide_inclusion: process state out of range");

    ProductGraph g = build_product(a, b);
    SearchStats stats;
    EnabledTables tables(a, b, g);
    NodeId s0 = g.node_id(pm.state, qn.state);

    ShortSearch search{g, tables, opt, stats, {}, {}, {}};
    search.on_path.insert({s0, pm.counter, qn.counter});
    search.run(s0, pm.counter, qn.counter, 0);
    if (search.found) {
        Path w = *search.found;
        return {NotIncluded{w, make_short(w), {}}, stats};
    }

    if (stats.complete) {
        std::vector<Loop> loops = enumerate_loops(g);
        std::map<NodeId, std::vector<Path>> connector_cache;
        auto connectors = [&](NodeId from) -> const std::vector<Path>& {
            auto it = connector_cache.find(from);
            if (it == connector_cache.end())
                it = connector_cache
                         .emplace(from, connectors_from(g, from, opt.budget, opt, stats))
                         .first;
            return it->second;
        };
        auto try_realize = [&](const WitnessTemplate& t) -> std::optional<InclusionResult> {
            ++stats.templates_tried;
            if (auto r = realize_impl(g, tables, t, pm.counter, qn.counter, opt, stats))
                return InclusionResult{NotIncluded{r->witness, t, r->exponents}, stats};
            return std::nullopt;
        };

        for (const Loop& l : loops) {
            if (l.type != LoopType::geq_lt) continue;
            for (const Path& pi0 : connectors(s0)) {
                if (!pi0.empty() && pi0.target() != anchor_of(l)) continue;
                if (pi0.empty() && s0 != anchor_of(l)) continue;
                for (const Path& pi1 : connectors(anchor_of(l))) {
                    if (!stats.complete) break;
                    if (auto rv = try_realize(make_form1(g, s0, pi0, l, pi1))) return *rv;
                }
            }
        }
        for (const Loop& l0 : loops) {
            if (l0.type != LoopType::gt_geq) continue;
            for (const Loop& l1 : loops) {
                if (l1.type != LoopType::lt_lt || !(l0.slope > l1.slope)) continue;
                for (const Path& pi0 : connectors(s0)) {
                    if (!pi0.empty() && pi0.target() != anchor_of(l0)) continue;
                    if (pi0.empty() && s0 != anchor_of(l0)) continue;
                    for (const Path& pi1 : connectors(anchor_of(l0))) {
                        if (!pi1.empty() && pi1.target() != anchor_of(l1)) continue;
                        if (pi1.empty() && anchor_of(l0) != anchor_of(l1)) continue;
                        for (const Path& pi2 : connectors(anchor_of(l1))) {
                            if (!stats.complete) break;
                            if (auto rv = try_realize(
                                    make_form2(g, s0, pi0, l0, pi1, l1, pi2)))
                                return *rv;
                        }
                    }
                }
            }
        }
        for (const Loop& l : loops) {
            if (l.type != LoopType::lt_lt) continue;
            for (const Path& pi0 : connectors(s0)) {
                if (!pi0.empty() && pi0.target() != anchor_of(l)) continue;
                if (pi0.empty() && s0 != anchor_of(l)) continue;
                for (const Path& pi1 : connectors(anchor_of(l))) {
                    if (!stats.complete) break;
                    if (auto rv = try_realize(make_form3(g, s0, pi0, l, pi1))) return *rv;
                }
            }
        }
    }

    if (!stats.complete) return {BudgetExhausted{opt.budget}, stats};
    bool certified = BigInt(opt.budget) >= bound_table(g.node_count()).c;
    return {Included{certified}, stats};
}

std::vector<std::string> classify_form(const Path& path, std::uint64_t max_part_len) {
    Decomposition dec = decompose(path);
    std::size_t k = dec.blocks.size();
    std::size_t total = path.size();

    std::vector<std::size_t> before(k), loop_run(k), after(k);
    std::size_t acc = 0;
    for (std::size_t i = 0; i < k; ++i) {
        before[i] = acc + dec.blocks[i].prefix.size();
        loop_run[i] = dec.blocks[i].times * dec.blocks[i].loop.size();
        acc = before[i] + loop_run[i];
    }
    for (std::size_t i = 0; i < k; ++i) after[i] = total - before[i] - loop_run[i];

    bool fits_short = total <= max_part_len;
    bool fits1 = false, fits2 = false, fits3 = false;
    std::vector<Loop> loops;
    loops.reserve(k);
    for (const auto& b : dec.blocks) loops.push_back(make_loop(b.loop));

    for (std::size_t i = 0; i < k; ++i) {
        bool parts_ok = before[i] <= max_part_len && after[i] <= max_part_len;
        if (parts_ok && loops[i].type == LoopType::geq_lt) fits1 = true;
        if (parts_ok && loops[i].type == LoopType::lt_lt) fits3 = true;
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (loops[i].type != LoopType::gt_geq || before[i] > max_part_len) continue;
        for (std::size_t j = i + 1; j < k; ++j) {
            if (loops[j].type != LoopType::lt_lt || after[j] > max_part_len) continue;
            if (!(loops[i].slope > loops[j].slope)) continue;
            std::size_t mid = before[j] - before[i] - loop_run[i];
            if (mid <= max_part_len) fits2 = true;
        }
    }

    std::vector<std::string> out;
    if (fits_short) out.push_back("short");
    if (fits1) out.push_back("form1");
    if (fits2) out.push_back("form2");
    if (fits3) out.push_back("form3");
    return out;
}

}  // namespace ocnet
