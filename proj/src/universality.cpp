#include "ocnet/universality.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "ocnet/reductions.hpp"

namespace ocnet {

bool Macrostate::dead() const {
    return std::all_of(v.begin(), v.end(),
                       [](std::int64_t x) { return x == kBottom; });
}

Macrostate macrostate_of(const Ocn& net, const std::vector<Process>& procs) {
    Macrostate m;
    m.v.assign(net.states.size(), kBottom);
    for (const Process& p : procs) {
        if (p.state >= net.states.size())
            throw std::invalid_argument("macrostate_of: state out of range");
        if (p.counter < 0)
            throw std::invalid_argument("macrostate_of: negative counter");
        m.v[p.state] = std::max(m.v[p.state], p.counter);
    }
    return m;
}

Macrostate macro_step(const Ocn& net, const Macrostate& m, ActionId action) {
    if (action >= net.alphabet.size())
        throw std::invalid_argument("macro_step: unknown action");
    if (m.v.size() != net.states.size())
        throw std::invalid_argument("macro_step: macrostate size mismatch");
    Macrostate n;
    n.v.assign(m.v.size(), kBottom);
    for (const Transition& t : net.transitions) {
        if (t.action != action || m.v[t.src] == kBottom) continue;
        std::int64_t c = m.v[t.src] + t.effect;
        if (c < 0) continue;
        n.v[t.dst] = std::max(n.v[t.dst], c);
    }
    return n;
}

Macrostate macro_step(const Ocn& net, const Macrostate& m, const std::string& action) {
    if (!net.has_action(action))
        throw std::invalid_argument("macro_step: unknown action " + action);
    return macro_step(net, m, net.action_id(action));
}

bool covers(const Macrostate& m, const Macrostate& n) {
    if (m.v.size() != n.v.size())
        throw std::invalid_argument("covers: macrostate size mismatch");
    for (std::size_t i = 0; i < m.v.size(); ++i)
        if (m.v[i] > n.v[i]) return false;
    return true;
}

std::int64_t norm(const Macrostate& m) {
    std::int64_t best = kBottom;
    for (std::int64_t x : m.v) best = std::max(best, x);
    return best;
}

namespace {

/// Actions sorted by name; witnesses are compared letter-wise in this order.
std::vector<ActionId> lexicographic_actions(const Ocn& net) {
    std::vector<ActionId> acts(net.alphabet.size());
    for (std::size_t i = 0; i < acts.size(); ++i) acts[i] = i;
    std::sort(acts.begin(), acts.end(), [&](ActionId a, ActionId b) {
        return net.alphabet[a] < net.alphabet[b];
    });
    return acts;
}

/// States that survive every action with a non-decreasing counter; a
/// macrostate containing one can never reach all-bottom.
std::vector<bool> immortal_states(const Ocn& net) {
    std::vector<bool> out(net.states.size(), true);
    for (StateId q = 0; q < net.states.size(); ++q) {
        for (ActionId a = 0; a < net.alphabet.size(); ++a) {
            bool keeps = false;
            for (const Transition& t : net.transitions)
                if (t.src == q && t.dst == q && t.action == a && t.effect >= 0) {
                    keeps = true;
                    break;
                }
            if (!keeps) {
                out[q] = false;
                break;
            }
        }
    }
    return out;
}

bool holds_immortal(const Macrostate& m, const std::vector<bool>& immortal) {
    for (std::size_t i = 0; i < m.v.size(); ++i)
        if (m.v[i] != kBottom && immortal[i]) return true;
    return false;
}

struct PathfinderSearch {
    const Ocn& net;
    const std::vector<ActionId> acts;
    const std::vector<bool> immortal;
    std::uint64_t steps = 0;
    bool depth_cut = false;
    std::vector<Macrostate> branch;
    std::vector<ActionId> word;
    std::optional<std::vector<ActionId>> found;

    explicit PathfinderSearch(const Ocn& n)
        : net(n), acts(lexicographic_actions(n)), immortal(immortal_states(n)) {}

    void dfs(const Macrostate& m, std::uint64_t depth_left) {
        if (found) return;
        if (depth_left == 0) {
            depth_cut = true;
            return;
        }
        for (ActionId a : acts) {
            Macrostate n = macro_step(net, m, a);
            ++steps;
            if (n.dead()) {
                word.push_back(a);
                found = word;
                return;
            }
            if (holds_immortal(n, immortal)) continue;
            bool covered = false;
            for (const Macrostate& anc : branch)
                if (covers(anc, n)) {
                    covered = true;
                    break;
                }
            if (covered) continue;
            branch.push_back(n);
            word.push_back(a);
            dfs(n, depth_left - 1);
            if (found) return;
            word.pop_back();
            branch.pop_back();
        }
    }
};

}  // namespace

UniversalityResult find_nonuniversality_witness(const Ocn& net,
                                                const Macrostate& start,
                                                const UniversalityOptions& opt) {
    if (start.v.size() != net.states.size())
        throw std::invalid_argument("find_nonuniversality_witness: macrostate size");
    if (start.dead())
        throw std::invalid_argument("find_nonuniversality_witness: dead start");

    UniversalityResult res;
    if (net.alphabet.empty()) {  // T(start) = {""} = the set of all words
        res.status = UniversalityStatus::universal;
        return res;
    }
    const Macrostate& init = start;

    auto run_limit = [&](std::uint64_t depth) {
        PathfinderSearch s(net);
        if (!holds_immortal(init, s.immortal)) {
            s.branch.push_back(init);
            s.dfs(init, depth);
        }
        return s;
    };

    if (opt.shortest) {
        for (std::uint64_t d = 1; d <= opt.budget; ++d) {
            PathfinderSearch s = run_limit(d);
            res.steps += s.steps;
            if (s.found) {
                res.status = UniversalityStatus::non_universal;
                for (ActionId a : *s.found) res.word.push_back(net.alphabet[a]);
                return res;
            }
            if (!s.depth_cut) {  // exhausted below the cap: universal
                res.status = UniversalityStatus::universal;
                return res;
            }
        }
        res.status = UniversalityStatus::budget_exhausted;
        return res;
    }

    PathfinderSearch s = run_limit(opt.budget);
    res.steps = s.steps;
    if (s.found) {
        res.status = UniversalityStatus::non_universal;
        for (ActionId a : *s.found) res.word.push_back(net.alphabet[a]);
    } else {
        res.status = s.depth_cut ? UniversalityStatus::budget_exhausted
                                 : UniversalityStatus::universal;
    }
    return res;
}

UniversalityResult find_nonuniversality_witness(const Ocn& net, const Process& proc,
                                                const UniversalityOptions& opt) {
    if (proc.state >= net.states.size())
        throw std::invalid_argument("find_nonuniversality_witness: state out of range");
    if (proc.counter < 0)
        throw std::invalid_argument("find_nonuniversality_witness: negative counter");
    return find_nonuniversality_witness(net, macrostate_of(net, {proc}), opt);
}

std::optional<std::vector<std::string>> finite_vs_ocn_inclusion(const Ocn& finite,
                                                                StateId s,
                                                                const Ocn& net,
                                                                const Process& qn) {
    for (const Transition& t : finite.transitions)
        if (t.effect != 0)
            throw std::invalid_argument(
                "finite_vs_ocn_inclusion: finite system must have zero effects");
    if (s >= finite.states.size())
        throw std::invalid_argument("finite_vs_ocn_inclusion: state out of range");

    using FSet = std::set<StateId>;
    struct Node {
        FSet f;
        Macrostate m;
    };

    Macrostate init_m = macrostate_of(net, {qn});
    std::vector<ActionId> acts = lexicographic_actions(finite);

    std::vector<Node> branch;
    std::vector<std::string> word;
    std::optional<std::vector<std::string>> found;

    auto dfs = [&](auto&& self, const FSet& f, const Macrostate& m) -> void {
        if (found) return;
        for (ActionId a : acts) {
            const std::string& name = finite.alphabet[a];
            FSet nf;
            for (StateId q : f)
                for (const Transition& t : finite.transitions)
                    if (t.src == q && t.action == a) nf.insert(t.dst);
            if (nf.empty()) continue;  // finite side cannot extend this word

            Macrostate nm = net.has_action(name)
                                ? macro_step(net, m, net.action_id(name))
                                : Macrostate{std::vector<std::int64_t>(
                                      net.states.size(), kBottom)};
            word.push_back(name);
            if (nm.dead()) {
                found = word;
                return;
            }
            bool pruned = false;
            for (const Node& anc : branch)
                if (anc.f == nf && covers(anc.m, nm)) {
                    pruned = true;
                    break;
                }
            if (!pruned) {
                branch.push_back({nf, nm});
                self(self, nf, nm);
                if (found) return;
                branch.pop_back();
            }
            word.pop_back();
        }
    };

    branch.push_back({FSet{s}, init_m});
    dfs(dfs, FSet{s}, init_m);
    return found;
}

std::int64_t ControlFunction::operator()(std::int64_t x) const {
    if (x < 0) throw std::invalid_argument("control function: negative argument");
    if (kind == successor) return x + 1;
    BigInt v = ocnet::fast_growing(k, x);
    if (v > BigInt(std::numeric_limits<std::int64_t>::max()))
        throw std::overflow_error("control function: value out of range");
    return static_cast<std::int64_t>(v);
}

SequenceVerdict check_sequence(const std::vector<Macrostate>& seq, std::int64_t t,
                               const ControlFunction& f) {
    SequenceVerdict v;
    for (std::size_t i = 0; i < seq.size() && !v.good; ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (covers(seq[i], seq[j])) {
                v.good = true;
                break;
            }
    v.controlled = true;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (norm(seq[i]) >= f(static_cast<std::int64_t>(i) + t)) {
            v.controlled = false;
            break;
        }
    return v;
}

}  // namespace ocnet
