#include "ocnet/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>

namespace ocnet {

namespace {

struct JointConfig {
    StateId pa = 0;
    std::int64_t ca = 0;
    StateId qb = 0;
    std::int64_t cb = 0;

    friend bool operator<(const JointConfig& x, const JointConfig& y) {
        if (x.pa != y.pa) return x.pa < y.pa;
        if (x.ca != y.ca) return x.ca < y.ca;
        if (x.qb != y.qb) return x.qb < y.qb;
        return x.cb < y.cb;
    }
};

// Deterministic nets move through at most one transition; counter guards
// can still block it.
std::optional<std::pair<StateId, std::int64_t>> det_step(const Ocn& net,
                                                         StateId s,
                                                         std::int64_t c,
                                                         ActionId act) {
    for (const Transition& t : net.transitions) {
        if (t.src != s || t.action != act) continue;
        if (c + t.effect < 0) return std::nullopt;
        return std::make_pair(t.dst, c + t.effect);
    }
    return std::nullopt;
}

std::vector<std::string> unwind(const std::vector<std::string>& labels,
                                const std::vector<std::size_t>& parents,
                                std::size_t i) {
    std::vector<std::string> word;
    while (i != 0) {
        word.push_back(labels[i]);
        i = parents[i];
    }
    std::reverse(word.begin(), word.end());
    return word;
}

}  // namespace

OracleAnswer inclusion_oracle(const Ocn& a, const Ocn& b, const Process& pm,
                              const Process& qn, std::size_t depth,
                              std::size_t frontier_cap) {
    NetClass ka = classify_net(a);
    NetClass kb = classify_net(b);
    if (!ka.deterministic)
        throw std::invalid_argument("inclusion_oracle: left net must be deterministic");
    if (!kb.deterministic || !kb.complete)
        throw std::invalid_argument(
            "inclusion_oracle: right net must be deterministic and complete");
    if (a.alphabet != b.alphabet)
        throw std::invalid_argument("inclusion_oracle: alphabets differ");

    std::vector<JointConfig> nodes{{pm.state, pm.counter, qn.state, qn.counter}};
    std::vector<std::size_t> parents{0};
    std::vector<std::string> labels{""};
    std::vector<std::size_t> node_depth{0};
    std::set<JointConfig> seen{nodes[0]};

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        JointConfig cur = nodes[i];
        for (ActionId act = 0; act < a.alphabet.size(); ++act) {
            auto na = det_step(a, cur.pa, cur.ca, act);
            if (!na) continue;
            auto nb = det_step(b, cur.qb, cur.cb, act);
            if (!nb) {
                // The word so far stays in both trace sets; this action
                // extends only the left one.
                OracleAnswer ans;
                ans.status = OracleStatus::witness;
                ans.word = unwind(labels, parents, i);
                return ans;
            }
            if (node_depth[i] >= depth) continue;
            JointConfig next{na->first, na->second, nb->first, nb->second};
            if (!seen.insert(next).second) continue;
            if (nodes.size() >= frontier_cap) return {OracleStatus::capped, {}};
            nodes.push_back(next);
            parents.push_back(i);
            labels.push_back(a.action_name(act));
            node_depth.push_back(node_depth[i] + 1);
        }
    }
    return {OracleStatus::exhausted, {}};
}

OracleAnswer universality_oracle(const Ocn& net, const Process& proc,
                                 std::size_t max_len, std::size_t frontier_cap) {
    std::vector<ActionId> order(net.alphabet.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](ActionId x, ActionId y) {
        return net.action_name(x) < net.action_name(y);
    });

    using ProcSet = std::vector<Process>;  // sorted, unique
    std::vector<ProcSet> nodes{{proc}};
    std::vector<std::size_t> parents{0};
    std::vector<std::string> labels{""};
    std::vector<std::size_t> node_depth{0};
    std::set<ProcSet> seen{nodes[0]};

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (node_depth[i] >= max_len) continue;
        ProcSet cur = nodes[i];
        for (ActionId act : order) {
            std::set<Process> out;
            for (const Process& p : cur)
                for (const Process& q : step(net, p, act)) out.insert(q);
            if (out.empty()) {
                OracleAnswer ans;
                ans.status = OracleStatus::witness;
                ans.word = unwind(labels, parents, i);
                ans.word.push_back(net.action_name(act));
                return ans;
            }
            ProcSet next(out.begin(), out.end());
            if (!seen.insert(next).second) continue;
            if (nodes.size() >= frontier_cap) return {OracleStatus::capped, {}};
            nodes.push_back(std::move(next));
            parents.push_back(i);
            labels.push_back(net.action_name(act));
            node_depth.push_back(node_depth[i] + 1);
        }
    }
    return {OracleStatus::exhausted, {}};
}

std::set<std::vector<std::string>> traces_upto(const Ocn& net,
                                               const std::vector<Process>& procs,
                                               std::size_t max_len) {
    std::set<std::vector<std::string>> words;
    if (procs.empty()) return words;
    // (word, reachable set) pairs; distinct words may share sets, so the
    // dedup key includes the word itself.
    std::deque<std::pair<std::vector<std::string>, std::vector<Process>>> queue;
    std::set<Process> start(procs.begin(), procs.end());
    queue.emplace_back(std::vector<std::string>{},
                       std::vector<Process>(start.begin(), start.end()));
    while (!queue.empty()) {
        auto [word, cur] = std::move(queue.front());
        queue.pop_front();
        words.insert(word);
        if (word.size() >= max_len) continue;
        for (ActionId act = 0; act < net.alphabet.size(); ++act) {
            std::set<Process> out;
            for (const Process& p : cur)
                for (const Process& q : step(net, p, act)) out.insert(q);
            if (out.empty()) continue;
            auto next_word = word;
            next_word.push_back(net.action_name(act));
            queue.emplace_back(std::move(next_word),
                               std::vector<Process>(out.begin(), out.end()));
        }
    }
    return words;
}

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) {
    return n == 0 ? 0 : rng() % n;
}

bool coin(std::mt19937_64& rng, double p) {
    return (rng() >> 11) * 0x1.0p-53 < p;
}

int sample_effect(std::mt19937_64& rng, const std::array<double, 3>& w) {
    double total = w[0] + w[1] + w[2];
    if (total <= 0.0) return 0;
    double x = (rng() >> 11) * 0x1.0p-53 * total;
    if (x < w[0]) return -1;
    if (x < w[0] + w[1]) return 0;
    return 1;
}

std::string nth_action_name(std::size_t i) {
    if (i < 26) return std::string(1, char('a' + i));
    return "a" + std::to_string(i);
}

}  // namespace

Ocn rand_ocn(const GenParams& p) {
    if (p.min_states == 0 || p.max_states < p.min_states)
        throw std::invalid_argument("rand_ocn: bad state count range");
    std::mt19937_64 rng(p.seed);
    std::size_t n_states =
        p.min_states + pick(rng, p.max_states - p.min_states + 1);

    Ocn net;
    net.name = "rand" + std::to_string(p.seed);
    for (std::size_t i = 0; i < n_states; ++i)
        net.add_state("q" + std::to_string(i));
    for (std::size_t i = 0; i < p.alphabet; ++i)
        net.add_action(nth_action_name(i));

    for (StateId s = 0; s < n_states; ++s) {
        for (ActionId a = 0; a < p.alphabet; ++a) {
            std::size_t added = 0;
            if (coin(rng, p.density)) {
                net.add_transition(s, a, sample_effect(rng, p.effect_weights),
                                   pick(rng, n_states));
                ++added;
            }
            if (!p.deterministic && coin(rng, p.density / 2)) {
                // may duplicate the first draw; add_transition dedups, which
                // only lowers the effective extra-arc rate
                net.add_transition(s, a, sample_effect(rng, p.effect_weights),
                                   pick(rng, n_states));
            }
            if (p.complete && added == 0)
                net.add_transition(s, a, sample_effect(rng, p.effect_weights),
                                   pick(rng, n_states));
        }
    }
    return net;
}

Icm rand_icm(const GenParams& p) {
    if (p.min_states == 0 || p.max_states < p.min_states)
        throw std::invalid_argument("rand_icm: bad state count range");
    if (p.counters == 0) throw std::invalid_argument("rand_icm: need a counter");
    std::mt19937_64 rng(p.seed);
    std::size_t n_states =
        p.min_states + pick(rng, p.max_states - p.min_states + 1);

    Icm m;
    m.name = "randicm" + std::to_string(p.seed);
    m.counters = p.counters;
    for (std::size_t i = 0; i < n_states; ++i) m.add_state("m" + std::to_string(i));
    m.initial = 0;
    m.final_state = n_states - 1;

    constexpr IcmOp kOps[] = {IcmOp::inc, IcmOp::dec, IcmOp::ifz};
    for (StateId s = 0; s < n_states; ++s) {
        std::size_t arcs = 1 + (coin(rng, p.density) ? 1 : 0);
        for (std::size_t k = 0; k < arcs; ++k) {
            IcmTransition t;
            t.src = s;
            t.op = kOps[pick(rng, 3)];
            t.counter = 1 + pick(rng, p.counters);
            t.dst = pick(rng, n_states);
            bool dup = std::any_of(m.transitions.begin(), m.transitions.end(),
                                   [&](const IcmTransition& old) {
                                       return old.src == t.src && old.op == t.op &&
                                              old.counter == t.counter &&
                                              old.dst == t.dst;
                                   });
            if (!dup) m.transitions.push_back(t);
        }
    }
    return m;
}

}  // namespace ocnet
