#include "ocnet/difftest.hpp"

#include <algorithm>
#include <set>

#include "ocnet/normal_form.hpp"

namespace ocnet {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::vector<Process> step_set(const Ocn& net, const std::vector<Process>& cur,
                              const std::string& action) {
    std::set<Process> out;
    for (const Process& p : cur)
        for (const Process& q : step(net, p, net.action_id(action))) out.insert(q);
    return {out.begin(), out.end()};
}

std::vector<std::string> path_word(const Ocn& a, const Path& path) {
    std::vector<std::string> word;
    word.reserve(path.size());
    for (const ProductEdge& e : path.edges) word.push_back(a.action_name(e.action));
    return word;
}

}  // namespace

bool word_is_trace(const Ocn& net, const Process& proc,
                   const std::vector<std::string>& word) {
    return word_is_trace(net, std::vector<Process>{proc}, word);
}

bool word_is_trace(const Ocn& net, const std::vector<Process>& procs,
                   const std::vector<std::string>& word) {
    std::vector<Process> cur = procs;
    for (const std::string& act : word) {
        if (cur.empty()) return false;
        if (!net.has_action(act)) return false;
        cur = step_set(net, cur, act);
    }
    return !cur.empty();
}

bool confirms_non_inclusion(const Ocn& a, const Ocn& b, const Process& pm,
                            const Process& qn,
                            const std::vector<std::string>& word) {
    std::vector<Process> la{pm}, rb{qn};
    for (const std::string& act : word) {
        if (!a.has_action(act) || !b.has_action(act)) return false;
        la = step_set(a, la, act);
        rb = step_set(b, rb, act);
        if (la.empty() || rb.empty()) return false;
    }
    for (const std::string& act : a.alphabet) {
        if (!b.has_action(act)) continue;
        if (!step_set(a, la, act).empty() && step_set(b, rb, act).empty())
            return true;
    }
    return false;
}

std::optional<Path> lift_word(const ProductGraph& g, NodeId start,
                              const std::vector<std::string>& word) {
    std::vector<ProductEdge> edges;
    NodeId cur = start;
    for (const std::string& act : word) {
        if (!g.a.has_action(act)) return std::nullopt;
        ActionId id = g.a.action_id(act);
        const ProductEdge* found = nullptr;
        for (EdgeId e : g.out.at(cur)) {
            if (g.edges[e].action != id) continue;
            if (found) return std::nullopt;  // ambiguous, pair not deterministic
            found = &g.edges[e];
        }
        if (!found) return std::nullopt;
        edges.push_back(*found);
        cur = found->dst;
    }
    if (edges.empty()) return Path{};
    return make_path(std::move(edges));
}

IncludeTrial run_include_trial(std::uint64_t seed, const InclusionOptions& opt,
                               std::size_t oracle_depth) {
    IncludeTrial trial;
    trial.seed = seed;

    std::uint64_t h = mix(seed);
    std::size_t a_states = 1 + h % 3;
    std::size_t b_states = 1 + (h >> 8) % 3;
    std::size_t alphabet = 1 + (h >> 16) % 2;
    std::int64_t m = (h >> 24) % 4;
    std::int64_t n = (h >> 32) % 4;
    double da = 0.4 + double((h >> 40) % 7) * 0.1;
    double db = 0.4 + double((h >> 48) % 7) * 0.1;

    GenParams ga;
    ga.seed = mix(seed ^ 0x11);
    ga.min_states = ga.max_states = a_states;
    ga.alphabet = alphabet;
    ga.density = da;
    ga.deterministic = true;
    GenParams gb = ga;
    gb.seed = mix(seed ^ 0x22);
    gb.min_states = gb.max_states = b_states;
    gb.density = db;

    Ocn a_raw = rand_ocn(ga);
    Ocn b_raw = rand_ocn(gb);
    NormalizedPair np = normalize_pair(a_raw, b_raw);
    trial.a = np.a;
    trial.b = np.b;
    trial.pm = Process{StateId((h >> 52) % a_states), m};
    trial.qn = Process{StateId((h >> 56) % b_states), n};

    trial.result = decide_inclusion(trial.a, trial.b, trial.pm, trial.qn, opt);
    trial.oracle =
        inclusion_oracle(trial.a, trial.b, trial.pm, trial.qn, oracle_depth);

    auto flag = [&](const std::string& why) {
        trial.contradiction = true;
        if (!trial.detail.empty()) trial.detail += "; ";
        trial.detail += why;
    };

    bool oracle_conclusive = trial.oracle.status != OracleStatus::capped;
    if (trial.oracle.status == OracleStatus::witness &&
        !confirms_non_inclusion(trial.a, trial.b, trial.pm, trial.qn,
                                trial.oracle.word))
        flag("oracle witness failed set-semantics replay");

    if (const auto* ni = std::get_if<NotIncluded>(&trial.result.verdict)) {
        std::vector<std::string> word = path_word(trial.a, ni->witness);
        if (!confirms_non_inclusion(trial.a, trial.b, trial.pm, trial.qn, word))
            flag("decide witness failed set-semantics replay");
        if (oracle_conclusive && trial.oracle.status == OracleStatus::exhausted &&
            word.size() <= oracle_depth)
            flag("oracle missed a witness inside its depth");
        if (trial.oracle.status == OracleStatus::witness &&
            trial.oracle.word.size() > word.size())
            flag("oracle witness is not shortest");
    } else if (const auto* inc = std::get_if<Included>(&trial.result.verdict)) {
        if (trial.oracle.status == OracleStatus::witness) {
            if (inc->certified)
                flag("certified inclusion contradicted by oracle witness");
            else
                trial.completeness_miss = true;
        }
    }
    return trial;
}

UniversalTrial run_universal_trial(std::uint64_t seed,
                                   const UniversalityOptions& opt,
                                   std::size_t oracle_max_len) {
    UniversalTrial trial;
    trial.seed = seed;

    std::uint64_t h = mix(seed ^ 0x33);
    std::size_t states = 1 + h % 3;
    GenParams gp;
    gp.seed = mix(seed ^ 0x44);
    gp.min_states = gp.max_states = states;
    gp.alphabet = 1 + (h >> 8) % 2;
    gp.density = 0.5 + double((h >> 16) % 6) * 0.1;

    trial.net = rand_ocn(gp);
    trial.proc = Process{StateId((h >> 24) % states), std::int64_t((h >> 32) % 3)};

    trial.result = find_nonuniversality_witness(trial.net, trial.proc, opt);
    trial.oracle = universality_oracle(trial.net, trial.proc, oracle_max_len);

    auto flag = [&](const std::string& why) {
        trial.contradiction = true;
        if (!trial.detail.empty()) trial.detail += "; ";
        trial.detail += why;
    };

    if (trial.oracle.status == OracleStatus::witness) {
        if (word_is_trace(trial.net, trial.proc, trial.oracle.word))
            flag("oracle witness is actually a trace");
        auto prefix = trial.oracle.word;
        prefix.pop_back();
        if (!word_is_trace(trial.net, trial.proc, prefix))
            flag("oracle witness is not minimal");
    }

    switch (trial.result.status) {
        case UniversalityStatus::universal:
            if (trial.oracle.status == OracleStatus::witness)
                flag("universal verdict contradicted by oracle witness");
            break;
        case UniversalityStatus::non_universal: {
            if (word_is_trace(trial.net, trial.proc, trial.result.word))
                flag("checker witness is actually a trace");
            if (trial.oracle.status == OracleStatus::exhausted &&
                trial.result.word.size() <= oracle_max_len)
                flag("oracle missed a witness inside its length bound");
            if (opt.shortest && trial.oracle.status == OracleStatus::witness &&
                trial.result.word.size() <= oracle_max_len &&
                trial.result.word != trial.oracle.word)
                flag("shortest-mode witness differs from oracle's");
            break;
        }
        case UniversalityStatus::budget_exhausted:
            if (trial.oracle.status == OracleStatus::witness &&
                trial.oracle.word.size() <= opt.budget)
                flag("budget verdict despite oracle witness within budget");
            break;
    }
    return trial;
}

}  // namespace ocnet
