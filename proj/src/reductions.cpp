#include "ocnet/reductions.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

namespace ocnet {

std::string icm_op_name(IcmOp op) {
    switch (op) {
        case IcmOp::inc: return "inc";
        case IcmOp::dec: return "dec";
        case IcmOp::ifz: return "ifz";
    }
    throw std::logic_error("icm_op_name: bad enum value");
}

StateId Icm::add_state(const std::string& s) {
    for (StateId i = 0; i < states.size(); ++i)
        if (states[i] == s) return i;
    states.push_back(s);
    return states.size() - 1;
}

StateId Icm::state_id(const std::string& s) const {
    for (StateId i = 0; i < states.size(); ++i)
        if (states[i] == s) return i;
    throw std::invalid_argument("icm: unknown state " + s);
}

bool Icm::has_state(const std::string& s) const {
    for (const auto& q : states)
        if (q == s) return true;
    return false;
}

void Icm::add_transition(const std::string& src, IcmOp op, std::size_t counter,
                         const std::string& dst) {
    if (counter < 1 || counter > counters)
        throw std::invalid_argument("icm: counter index out of range");
    transitions.push_back({state_id(src), op, counter, state_id(dst)});
}

std::vector<IcmConfig> icm_successors(const Icm& m, const IcmConfig& c,
                                      bool allow_errors) {
    if (c.counters.size() != m.counters)
        throw std::invalid_argument("icm_successors: counter vector size mismatch");
    std::vector<IcmConfig> out;
    auto push = [&](const IcmConfig& n) {
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    };
    for (const IcmTransition& t : m.transitions) {
        if (t.src != c.state) continue;
        std::int64_t v = c.counters[t.counter - 1];
        if (t.op == IcmOp::dec && v == 0) continue;
        if (t.op == IcmOp::ifz && v != 0) continue;
        IcmConfig n = c;
        n.state = t.dst;
        if (t.op == IcmOp::inc) ++n.counters[t.counter - 1];
        if (t.op == IcmOp::dec) --n.counters[t.counter - 1];
        push(n);
    }
    if (allow_errors) {
        for (std::size_t i = 0; i < m.counters; ++i) {
            IcmConfig n = c;
            ++n.counters[i];
            push(n);
        }
    }
    return out;
}

std::optional<IcmRun> icm_reachable_bounded(const Icm& m, std::int64_t counter_cap,
                                            std::uint64_t depth_cap) {
    if (counter_cap < 1 || depth_cap < 1)
        throw std::invalid_argument("icm_reachable_bounded: caps must be positive");

    IcmConfig start{m.initial, std::vector<std::int64_t>(m.counters, 0)};
    struct Parent {
        IcmConfig from;
        IcmRunStep step;
    };
    std::map<IcmConfig, Parent> parent;
    std::set<IcmConfig> seen{start};
    std::deque<std::pair<IcmConfig, std::uint64_t>> frontier{{start, 0}};

    auto unwind = [&](IcmConfig at) {
        IcmRun run;
        while (!(at == start)) {
            auto it = parent.find(at);
            run.steps.push_back(it->second.step);
            at = it->second.from;
        }
        std::reverse(run.steps.begin(), run.steps.end());
        return run;
    };

    if (start.state == m.final_state) return IcmRun{};

    while (!frontier.empty()) {
        auto [c, depth] = frontier.front();
        frontier.pop_front();
        if (depth == depth_cap) continue;

        auto expand = [&](const IcmConfig& n, const IcmRunStep& step) -> std::optional<IcmRun> {
            for (std::int64_t v : n.counters)
                if (v > counter_cap) return std::nullopt;
            if (!seen.insert(n).second) return std::nullopt;
            parent.emplace(n, Parent{c, step});
            if (n.state == m.final_state) return unwind(n);
            frontier.emplace_back(n, depth + 1);
            return std::nullopt;
        };

        for (std::size_t j = 0; j < m.transitions.size(); ++j) {
            const IcmTransition& t = m.transitions[j];
            if (t.src != c.state) continue;
            std::int64_t v = c.counters[t.counter - 1];
            if (t.op == IcmOp::dec && v == 0) continue;
            if (t.op == IcmOp::ifz && v != 0) continue;
            IcmConfig n = c;
            n.state = t.dst;
            if (t.op == IcmOp::inc) ++n.counters[t.counter - 1];
            if (t.op == IcmOp::dec) --n.counters[t.counter - 1];
            if (auto run = expand(n, IcmRunStep{false, t.counter, j, n})) return run;
        }
        for (std::size_t i = 1; i <= m.counters; ++i) {
            IcmConfig n = c;
            ++n.counters[i - 1];
            if (auto run = expand(n, IcmRunStep{true, i, 0, n})) return run;
        }
    }
    return std::nullopt;
}

Ocn make_obstacle(Ocn net, const std::string& q,
                  const std::vector<std::string>& actions) {
    if (!actions.empty() && !net.has_state("U"))
        throw std::invalid_argument("make_obstacle: net has no universal state U");
    for (const std::string& a : actions) net.add_transition(q, a, 0, "U");
    return net;
}

Ocn make_ignore(Ocn net, const std::string& q,
                const std::vector<std::string>& actions) {
    for (const std::string& a : actions) net.add_transition(q, a, 0, q);
    return net;
}

namespace {

/// Rule intents per (state, action), checked for conflicts before any
/// default ignore is filled in.
struct RuleTable {
    const Ocn& net;
    // (state, action) -> explicitly ruled (move/self-loop present)
    std::set<std::pair<StateId, ActionId>> explicit_rule;
    std::set<std::pair<StateId, ActionId>> obstacle;
    // actions whose unmentioned states die rather than ignore
    std::set<ActionId> no_default;
    std::vector<Transition> moves;

    explicit RuleTable(const Ocn& n) : net(n) {}

    void add_move(const std::string& src, const std::string& act, int effect,
                  const std::string& dst) {
        StateId s = net.state_id(src);
        ActionId a = net.action_id(act);
        if (obstacle.count({s, a}))
            throw std::logic_error("icm_to_ocn: state " + src +
                                   " is both obstacle and mover for " + act);
        explicit_rule.insert({s, a});
        moves.push_back({s, a, effect, net.state_id(dst)});
    }

    void add_obstacle(const std::string& src, const std::string& act) {
        StateId s = net.state_id(src);
        ActionId a = net.action_id(act);
        if (explicit_rule.count({s, a}))
            throw std::logic_error("icm_to_ocn: state " + src +
                                   " is both mover and obstacle for " + act);
        obstacle.insert({s, a});
    }
};

}  // namespace

ReductionOutput icm_to_ocn(const Icm& m) {
    for (const char* reserved : {"Init", "U", "Z"})
        if (m.has_state(reserved))
            throw std::invalid_argument(std::string("icm_to_ocn: machine uses reserved state name ") +
                                        reserved);
    for (std::size_t i = 1; i <= m.counters; ++i)
        if (m.has_state("C" + std::to_string(i)))
            throw std::invalid_argument("icm_to_ocn: machine uses reserved state name C" +
                                        std::to_string(i));

    ReductionOutput out;
    Ocn& net = out.net;
    net.name = m.name.empty() ? "reduction" : m.name + "-net";

    net.add_state("Init");
    net.add_state("U");
    net.add_state("Z");
    for (const std::string& q : m.states) net.add_state(q);
    std::vector<std::string> counter_state(m.counters + 1);
    for (std::size_t i = 1; i <= m.counters; ++i) {
        counter_state[i] = "C" + std::to_string(i);
        net.add_state(counter_state[i]);
    }

    net.add_action("#");
    net.add_action("$");
    out.dictionary["#"] = {ActionMeaning::run_start, 0};
    out.dictionary["$"] = {ActionMeaning::run_end, 0};
    std::vector<std::string> t_name(m.transitions.size());
    for (std::size_t j = 0; j < m.transitions.size(); ++j) {
        t_name[j] = "t" + std::to_string(j + 1);
        net.add_action(t_name[j]);
        out.dictionary[t_name[j]] = {ActionMeaning::transition, j};
    }
    std::vector<std::string> tau_name(m.counters + 1);
    for (std::size_t i = 1; i <= m.counters; ++i) {
        tau_name[i] = "tau" + std::to_string(i);
        net.add_action(tau_name[i]);
        out.dictionary[tau_name[i]] = {ActionMeaning::error, i};
    }

    RuleTable rules(net);

    // The first move: '#' hatches the run configuration from Init and is an
    // obstacle everywhere else.
    rules.add_move("Init", "#", 0, m.states[m.initial]);
    rules.add_move("Init", "#", 0, "Z");
    for (std::size_t i = 1; i <= m.counters; ++i)
        rules.add_move("Init", "#", 0, counter_state[i]);
    for (const std::string& q : m.states) rules.add_obstacle(q, "#");
    rules.add_obstacle("Z", "#");
    for (std::size_t i = 1; i <= m.counters; ++i)
        rules.add_obstacle(counter_state[i], "#");

    // Machine transitions: the source state moves, every other machine
    // state (and Init) objects, the counter states track the operation.
    for (std::size_t j = 0; j < m.transitions.size(); ++j) {
        const IcmTransition& t = m.transitions[j];
        const std::string& act = t_name[j];
        const std::string& ci = counter_state[t.counter];
        rules.add_move(m.states[t.src], act, 0, m.states[t.dst]);
        for (StateId q = 0; q < m.states.size(); ++q)
            if (q != t.src) rules.add_obstacle(m.states[q], act);
        rules.add_obstacle("Init", act);
        switch (t.op) {
            case IcmOp::inc:
                rules.add_move(ci, act, +1, ci);
                break;
            case IcmOp::dec:
                rules.add_move(ci, act, -1, ci);
                // Z reseeds a zero-valued counter state, absorbing a
                // decrement at zero as an implicit error increment.
                rules.add_move("Z", act, 0, ci);
                break;
            case IcmOp::ifz:
                rules.add_move(ci, act, -1, "U");  // punishes positive values
                rules.add_move(ci, act, 0, ci);    // the value itself persists
                break;
        }
    }

    // Errors: counter i may grow at any time; only Init objects.
    for (std::size_t i = 1; i <= m.counters; ++i) {
        rules.add_move(counter_state[i], tau_name[i], +1, counter_state[i]);
        rules.add_obstacle("Init", tau_name[i]);
    }

    // The end marker: only the final state lets it pass (by dying). All
    // -- unmentioned states drop out, which empties the macrostate.
    rules.add_obstacle("Init", "$");
    for (const std::string& q : m.states)
        if (net.state_id(q) != net.state_id(m.states[m.final_state]))
            rules.add_obstacle(q, "$");
    rules.no_default.insert(net.action_id("#"));
    rules.no_default.insert(net.action_id("$"));

    for (const Transition& t : rules.moves) net.add_transition(t.src, t.action, t.effect, t.dst);
    for (auto [s, a] : rules.obstacle)
        net.add_transition(s, a, 0, net.state_id("U"));
    StateId u = net.state_id("U");
    for (ActionId a = 0; a < net.alphabet.size(); ++a)
        net.add_transition(u, a, 0, u);
    // Everyone not covered by an explicit rule or obstacle ignores the
    // action, except for '#' and '$' where silence means dropping out.
    for (StateId s = 0; s < net.states.size(); ++s) {
        if (s == u) continue;
        for (ActionId a = 0; a < net.alphabet.size(); ++a) {
            if (rules.no_default.count(a)) continue;
            if (rules.explicit_rule.count({s, a}) || rules.obstacle.count({s, a}))
                continue;
            net.add_transition(s, a, 0, s);
        }
    }

    out.initial = make_process(net, "Init", 0);
    out.machine = m;
    return out;
}

IcmRun decode_witness(const ReductionOutput& out, const std::vector<std::string>& word) {
    const Icm& m = out.machine;
    if (word.size() < 2 || word.front() != "#")
        throw std::invalid_argument("decode: witness must start with '#'");
    std::size_t end = word.size();
    if (word[end - 1] != "$")
        throw std::invalid_argument("decode: witness must end with '$'");
    --end;
    if (end >= 2 && word[end - 1] == "$") --end;  // tolerate a doubled marker

    IcmRun run;
    IcmConfig c{m.initial, std::vector<std::int64_t>(m.counters, 0)};
    for (std::size_t i = 1; i < end; ++i) {
        auto it = out.dictionary.find(word[i]);
        if (it == out.dictionary.end())
            throw std::invalid_argument("decode: unknown letter " + word[i]);
        const ActionMeaning& what = it->second;
        switch (what.kind) {
            case ActionMeaning::run_start:
            case ActionMeaning::run_end:
                throw std::invalid_argument("decode: marker " + word[i] +
                                            " inside the run body");
            case ActionMeaning::error:
                ++c.counters[what.index - 1];
                run.steps.push_back({true, what.index, 0, c});
                break;
            case ActionMeaning::transition: {
                const IcmTransition& t = m.transitions[what.index];
                if (c.state != t.src)
                    throw std::invalid_argument("decode: " + word[i] +
                                                " fires from the wrong state");
                std::int64_t& v = c.counters[t.counter - 1];
                if (t.op == IcmOp::ifz && v != 0)
                    throw std::invalid_argument(
                        "decode: zero-test on a positive counter");
                if (t.op == IcmOp::dec && v == 0) {
                    ++v;  // the reduction reseeds from Z: an implicit error
                    run.steps.push_back({true, t.counter, 0, c});
                }
                if (t.op == IcmOp::inc) ++v;
                if (t.op == IcmOp::dec) --v;
                c.state = t.dst;
                run.steps.push_back({false, t.counter, what.index, c});
                break;
            }
        }
    }
    if (c.state != m.final_state)
        throw std::invalid_argument("decode: run does not reach the final state");
    return run;
}

std::pair<Ocn, Macrostate> counting_gadget(std::size_t k, std::int64_t m,
                                           std::int64_t n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("counting_gadget: negative start value");
    Ocn net;
    net.name = "gadget-k" + std::to_string(k);
    net.add_state("A");
    for (std::size_t i = 0; i <= k; ++i) net.add_state("F" + std::to_string(i));
    net.add_state("U");
    for (std::size_t i = 0; i <= k; ++i) net.add_action(std::to_string(i));
    net.add_action("e");

    // Accumulator: grows on '0', seeds F_i on 'i+1' while staying alive,
    // and silently dies on 'e'.
    net.add_transition("A", "0", +1, "A");
    for (std::size_t i = 0; i + 1 <= k; ++i) {
        net.add_transition("A", std::to_string(i + 1), 0, "F" + std::to_string(i));
        net.add_transition("A", std::to_string(i + 1), 0, "A");
    }

    // Countdown states: drain on their own digit, tolerate smaller digits,
    // and object to larger digits and to 'e'.
    for (std::size_t i = 0; i <= k; ++i) {
        std::string fi = "F" + std::to_string(i);
        net.add_transition(fi, std::to_string(i), -1, fi);
        for (std::size_t j = 0; j < i; ++j)
            net.add_transition(fi, std::to_string(j), 0, fi);
        for (std::size_t j = i + 1; j <= k; ++j)
            net.add_transition(fi, std::to_string(j), 0, "U");
        net.add_transition(fi, "e", 0, "U");
    }

    for (const std::string& a : net.alphabet) net.add_transition("U", a, 0, "U");

    Macrostate start;
    start.v.assign(net.states.size(), kBottom);
    start.v[net.state_id("A")] = m;
    start.v[net.state_id("F" + std::to_string(k))] = n;
    return {net, start};
}

BigInt fast_growing(std::uint64_t k, const BigInt& x, const BigInt& magnitude_cap) {
    if (x < 0) throw std::invalid_argument("fast_growing: negative argument");
    if (x > magnitude_cap)
        throw std::overflow_error("fast_growing: argument exceeds magnitude cap");
    if (k == 0) {
        BigInt r = x + 1;
        if (r > magnitude_cap)
            throw std::overflow_error("fast_growing: value exceeds magnitude cap");
        return r;
    }
    BigInt v = x;
    for (BigInt i = 0, reps = x + 1; i < reps; ++i)
        v = fast_growing(k - 1, v, magnitude_cap);
    return v;
}

BigInt fast_growing_omega(const BigInt& x, const BigInt& magnitude_cap) {
    if (x < 0) throw std::invalid_argument("fast_growing_omega: negative argument");
    if (x > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw std::overflow_error("fast_growing_omega: level out of range");
    return fast_growing(static_cast<std::uint64_t>(x), x, magnitude_cap);
}

}  // namespace ocnet
