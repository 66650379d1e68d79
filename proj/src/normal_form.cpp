#include "ocnet/normal_form.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ocnet {

namespace {

// Guard/effect profile of an effect sequence read as one compressed step.
struct Unit {
    std::int64_t guard = 0;   // smallest counter that enables the whole unit
    std::int64_t effect = 0;  // total counter change
};

Unit profile(const std::vector<int>& effects) {
    Unit u;
    std::int64_t sum = 0, lo = 0;
    for (int e : effects) {
        sum += e;
        lo = std::min(lo, sum);
    }
    u.guard = -lo;
    u.effect = sum;
    return u;
}

std::string fresh_name(const Ocn& net, std::string base) {
    while (net.has_state(base)) base += "~";
    return base;
}

}  // namespace

Ocn eliminate_epsilon(const Ocn& net) {
    if (!net.has_action(kEpsilon)) return net;
    const ActionId eps = net.action_id(kEpsilon);

    const std::size_t n = net.states.size();
    std::vector<std::vector<const Transition*>> eps_out(n), lab_out(n);
    for (const auto& t : net.transitions)
        (t.action == eps ? eps_out : lab_out)[t.src].push_back(&t);

    std::vector<bool> silent(n, false);
    for (StateId s = 0; s < n; ++s) silent[s] = !eps_out[s].empty();

    // A state is on an eps-cycle iff it reaches itself through eps edges.
    std::vector<bool> on_cycle(n, false);
    for (StateId s = 0; s < n; ++s) {
        std::vector<bool> seen(n, false);
        std::deque<StateId> queue;
        for (auto* t : eps_out[s]) queue.push_back(t->dst);
        while (!queue.empty()) {
            StateId at = queue.front();
            queue.pop_front();
            if (at == s) { on_cycle[s] = true; break; }
            if (seen[at]) continue;
            seen[at] = true;
            for (auto* t : eps_out[at]) queue.push_back(t->dst);
        }
    }

    Ocn out;
    out.name = net.name;
    for (const auto& s : net.states) out.add_state(s);
    for (const auto& a : net.alphabet)
        if (a != kEpsilon) out.add_action(a);

    // Non-silent states keep their labeled transitions verbatim.
    for (StateId s = 0; s < n; ++s) {
        if (silent[s]) continue;
        for (auto* t : lab_out[s])
            out.add_transition(out.state_id(net.state_name(t->src)),
                               out.action_id(net.action_name(t->action)),
                               t->effect,
                               out.state_id(net.state_name(t->dst)));
    }

    // Compressed units: for the emitted first step, any residual difference
    // between the simulated and the true counter is carried by a fresh
    // (target, pending) state. pending > 0 means the true counter is higher.
    std::map<std::pair<StateId, std::int64_t>, StateId> pending_states;
    std::deque<std::pair<StateId, std::int64_t>> todo;

    auto pending_state = [&](StateId orig_dst, std::int64_t k) -> StateId {
        auto key = std::make_pair(orig_dst, k);
        auto it = pending_states.find(key);
        if (it != pending_states.end()) return it->second;
        std::string base = net.state_name(orig_dst) + (k > 0 ? "+" : "") +
                           std::to_string(k);
        StateId id = out.add_state(fresh_name(out, base));
        pending_states[key] = id;
        todo.push_back(key);
        return id;
    };

    // Emits a single-action edge realizing `u`, possibly via a pending state.
    auto emit_unit = [&](StateId src_out, ActionId act_out, Unit u, StateId orig_dst) {
        int first = 0;
        if (u.guard >= 1)
            first = -1;
        else
            first = u.effect >= 1 ? 1 : static_cast<int>(u.effect);
        std::int64_t pending = u.effect - first;
        StateId dst_out = pending == 0 ? out.state_id(net.state_name(orig_dst))
                                       : pending_state(orig_dst, pending);
        out.add_transition(src_out, act_out, first, dst_out);
    };

    // Silent states off any cycle: walk every eps-path to a non-silent state
    // and fold it into that state's labeled steps.
    for (StateId s = 0; s < n; ++s) {
        if (!silent[s] || on_cycle[s]) continue;
        StateId src_out = out.state_id(net.state_name(s));
        // DFS over eps-paths from s; cycle states are skipped, so this ends.
        struct Frame { StateId at; std::vector<int> effects; };
        std::vector<Frame> stack{{s, {}}};
        while (!stack.empty()) {
            Frame f = stack.back();
            stack.pop_back();
            if (f.at != s && !silent[f.at]) {
                for (auto* t : lab_out[f.at]) {
                    auto effects = f.effects;
                    effects.push_back(t->effect);
                    emit_unit(src_out, out.action_id(net.action_name(t->action)),
                              profile(effects), t->dst);
                }
                continue;
            }
            for (auto* t : eps_out[f.at]) {
                if (on_cycle[t->dst]) continue;  // leads to a deadlock
                auto effects = f.effects;
                effects.push_back(t->effect);
                stack.push_back({t->dst, std::move(effects)});
            }
        }
    }

    // Pending states replay the target's outgoing steps with the difference
    // folded into each emitted effect.
    while (!todo.empty()) {
        auto [orig, k] = todo.front();
        todo.pop_front();
        StateId src_out = pending_states.at({orig, k});
        for (auto* t : lab_out[orig]) {
            std::int64_t shifted = t->effect + k;
            int first = static_cast<int>(std::clamp<std::int64_t>(shifted, -1, 1));
            std::int64_t rest = shifted - first;
            StateId dst_out = rest == 0 ? out.state_id(net.state_name(t->dst))
                                        : pending_state(t->dst, rest);
            out.add_transition(src_out, out.action_id(net.action_name(t->action)),
                               first, dst_out);
        }
    }

    return out;
}

NormalizedPair normalize_pair(const Ocn& a, const Ocn& b) {
    for (const Ocn* net : {&a, &b}) {
        if (net->has_action(kEpsilon))
            throw std::invalid_argument(net->name +
                                        ": eps transitions present, run eliminate_epsilon first");
        if (net->has_action(kDollar))
            throw std::invalid_argument(net->name + ": action name $ is reserved");
    }

    NormalizedPair np;
    np.a.name = a.name;
    np.b.name = b.name;
    for (const auto& s : a.states) np.a.add_state(s);
    for (const auto& s : b.states) np.b.add_state(s);

    const bool relabel = !classify_net(a).deterministic;
    if (relabel) {
        for (std::size_t i = 0; i < a.transitions.size(); ++i) {
            const auto& t = a.transitions[i];
            std::string fresh = "t" + std::to_string(i);
            ActionId na = np.a.add_action(fresh);
            np.b.add_action(fresh);
            np.a.add_transition(t.src, na, t.effect, t.dst);
            np.label_map[fresh] = a.action_name(t.action);
            for (const auto& u : b.transitions)
                if (b.action_name(u.action) == a.action_name(t.action))
                    np.b.add_transition(u.src, np.b.action_id(fresh), u.effect, u.dst);
        }
    } else {
        for (const auto& act : a.alphabet) {
            np.a.add_action(act);
            np.b.add_action(act);
            np.label_map[act] = act;
        }
        for (const auto& t : a.transitions)
            np.a.add_transition(t.src, np.a.action_id(a.action_name(t.action)),
                                t.effect, t.dst);
        for (const auto& u : b.transitions) {
            const std::string& act = b.action_name(u.action);
            if (!np.b.has_action(act)) continue;  // never matched by the left net
            np.b.add_transition(u.src, np.b.action_id(act), u.effect, u.dst);
        }
    }

    ActionId da = np.a.add_action(kDollar);
    ActionId db = np.b.add_action(kDollar);
    for (StateId s = 0; s < np.a.states.size(); ++s)
        np.a.add_transition(s, da, 0, s);
    for (StateId s = 0; s < np.b.states.size(); ++s)
        np.b.add_transition(s, db, 0, s);

    StateId sink = np.b.add_state(fresh_name(np.b, "L"));
    for (ActionId x = 0; x < np.b.alphabet.size(); ++x)
        np.b.add_transition(sink, x, -1, sink);
    for (StateId s = 0; s < np.b.states.size(); ++s) {
        if (s == sink) continue;
        for (ActionId x = 0; x < np.b.alphabet.size(); ++x)
            if (np.b.outgoing(s, x).empty()) np.b.add_transition(s, x, 0, sink);
    }
    return np;
}

}  // namespace ocnet
