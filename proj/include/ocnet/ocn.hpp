#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ocnet {

using StateId = std::size_t;
using ActionId = std::size_t;

/// A process is a net state together with a nonnegative counter value.
struct Process {
    StateId state = 0;
    std::int64_t counter = 0;

    friend bool operator==(const Process& a, const Process& b) {
        return a.state == b.state && a.counter == b.counter;
    }
    friend bool operator<(const Process& a, const Process& b) {
        if (a.state != b.state) return a.state < b.state;
        return a.counter < b.counter;
    }
};

/// Single counter transition. Effects are restricted to -1, 0, +1;
/// a step p(m) -a-> q(m+effect) exists iff m+effect >= 0.
struct Transition {
    StateId src = 0;
    ActionId action = 0;
    int effect = 0;
    StateId dst = 0;

    friend bool operator==(const Transition& a, const Transition& b) {
        return a.src == b.src && a.action == b.action && a.effect == b.effect &&
               a.dst == b.dst;
    }
};

/// One-counter net. States and actions are interned: the string names live
/// in `states`/`alphabet` (declaration order is significant for macrostates
/// and generated fresh labels), transitions refer to them by index.
struct Ocn {
    std::string name = "net";
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::vector<Transition> transitions;

    StateId add_state(const std::string& s);
    ActionId add_action(const std::string& a);
    /// Adds src -(action,effect)-> dst; duplicates are ignored.
    /// Throws std::invalid_argument if effect is outside {-1,0,+1}.
    void add_transition(StateId src, ActionId action, int effect, StateId dst);
    void add_transition(const std::string& src, const std::string& action,
                        int effect, const std::string& dst);

    bool has_state(const std::string& s) const;
    bool has_action(const std::string& a) const;
    StateId state_id(const std::string& s) const;
    ActionId action_id(const std::string& a) const;

    const std::string& state_name(StateId i) const { return states.at(i); }
    const std::string& action_name(ActionId i) const { return alphabet.at(i); }

    /// All transitions out of `src` labeled `action`, in declaration order.
    std::vector<Transition> outgoing(StateId src, ActionId action) const;

  private:
    std::map<std::string, StateId> state_index_;
    std::map<std::string, ActionId> action_index_;
};

struct NetClass {
    bool deterministic = false;  // at most one transition per (state, action)
    bool complete = false;       // at least one transition per (state, action)
};

/// All one-step successors of `p` under `action`, sorted and deduplicated.
std::vector<Process> step(const Ocn& net, const Process& p, ActionId action);
std::vector<Process> step(const Ocn& net, const Process& p, const std::string& action);

NetClass classify_net(const Ocn& net);

/// Convenience: parse "state:counter" into a process of `net`.
Process make_process(const Ocn& net, const std::string& state, std::int64_t counter);

}  // namespace ocnet
