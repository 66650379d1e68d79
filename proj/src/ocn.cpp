#include "ocnet/ocn.hpp"

#include <algorithm>

namespace ocnet {

StateId Ocn::add_state(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("state name must be non-empty");
    auto it = state_index_.find(s);
    if (it != state_index_.end()) return it->second;
    states.push_back(s);
    return state_index_[s] = states.size() - 1;
}

ActionId Ocn::add_action(const std::string& a) {
    if (a.empty()) throw std::invalid_argument("action name must be non-empty");
    auto it = action_index_.find(a);
    if (it != action_index_.end()) return it->second;
    alphabet.push_back(a);
    return action_index_[a] = alphabet.size() - 1;
}

void Ocn::add_transition(StateId src, ActionId action, int effect, StateId dst) {
    if (effect < -1 || effect > 1)
        throw std::invalid_argument("transition effect must be -1, 0 or +1, got " +
                                    std::to_string(effect));
    if (src >= states.size() || dst >= states.size())
        throw std::invalid_argument("transition endpoint out of range");
    if (action >= alphabet.size())
        throw std::invalid_argument("transition action out of range");
    Transition t{src, action, effect, dst};
    if (std::find(transitions.begin(), transitions.end(), t) != transitions.end())
        return;
    transitions.push_back(t);
}

void Ocn::add_transition(const std::string& src, const std::string& action,
                         int effect, const std::string& dst) {
    add_transition(add_state(src), add_action(action), effect, add_state(dst));
}

bool Ocn::has_state(const std::string& s) const { return state_index_.count(s) > 0; }
bool Ocn::has_action(const std::string& a) const { return action_index_.count(a) > 0; }

StateId Ocn::state_id(const std::string& s) const {
    auto it = state_index_.find(s);
    if (it == state_index_.end())
        throw std::invalid_argument("unknown state: " + s);
    return it->second;
}

ActionId Ocn::action_id(const std::string& a) const {
    auto it = action_index_.find(a);
    if (it == action_index_.end())
        throw std::invalid_argument("unknown action: " + a);
    return it->second;
}

std::vector<Transition> Ocn::outgoing(StateId src, ActionId action) const {
    std::vector<Transition> out;
    for (const auto& t : transitions)
        if (t.src == src && t.action == action) out.push_back(t);
    return out;
}

std::vector<Process> step(const Ocn& net, const Process& p, ActionId action) {
    if (p.state >= net.states.size())
        throw std::invalid_argument("process state out of range");
    if (p.counter < 0) throw std::invalid_argument("process counter must be >= 0");
    std::vector<Process> out;
    for (const auto& t : net.transitions) {
        if (t.src != p.state || t.action != action) continue;
        std::int64_t next = p.counter + t.effect;
        if (next < 0) continue;
        out.push_back(Process{t.dst, next});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Process> step(const Ocn& net, const Process& p, const std::string& action) {
    return step(net, p, net.action_id(action));
}

NetClass classify_net(const Ocn& net) {
    NetClass c{true, true};
    for (StateId s = 0; s < net.states.size(); ++s) {
        for (ActionId a = 0; a < net.alphabet.size(); ++a) {
            std::size_t n = 0;
            for (const auto& t : net.transitions)
                if (t.src == s && t.action == a) ++n;
            if (n > 1) c.deterministic = false;
            if (n == 0) c.complete = false;
        }
    }
    return c;
}

Process make_process(const Ocn& net, const std::string& state, std::int64_t counter) {
    if (counter < 0) throw std::invalid_argument("counter must be >= 0");
    return Process{net.state_id(state), counter};
}

}  // namespace ocnet
