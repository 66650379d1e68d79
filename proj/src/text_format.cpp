#include "ocnet/text_format.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace ocnet {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        // Whole-line comments only: '#' and '$' are legitimate action names
        // (run delimiters of the reduction nets), so they must survive
        // inside directives.
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        lines.push_back(std::move(line));
    }
    return lines;
}

int parse_effect(const Line& line, const std::string& tok) {
    if (tok == "-1") return -1;
    if (tok == "0") return 0;
    if (tok == "1" || tok == "+1") return 1;
    throw ParseError(line.number, "effect must be -1, 0 or 1, got '" + tok + "'");
}

void need(const Line& line, std::size_t count, const std::string& usage) {
    if (line.tokens.size() != count)
        throw ParseError(line.number, "expected '" + usage + "'");
}

}  // namespace

Ocn parse_ocn(const std::string& text) {
    Ocn net;
    bool named = false;
    for (const Line& line : tokenize(text)) {
        const auto& t = line.tokens;
        if (t[0] == "net") {
            need(line, 2, "net <id>");
            if (named) throw ParseError(line.number, "second 'net' directive");
            net.name = t[1];
            named = true;
        } else if (t[0] == "alphabet") {
            if (t.size() < 2)
                throw ParseError(line.number, "alphabet needs at least one action");
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (net.has_action(t[i]))
                    throw ParseError(line.number, "duplicate action '" + t[i] + "'");
                net.add_action(t[i]);
            }
        } else if (t[0] == "state") {
            if (t.size() < 2)
                throw ParseError(line.number, "state needs at least one name");
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (net.has_state(t[i]))
                    throw ParseError(line.number, "duplicate state '" + t[i] + "'");
                net.add_state(t[i]);
            }
        } else if (t[0] == "trans") {
            need(line, 5, "trans <src> <action> <-1|0|1> <dst>");
            if (!net.has_state(t[1]))
                throw ParseError(line.number, "unknown state '" + t[1] + "'");
            if (!net.has_action(t[2]))
                throw ParseError(line.number, "unknown action '" + t[2] + "'");
            if (!net.has_state(t[4]))
                throw ParseError(line.number, "unknown state '" + t[4] + "'");
            Transition tr{net.state_id(t[1]), net.action_id(t[2]),
                          parse_effect(line, t[3]), net.state_id(t[4])};
            if (std::find(net.transitions.begin(), net.transitions.end(), tr) !=
                net.transitions.end())
                throw ParseError(line.number, "duplicate transition");
            net.transitions.push_back(tr);
        } else {
            throw ParseError(line.number, "unknown directive '" + t[0] + "'");
        }
    }
    if (net.states.empty()) throw ParseError(0, "net has no states");
    return net;
}

Icm parse_icm(const std::string& text) {
    Icm m;
    bool named = false, has_init = false, has_final = false, has_counters = false;
    for (const Line& line : tokenize(text)) {
        const auto& t = line.tokens;
        if (t[0] == "icm") {
            need(line, 2, "icm <id>");
            if (named) throw ParseError(line.number, "second 'icm' directive");
            m.name = t[1];
            named = true;
        } else if (t[0] == "counters") {
            need(line, 2, "counters <k>");
            try {
                m.counters = std::stoul(t[1]);
            } catch (const std::exception&) {
                throw ParseError(line.number, "bad counter count '" + t[1] + "'");
            }
            if (m.counters == 0)
                throw ParseError(line.number, "need at least one counter");
            has_counters = true;
        } else if (t[0] == "state") {
            if (t.size() < 2)
                throw ParseError(line.number, "state needs at least one name");
            for (std::size_t i = 1; i < t.size(); ++i) {
                if (m.has_state(t[i]))
                    throw ParseError(line.number, "duplicate state '" + t[i] + "'");
                m.add_state(t[i]);
            }
        } else if (t[0] == "init" || t[0] == "final") {
            need(line, 2, t[0] + " <id>");
            if (!m.has_state(t[1]))
                throw ParseError(line.number, "unknown state '" + t[1] + "'");
            (t[0] == "init" ? m.initial : m.final_state) = m.state_id(t[1]);
            (t[0] == "init" ? has_init : has_final) = true;
        } else if (t[0] == "trans") {
            need(line, 5, "trans <src> <inc|dec|ifz> <i> <dst>");
            if (!m.has_state(t[1]))
                throw ParseError(line.number, "unknown state '" + t[1] + "'");
            if (!m.has_state(t[4]))
                throw ParseError(line.number, "unknown state '" + t[4] + "'");
            IcmOp op;
            if (t[2] == "inc") op = IcmOp::inc;
            else if (t[2] == "dec") op = IcmOp::dec;
            else if (t[2] == "ifz") op = IcmOp::ifz;
            else throw ParseError(line.number, "unknown op '" + t[2] + "'");
            std::size_t counter;
            try {
                counter = std::stoul(t[3]);
            } catch (const std::exception&) {
                throw ParseError(line.number, "bad counter index '" + t[3] + "'");
            }
            if (counter == 0)
                throw ParseError(line.number, "counters are numbered from 1");
            IcmTransition tr{m.state_id(t[1]), op, counter, m.state_id(t[4])};
            for (const IcmTransition& old : m.transitions)
                if (old.src == tr.src && old.op == tr.op &&
                    old.counter == tr.counter && old.dst == tr.dst)
                    throw ParseError(line.number, "duplicate transition");
            m.transitions.push_back(tr);
        } else {
            throw ParseError(line.number, "unknown directive '" + t[0] + "'");
        }
    }
    if (m.states.empty()) throw ParseError(0, "machine has no states");
    if (!has_counters) throw ParseError(0, "missing 'counters' directive");
    if (!has_init) throw ParseError(0, "missing 'init' directive");
    if (!has_final) throw ParseError(0, "missing 'final' directive");
    for (const IcmTransition& tr : m.transitions)
        if (tr.counter > m.counters)
            throw ParseError(0, "transition uses counter " +
                                    std::to_string(tr.counter) + " of " +
                                    std::to_string(m.counters));
    return m;
}

std::string serialize_ocn(const Ocn& net) {
    std::ostringstream out;
    out << "net " << net.name << "\n";
    if (!net.alphabet.empty()) {
        out << "alphabet";
        for (const auto& a : net.alphabet) out << ' ' << a;
        out << "\n";
    }
    out << "state";
    for (const auto& s : net.states) out << ' ' << s;
    out << "\n";
    for (const Transition& t : net.transitions)
        out << "trans " << net.state_name(t.src) << ' ' << net.action_name(t.action)
            << ' ' << t.effect << ' ' << net.state_name(t.dst) << "\n";
    return out.str();
}

std::string serialize_icm(const Icm& m) {
    std::ostringstream out;
    out << "icm " << m.name << "\n";
    out << "counters " << m.counters << "\n";
    out << "state";
    for (const auto& s : m.states) out << ' ' << s;
    out << "\n";
    out << "init " << m.states.at(m.initial) << "\n";
    out << "final " << m.states.at(m.final_state) << "\n";
    for (const IcmTransition& t : m.transitions)
        out << "trans " << m.states.at(t.src) << ' ' << icm_op_name(t.op) << ' '
            << t.counter << ' ' << m.states.at(t.dst) << "\n";
    return out.str();
}

Process parse_process(const Ocn& net, const std::string& text) {
    auto colon = text.rfind(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("process must look like state:counter, got '" +
                                    text + "'");
    std::string state = text.substr(0, colon);
    std::string count = text.substr(colon + 1);
    if (!net.has_state(state))
        throw std::invalid_argument("unknown state '" + state + "'");
    std::int64_t value;
    try {
        std::size_t used = 0;
        value = std::stoll(count, &used);
        if (used != count.size()) throw std::invalid_argument(count);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad counter value '" + count + "'");
    }
    if (value < 0) throw std::invalid_argument("counter must be nonnegative");
    return Process{net.state_id(state), value};
}

}  // namespace ocnet
