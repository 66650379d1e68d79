#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ocnet/bounds.hpp"
#include "ocnet/difftest.hpp"
#include "ocnet/inclusion.hpp"
#include "ocnet/ineq.hpp"
#include "ocnet/normal_form.hpp"
#include "ocnet/ocn.hpp"
#include "ocnet/oracles.hpp"
#include "ocnet/product.hpp"
#include "ocnet/reductions.hpp"
#include "ocnet/report.hpp"
#include "ocnet/rewrite.hpp"
#include "ocnet/text_format.hpp"
#include "ocnet/universality.hpp"

namespace {

using namespace ocnet;

constexpr int kExitHolds = 0;
constexpr int kExitWitness = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

std::vector<std::string> split_word(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void emit(const Report& report, bool json) {
    std::cout << (json ? report.json() : report.text());
}

Ocn load_net(const std::string& path) {
    Ocn net = parse_ocn(read_file(path));
    if (net.has_action(kEpsilon)) net = eliminate_epsilon(net);
    return net;
}

std::string path_to_string(const ProductGraph& g, const Path& p) {
    if (p.empty()) return "(empty)";
    std::string out = g.node_name(p.source());
    for (const ProductEdge& e : p.edges) {
        out += " -" + g.a.action_name(e.action) + "-> ";
        out += g.node_name(e.dst);
    }
    return out;
}

std::string path_word_string(const Ocn& a, const Path& p) {
    std::vector<std::string> word;
    for (const ProductEdge& e : p.edges) word.push_back(a.action_name(e.action));
    return format_word(word);
}

std::string join_u64(const std::vector<std::uint64_t>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    return out.empty() ? "-" : out;
}

std::string macrostate_string(const Ocn& net, const Macrostate& m) {
    std::string out;
    for (std::size_t i = 0; i < m.v.size(); ++i) {
        if (m.v[i] == kBottom) continue;
        if (!out.empty()) out += ' ';
        out += net.state_name(i) + "=" + std::to_string(m.v[i]);
    }
    return out.empty() ? "(all bottom)" : out;
}

// include / universal / difftest share this: normalize unless the pair is
// already directly usable (same alphabet and complete right-hand side).
struct LoadedPair {
    Ocn a, b;
    bool normalized = false;
};

LoadedPair load_pair_for_inclusion(const std::string& file_a,
                                   const std::string& file_b) {
    Ocn a = load_net(file_a);
    Ocn b = load_net(file_b);
    bool same_alphabet = a.alphabet == b.alphabet;
    if (same_alphabet && classify_net(b).complete) return {a, b, false};
    NormalizedPair np = normalize_pair(a, b);
    return {np.a, np.b, true};
}

int run_normalize(const std::string& file_a, const std::string& file_b,
                  const std::string& out_a, const std::string& out_b,
                  bool json) {
    std::string text_a = read_file(file_a), text_b = read_file(file_b);
    Ocn a = parse_ocn(text_a), b = parse_ocn(text_b);
    if (a.has_action(kEpsilon)) a = eliminate_epsilon(a);
    if (b.has_action(kEpsilon)) b = eliminate_epsilon(b);
    NormalizedPair np = normalize_pair(a, b);
    std::string sa = serialize_ocn(np.a), sb = serialize_ocn(np.b);

    Report r;
    r.set("command", std::string("normalize"));
    r.set("digest", input_digest(text_a + text_b));
    r.set("a_states", std::uint64_t(np.a.states.size()));
    r.set("b_states", std::uint64_t(np.b.states.size()));
    r.set("alphabet", std::uint64_t(np.a.alphabet.size()));
    r.set("relabeled", !np.label_map.empty());

    if (json) {
        r.set("normalized_a", sa);
        r.set("normalized_b", sb);
        emit(r, true);
    } else if (!out_a.empty() || !out_b.empty()) {
        if (!out_a.empty()) write_file(out_a, sa);
        if (!out_b.empty()) write_file(out_b, sb);
        emit(r, false);
    } else {
        std::cout << sa << "# ---\n" << sb;
    }
    return kExitHolds;
}

int run_product(const std::string& file_a, const std::string& file_b, bool json,
                bool loops_mode) {
    Ocn a = load_net(file_a);
    Ocn b = load_net(file_b);
    ProductGraph g = build_product(a, b);
    Report r;
    r.set("command", std::string(loops_mode ? "loops" : "product"));
    r.set("digest", input_digest(serialize_ocn(a) + serialize_ocn(b)));
    r.set("nodes", std::uint64_t(g.node_count()));
    r.set("edges", std::uint64_t(g.edges.size()));
    if (loops_mode) {
        std::vector<Loop> loops = enumerate_loops(g);
        r.set("loops", std::uint64_t(loops.size()));
        for (std::size_t i = 0; i < loops.size(); ++i) {
            const Loop& l = loops[i];
            r.set("loop" + std::to_string(i),
                  path_to_string(g, l.path) + " | word " +
                      path_word_string(a, l.path) + " | effect (" +
                      std::to_string(l.path.effect_a) + "," +
                      std::to_string(l.path.effect_b) + ") | " +
                      loop_type_name(l.type) + " | slope " + l.slope.str());
        }
    } else {
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            const ProductEdge& e = g.edges[i];
            r.set("edge" + std::to_string(i),
                  g.node_name(e.src) + " -" + a.action_name(e.action) + "(" +
                      std::to_string(e.effect_a) + "," +
                      std::to_string(e.effect_b) + ")-> " + g.node_name(e.dst));
        }
    }
    emit(r, json);
    return kExitHolds;
}

int run_include(const std::string& file_a, const std::string& file_b,
                const std::string& proc_a, const std::string& proc_b,
                std::uint64_t budget, bool complete_search,
                std::uint64_t oracle_depth, bool json) {
    Timer timer;
    LoadedPair pair = load_pair_for_inclusion(file_a, file_b);
    Process pm = parse_process(pair.a, proc_a);
    Process qn = parse_process(pair.b, proc_b);

    InclusionOptions opt;
    opt.budget = budget;
    if (complete_search) {
        BigInt c = bound_table(pair.a.states.size() * pair.b.states.size()).c;
        opt.budget = c > std::numeric_limits<std::uint64_t>::max()
                         ? std::numeric_limits<std::uint64_t>::max()
                         : c.convert_to<std::uint64_t>();
    }

    InclusionResult res = decide_inclusion(pair.a, pair.b, pm, qn, opt);

    Report r;
    r.set("command", std::string("include"));
    r.set("digest",
          input_digest(serialize_ocn(pair.a) + serialize_ocn(pair.b)));
    r.set("left", pair.a.state_name(pm.state) + ":" + std::to_string(pm.counter));
    r.set("right", pair.b.state_name(qn.state) + ":" + std::to_string(qn.counter));
    r.set("normalized", pair.normalized);
    r.set("budget", opt.budget);

    int rc = kExitHolds;
    if (const auto* inc = std::get_if<Included>(&res.verdict)) {
        r.set("verdict", std::string("included"));
        r.set("certified", inc->certified);
    } else if (const auto* ni = std::get_if<NotIncluded>(&res.verdict)) {
        ProductGraph g = build_product(pair.a, pair.b);
        r.set("verdict", std::string("not_included"));
        r.set("witness", path_word_string(pair.a, ni->witness));
        r.set("witness_path", path_to_string(g, ni->witness));
        r.set("template", template_name(ni->tmpl));
        r.set("exponents", join_u64(ni->exponents));
        rc = kExitWitness;
    } else {
        r.set("verdict", std::string("budget_exhausted"));
        rc = kExitBudget;
    }
    r.set("paths_enumerated", res.stats.paths_enumerated);
    r.set("templates_tried", res.stats.templates_tried);
    r.set("search_complete", res.stats.complete);

    if (oracle_depth > 0) {
        OracleAnswer oracle =
            inclusion_oracle(pair.a, pair.b, pm, qn, oracle_depth);
        switch (oracle.status) {
            case OracleStatus::witness:
                r.set("oracle", std::string("witness"));
                r.set("oracle_witness", format_word(oracle.word));
                break;
            case OracleStatus::exhausted:
                r.set("oracle", "none up to depth " + std::to_string(oracle_depth));
                break;
            case OracleStatus::capped:
                r.set("oracle", std::string("frontier capped"));
                break;
        }
    }
    r.set("elapsed_ms", std::int64_t(timer.ms()));
    emit(r, json);
    return rc;
}

int run_universal(const std::string& file,
                  const std::vector<std::string>& proc_texts, bool shortest,
                  std::uint64_t budget, bool json) {
    Timer timer;
    Ocn net = load_net(file);
    Macrostate start{std::vector<std::int64_t>(net.states.size(), kBottom)};
    std::string shown;
    for (const std::string& text : proc_texts) {
        Process p = parse_process(net, text);
        start.v[p.state] = std::max(start.v[p.state], p.counter);
        if (!shown.empty()) shown += " ";
        shown += net.state_name(p.state) + ":" + std::to_string(p.counter);
    }
    UniversalityOptions opt;
    opt.budget = budget;
    opt.shortest = shortest;
    UniversalityResult res = find_nonuniversality_witness(net, start, opt);

    Report r;
    r.set("command", std::string("universal"));
    r.set("digest", input_digest(serialize_ocn(net)));
    r.set("process", shown);
    r.set("budget", opt.budget);
    r.set("shortest", opt.shortest);

    int rc = kExitHolds;
    switch (res.status) {
        case UniversalityStatus::universal:
            r.set("verdict", std::string("universal"));
            break;
        case UniversalityStatus::non_universal:
            r.set("verdict", std::string("non_universal"));
            r.set("witness", format_word(res.word));
            rc = kExitWitness;
            break;
        case UniversalityStatus::budget_exhausted:
            r.set("verdict", std::string("budget_exhausted"));
            rc = kExitBudget;
            break;
    }
    r.set("macro_steps", res.steps);
    r.set("elapsed_ms", std::int64_t(timer.ms()));
    emit(r, json);
    return rc;
}

int run_rewrite(const std::string& file_a, const std::string& file_b,
                const std::string& state_a, const std::string& state_b,
                const std::string& word_text, const std::string& rule,
                std::size_t bi, std::size_t bj, std::uint64_t x, std::uint64_t y,
                bool json) {
    Ocn a = load_net(file_a);
    Ocn b = load_net(file_b);
    ProductGraph g = build_product(a, b);
    if (!a.has_state(state_a)) throw std::runtime_error("unknown state '" + state_a + "'");
    if (!b.has_state(state_b)) throw std::runtime_error("unknown state '" + state_b + "'");
    NodeId start = g.node_id(a.state_id(state_a), b.state_id(state_b));

    auto lifted = lift_word(g, start, split_word(word_text));
    if (!lifted)
        throw std::runtime_error(
            "word does not lift to a unique product path from " +
            g.node_name(start));
    Path path = *lifted;

    Report r;
    r.set("command", std::string("rewrite"));
    r.set("digest", input_digest(serialize_ocn(a) + serialize_ocn(b)));
    r.set("input_word", path_word_string(a, path));
    r.set("input_weight", join_u64(weight(path)));

    if (rule.empty()) {
        std::vector<RuleInstance> trace;
        Path reduced = normalize(path, &trace);
        r.set("rule_applications", std::uint64_t(trace.size()));
        for (std::size_t i = 0; i < trace.size(); ++i)
            r.set("step" + std::to_string(i),
                  rule_name(trace[i].rule) + "(i=" + std::to_string(trace[i].i) +
                      ",j=" + std::to_string(trace[i].j) +
                      ",x=" + std::to_string(trace[i].x) +
                      ",y=" + std::to_string(trace[i].y) + ")");
        r.set("reduced_word", path_word_string(a, reduced));
        r.set("reduced_weight", join_u64(weight(reduced)));
        BoundsReport bounds = check_reduced_bounds(reduced, g.node_count());
        r.set("bounds_ok", bounds.ok());
        for (std::size_t i = 0; i < bounds.violations.size(); ++i)
            r.set("violation" + std::to_string(i), bounds.violations[i].detail);
    } else {
        RuleInstance inst;
        if (rule == "UUL") inst.rule = RuleKind::UUL;
        else if (rule == "UUR") inst.rule = RuleKind::UUR;
        else if (rule == "UD") inst.rule = RuleKind::UD;
        else if (rule == "DDL") inst.rule = RuleKind::DDL;
        else if (rule == "DDR") inst.rule = RuleKind::DDR;
        else throw std::runtime_error("unknown rule '" + rule + "'");
        inst.i = bi;
        inst.j = bj;
        inst.x = x;
        inst.y = y;
        Path after = apply_rule(path, inst);  // throws std::logic_error if inapplicable
        r.set("applied", rule + "(i=" + std::to_string(bi) + ",j=" +
                             std::to_string(bj) + ",x=" + std::to_string(x) +
                             ",y=" + std::to_string(y) + ")");
        r.set("output_word", path_word_string(a, after));
        r.set("output_weight", join_u64(weight(after)));
    }
    emit(r, json);
    return kExitHolds;
}

int run_gen_icm2ocn(const std::string& file, const std::string& out, bool json) {
    std::string text = read_file(file);
    Icm m = parse_icm(text);
    ReductionOutput red = icm_to_ocn(m);
    std::string net_text = serialize_ocn(red.net);

    Report r;
    r.set("command", std::string("gen icm2ocn"));
    r.set("digest", input_digest(text));
    r.set("machine_states", std::uint64_t(m.states.size()));
    r.set("counters", std::uint64_t(m.counters));
    r.set("net_states", std::uint64_t(red.net.states.size()));
    r.set("net_actions", std::uint64_t(red.net.alphabet.size()));
    r.set("net_transitions", std::uint64_t(red.net.transitions.size()));
    r.set("initial", red.net.state_name(red.initial.state) + ":" +
                         std::to_string(red.initial.counter));

    if (json) {
        r.set("net", net_text);
        emit(r, true);
    } else if (!out.empty()) {
        write_file(out, net_text);
        emit(r, false);
    } else {
        std::cout << net_text;
    }
    return kExitHolds;
}

int run_gen_gadget(std::size_t k, std::int64_t m, std::int64_t n,
                   const std::string& out, bool json) {
    auto [net, start] = counting_gadget(k, m, n);
    std::string net_text = serialize_ocn(net);

    Report r;
    r.set("command", std::string("gen gadget"));
    r.set("k", std::uint64_t(k));
    r.set("m", m);
    r.set("n", n);
    r.set("net_states", std::uint64_t(net.states.size()));
    r.set("start", macrostate_string(net, start));

    if (json) {
        r.set("net", net_text);
        emit(r, true);
    } else if (!out.empty()) {
        write_file(out, net_text);
        emit(r, false);
    } else {
        std::cout << "# start: " << macrostate_string(net, start) << "\n"
                  << net_text;
    }
    return kExitHolds;
}

int run_decode(const std::string& file, const std::string& word_text, bool json) {
    std::string text = read_file(file);
    Icm m = parse_icm(text);
    ReductionOutput red = icm_to_ocn(m);
    IcmRun run = decode_witness(red, split_word(word_text));  // throws on bad words

    Report r;
    r.set("command", std::string("decode"));
    r.set("digest", input_digest(text));
    r.set("steps", std::uint64_t(run.steps.size()));
    for (std::size_t i = 0; i < run.steps.size(); ++i) {
        const IcmRunStep& s = run.steps[i];
        std::string line;
        if (s.is_error) {
            line = "error: counter " + std::to_string(s.counter) + " +1";
        } else {
            const IcmTransition& t = m.transitions.at(s.transition);
            line = m.states.at(t.src) + " -" + icm_op_name(t.op) +
                   std::to_string(t.counter) + "-> " + m.states.at(t.dst);
        }
        line += " | after: " + m.states.at(s.after.state);
        for (std::size_t c = 0; c < s.after.counters.size(); ++c)
            line += " c" + std::to_string(c + 1) + "=" +
                    std::to_string(s.after.counters[c]);
        r.set("step" + std::to_string(i), line);
    }
    emit(r, json);
    return kExitHolds;
}

int run_ineq(const std::vector<std::string>& operands, bool json) {
    BinaryNat m = BinaryNat::parse(operands[0]);
    BinaryNat a = BinaryNat::parse(operands[1]);
    BinaryNat b = BinaryNat::parse(operands[2]);
    BinaryNat n = BinaryNat::parse(operands[3]);
    BinaryNat c = BinaryNat::parse(operands[4]);
    BinaryNat d = BinaryNat::parse(operands[5]);

    IneqTrace trace;
    bool holds = check_weighted_inequality(m, a, b, n, c, d, &trace);
    bool exact = check_weighted_inequality_exact(m, a, b, n, c, d);

    std::size_t operand_bits = 0;
    for (const BinaryNat* op : {&m, &a, &b, &n, &c, &d})
        operand_bits = std::max(operand_bits, op->bit_length());

    Report r;
    r.set("command", std::string("ineq"));
    r.set("holds", holds);
    r.set("reference", exact);
    r.set("agree", holds == exact);
    r.set("steps", trace.steps);
    r.set("max_scratchpad", std::uint64_t(trace.max_scratchpad));
    r.set("scratchpad_bound", std::uint64_t(operand_bits + 2));
    emit(r, json);
    return holds ? kExitHolds : kExitWitness;
}

int run_difftest_include(std::uint64_t trials, std::uint64_t start,
                         std::uint64_t budget, std::uint64_t oracle_depth,
                         const std::string& dump_dir, bool json) {
    Timer timer;
    InclusionOptions opt;
    opt.budget = budget;
    std::uint64_t included = 0, not_included = 0, exhausted = 0;
    std::uint64_t contradictions = 0, misses = 0;
    std::string first_bad;

    for (std::uint64_t s = start; s < start + trials; ++s) {
        IncludeTrial t = run_include_trial(s, opt, oracle_depth);
        if (std::holds_alternative<Included>(t.result.verdict)) ++included;
        else if (std::holds_alternative<NotIncluded>(t.result.verdict)) ++not_included;
        else ++exhausted;
        if (t.completeness_miss) ++misses;
        if (t.contradiction) {
            ++contradictions;
            if (first_bad.empty())
                first_bad = "seed " + std::to_string(s) + ": " + t.detail;
            if (!dump_dir.empty()) {
                std::string base = dump_dir + "/include_" + std::to_string(s);
                write_file(base + "_a.ocn", serialize_ocn(t.a));
                write_file(base + "_b.ocn", serialize_ocn(t.b));
                write_file(base + ".txt",
                           t.detail + "\nleft " +
                               t.a.state_name(t.pm.state) + ":" +
                               std::to_string(t.pm.counter) + "\nright " +
                               t.b.state_name(t.qn.state) + ":" +
                               std::to_string(t.qn.counter) + "\n");
            }
        }
    }

    Report r;
    r.set("command", std::string("difftest include"));
    r.set("seed", start);
    r.set("trials", trials);
    r.set("budget", budget);
    r.set("oracle_depth", oracle_depth);
    r.set("included", included);
    r.set("not_included", not_included);
    r.set("budget_exhausted", exhausted);
    r.set("completeness_misses", misses);
    r.set("contradictions", contradictions);
    if (!first_bad.empty()) r.set("first_contradiction", first_bad);
    r.set("elapsed_ms", std::int64_t(timer.ms()));
    emit(r, json);
    return contradictions == 0 ? kExitHolds : kExitWitness;
}

int run_difftest_universal(std::uint64_t trials, std::uint64_t start,
                           std::uint64_t budget, std::uint64_t max_len,
                           bool any_mode, const std::string& dump_dir,
                           bool json) {
    Timer timer;
    UniversalityOptions opt;
    opt.budget = budget;
    opt.shortest = !any_mode;
    std::uint64_t universal = 0, non_universal = 0, exhausted = 0;
    std::uint64_t contradictions = 0;
    std::string first_bad;

    for (std::uint64_t s = start; s < start + trials; ++s) {
        UniversalTrial t = run_universal_trial(s, opt, max_len);
        switch (t.result.status) {
            case UniversalityStatus::universal: ++universal; break;
            case UniversalityStatus::non_universal: ++non_universal; break;
            case UniversalityStatus::budget_exhausted: ++exhausted; break;
        }
        if (t.contradiction) {
            ++contradictions;
            if (first_bad.empty())
                first_bad = "seed " + std::to_string(s) + ": " + t.detail;
            if (!dump_dir.empty()) {
                std::string base = dump_dir + "/universal_" + std::to_string(s);
                write_file(base + ".ocn", serialize_ocn(t.net));
                write_file(base + ".txt",
                           t.detail + "\nprocess " +
                               t.net.state_name(t.proc.state) + ":" +
                               std::to_string(t.proc.counter) + "\n");
            }
        }
    }

    Report r;
    r.set("command", std::string("difftest universal"));
    r.set("seed", start);
    r.set("trials", trials);
    r.set("budget", budget);
    r.set("oracle_max_len", max_len);
    r.set("shortest", opt.shortest);
    r.set("universal", universal);
    r.set("non_universal", non_universal);
    r.set("budget_exhausted", exhausted);
    r.set("contradictions", contradictions);
    if (!first_bad.empty()) r.set("first_contradiction", first_bad);
    r.set("elapsed_ms", std::int64_t(timer.ms()));
    emit(r, json);
    return contradictions == 0 ? kExitHolds : kExitWitness;
}

int run_fgh(std::uint64_t k, std::uint64_t x, std::uint64_t cap, bool omega,
            bool json) {
    Report r;
    r.set("command", std::string("fgh"));
    r.set("k", omega ? "omega" : std::to_string(k));
    r.set("x", x);
    r.set("cap", cap);
    try {
        BigInt v = omega ? fast_growing_omega(BigInt(x), BigInt(cap))
                         : fast_growing(k, BigInt(x), BigInt(cap));
        r.set("value", v.str());
    } catch (const std::overflow_error&) {
        r.set("value", std::string("exceeds cap"));
        emit(r, json);
        return kExitBudget;
    }
    emit(r, json);
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"one-counter net trace inclusion and universality toolkit"};
    app.require_subcommand(1);

    bool json = false;

    // normalize
    std::string nm_a, nm_b, nm_out_a, nm_out_b;
    auto* cmd_normalize =
        app.add_subcommand("normalize", "put an inclusion pair into normal form");
    cmd_normalize->add_option("a", nm_a, "left net file")->required();
    cmd_normalize->add_option("b", nm_b, "right net file")->required();
    cmd_normalize->add_option("--out-a", nm_out_a, "write normalized left net here");
    cmd_normalize->add_option("--out-b", nm_out_b, "write normalized right net here");
    cmd_normalize->add_flag("--json", json, "JSON report");

    // product / loops
    std::string pr_a, pr_b;
    auto* cmd_product =
        app.add_subcommand("product", "synchronized product of two nets");
    cmd_product->add_option("a", pr_a, "left net file")->required();
    cmd_product->add_option("b", pr_b, "right net file")->required();
    cmd_product->add_flag("--json", json, "JSON report");

    std::string lp_a, lp_b;
    auto* cmd_loops =
        app.add_subcommand("loops", "anchored simple cycles of the product");
    cmd_loops->add_option("a", lp_a, "left net file")->required();
    cmd_loops->add_option("b", lp_b, "right net file")->required();
    cmd_loops->add_flag("--json", json, "JSON report");

    // include
    std::string in_a, in_b, in_pm, in_qn;
    std::uint64_t in_budget = 8, in_oracle_depth = 0;
    bool in_complete = false;
    auto* cmd_include = app.add_subcommand(
        "include", "decide trace inclusion T(left) within T(right)");
    cmd_include->add_option("a", in_a, "left net file")->required();
    cmd_include->add_option("b", in_b, "right net file")->required();
    cmd_include->add_option("pm", in_pm, "left process state:counter")->required();
    cmd_include->add_option("qn", in_qn, "right process state:counter")->required();
    cmd_include->add_option("--budget", in_budget,
                            "short path / connector length bound (default 8)");
    cmd_include->add_flag(
        "--complete", in_complete,
        "raise the budget to the certified completeness bound c(|V|)");
    cmd_include->add_option("--oracle-depth", in_oracle_depth,
                            "also run the BFS oracle to this depth");
    cmd_include->add_flag("--json", json, "JSON report");

    // universal
    std::string un_net;
    std::vector<std::string> un_procs;
    std::uint64_t un_budget = 64;
    bool un_shortest = false;
    auto* cmd_universal =
        app.add_subcommand("universal", "decide trace universality of a process");
    cmd_universal->add_option("net", un_net, "net file")->required();
    cmd_universal
        ->add_option("proc", un_procs,
                     "processes state:counter (several form a macrostate)")
        ->required();
    cmd_universal->add_flag("--shortest", un_shortest,
                            "return the lexicographically least shortest witness");
    cmd_universal->add_option("--budget", un_budget,
                              "maximum witness length (default 64)");
    cmd_universal->add_flag("--json", json, "JSON report");

    // rewrite
    std::string rw_a, rw_b, rw_sa, rw_sb, rw_word, rw_rule;
    std::size_t rw_i = 0, rw_j = 1;
    std::uint64_t rw_x = 1, rw_y = 1;
    auto* cmd_rewrite = app.add_subcommand(
        "rewrite", "rewrite a product path (one rule, or fully normalize)");
    cmd_rewrite->add_option("a", rw_a, "left net file")->required();
    cmd_rewrite->add_option("b", rw_b, "right net file")->required();
    cmd_rewrite->add_option("state_a", rw_sa, "left start state")->required();
    cmd_rewrite->add_option("state_b", rw_sb, "right start state")->required();
    cmd_rewrite->add_option("--word", rw_word, "space-separated action word")
        ->required();
    cmd_rewrite->add_option("--rule", rw_rule, "UUL|UUR|UD|DDL|DDR (default: normalize)");
    cmd_rewrite->add_option("--i", rw_i, "first loop block index");
    cmd_rewrite->add_option("--j", rw_j, "second loop block index");
    cmd_rewrite->add_option("--x", rw_x, "first multiplier");
    cmd_rewrite->add_option("--y", rw_y, "second multiplier");
    cmd_rewrite->add_flag("--json", json, "JSON report");

    // gen
    auto* cmd_gen = app.add_subcommand("gen", "instance generators");
    cmd_gen->require_subcommand(1);
    std::string gi_file, gi_out;
    auto* cmd_gen_icm = cmd_gen->add_subcommand(
        "icm2ocn", "reduce a counter machine to a universality instance");
    cmd_gen_icm->add_option("file", gi_file, "machine file")->required();
    cmd_gen_icm->add_option("--out", gi_out, "write the net here");
    cmd_gen_icm->add_flag("--json", json, "JSON report");

    std::size_t gg_k = 0;
    std::int64_t gg_m = 0, gg_n = 0;
    std::string gg_out;
    auto* cmd_gen_gadget =
        cmd_gen->add_subcommand("gadget", "counting gadget net");
    cmd_gen_gadget->add_option("--k", gg_k, "cascade depth")->required();
    cmd_gen_gadget->add_option("--m", gg_m, "accumulator start")->required();
    cmd_gen_gadget->add_option("--n", gg_n, "top countdown start")->required();
    cmd_gen_gadget->add_option("--out", gg_out, "write the net here");
    cmd_gen_gadget->add_flag("--json", json, "JSON report");

    // decode
    std::string dc_file, dc_word;
    auto* cmd_decode = app.add_subcommand(
        "decode", "map a reduction-net witness back to a machine run");
    cmd_decode->add_option("file", dc_file, "machine file")->required();
    cmd_decode->add_option("--word", dc_word, "space-separated witness word")
        ->required();
    cmd_decode->add_flag("--json", json, "JSON report");

    // ineq
    std::vector<std::string> iq_ops;
    auto* cmd_ineq = app.add_subcommand(
        "ineq", "check m*A + B >= n*C + D by bit streaming");
    cmd_ineq->add_option("operands", iq_ops,
                         "m A B n C D, decimal or 0b-prefixed binary")
        ->expected(6);
    cmd_ineq->add_flag("--json", json, "JSON report");

    // difftest
    auto* cmd_difftest =
        app.add_subcommand("difftest", "randomized cross-checks against oracles");
    cmd_difftest->require_subcommand(1);
    std::uint64_t di_trials = 100, di_start = 0, di_budget = 8, di_depth = 50;
    std::string di_dump;
    auto* cmd_diff_inc = cmd_difftest->add_subcommand(
        "include", "template search vs configuration BFS");
    cmd_diff_inc->add_option("--trials", di_trials, "number of seeded pairs");
    cmd_diff_inc->add_option("--start", di_start, "first seed");
    cmd_diff_inc->add_option("--budget", di_budget, "search budget");
    cmd_diff_inc->add_option("--oracle-depth", di_depth, "oracle BFS depth");
    cmd_diff_inc->add_option("--dump", di_dump, "directory for failing cases");
    cmd_diff_inc->add_flag("--json", json, "JSON report");

    std::uint64_t du_trials = 100, du_start = 0, du_budget = 12, du_max_len = 10;
    bool du_any = false;
    std::string du_dump;
    auto* cmd_diff_uni = cmd_difftest->add_subcommand(
        "universal", "macrostate search vs process-set enumeration");
    cmd_diff_uni->add_option("--trials", du_trials, "number of seeded nets");
    cmd_diff_uni->add_option("--start", du_start, "first seed");
    cmd_diff_uni->add_option("--budget", du_budget, "search budget");
    cmd_diff_uni->add_option("--max-len", du_max_len, "oracle word length bound");
    cmd_diff_uni->add_flag("--any", du_any,
                           "accept any witness instead of the shortest");
    cmd_diff_uni->add_option("--dump", du_dump, "directory for failing cases");
    cmd_diff_uni->add_flag("--json", json, "JSON report");

    // fgh
    std::uint64_t fg_k = 0, fg_x = 0, fg_cap = 1'000'000;
    bool fg_omega = false;
    auto* cmd_fgh =
        app.add_subcommand("fgh", "evaluate the fast-growing hierarchy");
    cmd_fgh->add_option("--k", fg_k, "hierarchy level");
    cmd_fgh->add_option("--x", fg_x, "argument")->required();
    cmd_fgh->add_option("--cap", fg_cap, "magnitude cap (default 10^6)");
    cmd_fgh->add_flag("--omega", fg_omega, "evaluate F_x(x) instead of F_k(x)");
    cmd_fgh->add_flag("--json", json, "JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (app.got_subcommand(cmd_normalize))
            return run_normalize(nm_a, nm_b, nm_out_a, nm_out_b, json);
        if (app.got_subcommand(cmd_product))
            return run_product(pr_a, pr_b, json, false);
        if (app.got_subcommand(cmd_loops)) return run_product(lp_a, lp_b, json, true);
        if (app.got_subcommand(cmd_include))
            return run_include(in_a, in_b, in_pm, in_qn, in_budget, in_complete,
                               in_oracle_depth, json);
        if (app.got_subcommand(cmd_universal))
            return run_universal(un_net, un_procs, un_shortest, un_budget, json);
        if (app.got_subcommand(cmd_rewrite))
            return run_rewrite(rw_a, rw_b, rw_sa, rw_sb, rw_word, rw_rule, rw_i,
                               rw_j, rw_x, rw_y, json);
        if (app.got_subcommand(cmd_gen)) {
            if (cmd_gen->got_subcommand(cmd_gen_icm))
                return run_gen_icm2ocn(gi_file, gi_out, json);
            return run_gen_gadget(gg_k, gg_m, gg_n, gg_out, json);
        }
        if (app.got_subcommand(cmd_decode)) return run_decode(dc_file, dc_word, json);
        if (app.got_subcommand(cmd_ineq)) return run_ineq(iq_ops, json);
        if (app.got_subcommand(cmd_difftest)) {
            if (cmd_difftest->got_subcommand(cmd_diff_inc))
                return run_difftest_include(di_trials, di_start, di_budget,
                                            di_depth, di_dump, json);
            return run_difftest_universal(du_trials, du_start, du_budget,
                                          du_max_len, du_any, du_dump, json);
        }
        if (app.got_subcommand(cmd_fgh))
            return run_fgh(fg_k, fg_x, fg_cap, fg_omega, json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
