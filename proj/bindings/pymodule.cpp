// Python module over the core library. Nets, machines and reductions are
// bound as classes; everything else crosses the boundary as plain tuples,
// dicts and arbitrary-precision ints.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ocnet/bounds.hpp"
#include "ocnet/inclusion.hpp"
#include "ocnet/ineq.hpp"
#include "ocnet/normal_form.hpp"
#include "ocnet/ocn.hpp"
#include "ocnet/oracles.hpp"
#include "ocnet/product.hpp"
#include "ocnet/reductions.hpp"
#include "ocnet/text_format.hpp"
#include "ocnet/universality.hpp"

namespace py = pybind11;
using namespace ocnet;

namespace {

py::int_ big_to_py(const BigInt& v) {
    PyObject* n = PyLong_FromString(v.str().c_str(), nullptr, 10);
    if (!n) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(n);
}

BigInt py_to_big(const py::int_& v) {
    return BigInt(py::str(v).cast<std::string>());
}

using ProcArg = std::pair<std::string, std::int64_t>;

Process to_process(const Ocn& net, const ProcArg& p) {
    if (p.second < 0) throw std::invalid_argument("negative counter");
    return Process{net.state_id(p.first), p.second};
}

Macrostate to_macro(const Ocn& net, const py::dict& d) {
    Macrostate m;
    m.v.assign(net.states.size(), kBottom);
    for (auto item : d) {
        StateId s = net.state_id(item.first.cast<std::string>());
        std::int64_t c = item.second.cast<std::int64_t>();
        if (c < 0) throw std::invalid_argument("negative counter");
        m.v[s] = std::max(m.v[s], c);
    }
    return m;
}

py::dict from_macro(const Ocn& net, const Macrostate& m) {
    py::dict d;
    for (StateId s = 0; s < m.v.size(); ++s)
        if (m.v[s] != kBottom) d[py::str(net.state_name(s))] = m.v[s];
    return d;
}

std::vector<std::string> path_word(const Ocn& a, const Path& p) {
    std::vector<std::string> word;
    for (const ProductEdge& e : p.edges) word.push_back(a.action_name(e.action));
    return word;
}

const char* oracle_status_name(OracleStatus s) {
    switch (s) {
        case OracleStatus::witness: return "witness";
        case OracleStatus::exhausted: return "exhausted";
        default: return "capped";
    }
}

py::dict include_result(const Ocn& a, const InclusionResult& r) {
    py::dict out;
    if (const auto* inc = std::get_if<Included>(&r.verdict)) {
        out["verdict"] = "included";
        out["certified"] = inc->certified;
    } else if (const auto* ni = std::get_if<NotIncluded>(&r.verdict)) {
        out["verdict"] = "not_included";
        out["witness"] = path_word(a, ni->witness);
        out["template"] = template_name(ni->tmpl);
        out["exponents"] = ni->exponents;
    } else {
        out["verdict"] = "budget_exhausted";
    }
    out["complete"] = r.stats.complete;
    out["paths_enumerated"] = r.stats.paths_enumerated;
    out["templates_tried"] = r.stats.templates_tried;
    return out;
}

py::dict universality_result(const UniversalityResult& r) {
    py::dict out;
    switch (r.status) {
        case UniversalityStatus::universal: out["verdict"] = "universal"; break;
        case UniversalityStatus::non_universal: out["verdict"] = "non_universal"; break;
        case UniversalityStatus::budget_exhausted: out["verdict"] = "budget_exhausted"; break;
    }
    if (r.status == UniversalityStatus::non_universal) out["witness"] = r.word;
    out["steps"] = r.steps;
    return out;
}

GenParams gen_params(std::uint64_t seed, std::size_t min_states, std::size_t max_states,
                     std::size_t alphabet, double density, bool deterministic,
                     bool complete, std::size_t counters) {
    GenParams p;
    p.seed = seed;
    p.min_states = min_states;
    p.max_states = max_states;
    p.alphabet = alphabet;
    p.density = density;
    p.deterministic = deterministic;
    p.complete = complete;
    p.counters = counters;
    return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "one-counter net trace inclusion and universality toolkit";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Ocn>(m, "Net")
        .def_property_readonly("name", [](const Ocn& n) { return n.name; })
        .def_property_readonly("states", [](const Ocn& n) { return n.states; })
        .def_property_readonly("alphabet", [](const Ocn& n) { return n.alphabet; })
        .def_property_readonly("deterministic",
                               [](const Ocn& n) { return classify_net(n).deterministic; })
        .def_property_readonly("complete",
                               [](const Ocn& n) { return classify_net(n).complete; })
        .def("transitions",
             [](const Ocn& n) {
                 std::vector<std::tuple<std::string, std::string, int, std::string>> out;
                 for (const Transition& t : n.transitions)
                     out.emplace_back(n.state_name(t.src), n.action_name(t.action),
                                      t.effect, n.state_name(t.dst));
                 return out;
             })
        .def("__str__", [](const Ocn& n) { return serialize_ocn(n); })
        .def("__repr__", [](const Ocn& n) {
            return "<Net '" + n.name + "': " + std::to_string(n.states.size()) +
                   " states, " + std::to_string(n.transitions.size()) + " transitions>";
        });

    py::class_<Icm>(m, "Machine")
        .def_property_readonly("name", [](const Icm& i) { return i.name; })
        .def_property_readonly("states", [](const Icm& i) { return i.states; })
        .def_property_readonly("counters", [](const Icm& i) { return i.counters; })
        .def_property_readonly("initial",
                               [](const Icm& i) { return i.states.at(i.initial); })
        .def_property_readonly("final",
                               [](const Icm& i) { return i.states.at(i.final_state); })
        .def("transitions",
             [](const Icm& i) {
                 std::vector<std::tuple<std::string, std::string, std::size_t, std::string>> out;
                 for (const IcmTransition& t : i.transitions)
                     out.emplace_back(i.states.at(t.src), icm_op_name(t.op), t.counter,
                                      i.states.at(t.dst));
                 return out;
             })
        .def("__str__", [](const Icm& i) { return serialize_icm(i); })
        .def("__repr__", [](const Icm& i) {
            return "<Machine '" + i.name + "': " + std::to_string(i.states.size()) +
                   " states, " + std::to_string(i.counters) + " counters>";
        });

    py::class_<ReductionOutput>(m, "Reduction")
        .def_property_readonly("net", [](const ReductionOutput& r) { return r.net; })
        .def_property_readonly("initial",
                               [](const ReductionOutput& r) {
                                   return std::make_pair(
                                       r.net.state_name(r.initial.state),
                                       r.initial.counter);
                               })
        .def_property_readonly("actions", [](const ReductionOutput& r) {
            py::dict d;
            for (const auto& [act, meaning] : r.dictionary) {
                const char* kind = "";
                switch (meaning.kind) {
                    case ActionMeaning::Kind::run_start: kind = "run_start"; break;
                    case ActionMeaning::Kind::run_end: kind = "run_end"; break;
                    case ActionMeaning::Kind::transition: kind = "transition"; break;
                    case ActionMeaning::Kind::error: kind = "error"; break;
                }
                d[py::str(act)] = std::make_pair(std::string(kind), meaning.index);
            }
            return d;
        });

    m.def("parse_net", &parse_ocn, py::arg("text"));
    m.def("parse_machine", &parse_icm, py::arg("text"));

    m.def(
        "normalize_pair",
        [](const Ocn& a, const Ocn& b) {
            NormalizedPair np = normalize_pair(a, b);
            return std::make_pair(np.a, np.b);
        },
        py::arg("a"), py::arg("b"),
        "Relabel to a common alphabet and complete the right-hand net.");

    m.def(
        "include",
        [](const Ocn& a, const Ocn& b, const ProcArg& pm, const ProcArg& qn,
           std::uint64_t budget, std::uint64_t max_paths) {
            InclusionOptions opt;
            opt.budget = budget;
            opt.max_paths = max_paths;
            return include_result(
                a, decide_inclusion(a, b, to_process(a, pm), to_process(b, qn), opt));
        },
        py::arg("a"), py::arg("b"), py::arg("pm"), py::arg("qn"),
        py::arg("budget") = 8, py::arg("max_paths") = 5'000'000,
        "Decide whether every trace of pm (in a) is a trace of qn (in b).");

    m.def(
        "inclusion_oracle",
        [](const Ocn& a, const Ocn& b, const ProcArg& pm, const ProcArg& qn,
           std::size_t depth) {
            OracleAnswer ans =
                inclusion_oracle(a, b, to_process(a, pm), to_process(b, qn), depth);
            return py::make_tuple(oracle_status_name(ans.status), ans.word);
        },
        py::arg("a"), py::arg("b"), py::arg("pm"), py::arg("qn"), py::arg("depth"));

    m.def(
        "universal",
        [](const Ocn& net, const std::vector<ProcArg>& procs, std::uint64_t budget,
           bool shortest) {
            Macrostate start;
            start.v.assign(net.states.size(), kBottom);
            for (const ProcArg& p : procs) {
                Process q = to_process(net, p);
                start.v[q.state] = std::max(start.v[q.state], q.counter);
            }
            UniversalityOptions opt;
            opt.budget = budget;
            opt.shortest = shortest;
            return universality_result(find_nonuniversality_witness(net, start, opt));
        },
        py::arg("net"), py::arg("procs"), py::arg("budget") = 64,
        py::arg("shortest") = false,
        "Decide trace universality of a set of processes.");

    m.def(
        "universality_oracle",
        [](const Ocn& net, const ProcArg& proc, std::size_t max_len) {
            OracleAnswer ans = universality_oracle(net, to_process(net, proc), max_len);
            return py::make_tuple(oracle_status_name(ans.status), ans.word);
        },
        py::arg("net"), py::arg("proc"), py::arg("max_len"));

    m.def(
        "traces",
        [](const Ocn& net, const std::vector<ProcArg>& procs, std::size_t max_len) {
            std::vector<Process> ps;
            for (const ProcArg& p : procs) ps.push_back(to_process(net, p));
            py::set out;
            for (const std::vector<std::string>& w : traces_upto(net, ps, max_len))
                out.add(py::tuple(py::cast(w)));
            return out;
        },
        py::arg("net"), py::arg("procs"), py::arg("max_len"),
        "All trace words up to the given length, as a set of tuples.");

    m.def(
        "macro_step",
        [](const Ocn& net, const py::dict& macro, const std::string& action) {
            return from_macro(net, macro_step(net, to_macro(net, macro), action));
        },
        py::arg("net"), py::arg("macro"), py::arg("action"),
        "Step a macrostate (dict state -> counter); empty dict means dead.");

    m.def("machine_to_net", &icm_to_ocn, py::arg("machine"),
          "Reduce a counter machine to a universality instance.");

    m.def(
        "decode_witness",
        [](const ReductionOutput& red, const std::vector<std::string>& word) {
            IcmRun run = decode_witness(red, word);
            py::list steps;
            for (const IcmRunStep& s : run.steps) {
                py::dict d;
                d["error"] = s.is_error;
                if (s.is_error)
                    d["counter"] = s.counter;
                else
                    d["transition"] = s.transition;
                d["state"] = red.machine.states.at(s.after.state);
                d["counters"] = s.after.counters;
                steps.append(d);
            }
            return steps;
        },
        py::arg("reduction"), py::arg("word"),
        "Map a witness of the reduced net back to a machine run.");

    m.def(
        "counting_gadget",
        [](std::size_t k, std::int64_t mm, std::int64_t nn) {
            auto [net, start] = counting_gadget(k, mm, nn);
            return py::make_tuple(net, from_macro(net, start));
        },
        py::arg("k"), py::arg("m"), py::arg("n"));

    m.def(
        "fast_growing",
        [](std::uint64_t k, const py::int_& x, const py::int_& cap) {
            return big_to_py(fast_growing(k, py_to_big(x), py_to_big(cap)));
        },
        py::arg("k"), py::arg("x"), py::arg("cap") = py::int_(1'000'000));

    m.def(
        "fast_growing_omega",
        [](const py::int_& x, const py::int_& cap) {
            return big_to_py(fast_growing_omega(py_to_big(x), py_to_big(cap)));
        },
        py::arg("x"), py::arg("cap") = py::int_(1'000'000));

    m.def(
        "weighted_inequality",
        [](const py::int_& mm, const py::int_& a, const py::int_& b, const py::int_& nn,
           const py::int_& c, const py::int_& d) {
            IneqTrace trace;
            bool holds = check_weighted_inequality(
                BinaryNat::from_big(py_to_big(mm)), BinaryNat::from_big(py_to_big(a)),
                BinaryNat::from_big(py_to_big(b)), BinaryNat::from_big(py_to_big(nn)),
                BinaryNat::from_big(py_to_big(c)), BinaryNat::from_big(py_to_big(d)),
                &trace);
            py::dict out;
            out["holds"] = holds;
            out["steps"] = trace.steps;
            out["max_scratchpad"] = trace.max_scratchpad;
            return out;
        },
        py::arg("m"), py::arg("a"), py::arg("b"), py::arg("n"), py::arg("c"),
        py::arg("d"), "Check m*A + B >= n*C + D by bit streaming.");

    m.def(
        "bound_table",
        [](std::size_t v) {
            BoundTable t = bound_table(v);
            py::dict out;
            out["v"] = t.v;
            out["f0"] = big_to_py(t.f0);
            out["f1"] = big_to_py(t.f1);
            out["f2"] = big_to_py(t.f2);
            out["f3"] = big_to_py(t.f3);
            out["f3p"] = big_to_py(t.f3p);
            out["f4"] = big_to_py(t.f4);
            out["f4p"] = big_to_py(t.f4p);
            out["f5"] = big_to_py(t.f5);
            out["f6"] = big_to_py(t.f6);
            out["f7"] = big_to_py(t.f7);
            out["f8"] = big_to_py(t.f8);
            out["f9"] = big_to_py(t.f9);
            out["c"] = big_to_py(t.c);
            return out;
        },
        py::arg("v"));

    m.def(
        "rand_net",
        [](std::uint64_t seed, std::size_t min_states, std::size_t max_states,
           std::size_t alphabet, double density, bool deterministic, bool complete) {
            return rand_ocn(gen_params(seed, min_states, max_states, alphabet, density,
                                       deterministic, complete, 2));
        },
        py::arg("seed"), py::arg("min_states") = 1, py::arg("max_states") = 3,
        py::arg("alphabet") = 2, py::arg("density") = 0.6,
        py::arg("deterministic") = false, py::arg("complete") = false);

    m.def(
        "rand_machine",
        [](std::uint64_t seed, std::size_t min_states, std::size_t max_states,
           std::size_t counters, double density) {
            return rand_icm(gen_params(seed, min_states, max_states, 2, density, false,
                                       false, counters));
        },
        py::arg("seed"), py::arg("min_states") = 1, py::arg("max_states") = 3,
        py::arg("counters") = 2, py::arg("density") = 0.6);
}
