#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ocnet/bounds.hpp"
#include "ocnet/product.hpp"

namespace ocnet {

/// Witness shapes searched by decide_inclusion. A witness path either is
/// short outright or pumps one or two loops between short connectors.
struct TemplateShort {
    Path path;
};
struct TemplateForm1 {  // pi0 L^l0 pi1 with L of type (>=,<)
    Path pi0;
    Loop loop;
    Path pi1;
};
struct TemplateForm2 {  // pi0 L0^l0 pi1 L1^l1 pi2, types (>,>=) and (<,<),
    Path pi0;           // S(L0) > S(L1)
    Loop loop0;
    Path pi1;
    Loop loop1;
    Path pi2;
};
struct TemplateForm3 {  // pi0 L^l0 pi1 with L of type (<,<)
    Path pi0;
    Loop loop;
    Path pi1;
};
using WitnessTemplate =
    std::variant<TemplateShort, TemplateForm1, TemplateForm2, TemplateForm3>;

std::string template_name(const WitnessTemplate& t);

/// Validate part chaining and loop type/slope side conditions. `start` is
/// the product node the witness must begin at (needed when pi0 is empty).
WitnessTemplate make_short(const Path& path);
WitnessTemplate make_form1(const ProductGraph& g, NodeId start, Path pi0,
                           Loop loop, Path pi1);
WitnessTemplate make_form2(const ProductGraph& g, NodeId start, Path pi0,
                           Loop loop0, Path pi1, Loop loop1, Path pi2);
WitnessTemplate make_form3(const ProductGraph& g, NodeId start, Path pi0,
                           Loop loop, Path pi1);

struct Realization {
    Path witness;                         // replay-confirmed
    std::vector<std::uint64_t> exponents; // loop iteration counts tried
};

/// Searches for counters (m, n) a concrete witness instantiating the
/// template: solves the loop exponents against the b-side exhaustion
/// equation, checks the a-side guard, and confirms by replay; when the full
/// instantiation dies early on the b side, the scan falls back to its
/// shortest witness prefix. Exponents respect the l0 <= n + c cap.
std::optional<Realization> realize_template(const ProductGraph& g,
                                            const WitnessTemplate& tmpl,
                                            std::int64_t m, std::int64_t n,
                                            std::uint64_t form2_width = 4096);

struct Included {
    bool certified = false;  // true only when the whole template space fit the budget
};
struct NotIncluded {
    Path witness;
    WitnessTemplate tmpl;
    std::vector<std::uint64_t> exponents;
};
struct BudgetExhausted {
    std::uint64_t budget = 0;
};
using InclusionVerdict = std::variant<Included, NotIncluded, BudgetExhausted>;

struct InclusionOptions {
    std::uint64_t budget = 8;           // short-path length and connector length bound
    std::uint64_t max_paths = 5'000'000;  // safety valve on enumerated paths
    std::uint64_t form2_width = 4096;   // outer-loop exponents tried per form-2 candidate
};

struct SearchStats {
    std::uint64_t paths_enumerated = 0;
    std::uint64_t templates_tried = 0;
    bool complete = true;  // no cap was hit
};

struct InclusionResult {
    InclusionVerdict verdict;
    SearchStats stats;
};

/// Decides T(pm) subset-of T(qn) for a deterministic `a` and deterministic
/// complete `b` over a common alphabet. NotIncluded always carries a
/// replay-verified witness. Included is certified only when the budget
/// covers the theoretical completeness bound c(|V|) and no enumeration cap
/// fired; small budgets yield Included{certified:false} when the bounded
/// search finds nothing. Deterministic for fixed inputs and options.
InclusionResult decide_inclusion(const Ocn& a, const Ocn& b, const Process& pm,
                                 const Process& qn,
                                 const InclusionOptions& options = {});

/// Witness shapes (subset of {"short","form1","form2","form3"}) the path
/// fits when every connector part may be at most `max_part_len` long.
std::vector<std::string> classify_form(const Path& path, std::uint64_t max_part_len);

}  // namespace ocnet
