#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocnet/inclusion.hpp"
#include "ocnet/ocn.hpp"
#include "ocnet/oracles.hpp"
#include "ocnet/product.hpp"
#include "ocnet/universality.hpp"

namespace ocnet {

/// Set-semantics replay: true iff at least one run from `proc` performs the
/// whole word. Uses only the elementary step function, so it double-checks
/// both the macrostate search and the oracles.
bool word_is_trace(const Ocn& net, const Process& proc,
                   const std::vector<std::string>& word);
bool word_is_trace(const Ocn& net, const std::vector<Process>& procs,
                   const std::vector<std::string>& word);

/// True iff `word` keeps both processes alive and some extra action is then
/// possible on the a-side but not the b-side.
bool confirms_non_inclusion(const Ocn& a, const Ocn& b, const Process& pm,
                            const Process& qn, const std::vector<std::string>& word);

/// Lifts a word to the unique product path from `start` when both nets are
/// deterministic; absent if some letter has no synchronized edge.
std::optional<Path> lift_word(const ProductGraph& g, NodeId start,
                              const std::vector<std::string>& word);

/// One seeded inclusion trial: generates a deterministic pair, normalizes
/// it, then runs the template search against the BFS oracle and
/// cross-examines the answers.
struct IncludeTrial {
    std::uint64_t seed = 0;
    Ocn a, b;  // the normalized pair actually decided
    Process pm, qn;
    InclusionResult result;
    OracleAnswer oracle;
    bool contradiction = false;
    std::string detail;  // what went wrong, when contradiction is set
    // The oracle proved non-inclusion but the bounded search returned an
    // uncertified Included; counted separately since neither side overclaims.
    bool completeness_miss = false;
};

IncludeTrial run_include_trial(std::uint64_t seed, const InclusionOptions& opt,
                               std::size_t oracle_depth);

/// One seeded universality trial against the raw process-set oracle.
struct UniversalTrial {
    std::uint64_t seed = 0;
    Ocn net;
    Process proc;
    UniversalityResult result;
    OracleAnswer oracle;
    bool contradiction = false;
    std::string detail;
};

UniversalTrial run_universal_trial(std::uint64_t seed,
                                   const UniversalityOptions& opt,
                                   std::size_t oracle_max_len);

}  // namespace ocnet
