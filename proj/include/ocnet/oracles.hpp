#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ocnet/ocn.hpp"
#include "ocnet/reductions.hpp"

namespace ocnet {

/// Brute-force reference implementations. These deliberately do not reuse
/// the product-path or macrostate machinery; each one carries its own step
/// loop so that agreement with the main procedures actually means something.

enum class OracleStatus {
    witness,    // a counterexample was found
    exhausted,  // no counterexample within the requested depth
    capped,     // the configuration frontier hit its cap before the depth did
};

struct OracleAnswer {
    OracleStatus status = OracleStatus::exhausted;
    std::vector<std::string> word;  // set iff status == witness
};

inline constexpr std::size_t kOracleFrontierCap = 1'000'000;

/// Shortest inclusion counterexample by plain BFS over joint configurations.
/// Requires `a` deterministic and `b` deterministic and complete, so every
/// word drives exactly one configuration on each side. The returned word w
/// keeps both sides alive and some action extends it on the a-side only.
OracleAnswer inclusion_oracle(const Ocn& a, const Ocn& b, const Process& pm,
                              const Process& qn, std::size_t depth,
                              std::size_t frontier_cap = kOracleFrontierCap);

/// Lexicographically least shortest word of length <= max_len that no run
/// from `proc` performs. BFS over raw process sets; actions are ordered by
/// name at every step.
OracleAnswer universality_oracle(const Ocn& net, const Process& proc,
                                 std::size_t max_len,
                                 std::size_t frontier_cap = kOracleFrontierCap);

/// Every word of length <= max_len some run from `procs` performs.
std::set<std::vector<std::string>> traces_upto(const Ocn& net,
                                               const std::vector<Process>& procs,
                                               std::size_t max_len);

struct GenParams {
    std::uint64_t seed = 0;
    std::size_t min_states = 1;
    std::size_t max_states = 3;
    std::size_t alphabet = 2;  // actions named a, b, c, ...
    double density = 0.6;      // chance each (state, action) slot is filled
    std::array<double, 3> effect_weights{1.0, 1.0, 1.0};  // -1, 0, +1
    bool deterministic = false;  // at most one transition per slot
    bool complete = false;       // at least one transition per slot

    // rand_icm only
    std::size_t counters = 2;
};

/// Seed-reproducible random net. With deterministic+complete set and
/// density 1.0 every (state, action) slot carries exactly one transition.
Ocn rand_ocn(const GenParams& p);

/// Seed-reproducible random counter machine; initial is the first state,
/// final the last.
Icm rand_icm(const GenParams& p);

}  // namespace ocnet
