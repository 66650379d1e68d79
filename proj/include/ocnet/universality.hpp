#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ocnet/ocn.hpp"

namespace ocnet {

/// Per-state counter maximum over a set of processes. Entry kBottom means
/// no process sits at that state; it is the least value. The all-bottom
/// macrostate has empty trace set and absorbs every step.
constexpr std::int64_t kBottom = -1;

struct Macrostate {
    std::vector<std::int64_t> v;  // aligned with the net's state order

    bool operator==(const Macrostate&) const = default;
    bool dead() const;  // all bottom
};

Macrostate macrostate_of(const Ocn& net, const std::vector<Process>& procs);

/// Coordinate-wise maximum over all steps enabled from non-bottom sources.
Macrostate macro_step(const Ocn& net, const Macrostate& m, ActionId action);
Macrostate macro_step(const Ocn& net, const Macrostate& m, const std::string& action);

/// m below n in every coordinate.
bool covers(const Macrostate& m, const Macrostate& n);

/// Largest entry (kBottom when dead). One step raises it by at most 1.
std::int64_t norm(const Macrostate& m);

struct UniversalityOptions {
    std::uint64_t budget = 64;  // maximum witness length explored
    bool shortest = false;      // iterative deepening, lexicographically
                                // least word among the shortest
};

enum class UniversalityStatus { universal, non_universal, budget_exhausted };

struct UniversalityResult {
    UniversalityStatus status = UniversalityStatus::universal;
    std::vector<std::string> word;  // witness when non_universal
    std::uint64_t steps = 0;        // macro_steps taken by the search
};

/// Searches for a word outside T(proc) by stepping the singleton macrostate
/// until all-bottom. Branches are cut when the new macrostate covers one of
/// its ancestors on the current branch (no shortest witness survives there)
/// or when it contains a state that can never be killed (a nonneg-effect
/// self-loop on every action). Universal verdicts mean the pruned space was
/// exhausted within the budget; budget_exhausted means the depth cap bit.
UniversalityResult find_nonuniversality_witness(const Ocn& net, const Process& proc,
                                                const UniversalityOptions& opt = {});
UniversalityResult find_nonuniversality_witness(const Ocn& net,
                                                const Macrostate& start,
                                                const UniversalityOptions& opt = {});

/// A word accepted by the zero-effect finite system from state s but absent
/// from T(qn), if any. Terminates without a budget: the product of the
/// finite-subset order and macrostate covering is a well-quasi-order.
std::optional<std::vector<std::string>> finite_vs_ocn_inclusion(const Ocn& finite,
                                                                StateId s,
                                                                const Ocn& net,
                                                                const Process& qn);

struct ControlFunction {
    enum Kind { successor, fast_growing } kind = successor;
    int k = 0;  // hierarchy level when kind == fast_growing

    std::int64_t operator()(std::int64_t x) const;
};

struct SequenceVerdict {
    bool good = false;        // some earlier element is covered by a later one
    bool controlled = false;  // norm(x_i) < f(i + t) for all i
};

SequenceVerdict check_sequence(const std::vector<Macrostate>& seq, std::int64_t t,
                               const ControlFunction& f);

}  // namespace ocnet
