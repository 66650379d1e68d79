#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ocnet/bounds.hpp"
#include "ocnet/ocn.hpp"
#include "ocnet/universality.hpp"

namespace ocnet {

/// Counter machine with incrementing errors: counters may spontaneously
/// gain 1 at any moment. Decrement at zero and zero-test at a positive
/// value are forbidden as deliberate moves.
enum class IcmOp { inc, dec, ifz };

std::string icm_op_name(IcmOp op);

struct IcmTransition {
    StateId src = 0;
    IcmOp op = IcmOp::inc;
    std::size_t counter = 1;  // 1-based index
    StateId dst = 0;
};

struct Icm {
    std::string name;
    std::vector<std::string> states;
    std::size_t counters = 0;
    std::vector<IcmTransition> transitions;
    StateId initial = 0;
    StateId final_state = 0;

    StateId add_state(const std::string& s);
    StateId state_id(const std::string& s) const;
    bool has_state(const std::string& s) const;
    void add_transition(const std::string& src, IcmOp op, std::size_t counter,
                        const std::string& dst);
};

struct IcmConfig {
    StateId state = 0;
    std::vector<std::int64_t> counters;

    bool operator==(const IcmConfig&) const = default;
    friend bool operator<(const IcmConfig& a, const IcmConfig& b) {
        return std::tie(a.state, a.counters) < std::tie(b.state, b.counters);
    }
};

/// All one-step successors: deliberate transitions honoring the dec/ifz
/// guards, plus single spontaneous increments when allow_errors is set.
std::vector<IcmConfig> icm_successors(const Icm& m, const IcmConfig& c,
                                      bool allow_errors);

struct IcmRunStep {
    bool is_error = false;       // spontaneous increment
    std::size_t counter = 0;     // incremented counter (errors)
    std::size_t transition = 0;  // index into Icm::transitions (moves)
    IcmConfig after;
};

struct IcmRun {
    std::vector<IcmRunStep> steps;
};

/// Shortest error-augmented run from (initial, all-zero) to the final
/// state, by breadth-first search capped at the given counter values and
/// run length. Deliberate moves are expanded before error increments, so
/// runs prefer fewer errors among equals.
std::optional<IcmRun> icm_reachable_bounded(const Icm& m, std::int64_t counter_cap,
                                            std::uint64_t depth_cap);

/// q steps to the universal state U (which must exist) on every listed
/// action, with effect 0. Added transitions that already exist are kept
/// once. make_ignore adds zero-effect self-loops instead.
Ocn make_obstacle(Ocn net, const std::string& q, const std::vector<std::string>& actions);
Ocn make_ignore(Ocn net, const std::string& q, const std::vector<std::string>& actions);

struct ActionMeaning {
    enum Kind { run_start, run_end, transition, error } kind = run_start;
    std::size_t index = 0;  // transition index (moves) or counter (errors)
};

struct ReductionOutput {
    Ocn net;
    Process initial;  // (Init, 0)
    std::map<std::string, ActionMeaning> dictionary;
    Icm machine;  // the reduced machine, kept for decoding
};

/// Builds the one-counter net whose (Init, 0) process is trace-universal
/// exactly when the machine cannot reach its final state. Actions: '#'
/// starts a run, '$' ends it, 't<j>' announces the j-th machine transition,
/// 'tau<i>' announces an error on counter i. States: Init, the universal
/// state U, the zero-reservoir Z, the machine's states, and one state C<i>
/// per counter carrying its value.
ReductionOutput icm_to_ocn(const Icm& m);

/// Maps a non-universality witness of the reduction net back to the
/// machine run it spells: strips the leading '#' and trailing '$' (a
/// doubled final '$' is accepted), turns 't'/'tau' letters into moves and
/// errors, and inserts the implicit error increment when a decrement fires
/// at zero. Throws std::invalid_argument on words that do not decode.
IcmRun decode_witness(const ReductionOutput& out, const std::vector<std::string>& word);

/// Hard non-universality instance: an accumulator A that grows on '0' and
/// seeds cascading countdown states F_i, which drain on 'i' and punish
/// out-of-order play. Returns the net and the start macrostate {A=m, F_k=n}.
std::pair<Ocn, Macrostate> counting_gadget(std::size_t k, std::int64_t m,
                                           std::int64_t n);

inline const BigInt kFghDefaultCap = BigInt(1'000'000);

/// F_0(x) = x+1, F_{k+1}(x) = F_k applied (x+1) times to x, evaluated by
/// literal unfolding. Throws std::overflow_error once any intermediate
/// value passes the cap.
BigInt fast_growing(std::uint64_t k, const BigInt& x,
                    const BigInt& magnitude_cap = kFghDefaultCap);

/// F_omega(x) = F_x(x).
BigInt fast_growing_omega(const BigInt& x, const BigInt& magnitude_cap = kFghDefaultCap);

}  // namespace ocnet
