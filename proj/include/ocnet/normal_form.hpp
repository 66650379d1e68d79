#pragma once

#include <map>
#include <string>

#include "ocnet/ocn.hpp"

namespace ocnet {

/// Reserved label for silent transitions.
inline constexpr const char* kEpsilon = "eps";
/// Reserved end-of-word marker introduced by normalize_pair.
inline constexpr const char* kDollar = "$";

/// Removes all "eps" transitions.
///
/// A state with an outgoing eps-transition is silent: its labeled
/// transitions are unreachable and dropped (realtime restriction). States on
/// eps-cycles become deadlocks. Every remaining maximal eps-path followed by
/// a labeled step is compressed into direct steps; combined effects outside
/// {-1,0,+1} are spread over fresh intermediate states that carry the
/// pending difference. Compression is exact whenever each compressed unit
/// needs guard <= 1 (a single realtime transition cannot test deeper).
Ocn eliminate_epsilon(const Ocn& net);

struct NormalizedPair {
    Ocn a;  // deterministic
    Ocn b;  // complete; deterministic if the input b was
    // new action name -> original action name ("$" excluded)
    std::map<std::string, std::string> label_map;
};

/// Puts an inclusion pair into normal form: if `a` is nondeterministic its
/// transitions are uniquely relabeled t0,t1,... (in declaration order) and
/// `b` gets matching copies of its same-action transitions; both nets gain
/// "$"-labeled zero-effect self-loops on every state; `b` gains a sink L
/// with (x,-1) self-loops for every action and every missing (state, action)
/// of `b` is routed to L with effect 0. Inputs must be eps-free and must not
/// already use "$".
NormalizedPair normalize_pair(const Ocn& a, const Ocn& b);

}  // namespace ocnet
