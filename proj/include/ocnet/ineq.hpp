#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ocnet/bounds.hpp"

namespace ocnet {

/// Natural number as bits, least significant first. Trailing zero padding
/// is permitted and does not change the value.
struct BinaryNat {
    std::vector<bool> bits;

    static BinaryNat from_uint(std::uint64_t v);
    static BinaryNat from_big(const BigInt& v);
    /// Accepts decimal digits, or bits with a "0b" prefix (written most
    /// significant first, as usual).
    static BinaryNat parse(const std::string& s);

    BigInt value() const;
    std::size_t bit_length() const;  // ignoring padding
};

struct IneqTrace {
    std::size_t max_scratchpad = 0;  // peak bits held on either pad
    std::uint64_t steps = 0;
};

/// Decides m*A + B >= n*C + D by a single right-to-left scan: two
/// scratchpads start as B and D; at step j the pad gains A (resp. C) when
/// bit j of m (resp. n) is set; then one settled low bit leaves each pad
/// and updates the comparison flag (start 1; smaller -> 0, larger -> 1,
/// equal -> keep). The pads never grow past the longest addend plus carry.
bool check_weighted_inequality(const BinaryNat& m, const BinaryNat& a,
                               const BinaryNat& b, const BinaryNat& n,
                               const BinaryNat& c, const BinaryNat& d,
                               IneqTrace* trace = nullptr);

/// Same predicate by exact big-integer arithmetic.
bool check_weighted_inequality_exact(const BinaryNat& m, const BinaryNat& a,
                                     const BinaryNat& b, const BinaryNat& n,
                                     const BinaryNat& c, const BinaryNat& d);

}  // namespace ocnet
