#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ocnet/product.hpp"

namespace ocnet {

/// The five exponent-rewriting rules. Each acts on an ordered pair of loop
/// blocks of a path's decomposition and only changes their exponents.
enum class RuleKind { UUL, UUR, UD, DDL, DDR };

std::string rule_name(RuleKind r);

/// Rule applied to blocks i < j with multipliers x, y > 0 satisfying the
/// rule's effect equation (db_i * x == db_j * y, or == -db_j * y for UD).
struct RuleInstance {
    RuleKind rule = RuleKind::UUL;
    std::size_t i = 0;
    std::size_t j = 0;
    std::uint64_t x = 1;
    std::uint64_t y = 1;
};

/// All applicable instances with minimal multipliers, ordered by (i, j) and
/// then UUL > UUR > UD > DDL > DDR. When both loops have b-effect 0 the
/// effect equation is vacuous and x = y = 1 is used; when exactly one
/// b-effect is 0 there is no positive solution and the rule never applies.
std::vector<RuleInstance> applicable_instances(const Path& path);

/// Checks `inst` against the rule conditions (any positive multipliers that
/// satisfy the effect equation are allowed, not only minimal ones) and
/// returns the rewritten path. Throws std::logic_error if inapplicable.
Path apply_rule(const Path& path, const RuleInstance& inst);

/// Applies rules until none is applicable, picking the instance with the
/// leftmost block pair first. Throws std::logic_error after 10^6 steps
/// (termination is guaranteed by the lexicographic weight decrease, so the
/// cap must never fire). When `trace` is given it receives the applied
/// instances in order.
Path normalize(const Path& path, std::vector<RuleInstance>* trace = nullptr);

/// Rank of every loop block in the weight order: rank 0 is the order's
/// least element. Blocks of type (>,>=) come first sorted by descending
/// slope (position breaks ties ascending), then (<,<) sorted by ascending
/// slope (position descending), then the remaining types by position.
std::vector<std::size_t> loop_order(const Decomposition& dec);

/// Block exponents listed from the order's greatest loop down. Every rule
/// application decreases this tuple strictly lexicographically.
std::vector<std::uint64_t> weight(const Path& path);

bool weight_less(const std::vector<std::uint64_t>& a,
                 const std::vector<std::uint64_t>& b);

/// Structural exponent bounds that hold for every ordered loop-block pair
/// of a fully rewritten path over a graph with v nodes.
struct BoundsViolation {
    int clause = 0;  // 1..5
    std::size_t i = 0, j = 0;
    std::string detail;
};
struct BoundsReport {
    std::vector<BoundsViolation> violations;
    bool ok() const { return violations.empty(); }
};

BoundsReport check_reduced_bounds(const Path& path, std::size_t v);

}  // namespace ocnet
