#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

namespace ocnet {

using BigInt = boost::multiprecision::cpp_int;

/// Structural bounds on reduced witness paths over a product graph with
/// `v` nodes. All entries are exact; they grow polynomially in `v` but far
/// beyond any fixed-width integer for interesting sizes.
struct BoundTable {
    std::size_t v = 0;
    BigInt f0, f1, f2, f3, f3p, f4, f4p, f5, f6, f7, f8, f9;
    BigInt c;  // final length bound for the short template parts
};

BoundTable bound_table(std::size_t v);

}  // namespace ocnet
