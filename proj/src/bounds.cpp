#include "ocnet/bounds.hpp"

namespace ocnet {

BoundTable bound_table(std::size_t v) {
    BoundTable t;
    t.v = v;
    const BigInt V = v;
    t.f0 = (2 * V + 1) * (2 * V + 1);
    t.f1 = t.f0 * (2 * V + V * V);
    t.f2 = t.f0 * (V * V + t.f1);
    t.f3 = t.f2 + 2 * V;
    t.f3p = V * V + 2 * t.f2;
    t.f4 = t.f0 * (V * t.f3 + t.f2);
    t.f4p = t.f0 * (V * t.f3p + t.f2);
    t.f5 = t.f3 + t.f3p + t.f4 + t.f4p;
    t.f6 = t.f5 + V * t.f5 + t.f5;
    t.f7 = 2 * t.f5 + V * t.f6;
    t.f8 = V * V + 2 * t.f7;
    t.f9 = t.f5 + V * t.f6 + t.f5 + V * t.f8;
    t.c = t.f9 * t.f0;
    return t;
}

}  // namespace ocnet
