#include "ocnet/ineq.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ocnet {

BinaryNat BinaryNat::from_uint(std::uint64_t v) {
    BinaryNat b;
    while (v) {
        b.bits.push_back(v & 1);
        v >>= 1;
    }
    return b;
}

BinaryNat BinaryNat::from_big(const BigInt& v) {
    if (v < 0) throw std::invalid_argument("BinaryNat: negative value");
    BinaryNat b;
    BigInt x = v;
    while (x > 0) {
        b.bits.push_back((x & 1) != 0);
        x >>= 1;
    }
    return b;
}

BinaryNat BinaryNat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BinaryNat: empty string");
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'b' || s[1] == 'B')) {
        BinaryNat b;
        for (std::size_t i = s.size(); i-- > 2;) {
            if (s[i] != '0' && s[i] != '1')
                throw std::invalid_argument("BinaryNat: bad bit '" +
                                            std::string(1, s[i]) + "'");
            b.bits.push_back(s[i] == '1');
        }
        return b;
    }
    for (char ch : s)
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("BinaryNat: bad digit '" +
                                        std::string(1, ch) + "'");
    return from_big(BigInt(s));
}

BigInt BinaryNat::value() const {
    BigInt v = 0;
    for (std::size_t i = bits.size(); i-- > 0;) {
        v <<= 1;
        if (bits[i]) v += 1;
    }
    return v;
}

std::size_t BinaryNat::bit_length() const {
    std::size_t n = bits.size();
    while (n > 0 && !bits[n - 1]) --n;
    return n;
}

namespace {

/// One comparison side: a shift register seeded with the addend's constant
/// term; add() ripples a carry, shift_out() hands over the settled bit.
struct Scratchpad {
    std::deque<std::uint8_t> bits;

    explicit Scratchpad(const BinaryNat& seed) {
        for (std::size_t i = 0; i < seed.bit_length(); ++i)
            bits.push_back(seed.bits[i]);
    }

    void add(const BinaryNat& x) {
        std::size_t len = x.bit_length();
        if (bits.size() < len) bits.resize(len, 0);
        std::uint8_t carry = 0;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            std::uint8_t sum = bits[i] + carry + (i < len ? x.bits[i] : 0);
            bits[i] = sum & 1;
            carry = sum >> 1;
            if (carry == 0 && i >= len) break;
        }
        if (carry) bits.push_back(1);
    }

    std::uint8_t shift_out() {
        if (bits.empty()) return 0;
        std::uint8_t b = bits.front();
        bits.pop_front();
        return b;
    }
};

bool bit_of(const BinaryNat& x, std::size_t i) {
    return i < x.bits.size() && x.bits[i];
}

}  // namespace

bool check_weighted_inequality(const BinaryNat& m, const BinaryNat& a,
                               const BinaryNat& b, const BinaryNat& n,
                               const BinaryNat& c, const BinaryNat& d,
                               IneqTrace* trace) {
    Scratchpad left(b), right(d);
    int flag = 1;
    std::size_t weights = std::max(m.bit_length(), n.bit_length());
    IneqTrace local;

    for (std::size_t j = 0; j < weights || !left.bits.empty() || !right.bits.empty();
         ++j) {
        if (bit_of(m, j)) left.add(a);
        if (bit_of(n, j)) right.add(c);
        local.max_scratchpad = std::max(
            local.max_scratchpad, std::max(left.bits.size(), right.bits.size()));
        std::uint8_t l = left.shift_out();
        std::uint8_t r = right.shift_out();
        if (l < r) flag = 0;
        if (l > r) flag = 1;
        ++local.steps;
    }
    if (trace) *trace = local;
    return flag == 1;
}

bool check_weighted_inequality_exact(const BinaryNat& m, const BinaryNat& a,
                                     const BinaryNat& b, const BinaryNat& n,
                                     const BinaryNat& c, const BinaryNat& d) {
    return m.value() * a.value() + b.value() >= n.value() * c.value() + d.value();
}

}  // namespace ocnet
