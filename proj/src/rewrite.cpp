#include "ocnet/rewrite.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

namespace ocnet {

std::string rule_name(RuleKind r) {
    switch (r) {
        case RuleKind::UUL: return "UUL";
        case RuleKind::UUR: return "UUR";
        case RuleKind::UD:  return "UD";
        case RuleKind::DDL: return "DDL";
        case RuleKind::DDR: return "DDR";
    }
    throw std::logic_error("rule_name: bad enum value");
}

namespace {

constexpr RuleKind kRulePriority[] = {RuleKind::UUL, RuleKind::UUR, RuleKind::UD,
                                      RuleKind::DDL, RuleKind::DDR};

/// Everything strictly between block i's loop copies and block j's loop
/// copies: the full blocks i+1 .. j-1 plus block j's connector.
Path middle(const Decomposition& dec, std::size_t i, std::size_t j) {
    Path mid;
    for (std::size_t t = i + 1; t < j; ++t) {
        mid = concat(mid, dec.blocks[t].prefix);
        mid = concat(mid, repeat(dec.blocks[t].loop, dec.blocks[t].times));
    }
    return concat(mid, dec.blocks[j].prefix);
}

/// Least positive (x, y) with d0 * x == d1 * y, if any. Both zero makes the
/// equation vacuous, so (1, 1); exactly one zero admits no positive pair.
std::optional<std::pair<std::uint64_t, std::uint64_t>> solve_multipliers(
    std::int64_t d0, std::int64_t d1) {
    if (d0 == 0 && d1 == 0) return std::make_pair(std::uint64_t{1}, std::uint64_t{1});
    if (d0 == 0 || d1 == 0) return std::nullopt;
    if ((d0 > 0) != (d1 > 0)) return std::nullopt;
    std::uint64_t a0 = d0 > 0 ? d0 : -d0;
    std::uint64_t a1 = d1 > 0 ? d1 : -d1;
    std::uint64_t g = std::gcd(a0, a1);
    return std::make_pair(a1 / g, a0 / g);
}

struct PairView {
    const Loop blk0, blk1;  // classified loops of blocks i and j
    std::uint64_t l0, l1;
    std::size_t mid_len;    // edges between the two loop runs
};

PairView view_pair(const Decomposition& dec, std::size_t i, std::size_t j) {
    return PairView{make_loop(dec.blocks[i].loop), make_loop(dec.blocks[j].loop),
                    dec.blocks[i].times, dec.blocks[j].times,
                    middle(dec, i, j).size()};
}

bool satisfies(RuleKind rule, const PairView& v, std::uint64_t x, std::uint64_t y) {
    if (x == 0 || y == 0) return false;
    std::int64_t db0 = v.blk0.path.effect_b;
    std::int64_t db1 = v.blk1.path.effect_b;
    std::int64_t sx = static_cast<std::int64_t>(x);
    std::int64_t sy = static_cast<std::int64_t>(y);
    bool eq_same = db0 * sx == db1 * sy;
    bool eq_flip = db0 * sx == -db1 * sy;
    auto up = [](const Loop& l) { return l.type == LoopType::gt_geq; };
    auto down = [](const Loop& l) { return l.type == LoopType::lt_lt; };
    const Slope &s0 = v.blk0.slope, &s1 = v.blk1.slope;

    switch (rule) {
        case RuleKind::UUL:
            return up(v.blk0) && up(v.blk1) && eq_same && s0 >= s1 && v.l1 > y;
        case RuleKind::UUR:
            return up(v.blk0) && up(v.blk1) && eq_same && s0 < s1 &&
                   v.l0 > x && v.l0 - x > v.mid_len + v.blk1.path.size();
        case RuleKind::UD:
            return up(v.blk0) && down(v.blk1) && eq_flip && s0 <= s1 &&
                   v.l0 > x && v.l0 - x >= v.mid_len && v.l1 > y;
        case RuleKind::DDL:
            return down(v.blk0) && down(v.blk1) && eq_same && s0 < s1 &&
                   v.l1 > v.blk0.path.size() * x + 2 * v.mid_len && v.l1 > y;
        case RuleKind::DDR:
            return down(v.blk0) && down(v.blk1) && eq_same && s0 >= s1 && v.l0 > x;
    }
    return false;
}

std::optional<RuleInstance> minimal_instance(RuleKind rule, const PairView& v,
                                             std::size_t i, std::size_t j) {
    std::int64_t db0 = v.blk0.path.effect_b;
    std::int64_t db1 = v.blk1.path.effect_b;
    auto xy = solve_multipliers(db0, rule == RuleKind::UD ? -db1 : db1);
    if (!xy) return std::nullopt;
    RuleInstance inst{rule, i, j, xy->first, xy->second};
    if (!satisfies(rule, v, inst.x, inst.y)) return std::nullopt;
    return inst;
}

}  // namespace

std::vector<RuleInstance> applicable_instances(const Path& path) {
    Decomposition dec = decompose(path);
    {
        std::set<std::pair<std::int64_t, std::int64_t>> effects;
        for (const auto& b : dec.blocks)
            if (!effects.insert({b.loop.effect_a, b.loop.effect_b}).second)
                throw std::invalid_argument(
                    "applicable_instances: path is not sane (repeated loop effects)");
    }
    std::vector<RuleInstance> out;
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < dec.blocks.size(); ++j) {
            PairView v = view_pair(dec, i, j);
            for (RuleKind rule : kRulePriority)
                if (auto inst = minimal_instance(rule, v, i, j)) out.push_back(*inst);
        }
    }
    return out;
}

Path apply_rule(const Path& path, const RuleInstance& inst) {
    Decomposition dec = decompose(path);
    if (inst.i >= inst.j || inst.j >= dec.blocks.size())
        throw std::logic_error("apply_rule: block indices out of range");
    PairView v = view_pair(dec, inst.i, inst.j);
    if (!satisfies(inst.rule, v, inst.x, inst.y))
        throw std::logic_error("apply_rule: instance conditions fail (" +
                               rule_name(inst.rule) + ")");
    auto& l0 = dec.blocks[inst.i].times;
    auto& l1 = dec.blocks[inst.j].times;
    switch (inst.rule) {
        case RuleKind::UUL: l0 += inst.x; l1 -= inst.y; break;
        case RuleKind::UUR: l0 -= inst.x; l1 += inst.y; break;
        case RuleKind::UD:  l0 -= inst.x; l1 -= inst.y; break;
        case RuleKind::DDL: l0 += inst.x; l1 -= inst.y; break;
        case RuleKind::DDR: l0 -= inst.x; l1 += inst.y; break;
    }
    return recompose(dec);
}

Path normalize(const Path& path, std::vector<RuleInstance>* trace) {
    if (trace) trace->clear();
    Path cur = path;
    for (std::uint64_t steps = 0; steps < 1'000'000; ++steps) {
        auto insts = applicable_instances(cur);
        if (insts.empty()) return cur;
        if (trace) trace->push_back(insts.front());
        cur = apply_rule(cur, insts.front());
    }
    throw std::logic_error("normalize: rule application cap exceeded");
}

std::vector<std::size_t> loop_order(const Decomposition& dec) {
    std::size_t k = dec.blocks.size();
    std::vector<Loop> loops;
    loops.reserve(k);
    for (const auto& b : dec.blocks) loops.push_back(make_loop(b.loop));

    auto cls = [](LoopType t) {
        switch (t) {
            case LoopType::gt_geq:  return 0;
            case LoopType::lt_lt:   return 1;
            case LoopType::leq_geq: return 2;
            case LoopType::geq_lt:  return 3;
        }
        return 4;
    };
    // Up loops: higher slope ranks lower, position breaks ties ascending.
    // Down loops: lower slope ranks lower, position breaks ties descending.
    auto before = [&](std::size_t a, std::size_t b) {
        int ca = cls(loops[a].type), cb = cls(loops[b].type);
        if (ca != cb) return ca < cb;
        if (ca == 0) {
            if (loops[a].slope != loops[b].slope) return loops[a].slope > loops[b].slope;
            return a < b;
        }
        if (ca == 1) {
            if (loops[a].slope != loops[b].slope) return loops[a].slope < loops[b].slope;
            return a > b;
        }
        return a < b;
    };
    std::vector<std::size_t> by_rank(k);
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::sort(by_rank.begin(), by_rank.end(), before);
    std::vector<std::size_t> rank(k);
    for (std::size_t r = 0; r < k; ++r) rank[by_rank[r]] = r;
    return rank;
}

std::vector<std::uint64_t> weight(const Path& path) {
    Decomposition dec = decompose(path);
    std::vector<std::size_t> rank = loop_order(dec);
    std::size_t k = dec.blocks.size();
    std::vector<std::uint64_t> w(k);
    for (std::size_t i = 0; i < k; ++i)
        w[k - 1 - rank[i]] = dec.blocks[i].times;  // greatest loop first
    return w;
}

bool weight_less(const std::vector<std::uint64_t>& a,
                 const std::vector<std::uint64_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

BoundsReport check_reduced_bounds(const Path& path, std::size_t v) {
    Decomposition dec = decompose(path);
    BoundsReport rep;
    std::int64_t n = static_cast<std::int64_t>(v);
    auto fail = [&](int clause, std::size_t i, std::size_t j, const std::string& d) {
        rep.violations.push_back({clause, i, j, d});
    };
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < dec.blocks.size(); ++j) {
            PairView pv = view_pair(dec, i, j);
            std::int64_t l0 = static_cast<std::int64_t>(pv.l0);
            std::int64_t l1 = static_cast<std::int64_t>(pv.l1);
            std::int64_t mid = static_cast<std::int64_t>(pv.mid_len);
            bool up0 = pv.blk0.type == LoopType::gt_geq;
            bool up1 = pv.blk1.type == LoopType::gt_geq;
            bool dn0 = pv.blk0.type == LoopType::lt_lt;
            bool dn1 = pv.blk1.type == LoopType::lt_lt;
            const Slope &s0 = pv.blk0.slope, &s1 = pv.blk1.slope;

            if (up0 && up1 && s0 >= s1 && !(l1 <= n))
                fail(1, i, j, "l1=" + std::to_string(l1) + " > |V|");
            if (up0 && up1 && s0 < s1 && !(l0 <= mid + 2 * n))
                fail(2, i, j, "l0=" + std::to_string(l0) + " > |mid|+2|V|");
            if (dn0 && dn1 && s0 < s1 && !(l1 < n * n + 2 * mid))
                fail(3, i, j, "l1=" + std::to_string(l1) + " >= |V|^2+2|mid|");
            if (dn0 && dn1 && s0 >= s1 && !(l0 < n))
                fail(4, i, j, "l0=" + std::to_string(l0) + " >= |V|");
            if (up0 && dn1 && s0 <= s1 && !(l0 <= mid + n || l1 <= n))
                fail(5, i, j, "l0 > |mid|+|V| and l1 > |V|");
        }
    }
    return rep;
}

}  // namespace ocnet
