#pragma once

// Self-dual Kostant data at the distinguished evaluation points t = k/2 and
// t = k. Family predicates encode the index patterns (I, J) and the equalities
// forced on lambda; a representative belongs to a family when it matches the
// pattern, is self-dual, and evaluates at the family's t.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kostant.hpp"

namespace oddortho {

enum class Family { Half, OneI, OneII, OneIII, OneIV };

inline std::string_view family_name(Family f) {
    switch (f) {
        case Family::Half: return "half";
        case Family::OneI: return "one_i";
        case Family::OneII: return "one_ii";
        case Family::OneIII: return "one_iii";
        case Family::OneIV: return "one_iv";
    }
    return "?";
}

inline Family parse_family(std::string_view s) {
    for (Family f : {Family::Half, Family::OneI, Family::OneII, Family::OneIII, Family::OneIV})
        if (family_name(f) == s) return f;
    throw ConstraintError("unknown family tag '" + std::string(s) + "'");
}

struct ClassifiedRep {
    KostantRep rep;
    HalfInt t;
    Weight mu;
    bool self_dual = false;
    std::vector<Family> families;  // overlapping patterns are all listed

    friend bool operator==(const ClassifiedRep& a, const ClassifiedRep& b) {
        return a.rep.pair == b.rep.pair && a.rep.w == b.rep.w && a.rep.length == b.rep.length && a.t == b.t &&
               a.mu == b.mu && a.self_dual == b.self_dual && a.families == b.families;
    }
};

namespace detail {

/// j_l = i_l + shift for l <= count, and lambda_{i_l} = lambda_{i_l + 1} + gap.
inline bool shifted_block(const KostantPair& p, const HighestWeight& lam, int count, int shift, int gap) {
    if (p.size_J() != count || p.size_I() < count) return false;
    for (int l = 1; l <= count; ++l) {
        const int il = p.i(l);
        if (p.j(l) != il + shift) return false;
        if (il + 1 > p.n() || lam.at(il) != lam.at(il + 1) + gap) return false;
    }
    return true;
}

/// I ends in {n-1, n} with |J| = |I| - 2.
inline bool tail_pair(const KostantPair& p) {
    const int ii = p.size_I();
    return ii >= 2 && p.i(ii - 1) == p.n() - 1 && p.i(ii) == p.n();
}

}  // namespace detail

/// Index pattern for t = k/2 (parity-dependent).
inline bool matches_half_pattern(const KostantPair& p, const HighestWeight& lam) {
    const int k = p.k();
    if (k % 2 == 1) {
        const int m = (k - 1) / 2;
        if (p.size_I() != m + 1 || p.i(m + 1) != p.n()) return false;
        return detail::shifted_block(p, lam, m, 1, 0) && lam.at(p.n()) == 0;
    }
    return p.size_I() == k / 2 && detail::shifted_block(p, lam, k / 2, 1, 0);
}

/// Index pattern for one of the four t = k families.
inline bool matches_one_pattern(const KostantPair& p, const HighestWeight& lam, Family f) {
    const int k = p.k();
    switch (f) {
        case Family::OneI:
            return detail::tail_pair(p) && detail::shifted_block(p, lam, p.size_I() - 2, 1, 1) &&
                   lam.at(p.n() - 1) == 0 && lam.at(p.n()) == 0;
        case Family::OneII:
            return detail::tail_pair(p) && detail::shifted_block(p, lam, p.size_I() - 2, 2, 0);
        case Family::OneIII:
            return p.size_I() == k / 2 && detail::shifted_block(p, lam, k / 2, 1, 1);
        case Family::OneIV:
            return p.size_I() == k / 2 && detail::shifted_block(p, lam, k / 2, 2, 0);
        case Family::Half:
            break;
    }
    return false;
}

inline ClassifiedRep classify_rep(const KostantRep& rep, const HighestWeight& lam) {
    ClassifiedRep c{rep, eval_t(rep.pair, lam), mu_w(rep.pair, lam), false, {}};
    const RankContext& ctx = rep.pair.ctx();
    const int k = ctx.k();
    c.self_dual = is_self_dual(c.mu, ctx);
    if (!c.self_dual) return c;
    if (c.t == HalfInt::from_twice(k) && matches_half_pattern(rep.pair, lam)) c.families.push_back(Family::Half);
    if (k % 2 == 0 && k < ctx.n() && c.t == HalfInt::from_int(k)) {
        for (Family f : {Family::OneI, Family::OneII, Family::OneIII, Family::OneIV})
            if (matches_one_pattern(rep.pair, lam, f)) c.families.push_back(f);
    }
    return c;
}

/// Self-dual representatives with t == target, in (I, J) order.
inline std::vector<ClassifiedRep> scan_t(const RankContext& ctx, const HighestWeight& lam, const Rational& target) {
    std::vector<ClassifiedRep> out;
    if (!target.is_half_integer()) return out;
    for (const auto& rep : enumerate_kostant(ctx)) {
        if (eval_t(rep.pair, lam).to_rational() != target) continue;
        auto c = classify_rep(rep, lam);
        if (c.self_dual) out.push_back(std::move(c));
    }
    return out;
}

struct SmallTReport {
    bool pass = true;
    int checked = 0;
    std::optional<KostantPair> violation;
};

/// No self-dual representative may have 0 <= t < k/2.
inline SmallTReport verify_no_small_t(const RankContext& ctx, const HighestWeight& lam) {
    SmallTReport report;
    const HalfInt half_k = HalfInt::from_twice(ctx.k());
    for (const auto& rep : enumerate_kostant(ctx)) {
        ++report.checked;
        HalfInt t = eval_t(rep.pair, lam);
        if (t < HalfInt{} || t >= half_k) continue;
        if (is_self_dual(mu_w(rep.pair, lam), ctx)) {
            report.pass = false;
            report.violation = rep.pair;
            return report;
        }
    }
    return report;
}

/// Closed-form length shared by every self-dual representative at t = k/2.
inline int half_family_length(const RankContext& ctx) {
    const int n = ctx.n(), k = ctx.k();
    if (k % 2 == 1) {
        const int m = (k - 1) / 2;  // (k-1)/2 * (2n - 3(k-1)/2) + (n - k + 1)
        return m * (2 * n) - 3 * m * m + (n - k + 1);
    }
    const int m = k / 2;  // k/2 * (2n - 3k/2 + 1)
    return m * (2 * n - 3 * m + 1);
}

/// Length window for t = k: [k(n - 3k/4 + 1/2), k(n - 3k/4 + 1)], k even.
inline std::pair<int, int> one_family_length_window(const RankContext& ctx) {
    const int n = ctx.n(), k = ctx.k();
    const int base = k * n - 3 * k * k / 4;
    return {base + k / 2, base + k};
}

/// Length bounds stated for a single t = k family (k even).
inline std::pair<int, int> one_family_length_bounds(const RankContext& ctx, Family f) {
    const auto [lo, hi] = one_family_length_window(ctx);
    const int k = ctx.k();
    switch (f) {
        case Family::OneI: return {lo + 1, lo + 1};
        case Family::OneII: return {hi - (k - 2) / 4, hi};
        case Family::OneIII: return {lo, lo};
        case Family::OneIV: return {hi - k / 4, hi};
        case Family::Half: break;
    }
    throw PreconditionError("one_family_length_bounds needs a t = k family");
}

/// Representatives matching the t = k/2 pattern, self-dual and with t = k/2.
inline std::vector<ClassifiedRep> family_half(const RankContext& ctx, const HighestWeight& lam) {
    std::vector<ClassifiedRep> out;
    for (const auto& rep : enumerate_kostant(ctx)) {
        if (!matches_half_pattern(rep.pair, lam)) continue;
        auto c = classify_rep(rep, lam);
        if (std::find(c.families.begin(), c.families.end(), Family::Half) != c.families.end()) out.push_back(std::move(c));
    }
    return out;
}

/// Representatives matching any of the four t = k patterns (k even, k < n).
inline std::vector<ClassifiedRep> family_one(const RankContext& ctx, const HighestWeight& lam) {
    if (ctx.k() % 2 != 0 || ctx.k() >= ctx.n())
        throw PreconditionError("t = k classification needs even k < n, got n=" + std::to_string(ctx.n()) +
                                " k=" + std::to_string(ctx.k()));
    std::vector<ClassifiedRep> out;
    for (const auto& rep : enumerate_kostant(ctx)) {
        auto c = classify_rep(rep, lam);
        auto is_one = [](Family f) { return f != Family::Half; };
        if (std::any_of(c.families.begin(), c.families.end(), is_one)) {
            c.families.erase(std::remove(c.families.begin(), c.families.end(), Family::Half), c.families.end());
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace oddortho
