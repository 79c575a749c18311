#pragma once

// Brute-force verification engine. Everything here is recomputed from the
// definitions (full hyperoctahedral group, the W^P membership test, act and
// restriction) and compared against the closed forms in kostant.hpp,
// classify.hpp and degrees.hpp. Closed-form code is only ever called on the
// "got" side of a comparison.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "classify.hpp"
#include "degrees.hpp"
#include "kostant.hpp"
#include "rootsys.hpp"

namespace oddortho::oracle {

inline constexpr int kDefaultWeylCap = 6;
inline constexpr int kHardWeylCap = 7;

/// Cap on n for full group enumeration: RESOURCE_CAP if set, else 6, never above 7.
inline int default_weyl_cap() {
    int cap = kDefaultWeylCap;
    if (const char* env = std::getenv("RESOURCE_CAP")) {
        try {
            cap = static_cast<int>(detail::parse_int(env));
        } catch (const DomainError&) {
            cap = kDefaultWeylCap;
        }
    }
    return std::clamp(cap, 0, kHardWeylCap);
}

/// Visits all 2^n n! signed permutations: permutations in lexicographic order,
/// sign masks ascending within each.
template <typename Visitor>
void for_each_weyl(int n, Visitor&& visit, int cap = default_weyl_cap()) {
    if (n < 1) throw InvalidRank("rank must be >= 1, got " + std::to_string(n));
    if (n > std::min(cap, kHardWeylCap))
        throw ResourceGuardError("Weyl group enumeration for n=" + std::to_string(n) + " exceeds cap " +
                                 std::to_string(std::min(cap, kHardWeylCap)));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> signs(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) signs[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
            visit(SignedPermutation(perm, std::move(signs)));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

inline std::vector<SignedPermutation> enumerate_weyl(int n, int cap = default_weyl_cap()) {
    std::vector<SignedPermutation> out;
    for_each_weyl(n, [&](SignedPermutation w) { out.push_back(std::move(w)); }, cap);
    return out;
}

/// {w in W : w^{-1}(alpha) > 0 for all Levi simple roots alpha}.
inline std::set<SignedPermutation> brute_kostant(const RankContext& ctx, int cap = default_weyl_cap()) {
    std::set<SignedPermutation> out;
    RootSet roots(ctx.n());
    for_each_weyl(ctx.n(), [&](SignedPermutation w) {
        if (is_kostant(w, ctx, roots)) out.insert(std::move(w));
    }, cap);
    return out;
}

/// alpha_k-coefficient of -w(lambda + rho) restricted to a_k.
inline HalfInt brute_t(const SignedPermutation& w, const HighestWeight& lam, const RankContext& ctx) {
    return restrict_a(-act(w, lam.weight() + rho(ctx.n())), ctx);
}

/// (w(lambda + rho) - rho) restricted to b_k.
inline Weight brute_mu(const SignedPermutation& w, const HighestWeight& lam, const RankContext& ctx) {
    return restrict_b(act(w, lam.weight() + rho(ctx.n())) - rho(ctx.n()), ctx);
}

/// mu_l = -mu_{k-l+1} on the GL block; the SO block is automatic.
inline bool brute_self_dual(const Weight& mu, const RankContext& ctx) {
    for (int l = 1; l <= ctx.k(); ++l)
        if (mu.at(l) != -mu.at(ctx.k() - l + 1)) return false;
    return true;
}

/// Every weakly decreasing tuple of length n with entries in [0, cap].
inline std::vector<HighestWeight> dominant_weights(int n, int cap) {
    std::vector<HighestWeight> out;
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t)> rec = [&](std::int64_t bound) {
        if (static_cast<int>(cur.size()) == n) {
            out.emplace_back(cur);
            return;
        }
        for (std::int64_t v = bound; v >= 0; --v) {
            cur.push_back(v);
            rec(v);
            cur.pop_back();
        }
    };
    if (n >= 1 && cap >= 0) rec(cap);
    return out;
}

inline std::int64_t binomial(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

struct Failure {
    std::string check;
    std::string input;
    std::string expected;
    std::string got;
};

struct SuiteReport {
    std::int64_t checks_run = 0;
    std::vector<Failure> failures;

    bool pass() const noexcept { return failures.empty(); }

    /// Records one comparison; returns whether it held.
    bool expect(bool ok, std::string check, std::string input, std::string expected, std::string got) {
        ++checks_run;
        if (!ok) failures.push_back({std::move(check), std::move(input), std::move(expected), std::move(got)});
        return ok;
    }

    template <typename T>
    bool expect_eq(const T& expected, const T& got, std::string check, std::string input) {
        return expect(expected == got, std::move(check), std::move(input), stringify(expected), stringify(got));
    }

    SuiteReport& merge(const SuiteReport& other) {
        checks_run += other.checks_run;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
        return *this;
    }

private:
    template <typename T>
    static std::string stringify(const T& v) {
        if constexpr (std::is_same_v<T, bool>) {
            return v ? "true" : "false";
        } else if constexpr (std::is_arithmetic_v<T>) {
            return std::to_string(v);
        } else {
            return v.to_string();
        }
    }
};

namespace detail {

inline std::string describe(const RankContext& ctx) {
    return "n=" + std::to_string(ctx.n()) + " k=" + std::to_string(ctx.k());
}

inline std::string describe(const RankContext& ctx, const HighestWeight& lam) {
    std::string s = describe(ctx) + " lambda=(";
    for (int i = 1; i <= lam.rank(); ++i) s += (i > 1 ? "," : "") + std::to_string(lam.at(i));
    return s + ")";
}

inline std::set<SignedPermutation> elements(const std::vector<ClassifiedRep>& reps) {
    std::set<SignedPermutation> out;
    for (const auto& c : reps) out.insert(c.rep.w);
    return out;
}

inline std::string describe_set(const std::set<SignedPermutation>& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& w : s) {
        out += (first ? "" : ", ") + w.to_string();
        first = false;
    }
    return out + "}";
}

}  // namespace detail

/// Positive roots, rho, length symmetry, nilradical dimension, Levi longest
/// element and rho_P for rank n.
inline void check_rootsys(int n, SuiteReport& report, int cap = default_weyl_cap()) {
    const std::string in = "n=" + std::to_string(n);
    auto roots = positive_roots(n);
    report.expect_eq<std::int64_t>(static_cast<std::int64_t>(n) * n, static_cast<std::int64_t>(roots.size()),
                                   "positive_roots.count", in);
    std::set<Weight> distinct(roots.begin(), roots.end());
    report.expect_eq<std::int64_t>(static_cast<std::int64_t>(roots.size()), static_cast<std::int64_t>(distinct.size()),
                                   "positive_roots.distinct", in);
    Weight sum(n);
    for (const auto& r : roots) sum = sum + r;
    report.expect_eq(Rational(1, 2) * sum, rho(n), "rho.half_sum", in);

    RootSet rs(n);
    if (n <= std::min(cap, 5)) {
        for_each_weyl(n, [&](const SignedPermutation& w) {
            const int a = inv_length(w, rs), b = inv_length(w.inverse(), rs);
            if (a != b) report.expect_eq(a, b, "inv_length.inverse_symmetry", in + " w=" + w.to_string());
            else ++report.checks_run;
        }, cap);
    }

    for (int k = 1; k <= n; ++k) {
        RankContext ctx(n, k);
        const std::string cin = detail::describe(ctx);
        int levi_positive = 0;
        for (const auto& g : roots) {
            Rational a;
            for (int i = 1; i <= k; ++i) a += g.at(i);
            if (a == Rational(0)) ++levi_positive;
        }
        report.expect_eq(n * n - levi_positive, dim_nilradical(ctx), "dim_nilradical.root_count", cin);

        auto wl = longest_levi(ctx);
        bool negates_all = true;
        for (const auto& g : roots) {
            Rational a;
            for (int i = 1; i <= k; ++i) a += g.at(i);
            if (a == Rational(0) && !rs.is_negative(act(wl, g))) negates_all = false;
        }
        report.expect(negates_all, "longest_levi.negates_levi_roots", cin, "true", negates_all ? "true" : "false");
        report.expect_eq(k * (k - 1) / 2 + (n - k) * (n - k), inv_length(wl, rs), "longest_levi.length", cin);
        report.expect_eq(restrict_a(rho(n), ctx), rho_parabolic(ctx), "rho_parabolic.restriction", cin);
    }
}

/// W^{P_k} from (I, J) pairs against the brute-force definition, plus lengths.
inline void check_parametrization(const RankContext& ctx, SuiteReport& report, int cap = default_weyl_cap()) {
    const std::string in = detail::describe(ctx);
    auto brute = brute_kostant(ctx, cap);
    auto reps = enumerate_kostant(ctx);
    std::set<SignedPermutation> generated;
    for (const auto& r : reps) generated.insert(r.w);

    const std::int64_t expected_size = (std::int64_t{1} << ctx.k()) * binomial(ctx.n(), ctx.k());
    report.expect_eq<std::int64_t>(expected_size, static_cast<std::int64_t>(brute.size()), "kostant.brute_size", in);
    report.expect_eq<std::int64_t>(expected_size, static_cast<std::int64_t>(reps.size()), "kostant.pair_count", in);
    report.expect_eq<std::int64_t>(static_cast<std::int64_t>(reps.size()), static_cast<std::int64_t>(generated.size()),
                                   "kostant.pairs_distinct", in);
    report.expect(generated == brute, "kostant.set_equality", in, detail::describe_set(brute),
                  detail::describe_set(generated));

    RootSet rs(ctx.n());
    for (const auto& r : reps) {
        const std::string pin = in + " pair=" + r.pair.to_string();
        report.expect_eq(inv_length(r.w, rs), r.length, "length_formula", pin);
        for (const auto& [idx, img] : inverse_simple_images(r.pair))
            report.expect(rs.is_positive(img), "inverse_simple_images.positive",
                          pin + " l=" + std::to_string(idx), "positive root", img.to_string());
    }
}

/// Closed-form t, mu_w and self-duality against act/restrict for one lambda.
inline void check_weights(const RankContext& ctx, const HighestWeight& lam, SuiteReport& report) {
    const std::string in = detail::describe(ctx, lam);
    const Rational k(ctx.k());
    const Rational n(ctx.n());
    for (const auto& r : enumerate_kostant(ctx)) {
        const std::string pin = in + " pair=" + r.pair.to_string();
        const HalfInt bt = brute_t(r.w, lam, ctx);
        const Weight bmu = brute_mu(r.w, lam, ctx);
        report.expect_eq(bt, eval_t(r.pair, lam), "eval_t", pin);
        report.expect_eq(bmu, mu_w(r.pair, lam), "mu_w", pin);

        // a-part of w(lambda + rho) - rho equals -(t/k + n - k/2) k.
        const HalfInt a_part = restrict_a(act(r.w, lam.weight() + rho(ctx.n())) - rho(ctx.n()), ctx);
        const Rational predicted = -(bt.to_rational() / k + n - k / Rational(2)) * k;
        report.expect_eq(predicted, a_part.to_rational(), "lambda_w.a_part", pin);

        const bool sd = brute_self_dual(bmu, ctx);
        report.expect_eq(sd, is_self_dual(mu_w(r.pair, lam), ctx), "is_self_dual", pin);

        if (sd && bt >= HalfInt{})
            report.expect(r.pair.size_I() >= r.pair.size_J(), "reduction.i_ge_j", pin, "|I| >= |J|",
                          std::to_string(r.pair.size_I()) + " < " + std::to_string(r.pair.size_J()));
        if (sd)
            report.expect(bt < HalfInt{} || bt >= HalfInt::from_twice(ctx.k()), "exclusion.no_small_t", pin,
                          "t < 0 or t >= k/2", bt.to_string());
    }
}

/// Self-dual brute-force representatives at the given t (as signed permutations).
inline std::set<SignedPermutation> brute_scan(const RankContext& ctx, const HighestWeight& lam, HalfInt t,
                                              const std::set<SignedPermutation>& kostant_set) {
    std::set<SignedPermutation> out;
    for (const auto& w : kostant_set)
        if (brute_t(w, lam, ctx) == t && brute_self_dual(brute_mu(w, lam, ctx), ctx)) out.insert(w);
    return out;
}

/// Family predicates and length claims against the brute-force scans.
inline void check_classification(const RankContext& ctx, const HighestWeight& lam,
                                 const std::set<SignedPermutation>& kostant_set, SuiteReport& report) {
    const std::string in = detail::describe(ctx, lam);
    RootSet rs(ctx.n());

    const HalfInt half = HalfInt::from_twice(ctx.k());
    auto oracle_half = brute_scan(ctx, lam, half, kostant_set);
    auto fam_half = family_half(ctx, lam);
    report.expect(detail::elements(fam_half) == oracle_half, "family_half.set_equality", in,
                  detail::describe_set(oracle_half), detail::describe_set(detail::elements(fam_half)));
    auto scan_half = scan_t(ctx, lam, half);
    report.expect(detail::elements(scan_half) == oracle_half, "scan_t.half.set_equality", in,
                  detail::describe_set(oracle_half), detail::describe_set(detail::elements(scan_half)));
    for (const auto& w : oracle_half)
        report.expect_eq(half_family_length(ctx), inv_length(w, rs), "family_half.length", in + " w=" + w.to_string());

    if (ctx.k() % 2 == 0 && ctx.k() < ctx.n()) {
        const HalfInt full = HalfInt::from_int(ctx.k());
        auto oracle_one = brute_scan(ctx, lam, full, kostant_set);
        auto fam_one = family_one(ctx, lam);
        report.expect(detail::elements(fam_one) == oracle_one, "family_one.set_equality", in,
                      detail::describe_set(oracle_one), detail::describe_set(detail::elements(fam_one)));
        auto scan_one = scan_t(ctx, lam, full);
        report.expect(detail::elements(scan_one) == oracle_one, "scan_t.one.set_equality", in,
                      detail::describe_set(oracle_one), detail::describe_set(detail::elements(scan_one)));
        for (const auto& c : fam_one) {
            const int len = inv_length(c.rep.w, rs);
            for (Family f : c.families) {
                auto [flo, fhi] = one_family_length_bounds(ctx, f);
                report.expect(flo <= len && len <= fhi, "family_one.family_length",
                              in + " " + std::string(family_name(f)) + " w=" + c.rep.w.to_string(),
                              "[" + std::to_string(flo) + "," + std::to_string(fhi) + "]", std::to_string(len));
            }
        }
        auto [lo, hi] = one_family_length_window(ctx);
        for (const auto& w : oracle_one) {
            const int len = inv_length(w, rs);
            report.expect(lo <= len && len <= hi, "family_one.length_window", in + " w=" + w.to_string(),
                          "[" + std::to_string(lo) + "," + std::to_string(hi) + "]", std::to_string(len));
        }
    }
}

/// Composing the Levi range, l(w) and q' = q + dim N - 2 l(w) lands in the
/// theorem-level residual window for every self-dual representative at a pole point.
inline void check_degree_windows(const RankContext& ctx, const HighestWeight& lam,
                                 const std::set<SignedPermutation>& kostant_set, SuiteReport& report) {
    const std::string in = detail::describe(ctx, lam);
    RootSet rs(ctx.n());
    std::vector<HalfInt> points{HalfInt::from_twice(ctx.k())};
    if (ctx.k() % 2 == 0 && ctx.k() < ctx.n()) points.push_back(HalfInt::from_int(ctx.k()));
    for (HalfInt t : points) {
        const DegreeRange window = residual_window(ctx, t);
        for (const auto& w : brute_scan(ctx, lam, t, kostant_set)) {
            const int lw = inv_length(w, rs);
            const DegreeRange q = levi_cusp_range(ctx).shifted(lw);
            const DegreeRange composed(residual_degree(q.lo, ctx, lw), residual_degree(q.hi, ctx, lw));
            report.expect(window.contains(composed), "degrees.window_consistency",
                          in + " t=" + t.to_string() + " w=" + w.to_string(), window.to_string(), composed.to_string());
        }
    }
}

/// n <= (n^2+n)/2 - ceil(k/2) for n >= 2, and n <= (n^2+n)/2 - k for n >= 3, even k.
inline void check_lower_bounds(int n, SuiteReport& report) {
    if (n < 2) return;
    for (int k = 1; k <= n; ++k) {
        RankContext ctx(n, k);
        const std::string in = detail::describe(ctx);
        const auto half = residual_window(ctx, HalfInt::from_twice(k));
        report.expect(n <= half.lo, "degrees.lower_bound_half", in, ">= " + std::to_string(n), std::to_string(half.lo));
        if (n >= 3 && k % 2 == 0 && k < n) {
            const auto one = residual_window(ctx, HalfInt::from_int(k));
            report.expect(n <= one.lo, "degrees.lower_bound_one", in, ">= " + std::to_string(n), std::to_string(one.lo));
        }
    }
}

/// Every formula-vs-oracle check over n <= n_max, k <= min(k_max, n),
/// dominant lambda with entries <= lambda_cap.
inline SuiteReport run_suite(int n_max, int k_max, int lambda_cap, int cap = default_weyl_cap()) {
    SuiteReport report;
    if (n_max > std::min(cap, kHardWeylCap))
        throw ResourceGuardError("n_max=" + std::to_string(n_max) + " exceeds Weyl enumeration cap " +
                                 std::to_string(std::min(cap, kHardWeylCap)));
    for (int n = 1; n <= n_max; ++n) {
        check_rootsys(n, report, cap);
        check_lower_bounds(n, report);
        for (int k = 1; k <= std::min(k_max, n); ++k) {
            RankContext ctx(n, k);
            check_parametrization(ctx, report, cap);
            const auto kostant_set = brute_kostant(ctx, cap);
            for (const auto& lam : dominant_weights(n, lambda_cap)) {
                check_weights(ctx, lam, report);
                check_classification(ctx, lam, kostant_set, report);
                check_degree_windows(ctx, lam, kostant_set, report);
            }
        }
    }
    return report;
}

}  // namespace oddortho::oracle
