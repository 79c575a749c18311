#pragma once

// Command bodies behind the oddortho executable. Argument parsing lives in
// tools/; everything here takes already-split values and returns the text to print.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "render.hpp"

namespace oddortho::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

namespace detail {

inline std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> parts;
    if (s.empty()) return parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        parts.push_back(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return parts;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

}  // namespace detail

/// "a,b,c" -> dominant highest weight of rank n.
inline HighestWeight parse_lambda(std::string_view text, int n) {
    std::vector<std::int64_t> vals;
    for (auto part : detail::split_commas(text)) {
        part = detail::trim(part);
        try {
            vals.push_back(oddortho::detail::parse_int(part));
        } catch (const DomainError&) {
            throw ConstraintError("highest weight must be integral: '" + std::string(part) + "'");
        }
    }
    if (static_cast<int>(vals.size()) != n)
        throw DimensionError("lambda has " + std::to_string(vals.size()) + " entries, expected n=" + std::to_string(n));
    return HighestWeight(std::move(vals));
}

/// "1,3" -> {1, 3}; empty text is the empty set.
inline std::vector<int> parse_index_set(std::string_view text) {
    std::vector<int> out;
    for (auto part : detail::split_commas(text)) {
        const auto v = oddortho::detail::parse_int(detail::trim(part));
        if (v < 1 || v > 1'000'000) throw ConstraintError("index " + std::to_string(v) + " out of range");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

inline std::string cmd_table(int n, int k, std::string_view lambda, OutputFormat fmt) {
    RankContext ctx(n, k);
    return render_reps(table_rows(ctx, parse_lambda(lambda, n)), fmt);
}

inline std::string cmd_classify(int n, int k, std::string_view lambda, std::string_view t, OutputFormat fmt) {
    RankContext ctx(n, k);
    return render_reps(scan_t(ctx, parse_lambda(lambda, n), Rational::parse(t)), fmt);
}

struct VerdictArgs {
    int n = 0;
    int k = 0;
    std::string lambda;
    std::string I;
    std::string J;
    bool sigma_self_dual = false;
    bool omega_trivial = false;
    std::optional<bool> L_half_nonzero;
    std::optional<bool> rs_pole_at_one;
    bool lift_from_so_k = false;
    bool local_kernel = false;
};

inline std::string cmd_verdict(const VerdictArgs& a, OutputFormat fmt) {
    RankContext ctx(a.n, a.k);
    CuspidalDatum d(ctx, a.sigma_self_dual, a.omega_trivial, a.L_half_nonzero, a.rs_pole_at_one, a.lift_from_so_k);
    KostantPair pair(ctx, parse_index_set(a.I), parse_index_set(a.J));
    return render_verdict(verdict(d, parse_lambda(a.lambda, a.n), pair, a.local_kernel), fmt);
}

struct DegreeArgs {
    int n = 0;
    int k = 0;
    std::optional<std::string> t;
    std::optional<std::int64_t> lw;
    std::optional<std::int64_t> q;
};

/// Degree data of P_k; the optional arguments add the windows that depend on them.
inline std::string cmd_degrees(const DegreeArgs& a, OutputFormat fmt) {
    RankContext ctx(a.n, a.k);
    Summary s;
    s.add("n", ctx.n());
    s.add("k", ctx.k());
    s.add("gl_cusp_range", gl_cusp_range(ctx.k()));
    s.add("so_cusp_degree", so_cusp_degree(ctx.l()));
    s.add("levi_cusp_range", levi_cusp_range(ctx));
    s.add("dim_nilradical", dim_nilradical(ctx));
    s.add("rho_parabolic", rho_parabolic(ctx));
    s.add("residual_window_half", residual_window(ctx, HalfInt::from_twice(ctx.k())));
    if (ctx.k() % 2 == 0 && ctx.k() < ctx.n()) s.add("residual_window_one", residual_window(ctx, HalfInt::from_int(ctx.k())));
    if (a.t) s.add("residual_window", residual_window(ctx, HalfInt::parse(*a.t)));
    if (a.lw) s.add("regular_window", regular_window(ctx, *a.lw));
    if (a.q) {
        if (!a.lw) throw PreconditionError("--q needs --lw");
        s.add("residual_degree", residual_degree(*a.q, ctx, *a.lw));
    }
    return s.render(fmt);
}

struct VerifyResult {
    std::string text;
    bool pass = false;
};

inline VerifyResult cmd_verify(int n_max, int k_max, int lambda_cap, OutputFormat fmt) {
    if (n_max < 0 || k_max < 0 || lambda_cap < 0) throw ConstraintError("verify bounds must be non-negative");
    auto report = oracle::run_suite(n_max, k_max, lambda_cap);
    return {render_suite(report, fmt), report.pass()};
}

}  // namespace oddortho::cli
