#pragma once

// Kostant representatives W^{P_k} of the maximal parabolic P_k of SO(2n+1),
// indexed by ordered pairs (I, J) of disjoint subsets of {1..n} with
// |I| + |J| = k. Closed forms for the length, the evaluation coefficient t and
// the restricted highest weight mu_w live here; the brute-force counterparts
// live in oracle.hpp.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "rootsys.hpp"

namespace oddortho {

class KostantPair {
public:
    /// I and J must be strictly increasing, disjoint, inside [1, n], with |I| + |J| = k.
    KostantPair(RankContext ctx, std::vector<int> I, std::vector<int> J)
        : ctx_(ctx), I_(std::move(I)), J_(std::move(J)) {
        auto check_block = [&](const std::vector<int>& block, const char* name) {
            for (std::size_t a = 0; a < block.size(); ++a) {
                if (block[a] < 1 || block[a] > ctx_.n())
                    throw ConstraintError(std::string(name) + " contains index " + std::to_string(block[a]) +
                                          " outside [1," + std::to_string(ctx_.n()) + "]");
                if (a > 0 && block[a] <= block[a - 1])
                    throw ConstraintError(std::string(name) + " must be strictly increasing");
            }
        };
        check_block(I_, "I");
        check_block(J_, "J");
        for (int i : I_)
            if (std::binary_search(J_.begin(), J_.end(), i))
                throw ConstraintError("I and J share index " + std::to_string(i));
        if (static_cast<int>(I_.size() + J_.size()) != ctx_.k())
            throw ConstraintError("|I| + |J| must equal k=" + std::to_string(ctx_.k()));
    }

    const RankContext& ctx() const noexcept { return ctx_; }
    int n() const noexcept { return ctx_.n(); }
    int k() const noexcept { return ctx_.k(); }
    const std::vector<int>& I() const noexcept { return I_; }
    const std::vector<int>& J() const noexcept { return J_; }
    int size_I() const noexcept { return static_cast<int>(I_.size()); }
    int size_J() const noexcept { return static_cast<int>(J_.size()); }

    /// 1-based accessors i_l, j_l, r_l.
    int i(int l) const { return I_.at(static_cast<std::size_t>(l - 1)); }
    int j(int l) const { return J_.at(static_cast<std::size_t>(l - 1)); }
    int r(int l) const { return R().at(static_cast<std::size_t>(l - 1)); }

    /// {1..n} \ (I u J), ascending.
    std::vector<int> R() const {
        std::vector<int> rest;
        for (int x = 1; x <= ctx_.n(); ++x)
            if (!std::binary_search(I_.begin(), I_.end(), x) && !std::binary_search(J_.begin(), J_.end(), x))
                rest.push_back(x);
        return rest;
    }

    std::string to_string() const {
        auto block = [](const std::vector<int>& v) {
            std::string s = "{";
            for (std::size_t a = 0; a < v.size(); ++a) s += (a ? "," : "") + std::to_string(v[a]);
            return s + "}";
        };
        return "(" + block(I_) + "," + block(J_) + ")";
    }

    friend bool operator==(const KostantPair& a, const KostantPair& b) {
        return a.ctx_ == b.ctx_ && a.I_ == b.I_ && a.J_ == b.J_;
    }
    /// Lexicographic on (I, J) within a fixed context.
    friend std::strong_ordering operator<=>(const KostantPair& a, const KostantPair& b) {
        if (auto c = a.ctx_.n() <=> b.ctx_.n(); c != 0) return c;
        if (auto c = a.ctx_.k() <=> b.ctx_.k(); c != 0) return c;
        if (auto c = a.I_ <=> b.I_; c != 0) return c;
        return a.J_ <=> b.J_;
    }

private:
    RankContext ctx_;
    std::vector<int> I_;
    std::vector<int> J_;
};

/// Dominant integral highest weight lambda_1 >= ... >= lambda_n >= 0.
class HighestWeight {
public:
    explicit HighestWeight(std::vector<std::int64_t> lambda) : lambda_(std::move(lambda)) {
        if (lambda_.empty()) throw ConstraintError("highest weight must have at least one coordinate");
        for (std::size_t i = 0; i < lambda_.size(); ++i) {
            if (lambda_[i] < 0)
                throw ConstraintError("highest weight must be non-negative: lambda_" + std::to_string(i + 1) + " = " +
                                      std::to_string(lambda_[i]));
            if (i > 0 && lambda_[i] > lambda_[i - 1])
                throw ConstraintError("highest weight must be dominant (weakly decreasing): lambda_" +
                                      std::to_string(i) + " < lambda_" + std::to_string(i + 1));
        }
    }
    static HighestWeight zero(int n) { return HighestWeight(std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)); }

    int rank() const noexcept { return static_cast<int>(lambda_.size()); }
    const std::vector<std::int64_t>& values() const noexcept { return lambda_; }
    std::int64_t at(int i) const { return lambda_.at(static_cast<std::size_t>(i - 1)); }
    Weight weight() const { return Weight::from_ints(lambda_); }

    friend bool operator==(const HighestWeight&, const HighestWeight&) = default;

private:
    std::vector<std::int64_t> lambda_;
};

namespace detail {
inline void check_lambda(const KostantPair& pair, const HighestWeight& lam) {
    if (lam.rank() != pair.n())
        throw DimensionError("highest weight has rank " + std::to_string(lam.rank()) + ", expected " +
                             std::to_string(pair.n()));
}
}  // namespace detail

/// e_{i_l} -> -e_{k+1-l}, e_{j_l} -> e_l, e_{r_l} -> e_{k+l}.
inline SignedPermutation to_signed_perm(const KostantPair& pair) {
    const int n = pair.n(), k = pair.k();
    std::vector<int> perm(static_cast<std::size_t>(n)), signs(static_cast<std::size_t>(n));
    for (int l = 1; l <= pair.size_I(); ++l) {
        auto idx = static_cast<std::size_t>(pair.i(l) - 1);
        perm[idx] = k + 1 - l;
        signs[idx] = -1;
    }
    for (int l = 1; l <= pair.size_J(); ++l) {
        auto idx = static_cast<std::size_t>(pair.j(l) - 1);
        perm[idx] = l;
        signs[idx] = 1;
    }
    auto rest = pair.R();
    for (std::size_t l = 0; l < rest.size(); ++l) {
        auto idx = static_cast<std::size_t>(rest[l] - 1);
        perm[idx] = k + static_cast<int>(l) + 1;
        signs[idx] = 1;
    }
    return SignedPermutation(std::move(perm), std::move(signs));
}

/// Closed-form length:
///   sum_l (2n - k - i_l + 1) + sum_l (j_l - l) - sum_{l > m} |{i in I : i < j_l}|,
/// m the number of j_l below min(I) (all of J when I is empty).
inline int length_formula(const KostantPair& pair) {
    const int n = pair.n(), k = pair.k();
    int len = 0;
    for (int i : pair.I()) len += 2 * n - k - i + 1;
    for (int l = 1; l <= pair.size_J(); ++l) len += pair.j(l) - l;
    int m = 0;
    if (pair.I().empty()) {
        m = pair.size_J();
    } else {
        while (m < pair.size_J() && pair.j(m + 1) < pair.I().front()) ++m;
    }
    for (int l = m + 1; l <= pair.size_J(); ++l) {
        const int jl = pair.j(l);
        len -= static_cast<int>(std::count_if(pair.I().begin(), pair.I().end(), [jl](int i) { return i < jl; }));
    }
    return len;
}

/// alpha_k-coefficient of -w(lambda + rho)|_{a_k}:
///   sum (lambda_{i_l} - i_l) - sum (lambda_{j_l} - j_l) + (|I| - |J|)(n + 1/2).
inline HalfInt eval_t(const KostantPair& pair, const HighestWeight& lam) {
    detail::check_lambda(pair, lam);
    std::int64_t twice = 0;
    for (int i : pair.I()) twice += 2 * (lam.at(i) - i);
    for (int j : pair.J()) twice -= 2 * (lam.at(j) - j);
    twice += static_cast<std::int64_t>(pair.size_I() - pair.size_J()) * (2 * pair.n() + 1);
    return HalfInt::from_twice(twice);
}

/// Highest weight of the M_k-module attached to w_{(I,J)}, three-block closed form.
inline Weight mu_w(const KostantPair& pair, const HighestWeight& lam) {
    detail::check_lambda(pair, lam);
    const int n = pair.n(), k = pair.k();
    const int ii = pair.size_I(), jj = pair.size_J();
    const Rational t_over_k = eval_t(pair, lam).to_rational() / Rational(k);
    const Rational half_k(k, 2);
    Weight mu(n);
    for (int l = 1; l <= jj; ++l) {
        const int j = pair.j(l);
        mu.at(l) = Rational(lam.at(j) - j + l + n) + t_over_k - half_k;
    }
    for (int l = 1; l <= ii; ++l) {
        const int i = pair.i(ii - l + 1);
        mu.at(jj + l) = -(Rational(lam.at(i) - i - jj - l + n + 1) - t_over_k + half_k);
    }
    auto rest = pair.R();
    for (int l = 1; l <= n - k; ++l) {
        const int r = rest[static_cast<std::size_t>(l - 1)];
        mu.at(k + l) = Rational(lam.at(r) - r + k + l);
    }
    return mu;
}

/// -w_{L_k}(mu) == mu.
inline bool is_self_dual(const Weight& mu, const RankContext& ctx) {
    if (mu.rank() != ctx.n()) throw DimensionError("is_self_dual: weight rank mismatch");
    return -act(longest_levi(ctx), mu) == mu;
}

struct KostantRep {
    KostantPair pair;
    SignedPermutation w;
    int length;

    explicit KostantRep(KostantPair p) : pair(std::move(p)), w(to_signed_perm(pair)), length(length_formula(pair)) {}

    friend bool operator==(const KostantRep& a, const KostantRep& b) { return a.pair == b.pair; }
};

/// All 2^k C(n,k) representatives, ordered lexicographically on (I, J).
inline std::vector<KostantRep> enumerate_kostant(const RankContext& ctx) {
    const int n = ctx.n(), k = ctx.k();
    std::vector<KostantPair> pairs;
    // Each index goes to I (0), J (1) or R (2).
    std::int64_t total = 1;
    for (int a = 0; a < n; ++a) total *= 3;
    for (std::int64_t code = 0; code < total; ++code) {
        std::int64_t c = code;
        std::vector<int> I, J;
        for (int x = 1; x <= n; ++x) {
            int s = static_cast<int>(c % 3);
            c /= 3;
            if (s == 0) I.push_back(x);
            else if (s == 1) J.push_back(x);
        }
        if (static_cast<int>(I.size() + J.size()) == k) pairs.emplace_back(ctx, std::move(I), std::move(J));
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<KostantRep> reps;
    reps.reserve(pairs.size());
    for (auto& p : pairs) reps.emplace_back(std::move(p));
    return reps;
}

/// w^{-1}(alpha_l) computed directly, one entry per Levi simple root index l != k.
inline std::vector<std::pair<int, Weight>> inverse_simple_images(const KostantPair& pair) {
    auto inv = to_signed_perm(pair).inverse();
    std::vector<std::pair<int, Weight>> out;
    for (auto& [idx, alpha] : levi_simple_roots(pair.ctx())) out.emplace_back(idx, act(inv, alpha));
    return out;
}

/// The five-row case table for w^{-1}(alpha_l) from the parametrization proof, taken literally,
/// with e_{j_jj} - e_{i_ii} in the l = |J| row.
inline Weight printed_inverse_simple_image(const KostantPair& pair, int l) {
    const int n = pair.n(), k = pair.k(), jj = pair.size_J();
    auto e = [n](int i) { return Weight::unit(n, i); };
    if (l < 1 || l > n || l == k) throw PreconditionError("index " + std::to_string(l) + " is not a Levi simple root");
    if (l <= jj - 1) return e(pair.j(l)) - e(pair.j(l + 1));
    if (l == jj) return e(pair.j(jj)) - e(pair.i(pair.size_I()));
    if (l <= k - 1) return e(pair.i(k - l)) - e(pair.i(k - l + 1));
    if (l <= n - 1) return e(pair.r(l - k)) - e(pair.r(l - k + 1));
    return e(pair.r(n - k));
}

struct TableDiscrepancy {
    int index;
    Weight printed;
    Weight direct;
};

/// Rows where the printed case table disagrees with the direct computation.
inline std::vector<TableDiscrepancy> inverse_table_discrepancies(const KostantPair& pair) {
    std::vector<TableDiscrepancy> out;
    for (auto& [idx, direct] : inverse_simple_images(pair)) {
        Weight printed = printed_inverse_simple_image(pair, idx);
        if (printed != direct) out.push_back({idx, printed, direct});
    }
    return out;
}

}  // namespace oddortho
