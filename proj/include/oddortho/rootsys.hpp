#pragma once

// Type B_n root-system primitives over the epsilon basis: weights, signed
// permutations (the hyperoctahedral Weyl group), positive roots, rho, the
// a_k / b_k restriction maps and the Kostant-representative membership test
// for the maximal parabolic P_k with Levi GL_k x SO_{2(n-k)+1}.
//
// Indices are 1-based at every public boundary (epsilon_1 .. epsilon_n).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace oddortho {

class Weight {
public:
    Weight() = default;
    explicit Weight(int n) : coords_(static_cast<std::size_t>(n)) {}
    explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

    static Weight from_halfints(const std::vector<HalfInt>& hs) {
        Weight w(static_cast<int>(hs.size()));
        for (std::size_t i = 0; i < hs.size(); ++i) w.coords_[i] = hs[i].to_rational();
        return w;
    }
    static Weight from_ints(const std::vector<std::int64_t>& vs) {
        Weight w(static_cast<int>(vs.size()));
        for (std::size_t i = 0; i < vs.size(); ++i) w.coords_[i] = Rational(vs[i]);
        return w;
    }
    /// epsilon_i, 1-based.
    static Weight unit(int n, int i, std::int64_t sign = 1) {
        Weight w(n);
        w.at(i) = Rational(sign);
        return w;
    }

    int rank() const noexcept { return static_cast<int>(coords_.size()); }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    /// Coefficient of epsilon_i, 1-based.
    const Rational& at(int i) const { return coords_.at(static_cast<std::size_t>(i - 1)); }
    Rational& at(int i) { return coords_.at(static_cast<std::size_t>(i - 1)); }

    /// Coefficient of epsilon_i as a half-integer; throws DomainError otherwise.
    HalfInt half_at(int i) const { return HalfInt::from_rational(at(i)); }
    bool is_half_integral() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_half_integer(); });
    }

    Weight operator-() const {
        Weight r(*this);
        for (auto& c : r.coords_) c = -c;
        return r;
    }
    friend Weight operator+(const Weight& a, const Weight& b) {
        check_same_rank(a, b);
        Weight r(a);
        for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }
    friend Weight operator*(const Rational& s, const Weight& a) {
        Weight r(a);
        for (auto& c : r.coords_) c *= s;
        return r;
    }

    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords_ <=> b.coords_; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ",";
            s += coords_[i].to_string();
        }
        return s + ")";
    }

    static void check_same_rank(const Weight& a, const Weight& b) {
        if (a.rank() != b.rank())
            throw DimensionError("weight rank mismatch: " + std::to_string(a.rank()) + " vs " +
                                 std::to_string(b.rank()));
    }

private:
    std::vector<Rational> coords_;
};

/// Element of W(B_n): epsilon_i -> signs[i] * epsilon_{perm[i]}.
class SignedPermutation {
public:
    SignedPermutation() = default;

    /// perm is 1-based (a bijection of 1..n); signs are +1/-1.
    SignedPermutation(std::vector<int> perm, std::vector<int> signs) : perm_(std::move(perm)), signs_(std::move(signs)) {
        if (perm_.size() != signs_.size()) throw ConstraintError("perm and signs differ in length");
        std::vector<bool> seen(perm_.size(), false);
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            int p = perm_[i];
            if (p < 1 || p > static_cast<int>(perm_.size()) || seen[static_cast<std::size_t>(p - 1)])
                throw ConstraintError("perm is not a permutation of 1..n");
            seen[static_cast<std::size_t>(p - 1)] = true;
            if (signs_[i] != 1 && signs_[i] != -1) throw ConstraintError("signs must be +1 or -1");
        }
    }

    static SignedPermutation identity(int n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
        return SignedPermutation(std::move(perm), std::vector<int>(static_cast<std::size_t>(n), 1), unchecked{});
    }

    int rank() const noexcept { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const noexcept { return perm_; }
    const std::vector<int>& signs() const noexcept { return signs_; }

    /// Target index of epsilon_i (1-based in and out).
    int target(int i) const { return perm_.at(static_cast<std::size_t>(i - 1)); }
    int sign(int i) const { return signs_.at(static_cast<std::size_t>(i - 1)); }

    SignedPermutation inverse() const {
        std::vector<int> perm(perm_.size()), signs(perm_.size());
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            auto t = static_cast<std::size_t>(perm_[i] - 1);
            perm[t] = static_cast<int>(i) + 1;
            signs[t] = signs_[i];
        }
        return SignedPermutation(std::move(perm), std::move(signs), unchecked{});
    }

    /// (a * b)(x) = a(b(x)).
    friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
        if (a.rank() != b.rank()) throw DimensionError("signed permutation rank mismatch");
        std::vector<int> perm(a.perm_.size()), signs(a.perm_.size());
        for (std::size_t i = 0; i < b.perm_.size(); ++i) {
            auto mid = static_cast<std::size_t>(b.perm_[i] - 1);
            perm[i] = a.perm_[mid];
            signs[i] = a.signs_[mid] * b.signs_[i];
        }
        return SignedPermutation(std::move(perm), std::move(signs), unchecked{});
    }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < perm_.size(); ++i) {
            if (i) s += " ";
            s += "e" + std::to_string(i + 1) + "->" + (signs_[i] < 0 ? "-" : "") + "e" + std::to_string(perm_[i]);
        }
        return s + "]";
    }

private:
    struct unchecked {};
    SignedPermutation(std::vector<int> perm, std::vector<int> signs, unchecked)
        : perm_(std::move(perm)), signs_(std::move(signs)) {}

    std::vector<int> perm_;
    std::vector<int> signs_;
};

/// Rank n and maximal parabolic index k, 1 <= k <= n; l = n - k.
class RankContext {
public:
    RankContext(int n, int k) : n_(n), k_(k) {
        if (n < 1) throw InvalidRank("rank must be >= 1, got " + std::to_string(n));
        if (k < 1 || k > n)
            throw InvalidRank("parabolic index must satisfy 1 <= k <= n, got k=" + std::to_string(k) +
                              " n=" + std::to_string(n));
    }
    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    int l() const noexcept { return n_ - k_; }
    bool is_siegel() const noexcept { return k_ == n_; }

    friend bool operator==(const RankContext&, const RankContext&) = default;

private:
    int n_;
    int k_;
};

namespace detail {
inline void check_rank(int n) {
    if (n < 1) throw InvalidRank("rank must be >= 1, got " + std::to_string(n));
}
}  // namespace detail

/// {e_i - e_j, e_i + e_j : i < j} u {e_i}, n^2 roots.
inline std::vector<Weight> positive_roots(int n) {
    detail::check_rank(n);
    std::vector<Weight> roots;
    roots.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            roots.push_back(Weight::unit(n, i) - Weight::unit(n, j));
            roots.push_back(Weight::unit(n, i) + Weight::unit(n, j));
        }
        roots.push_back(Weight::unit(n, i));
    }
    return roots;
}

/// (n - 1/2, n - 3/2, ..., 1/2).
inline Weight rho(int n) {
    detail::check_rank(n);
    Weight r(n);
    for (int i = 1; i <= n; ++i) r.at(i) = Rational(2 * (n - i) + 1, 2);
    return r;
}

inline Weight act(const SignedPermutation& w, const Weight& beta) {
    if (w.rank() != beta.rank())
        throw DimensionError("cannot act by rank " + std::to_string(w.rank()) + " element on rank " +
                             std::to_string(beta.rank()) + " weight");
    Weight out(beta.rank());
    for (int i = 1; i <= beta.rank(); ++i) out.at(w.target(i)) = w.sign(i) < 0 ? -beta.at(i) : beta.at(i);
    return out;
}

/// Positive-root membership by exact comparison against positive_roots(n).
class RootSet {
public:
    explicit RootSet(int n) : n_(n) {
        auto roots = positive_roots(n);
        positive_.insert(roots.begin(), roots.end());
    }
    int rank() const noexcept { return n_; }
    bool is_positive(const Weight& w) const { return positive_.count(w) > 0; }
    bool is_negative(const Weight& w) const { return positive_.count(-w) > 0; }

private:
    int n_;
    std::set<Weight> positive_;
};

/// |{gamma > 0 : w(gamma) < 0}|.
inline int inv_length(const SignedPermutation& w, const RootSet& roots) {
    if (w.rank() != roots.rank()) throw DimensionError("inv_length: rank mismatch");
    int count = 0;
    for (const auto& gamma : positive_roots(w.rank()))
        if (roots.is_negative(act(w, gamma))) ++count;
    return count;
}

inline int inv_length(const SignedPermutation& w, int n) {
    if (w.rank() != n) throw DimensionError("inv_length: element has rank " + std::to_string(w.rank()) +
                                            ", expected " + std::to_string(n));
    return inv_length(w, RootSet(n));
}

/// Longest element of the Levi Weyl group S_k x W(B_l): reversal on the GL
/// block, -1 on the SO block.
inline SignedPermutation longest_levi(const RankContext& ctx) {
    const int n = ctx.n(), k = ctx.k();
    std::vector<int> perm(static_cast<std::size_t>(n)), signs(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        auto idx = static_cast<std::size_t>(i - 1);
        if (i <= k) {
            perm[idx] = k + 1 - i;
            signs[idx] = 1;
        } else {
            perm[idx] = i;
            signs[idx] = -1;
        }
    }
    return SignedPermutation(std::move(perm), std::move(signs));
}

/// Simple roots of the Levi block M_k, keyed by their index in Delta = {alpha_1..alpha_n}:
/// alpha_i = e_i - e_{i+1} for i != k, i < n, and alpha_n = e_n when l >= 1.
inline std::vector<std::pair<int, Weight>> levi_simple_roots(const RankContext& ctx) {
    const int n = ctx.n(), k = ctx.k();
    std::vector<std::pair<int, Weight>> out;
    for (int i = 1; i < n; ++i) {
        if (i == k) continue;
        out.emplace_back(i, Weight::unit(n, i) - Weight::unit(n, i + 1));
    }
    if (ctx.l() >= 1) out.emplace_back(n, Weight::unit(n, n));
    return out;
}

/// w^{-1}(alpha) > 0 for every Levi simple root alpha.
inline bool is_kostant(const SignedPermutation& w, const RankContext& ctx, const RootSet& roots) {
    if (w.rank() != ctx.n()) throw DimensionError("is_kostant: rank mismatch");
    auto inv = w.inverse();
    for (const auto& [idx, alpha] : levi_simple_roots(ctx))
        if (!roots.is_positive(act(inv, alpha))) return false;
    return true;
}

inline bool is_kostant(const SignedPermutation& w, const RankContext& ctx) {
    return is_kostant(w, ctx, RootSet(ctx.n()));
}

/// Coefficient t with beta|_{a_k} = t * alpha_k|_{a_k}, i.e. sum_{i<=k} beta_i.
inline HalfInt restrict_a(const Weight& beta, const RankContext& ctx) {
    if (beta.rank() != ctx.n()) throw DimensionError("restrict_a: weight rank mismatch");
    Rational sum;
    for (int i = 1; i <= ctx.k(); ++i) sum += beta.at(i);
    return HalfInt::from_rational(sum);
}

/// beta minus its a_k-part: the GL block is centred to sum zero, SO block untouched.
inline Weight restrict_b(const Weight& beta, const RankContext& ctx) {
    if (beta.rank() != ctx.n()) throw DimensionError("restrict_b: weight rank mismatch");
    Rational sum;
    for (int i = 1; i <= ctx.k(); ++i) sum += beta.at(i);
    Rational mean = sum / Rational(ctx.k());
    Weight out(beta);
    for (int i = 1; i <= ctx.k(); ++i) out.at(i) -= mean;
    return out;
}

/// rho_{P_k} = (k(2n-k)/2) alpha_k|_{a_k}; returns the coefficient.
inline HalfInt rho_parabolic(const RankContext& ctx) {
    return HalfInt::from_twice(static_cast<std::int64_t>(ctx.k()) * (2 * ctx.n() - ctx.k()));
}

/// dim N_k = k(2n-k) - k(k-1)/2.
inline int dim_nilradical(const RankContext& ctx) {
    const int n = ctx.n(), k = ctx.k();
    return k * (2 * n - k) - k * (k - 1) / 2;
}

}  // namespace oddortho
