#pragma once

// Cohomology-degree bookkeeping for cuspidal data on the Levi GL_k x SO_{2l+1}
// and for the Eisenstein classes built from them. All windows are inclusive.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "rational.hpp"
#include "rootsys.hpp"

namespace oddortho {

struct DegreeRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    DegreeRange() = default;
    DegreeRange(std::int64_t lo_, std::int64_t hi_) : lo(lo_), hi(hi_) {
        if (lo < 0 || lo > hi)
            throw ConstraintError("degree range needs 0 <= lo <= hi, got [" + std::to_string(lo) + "," +
                                  std::to_string(hi) + "]");
    }

    bool contains(std::int64_t q) const noexcept { return lo <= q && q <= hi; }
    bool contains(const DegreeRange& o) const noexcept { return lo <= o.lo && o.hi <= hi; }
    DegreeRange shifted(std::int64_t by) const { return DegreeRange(lo + by, hi + by); }

    friend bool operator==(const DegreeRange&, const DegreeRange&) = default;
    std::string to_string() const { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }
};

namespace detail {
inline std::int64_t exact_half(std::int64_t twice, const char* what) {
    if (twice % 2 != 0) throw std::logic_error(std::string("non-integral degree bound in ") + what);
    return twice / 2;
}
}  // namespace detail

/// (k(k-1)/2 + floor(k/2))/2 <= q <= ((k-1)(k+4)/2 - floor(k/2))/2.
inline DegreeRange gl_cusp_range(int k) {
    if (k < 1) throw InvalidRank("GL_k needs k >= 1, got " + std::to_string(k));
    const std::int64_t kk = k;
    const std::int64_t lo = detail::exact_half(kk * (kk - 1) / 2 + kk / 2, "gl_cusp_range");
    if ((kk - 1) * (kk + 4) % 2 != 0) throw std::logic_error("non-integral degree bound in gl_cusp_range");
    const std::int64_t hi = detail::exact_half((kk - 1) * (kk + 4) / 2 - kk / 2, "gl_cusp_range");
    return DegreeRange(lo, hi);
}

/// (l^2 + l)/2; discrete series of SO(l+1, l).
inline std::int64_t so_cusp_degree(int l) {
    if (l < 0) throw InvalidRank("SO_{2l+1} needs l >= 0, got " + std::to_string(l));
    const std::int64_t ll = l;
    return detail::exact_half(ll * ll + ll, "so_cusp_degree");
}

/// Kunneth: GL_k range shifted by the SO_{2l+1} degree.
inline DegreeRange levi_cusp_range(const RankContext& ctx) {
    return gl_cusp_range(ctx.k()).shifted(so_cusp_degree(ctx.l()));
}

/// q' = q + dim N - 2 l(w); q already carries the l(w) shift.
inline std::int64_t residual_degree(std::int64_t q, const RankContext& ctx, std::int64_t lw) {
    if (lw < 0) throw PreconditionError("length must be non-negative");
    if (q < lw) throw PreconditionError("degree q=" + std::to_string(q) + " must be >= l(w)=" + std::to_string(lw));
    return q + dim_nilradical(ctx) - 2 * lw;
}

/// Window for the residual class at t = k/2 (including the Siegel case k = n)
/// or at t = k (k even, k < n).
inline DegreeRange residual_window(const RankContext& ctx, HalfInt t) {
    const std::int64_t n = ctx.n(), k = ctx.k();
    const std::int64_t top = detail::exact_half(n * n + n, "residual_window");
    if (t == HalfInt::from_twice(k)) return DegreeRange(top - (k + 1) / 2, top - 1);
    if (t == HalfInt::from_int(k) && k % 2 == 0 && k < n) return DegreeRange(top - k, top - 1);
    throw DomainError("no residual window at t=" + t.to_string() + " for n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
}

/// Regular class of type (pi, w): Levi range shifted by l(w).
inline DegreeRange regular_window(const RankContext& ctx, std::int64_t lw) {
    if (lw < 0) throw PreconditionError("length must be non-negative");
    return levi_cusp_range(ctx).shifted(lw);
}

}  // namespace oddortho
