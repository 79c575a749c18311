#pragma once

// Pole conditions for Eisenstein series attached to generic cuspidal data on
// maximal parabolics of SO(2n+1), and the residual / regular verdict for a
// class of type (pi, w). L-function facts are supplied by the caller as flags;
// nothing analytic is evaluated here.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degrees.hpp"
#include "kostant.hpp"

namespace oddortho {

/// sigma on GL_k, tau on SO_{2l+1}. The two tau-dependent flags exist exactly when k < n.
class CuspidalDatum {
public:
    CuspidalDatum(RankContext ctx, bool sigma_self_dual, bool omega_sigma_trivial,
                  std::optional<bool> L_half_nonzero, std::optional<bool> rs_pole_at_one, bool lift_from_so_k)
        : ctx_(ctx),
          sigma_self_dual_(sigma_self_dual),
          omega_sigma_trivial_(omega_sigma_trivial),
          L_half_nonzero_(L_half_nonzero),
          rs_pole_at_one_(rs_pole_at_one),
          lift_from_so_k_(lift_from_so_k) {
        if (ctx_.is_siegel()) {
            if (L_half_nonzero_ || rs_pole_at_one_)
                throw ConstraintError("Siegel datum (k = n) carries no Rankin-Selberg flags");
        } else if (!L_half_nonzero_ || !rs_pole_at_one_) {
            throw ConstraintError("datum with k < n needs both L(1/2, sigma x tau) and pole-at-one flags");
        }
    }

    const RankContext& ctx() const noexcept { return ctx_; }
    bool sigma_self_dual() const noexcept { return sigma_self_dual_; }
    bool omega_sigma_trivial() const noexcept { return omega_sigma_trivial_; }
    std::optional<bool> L_half_nonzero() const noexcept { return L_half_nonzero_; }
    std::optional<bool> rs_pole_at_one() const noexcept { return rs_pole_at_one_; }
    bool lift_from_so_k() const noexcept { return lift_from_so_k_; }

    friend bool operator==(const CuspidalDatum&, const CuspidalDatum&) = default;

private:
    RankContext ctx_;
    bool sigma_self_dual_;
    bool omega_sigma_trivial_;
    std::optional<bool> L_half_nonzero_;
    std::optional<bool> rs_pole_at_one_;
    bool lift_from_so_k_;
};

struct PoleReport {
    std::optional<bool> pole_at_half;  // k < n
    std::optional<bool> pole_at_one;   // k < n
    std::optional<bool> pole_siegel;   // k = n
};

enum class VerdictKind { Residual, Regular, NoClass };

inline std::string_view verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Residual: return "Residual";
        case VerdictKind::Regular: return "Regular";
        case VerdictKind::NoClass: return "NoClass";
    }
    return "?";
}

struct Verdict {
    VerdictKind kind = VerdictKind::NoClass;
    std::optional<HalfInt> t;             // set for Residual
    std::optional<DegreeRange> window;    // absent for NoClass
    std::vector<std::string> notes;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// s = t/k for k < n, s = 2t/n for the Siegel parabolic.
inline Rational s_of_t(HalfInt t, const RankContext& ctx) {
    if (ctx.is_siegel()) return Rational(2) * t.to_rational() / Rational(ctx.n());
    return t.to_rational() / Rational(ctx.k());
}

/// Pole at s = 1/2 (k < n). With k even and omega_sigma trivial the symmetric
/// square only has a pole there when sigma lifts from SO_k, which forces k >= 4.
inline bool pole_at_half(const CuspidalDatum& d) {
    if (d.ctx().is_siegel()) throw PreconditionError("pole_at_half applies to k < n only");
    const int k = d.ctx().k();
    const bool l_half = *d.L_half_nonzero();
    if (k % 2 == 1 || !d.omega_sigma_trivial()) return d.sigma_self_dual() && l_half;
    return k >= 4 && d.sigma_self_dual() && d.lift_from_so_k() && l_half;
}

/// Pole at s = 1 (k < n): only from L(s, sigma x tau), entire for odd k.
inline bool pole_at_one(const CuspidalDatum& d) {
    if (d.ctx().is_siegel()) throw PreconditionError("pole_at_one applies to k < n only");
    return d.sigma_self_dual() && d.ctx().k() % 2 == 0 && *d.rs_pole_at_one();
}

/// Pole at s = 1 for the Siegel parabolic (k = n).
inline bool pole_siegel(const CuspidalDatum& d) {
    if (!d.ctx().is_siegel()) throw PreconditionError("pole_siegel applies to k = n only");
    const int n = d.ctx().n();
    if (n % 2 == 0 && d.omega_sigma_trivial()) return n >= 4 && d.sigma_self_dual() && d.lift_from_so_k();
    return d.sigma_self_dual();
}

inline PoleReport pole_report(const CuspidalDatum& d) {
    PoleReport r;
    if (d.ctx().is_siegel()) {
        r.pole_siegel = pole_siegel(d);
    } else {
        r.pole_at_half = pole_at_half(d);
        r.pole_at_one = pole_at_one(d);
    }
    return r;
}

/// Classify a class of type (pi, w_{(I,J)}).
///
/// NoClass when the coefficient module is not self-dual or t < 0. Residual when
/// the pole condition at s(t) holds and no local kernel vector cancels it.
/// Everything else is Regular, with the Levi window shifted by l(w).
inline Verdict verdict(const CuspidalDatum& d, const HighestWeight& lam, const KostantPair& pair, bool local_kernel) {
    if (!(pair.ctx() == d.ctx())) throw DimensionError("Kostant pair and cuspidal datum live on different parabolics");
    const RankContext& ctx = d.ctx();
    Verdict v;
    if (ctx.n() < 3) v.notes.push_back("warning: rank n=" + std::to_string(ctx.n()) + " is below 3");

    const HalfInt t = eval_t(pair, lam);
    const bool self_dual = is_self_dual(mu_w(pair, lam), ctx);
    if (!self_dual) {
        v.notes.push_back("coefficient module is not self-dual");
        return v;
    }
    if (t < HalfInt{}) {
        v.notes.push_back("evaluation point t=" + t.to_string() + " is negative");
        return v;
    }

    const Rational s = s_of_t(t, ctx);
    std::optional<bool> pole;
    if (ctx.is_siegel()) {
        if (s == Rational(1)) pole = pole_siegel(d);
    } else if (s == Rational(1, 2)) {
        pole = pole_at_half(d);
    } else if (s == Rational(1)) {
        pole = pole_at_one(d);
    }

    const std::string where = "s=" + s.to_string();
    if (pole && *pole && !local_kernel) {
        v.kind = VerdictKind::Residual;
        v.t = t;
        v.window = residual_window(ctx, t);
        v.notes.push_back("pole at " + where);
        return v;
    }

    v.kind = VerdictKind::Regular;
    v.window = regular_window(ctx, length_formula(pair));
    if (!pole) {
        v.notes.push_back("no possible pole at " + where);
    } else if (!*pole) {
        v.notes.push_back("pole conditions unmet at " + where);
    } else {
        v.notes.push_back("pole at " + where + " cancelled by local kernel vector");
    }
    return v;
}

}  // namespace oddortho
