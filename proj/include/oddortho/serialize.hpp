#pragma once

// JSON encoding of the domain types (nlohmann/json). Indices are 1-based.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "classify.hpp"
#include "degrees.hpp"
#include "kostant.hpp"
#include "oracle.hpp"
#include "spectral.hpp"

namespace oddortho {

using json = nlohmann::json;

inline void to_json(json& j, const HalfInt& h) { j = json{{"twice", h.twice_value()}}; }

inline HalfInt halfint_from_json(const json& j) { return HalfInt::from_twice(j.at("twice").get<std::int64_t>()); }

/// Half-integral coordinates as {"twice": v}; anything else as {"num": p, "den": q}.
inline json coord_to_json(const Rational& r) {
    if (r.is_half_integer()) return HalfInt::from_rational(r);
    return json{{"num", r.num()}, {"den", r.den()}};
}

inline Rational coord_from_json(const json& j) {
    if (j.contains("twice")) return Rational(j.at("twice").get<std::int64_t>(), 2);
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

inline void to_json(json& j, const Weight& w) {
    j = json::array();
    for (const auto& c : w.coords()) j.push_back(coord_to_json(c));
}

inline Weight weight_from_json(const json& j) {
    std::vector<Rational> coords;
    for (const auto& c : j) coords.push_back(coord_from_json(c));
    return Weight(std::move(coords));
}

inline void to_json(json& j, const DegreeRange& r) { j = json{{"lo", r.lo}, {"hi", r.hi}}; }

inline DegreeRange degree_range_from_json(const json& j) {
    return DegreeRange(j.at("lo").get<std::int64_t>(), j.at("hi").get<std::int64_t>());
}

inline void to_json(json& j, const KostantRep& r) {
    j = json{{"I", r.pair.I()},       {"J", r.pair.J()},         {"n", r.pair.n()},        {"k", r.pair.k()},
             {"length", r.length},    {"perm", r.w.perm()},      {"signs", r.w.signs()}};
}

/// Rebuilds from (n, k, I, J) and checks the cached fields against the recomputation.
inline KostantRep kostant_rep_from_json(const json& j) {
    KostantRep rep(KostantPair(RankContext(j.at("n").get<int>(), j.at("k").get<int>()),
                               j.at("I").get<std::vector<int>>(), j.at("J").get<std::vector<int>>()));
    SignedPermutation w(j.at("perm").get<std::vector<int>>(), j.at("signs").get<std::vector<int>>());
    if (w != rep.w || j.at("length").get<int>() != rep.length)
        throw ConstraintError("cached perm/length do not match (I,J) " + rep.pair.to_string());
    return rep;
}

inline void to_json(json& j, const ClassifiedRep& c) {
    j = c.rep;
    j["t"] = c.t;
    j["mu"] = c.mu;
    j["self_dual"] = c.self_dual;
    json fams = json::array();
    for (Family f : c.families) fams.push_back(std::string(family_name(f)));
    j["family"] = fams;
}

inline ClassifiedRep classified_rep_from_json(const json& j) {
    ClassifiedRep c{kostant_rep_from_json(j), halfint_from_json(j.at("t")), weight_from_json(j.at("mu")),
                    j.at("self_dual").get<bool>(), {}};
    for (const auto& f : j.at("family")) c.families.push_back(parse_family(f.get<std::string>()));
    return c;
}

inline json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

inline void to_json(json& j, const CuspidalDatum& d) {
    j = json{{"n", d.ctx().n()},
             {"k", d.ctx().k()},
             {"sigma_self_dual", d.sigma_self_dual()},
             {"omega_sigma_trivial", d.omega_sigma_trivial()},
             {"L_half_nonzero", optional_bool(d.L_half_nonzero())},
             {"rs_pole_at_one", optional_bool(d.rs_pole_at_one())},
             {"lift_from_so_k", d.lift_from_so_k()}};
}

inline CuspidalDatum cuspidal_datum_from_json(const json& j) {
    auto opt = [&](const char* key) -> std::optional<bool> {
        if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
        return j.at(key).get<bool>();
    };
    return CuspidalDatum(RankContext(j.at("n").get<int>(), j.at("k").get<int>()), j.at("sigma_self_dual").get<bool>(),
                         j.at("omega_sigma_trivial").get<bool>(), opt("L_half_nonzero"), opt("rs_pole_at_one"),
                         j.value("lift_from_so_k", false));
}

inline void to_json(json& j, const Verdict& v) {
    j = json{{"kind", std::string(verdict_name(v.kind))},
             {"t", v.t ? json(*v.t) : json(nullptr)},
             {"window", v.window ? json(*v.window) : json(nullptr)},
             {"notes", v.notes}};
}

inline Verdict verdict_from_json(const json& j) {
    Verdict v;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "Residual") v.kind = VerdictKind::Residual;
    else if (kind == "Regular") v.kind = VerdictKind::Regular;
    else if (kind == "NoClass") v.kind = VerdictKind::NoClass;
    else throw ConstraintError("unknown verdict kind '" + kind + "'");
    if (!j.at("t").is_null()) v.t = halfint_from_json(j.at("t"));
    if (!j.at("window").is_null()) v.window = degree_range_from_json(j.at("window"));
    v.notes = j.at("notes").get<std::vector<std::string>>();
    return v;
}

inline void to_json(json& j, const PoleReport& p) {
    j = json::object();
    if (p.pole_at_half) j["pole_at_half"] = *p.pole_at_half;
    if (p.pole_at_one) j["pole_at_one"] = *p.pole_at_one;
    if (p.pole_siegel) j["pole_siegel"] = *p.pole_siegel;
}

inline void to_json(json& j, const SmallTReport& r) {
    j = json{{"pass", r.pass}, {"checked", r.checked}, {"violation", nullptr}};
    if (r.violation) j["violation"] = json{{"I", r.violation->I()}, {"J", r.violation->J()}};
}

namespace oracle {

inline void to_json(json& j, const Failure& f) {
    j = json{{"check", f.check}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}};
}

inline void to_json(json& j, const SuiteReport& r) {
    j = json{{"checks_run", r.checks_run}, {"pass", r.pass()}, {"failures", r.failures}};
}

}  // namespace oracle

}  // namespace oddortho
