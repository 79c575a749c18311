#pragma once

// Text renderings (json / csv / markdown) shared by the CLI and the golden tests.

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "serialize.hpp"

namespace oddortho {

enum class OutputFormat { Json, Csv, Markdown };

inline OutputFormat parse_format(std::string_view s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "markdown") return OutputFormat::Markdown;
    throw ConstraintError("unknown output format '" + std::string(s) + "' (expected json, csv or markdown)");
}

/// Header plus string cells; the csv and markdown back ends.
struct TextTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string csv() const {
        std::string out;
        auto emit = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c > 0) out += ',';
                out += csv_field(cells[c]);
            }
            out += '\n';
        };
        emit(header);
        for (const auto& r : rows) emit(r);
        return out;
    }

    std::string markdown() const {
        std::string out;
        auto emit = [&](const std::vector<std::string>& cells) {
            out += '|';
            for (const auto& c : cells) out += ' ' + md_cell(c) + " |";
            out += '\n';
        };
        emit(header);
        out += '|';
        for (std::size_t c = 0; c < header.size(); ++c) out += " --- |";
        out += '\n';
        for (const auto& r : rows) emit(r);
        return out;
    }

    static std::string csv_field(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char ch : s) {
            if (ch == '"') q += '"';
            q += ch;
        }
        return q + '"';
    }

    static std::string md_cell(const std::string& s) {
        std::string out;
        for (char ch : s) {
            if (ch == '|') out += '\\';
            out += ch;
        }
        return out;
    }
};

namespace detail {

inline std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t a = 0; a < parts.size(); ++a) {
        if (a > 0) out += sep;
        out += parts[a];
    }
    return out;
}

inline std::string join_ints(const std::vector<int>& v, std::string_view sep) {
    std::vector<std::string> parts;
    for (int x : v) parts.push_back(std::to_string(x));
    return join(parts, sep);
}

inline std::string set_text(const std::vector<int>& v) { return v.empty() ? "{}" : "{" + join_ints(v, ",") + "}"; }

/// Twice the coordinate, written "p/q" when that is not an integer.
inline std::string twice_text(const Rational& r) { return (r * Rational(2)).to_string(); }

inline std::string family_text(const std::vector<Family>& fams, std::string_view sep) {
    std::vector<std::string> parts;
    for (Family f : fams) parts.emplace_back(family_name(f));
    return join(parts, sep);
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace detail

/// Every representative, classified, ordered by t descending, then length, then (I, J).
inline std::vector<ClassifiedRep> table_rows(const RankContext& ctx, const HighestWeight& lam) {
    std::vector<ClassifiedRep> rows;
    for (const auto& rep : enumerate_kostant(ctx)) rows.push_back(classify_rep(rep, lam));
    std::stable_sort(rows.begin(), rows.end(), [](const ClassifiedRep& a, const ClassifiedRep& b) {
        if (a.t != b.t) return a.t > b.t;
        if (a.rep.length != b.rep.length) return a.rep.length < b.rep.length;
        return a.rep.pair < b.rep.pair;
    });
    return rows;
}

inline std::string render_reps(const std::vector<ClassifiedRep>& reps, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return detail::dump(json(reps));
    TextTable t;
    if (fmt == OutputFormat::Csv) {
        t.header = {"n", "k", "I", "J", "length", "t_twice", "mu", "self_dual", "family"};
        for (const auto& c : reps) {
            std::vector<std::string> mu;
            for (const auto& x : c.mu.coords()) mu.push_back(detail::twice_text(x));
            t.rows.push_back({std::to_string(c.rep.pair.n()), std::to_string(c.rep.pair.k()),
                              detail::join_ints(c.rep.pair.I(), ";"), detail::join_ints(c.rep.pair.J(), ";"),
                              std::to_string(c.rep.length), std::to_string(c.t.twice_value()), detail::join(mu, ";"),
                              c.self_dual ? "true" : "false", detail::family_text(c.families, ";")});
        }
        return t.csv();
    }
    t.header = {"I", "J", "length", "t", "mu", "self_dual", "family"};
    for (const auto& c : reps)
        t.rows.push_back({detail::set_text(c.rep.pair.I()), detail::set_text(c.rep.pair.J()),
                          std::to_string(c.rep.length), c.t.to_string(), c.mu.to_string(),
                          c.self_dual ? "yes" : "no", detail::family_text(c.families, ", ")});
    return t.markdown();
}

inline std::string render_verdict(const Verdict& v, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return detail::dump(json(v));
    TextTable t;
    const std::string tt = v.t ? (fmt == OutputFormat::Csv ? std::to_string(v.t->twice_value()) : v.t->to_string()) : "";
    const std::string lo = v.window ? std::to_string(v.window->lo) : "";
    const std::string hi = v.window ? std::to_string(v.window->hi) : "";
    if (fmt == OutputFormat::Csv) {
        t.header = {"kind", "t_twice", "window_lo", "window_hi", "notes"};
        t.rows.push_back({std::string(verdict_name(v.kind)), tt, lo, hi, detail::join(v.notes, ";")});
        return t.csv();
    }
    t.header = {"kind", "t", "window", "notes"};
    t.rows.push_back({std::string(verdict_name(v.kind)), tt, v.window ? v.window->to_string() : "",
                      detail::join(v.notes, "; ")});
    return t.markdown();
}

/// Named quantities (degree windows and the like) as key/value rows.
struct Summary {
    std::vector<std::pair<std::string, json>> entries;

    void add(std::string key, json value) { entries.emplace_back(std::move(key), std::move(value)); }

    std::string render(OutputFormat fmt) const {
        if (fmt == OutputFormat::Json) {
            json j = json::object();
            for (const auto& [key, value] : entries) j[key] = value;
            return detail::dump(j);
        }
        TextTable t;
        t.header = {"quantity", "value"};
        for (const auto& [key, value] : entries) t.rows.push_back({key, text(value)});
        return fmt == OutputFormat::Csv ? t.csv() : t.markdown();
    }

private:
    static std::string text(const json& v) {
        if (v.is_object() && v.contains("lo") && v.contains("hi"))
            return DegreeRange(v["lo"].get<std::int64_t>(), v["hi"].get<std::int64_t>()).to_string();
        if (v.is_object() && v.contains("twice")) return halfint_from_json(v).to_string();
        if (v.is_string()) return v.get<std::string>();
        return v.dump();
    }
};

inline std::string render_suite(const oracle::SuiteReport& r, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return detail::dump(json(r));
    TextTable t;
    t.header = {"check", "input", "expected", "got"};
    for (const auto& f : r.failures) t.rows.push_back({f.check, f.input, f.expected, f.got});
    const std::string head = "checks_run=" + std::to_string(r.checks_run) +
                             " failures=" + std::to_string(r.failures.size()) + (r.pass() ? " pass" : " FAIL") + "\n";
    return fmt == OutputFormat::Csv ? t.csv() : head + "\n" + t.markdown();
}

}  // namespace oddortho
