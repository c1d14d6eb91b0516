#pragma once
// JSON bindings for the on-disk formats: pattern files, knot files, tau
// tables, spectra and certificates.  Pattern and knot files are strict
// (unknown fields rejected); all rationals travel as exact "a/b" strings and
// nlohmann::json's sorted object keys keep every emission byte-stable.

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "concord/instanton.hpp"
#include "concord/jumps.hpp"
#include "concord/seifert.hpp"

namespace concord {

using json = nlohmann::json;

namespace io_detail {

inline void require_fields(const json& j, const std::set<std::string>& required,
                           const std::set<std::string>& optional, const std::string& what) {
    if (!j.is_object()) throw ParseError(what + ": expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (required.count(it.key()) == 0 && optional.count(it.key()) == 0)
            throw ParseError(what + ": unknown field \"" + it.key() + "\"");
    for (const auto& f : required)
        if (!j.contains(f)) throw ParseError(what + ": missing field \"" + f + "\"");
}

inline Int int_from_json(const json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw ParseError(what + ": expected an integer");
    return Int(static_cast<long>(j.get<long long>()));
}

inline IntMatrix matrix_from_json(const json& j, const std::string& what) {
    if (!j.is_array()) throw ParseError(what + ": expected an array of arrays");
    std::size_t n = j.size();
    IntMatrix m(n, n == 0 ? 0 : j.at(0).size());
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || row.size() != m.cols())
            throw ParseError(what + ": ragged or non-array matrix row");
        for (std::size_t k = 0; k < row.size(); ++k)
            m.at(i, k) = int_from_json(row.at(k), what);
    }
    if (!m.is_square()) throw ParseError(what + ": matrix must be square");
    return m;
}

inline json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_long(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Rational rational_from_json(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Rational(Int(static_cast<long>(j.get<long long>())));
    if (!j.is_string()) throw ParseError(what + ": expected a rational as \"a/b\" string");
    return Rational::parse(j.get<std::string>());
}

}  // namespace io_detail

// Pattern JSON (bit-exact contract): { "name", "winding_number",
// "seifert_matrix", "axis_linking" }, axis_linking required iff winding 0.
inline Pattern pattern_from_json(const json& j) {
    io_detail::require_fields(j, {"name", "winding_number", "seifert_matrix"}, {"axis_linking"},
                              "pattern");
    if (!j.at("name").is_string()) throw ParseError("pattern: name must be a string");
    std::string name = j.at("name").get<std::string>();
    Int w = io_detail::int_from_json(j.at("winding_number"), "pattern winding_number");
    IntMatrix m = io_detail::matrix_from_json(j.at("seifert_matrix"), "pattern seifert_matrix");
    std::vector<Int> axis;
    if (j.contains("axis_linking")) {
        const json& ax = j.at("axis_linking");
        if (!ax.is_array()) throw ParseError("pattern: axis_linking must be an array");
        for (const auto& x : ax) axis.push_back(io_detail::int_from_json(x, "axis_linking"));
    } else if (sgn(w) == 0) {
        throw ParseError("pattern: axis_linking is required when winding_number is 0");
    } else {
        axis.assign(m.rows(), Int(0));
    }
    SeifertForm sf(std::move(m), name);  // validates det(V - V^T) = 1, even dim
    return Pattern(std::move(sf), w, std::move(axis), name);
}

inline json pattern_to_json(const Pattern& p) {
    json j;
    j["name"] = p.name();
    j["winding_number"] = to_long(p.winding());
    j["seifert_matrix"] = io_detail::matrix_to_json(p.seifert().matrix());
    json ax = json::array();
    for (const auto& x : p.axis_linking()) ax.push_back(to_long(x));
    j["axis_linking"] = std::move(ax);
    return j;
}

// Knot JSON: { "name", "seifert_matrix" }
inline SeifertForm knot_from_json(const json& j) {
    io_detail::require_fields(j, {"name", "seifert_matrix"}, {}, "knot");
    if (!j.at("name").is_string()) throw ParseError("knot: name must be a string");
    return SeifertForm(io_detail::matrix_from_json(j.at("seifert_matrix"), "knot seifert_matrix"),
                       j.at("name").get<std::string>());
}

inline json knot_to_json(const SeifertForm& k) {
    json j;
    j["name"] = k.name();
    j["seifert_matrix"] = io_detail::matrix_to_json(k.matrix());
    return j;
}

// Tau table JSON: { "bounds": { "<key>": "a/b", ... } }, each in (0, 1]
inline TauOracle tau_from_json(const json& j) {
    io_detail::require_fields(j, {"bounds"}, {}, "tau table");
    if (!j.at("bounds").is_object()) throw ParseError("tau table: bounds must be an object");
    TauOracle t;
    for (auto it = j.at("bounds").begin(); it != j.at("bounds").end(); ++it) {
        Rational b = io_detail::rational_from_json(it.value(), "tau bound " + it.key());
        if (!(Rational(0) < b && b <= Rational(1)))
            throw ParseError("tau bound for \"" + it.key() + "\" must lie in (0, 1]");
        t.set(it.key(), b);
    }
    return t;
}

// Spectrum JSON: sorted array of { "angle": "a/n" | {"isolating": [lo, hi]},
// "jump": int }
inline json spectrum_to_json(const JumpSpectrum& s) {
    json arr = json::array();
    for (const auto& e : s) {
        json entry;
        if (e.key.is_rational()) {
            entry["angle"] = e.key.rational().str();
        } else {
            entry["angle"] = json{{"isolating", {e.key.box().lo.str(), e.key.box().hi.str()}}};
        }
        entry["jump"] = e.jump;
        arr.push_back(std::move(entry));
    }
    return arr;
}

inline json certificate_to_json(const RankCertificate& c) {
    json j;
    j["pattern"] = c.pattern_name;
    j["l"] = c.l.str();
    j["mirror_used"] = c.mirror_used;
    j["p"] = to_long(c.p);
    j["q"] = to_long(c.q);
    json entries = json::array();
    for (const auto& e : c.entries) {
        json je;
        je["r"] = to_long(e.r);
        je["s"] = to_long(e.s);
        je["rho"] = e.rho_value.str();
        json th;
        for (const auto& [name, v] : e.thresholds) th[name] = v.str();
        je["thresholds"] = std::move(th);
        je["tau_keys"] = e.tau_keys;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    return j;
}

inline RankCertificate certificate_from_json(const json& j) {
    io_detail::require_fields(j, {"pattern", "l", "mirror_used", "p", "q", "entries"}, {},
                              "certificate");
    RankCertificate c;
    c.pattern_name = j.at("pattern").get<std::string>();
    c.l = io_detail::rational_from_json(j.at("l"), "certificate l");
    c.mirror_used = j.at("mirror_used").get<bool>();
    c.p = io_detail::int_from_json(j.at("p"), "certificate p");
    c.q = io_detail::int_from_json(j.at("q"), "certificate q");
    for (const auto& je : j.at("entries")) {
        io_detail::require_fields(je, {"r", "s", "rho", "thresholds", "tau_keys"}, {},
                                  "certificate entry");
        CertificateEntry e;
        e.r = io_detail::int_from_json(je.at("r"), "entry r");
        e.s = io_detail::int_from_json(je.at("s"), "entry s");
        e.rho_value = io_detail::rational_from_json(je.at("rho"), "entry rho");
        for (auto it = je.at("thresholds").begin(); it != je.at("thresholds").end(); ++it)
            e.thresholds.emplace_back(it.key(),
                                      io_detail::rational_from_json(it.value(), it.key()));
        for (const auto& k : je.at("tau_keys")) e.tau_keys.push_back(k.get<std::string>());
        c.entries.push_back(std::move(e));
    }
    return c;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace concord
