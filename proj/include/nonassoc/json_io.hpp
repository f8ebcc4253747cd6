#pragma once

// JSON interchange: loading structure algebras from files and serializing
// identity-check reports as deterministic single-line JSON records.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "identities.hpp"
#include "linalg.hpp"
#include "rational.hpp"
#include "structure_algebra.hpp"

namespace nonassoc {

// Strict rational literal: "p", "-p", or "p/q" with q > 0 and gcd(p,q) = 1.
// Rejects non-reduced fractions so that file contents are bit-exact.
inline Rational parse_strict_rational(const std::string& s, const std::string& where) {
    Rational r;
    try {
        r = rational_from_string(s);
    } catch (const input_error&) {
        throw input_error("malformed rational \"" + s + "\" in " + where);
    }
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer num, den;
        try {
            num = Integer(s.substr(0, slash));
            den = Integer(s.substr(slash + 1));
        } catch (const std::invalid_argument&) {
            throw input_error("malformed rational \"" + s + "\" in " + where);
        }
        if (den <= 0) throw input_error("non-positive denominator \"" + s + "\" in " + where);
        Integer g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (g != 1 && !(num == 0 && den == 1))
            throw input_error("non-reduced rational \"" + s + "\" in " + where);
    }
    return r;
}

inline Rational json_rational(const nlohmann::json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return parse_strict_rational(v.get<std::string>(), where);
    throw input_error("expected rational (integer or \"p/q\" string) in " + where);
}

// Algebra file: { "name"?: str, "dim": n, "names": [str…], "unit"?: index,
// "table": [[i, j, k, rational]…] (omitted entries zero),
// "involution"?: [rational…] (row-major, dim² entries) }.
inline AlgebraPtr load_algebra_json(const nlohmann::json& j, const std::string& default_name) {
    if (!j.is_object()) throw input_error("algebra file: top level must be an object");
    if (!j.contains("dim") || !j["dim"].is_number_unsigned())
        throw input_error("algebra file: missing or invalid \"dim\"");
    std::size_t dim = j["dim"].get<std::size_t>();
    std::string name = j.value("name", default_name);

    std::vector<std::string> names;
    if (j.contains("names")) {
        if (!j["names"].is_array() || j["names"].size() != dim)
            throw input_error("algebra file: \"names\" must list exactly dim strings");
        for (const auto& n : j["names"]) names.push_back(n.get<std::string>());
    } else {
        for (std::size_t i = 0; i < dim; ++i) names.push_back("b" + std::to_string(i));
    }

    std::vector<Rational> constants(dim * dim * dim, Rational(0));
    if (!j.contains("table") || !j["table"].is_array())
        throw input_error("algebra file: missing \"table\" array");
    std::size_t entry_no = 0;
    for (const auto& e : j["table"]) {
        std::string where = "table entry #" + std::to_string(entry_no);
        if (!e.is_array() || e.size() != 4)
            throw input_error("algebra file: " + where + " must be [i, j, k, rational]");
        std::size_t idx[3];
        for (int t = 0; t < 3; ++t) {
            if (!e[t].is_number_unsigned())
                throw input_error("algebra file: non-index in " + where);
            idx[t] = e[t].get<std::size_t>();
            if (idx[t] >= dim) throw input_error("algebra file: index out of range in " + where);
        }
        constants[(idx[0] * dim + idx[1]) * dim + idx[2]] = json_rational(e[3], where);
        ++entry_no;
    }

    std::optional<std::size_t> unit;
    if (j.contains("unit")) {
        if (!j["unit"].is_number_unsigned() || j["unit"].get<std::size_t>() >= dim)
            throw input_error("algebra file: \"unit\" must be a basis index below dim");
        unit = j["unit"].get<std::size_t>();
    }

    std::optional<RatMatrix> involution;
    if (j.contains("involution")) {
        const auto& inv = j["involution"];
        if (!inv.is_array() || inv.size() != dim * dim)
            throw input_error("algebra file: \"involution\" must have dim*dim entries");
        RatMatrix m(dim, dim);
        for (std::size_t k = 0; k < dim * dim; ++k)
            m(k / dim, k % dim) =
                json_rational(inv[k], "involution entry #" + std::to_string(k));
        involution = std::move(m);
    }

    return StructureAlgebra::create(name, dim, names, constants, unit, involution);
}

inline AlgebraPtr load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open algebra file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("algebra file " + path + ": " + e.what());
    }
    std::string base = path;
    auto slash = base.find_last_of('/');
    if (slash != std::string::npos) base = base.substr(slash + 1);
    auto dot = base.find_last_of('.');
    if (dot != std::string::npos) base = base.substr(0, dot);
    return load_algebra_json(j, base);
}

// One-line JSON record per report; keys are emitted in sorted order, so equal
// reports serialize byte-identically.
inline std::string report_to_json_line(const IdentityReport& rep) {
    nlohmann::json j;
    j["identity"] = rep.identity_id;
    j["algebra"] = rep.algebra_id;
    j["status"] = rep.status;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    if (rep.residual_norm) j["residual_norm"] = rational_to_string(*rep.residual_norm);
    if (!rep.witness.empty()) {
        nlohmann::json w = nlohmann::json::array();
        for (const auto& vec : rep.witness) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& r : vec) row.push_back(rational_to_string(r));
            w.push_back(row);
        }
        j["witness"] = w;
    }
    if (!rep.note.empty()) j["note"] = rep.note;
    return j.dump();
}

}  // namespace nonassoc
