#pragma once

#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fillability.hpp"
#include "homology.hpp"
#include "moment_angle.hpp"
#include "poincare.hpp"
#include "simplicial_complex.hpp"
#include "sphere_algebra.hpp"
#include "stacked.hpp"

namespace mac {

using Json = nlohmann::ordered_json;

// --- complexes: {"vertices":[ints], "facets":[[ints],...]} (vertices optional)

inline Json complex_to_json(const SimplicialComplex& k) {
    Json j;
    j["vertices"] = k.vertices();
    j["facets"] = k.facets();
    return j;
}

inline SimplicialComplex complex_from_json(const Json& j, bool allow_ghosts = false) {
    if (!j.contains("facets")) throw std::invalid_argument("complex JSON: missing \"facets\"");
    std::vector<Simplex> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<Simplex>());
    std::optional<Simplex> universe;
    if (j.contains("vertices")) universe = j.at("vertices").get<Simplex>();
    return build_complex(std::move(facets), std::move(universe), allow_ghosts);
}

inline SimplicialComplex read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    Json j;
    in >> j;
    return complex_from_json(j);
}

// --- homology profiles: {"degree": {"betti": n, "torsion": [ints]}}

inline Json profile_to_json(const HomologyProfile& p) {
    Json j = Json::object();
    for (const auto& [degree, group] : p.groups()) {
        Json g;
        g["betti"] = group.betti;
        g["torsion"] = Json::array();
        for (const auto& t : group.torsion) {
            // invariant factors fit in 64 bits for every complex this library
            // targets; fall back to a decimal string if one ever does not
            if (t <= std::numeric_limits<long long>::max())
                g["torsion"].push_back(static_cast<long long>(t));
            else
                g["torsion"].push_back(t.str());
        }
        j[std::to_string(degree)] = std::move(g);
    }
    return j;
}

// --- bigraded tables: [{"I":[ints], "homology":{...}}, ...] sorted (|I|, lex)

inline Json table_to_json(const BigradedTable& table) {
    Json j = Json::array();
    for (const auto& e : table.entries) {
        Json row;
        row["I"] = e.subset;
        row["homology"] = profile_to_json(e.profile);
        j.push_back(std::move(row));
    }
    return j;
}

// --- polynomials: {"degree": coefficient}

inline Json poincare_to_json(const PoincarePolynomial& p) {
    Json j = Json::object();
    for (const auto& [degree, c] : p.coefficients()) j[std::to_string(degree)] = c;
    return j;
}

inline PoincarePolynomial poincare_from_json(const Json& j) {
    PoincarePolynomial p;
    for (const auto& [key, value] : j.items()) p.add(std::stoi(key), value.get<long long>());
    return p;
}

// --- fill witnesses: {"added":[[ints]], "outcome": string}

inline Json witness_to_json(const FillWitness& w) {
    Json j;
    j["added"] = w.added_missing_faces;
    j["outcome"] = to_string(w.outcome);
    return j;
}

// --- stacked certificates: {"k": int, "ell": int, "peel": [ints]}

inline Json certificate_to_json(const StackedCertificate& c) {
    Json j;
    j["k"] = c.k;
    j["ell"] = c.ell;
    j["peel"] = c.peel_sequence;
    return j;
}

// --- connected-sum specs: [{"dims":[ints], "mult": n}, ...]

inline Json spec_to_json(const ConnectedSumSpec& s) {
    Json j = Json::array();
    for (const auto& [product, mult] : s.summands) {
        Json row;
        row["dims"] = product.dims;
        row["mult"] = mult;
        j.push_back(std::move(row));
    }
    return j;
}

inline ConnectedSumSpec spec_from_json(const Json& j) {
    ConnectedSumSpec s;
    for (const auto& row : j)
        s.summands.emplace_back(SphereProduct(row.at("dims").get<std::vector<int>>()),
                                row.at("mult").get<long long>());
    return s;
}

}  // namespace mac
