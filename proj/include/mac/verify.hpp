#pragma once

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fillability.hpp"
#include "homology.hpp"
#include "json_io.hpp"
#include "moment_angle.hpp"
#include "simplicial_complex.hpp"
#include "sphere_algebra.hpp"
#include "stacked.hpp"

namespace mac {

/// One sphere factor S^dim indexed by the vertex subset it arises from.
struct SummandFactor {
    int dim = 0;
    Simplex subset;

    std::string to_string() const {
        return "S^" + std::to_string(dim) + "_" + simplex_to_string(subset);
    }
};

/// A wedge or connected-sum summand: a product of one or more labeled spheres.
struct SummandRow {
    std::vector<SummandFactor> factors;
};

/// Claim data for the shipped complex: the complex itself plus every expected
/// list the verifier compares against. Expected values live here, not in code.
struct Fixture {
    std::string name;
    SimplicialComplex complex;
    std::vector<Simplex> missing;
    int deleted_vertex = 1;
    std::map<int, std::vector<Simplex>> scans;
    std::vector<SummandRow> wedge_census;
    PoincarePolynomial predicted_wedge;

    Simplex join_simplex;
    std::vector<std::vector<Simplex>> join_factors;
    Simplex link2_simplex;
    std::vector<Simplex> link2_facets;
    Simplex link4_simplex;
    std::vector<Simplex> link4_facets;
    VertexPermutation relabel_perm;

    int stacked_k = 0, stacked_ell = 0;
    PoincarePolynomial link2_poincare;
    std::vector<SummandRow> link2_table, link4_table;

    ConnectedSumSpec connected_sum;
    PoincarePolynomial moment_angle_poly;

    static Fixture from_json(const Json& j);
    static Fixture load(const std::string& path);
};

inline std::vector<SummandRow> rows_from_json(const Json& j) {
    std::vector<SummandRow> rows;
    for (const auto& row : j) {
        SummandRow r;
        for (const auto& f : row.at("factors"))
            r.factors.push_back({f.at("dim").get<int>(), f.at("I").get<Simplex>()});
        rows.push_back(std::move(r));
    }
    return rows;
}

inline Fixture Fixture::from_json(const Json& j) {
    Fixture fx;
    fx.name = j.value("name", "fixture");
    fx.complex = complex_from_json(j.at("complex"));
    for (const auto& m : j.at("missing_faces")) fx.missing.push_back(m.get<Simplex>());
    fx.deleted_vertex = j.at("deleted_vertex").get<int>();
    for (const auto& [card, sets] : j.at("scan").items()) {
        std::vector<Simplex> expected;
        for (const auto& s : sets) expected.push_back(s.get<Simplex>());
        fx.scans[std::stoi(card)] = std::move(expected);
    }
    fx.wedge_census = rows_from_json(j.at("wedge_census"));
    fx.predicted_wedge = poincare_from_json(j.at("predicted_wedge"));

    const Json& links = j.at("links");
    fx.join_simplex = links.at("join_check").at("simplex").get<Simplex>();
    for (const auto& fac : links.at("join_check").at("factors")) {
        std::vector<Simplex> facets;
        for (const auto& f : fac) facets.push_back(f.get<Simplex>());
        fx.join_factors.push_back(std::move(facets));
    }
    fx.link2_simplex = links.at("link2").at("simplex").get<Simplex>();
    for (const auto& f : links.at("link2").at("facets")) fx.link2_facets.push_back(f.get<Simplex>());
    fx.link4_simplex = links.at("link4").at("simplex").get<Simplex>();
    for (const auto& f : links.at("link4").at("facets")) fx.link4_facets.push_back(f.get<Simplex>());
    for (const auto& cycle : links.at("relabel")) {
        auto c = cycle.get<std::vector<int>>();
        for (std::size_t i = 0; i < c.size(); ++i) fx.relabel_perm[c[i]] = c[(i + 1) % c.size()];
    }

    fx.stacked_k = j.at("stacked").at("k").get<int>();
    fx.stacked_ell = j.at("stacked").at("ell").get<int>();
    fx.link2_poincare = poincare_from_json(j.at("link2_poincare"));
    fx.link2_table = rows_from_json(j.at("summand_tables").at("link2"));
    fx.link4_table = rows_from_json(j.at("summand_tables").at("link4"));

    fx.connected_sum = spec_from_json(j.at("connected_sum"));
    fx.moment_angle_poly = poincare_from_json(j.at("moment_angle_poincare"));
    return fx;
}

inline Fixture Fixture::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path);
    Json j;
    in >> j;
    return from_json(j);
}

enum class CheckStatus { Pass, Fail, Inconclusive };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

struct Check {
    std::string id;
    std::string locus;
    std::string expected;
    std::string computed;
    CheckStatus status = CheckStatus::Fail;
    double elapsed_ms = 0.0;
};

struct VerificationReport {
    std::string fixture_name;
    std::vector<Check> checks;

    int failures() const {
        int n = 0;
        for (const auto& c : checks) n += c.status == CheckStatus::Fail;
        return n;
    }
    int inconclusive() const {
        int n = 0;
        for (const auto& c : checks) n += c.status == CheckStatus::Inconclusive;
        return n;
    }

    /// "pass", "qualified-pass" (inconclusive fillability searches only), or "fail".
    std::string overall() const {
        if (failures() > 0) return "fail";
        return inconclusive() > 0 ? "qualified-pass" : "pass";
    }

    Json to_json() const {
        Json j;
        j["fixture"] = fixture_name;
        j["status"] = overall();
        j["failures"] = failures();
        j["inconclusive"] = inconclusive();
        j["checks"] = Json::array();
        for (const auto& c : checks) {
            Json row;
            row["id"] = c.id;
            row["locus"] = c.locus;
            row["status"] = to_string(c.status);
            row["expected"] = c.expected;
            row["computed"] = c.computed;
            row["elapsed_ms"] = c.elapsed_ms;
            j["checks"].push_back(std::move(row));
        }
        return j;
    }

    std::string to_text() const {
        std::ostringstream out;
        std::size_t idw = 4, locw = 5;
        for (const auto& c : checks) {
            idw = std::max(idw, c.id.size());
            locw = std::max(locw, c.locus.size());
        }
        for (const auto& c : checks) {
            out << std::string(idw - c.id.size(), ' ') << c.id << "  "
                << c.locus << std::string(locw - c.locus.size(), ' ') << "  "
                << (c.status == CheckStatus::Pass ? "PASS        "
                    : c.status == CheckStatus::Fail ? "FAIL        " : "INCONCLUSIVE")
                << "  expected: " << c.expected << "  computed: " << c.computed << "\n";
        }
        out << "overall: " << overall() << " (" << checks.size() << " checks, " << failures()
            << " failures, " << inconclusive() << " inconclusive)\n";
        return out.str();
    }
};

namespace detail {

inline std::string subsets_to_string(const std::vector<Simplex>& sets) {
    if (sets.empty()) return "(none)";
    std::string out;
    for (const auto& s : sets) {
        if (!out.empty()) out += ", ";
        out += simplex_to_string(s);
    }
    return out;
}

class Verifier {
public:
    Verifier(const Fixture& fx, int jobs, long long budget)
        : fx_(fx), jobs_(jobs), budget_(budget) {}

    VerificationReport run() {
        report_.fixture_name = fx_.name;
        k_minus_ = vertex_delete(fx_.complex, fx_.deleted_vertex);

        check("missing-faces", "complex data", [&](Check& c) { missing_faces_check(c); });
        check("homology-sphere", "complex data", [&](Check& c) { sphere_check(c); });
        check("scan-2", "subcomplex scans", [&](Check& c) { scan_check(c, 2, 0); });
        check("scan-3", "subcomplex scans", [&](Check& c) { scan_check(c, 3, 1); });
        check("scan-3-boundaries", "subcomplex scans", [&](Check& c) { boundary_check(c); });
        check("scan-3-fillable", "subcomplex scans", [&](Check& c) {
            fillable_check(c, fx_.scans.at(3), {});
        });
        check("scan-4", "subcomplex scans", [&](Check& c) { scan_check(c, 4, 1); });
        check("scan-4-fillable", "subcomplex scans", [&](Check& c) { scan4_dichotomy(c); });
        check("scan-5", "subcomplex scans", [&](Check& c) { scan_check(c, 5, 1); });
        check("scan-5-fillable", "subcomplex scans", [&](Check& c) {
            fillable_check(c, fx_.scans.at(5), {});
        });
        check("scan-6-7", "subcomplex scans", [&](Check& c) { empty_scans_check(c); });
        check("wedge-prediction", "wedge decomposition", [&](Check& c) { wedge_check(c); });
        check("link-join", "links", [&](Check& c) { join_check(c); });
        check("link-facets", "links", [&](Check& c) { link_facets_check(c); });
        check("link-relabel", "links", [&](Check& c) { relabel_check(c); });
        check("link-stacked", "links", [&](Check& c) { stacked_check(c); });
        check("link-poincare", "links", [&](Check& c) { link_poincare_check(c); });
        check("link2-inclusions", "summand tables", [&](Check& c) {
            inclusion_check(c, fx_.link2_table, fx_.link2_simplex);
        });
        check("link4-inclusions", "summand tables", [&](Check& c) {
            inclusion_check(c, fx_.link4_table, fx_.link4_simplex);
        });
        check("hochster-vs-connected-sum", "global decomposition",
              [&](Check& c) { grand_check(c); });

        std::set<std::string> ids;
        for (const auto& c : report_.checks)
            if (!ids.insert(c.id).second) throw std::logic_error("duplicate check id " + c.id);
        return report_;
    }

private:
    template <typename F>
    void check(const std::string& id, const std::string& locus, F&& body) {
        Check c;
        c.id = id;
        c.locus = locus;
        auto t0 = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const std::exception& e) {
            c.status = CheckStatus::Fail;
            c.computed = std::string("error: ") + e.what();
        }
        c.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        report_.checks.push_back(std::move(c));
    }

    void missing_faces_check(Check& c) {
        auto computed = missing_faces(fx_.complex);
        auto expected = fx_.missing;
        std::sort(expected.begin(), expected.end(), SimplexOrder{});
        c.expected = subsets_to_string(expected);
        c.computed = subsets_to_string(computed);
        c.status = computed == expected ? CheckStatus::Pass : CheckStatus::Fail;
    }

    void sphere_check(Check& c) {
        const bool pseudo = fx_.complex.is_pseudomanifold();
        const bool sphere = is_homology_sphere(fx_.complex, 3);
        c.expected = "pseudomanifold and homology 3-sphere";
        c.computed = std::string(pseudo ? "pseudomanifold" : "NOT a pseudomanifold") + ", " +
                     reduced_homology(fx_.complex).to_string();
        c.status = pseudo && sphere ? CheckStatus::Pass : CheckStatus::Fail;
    }

    /// Scan of the deleted-vertex complex at one cardinality; when
    /// sphere_dim >= 0 every hit must additionally be a homology sphere of
    /// that dimension.
    void scan_check(Check& c, int card, int sphere_dim) {
        auto hits = noncontractible_scan(k_minus_, card);
        std::vector<Simplex> labels;
        bool profiles_ok = true;
        for (const auto& [subset, profile] : hits) {
            labels.push_back(subset);
            if (sphere_dim >= 0 && !profile.is_sphere(sphere_dim)) profiles_ok = false;
        }
        const auto& expected = fx_.scans.at(card);
        c.expected = subsets_to_string(expected);
        c.computed = subsets_to_string(labels);
        if (!profiles_ok) c.computed += " (unexpected homology profile)";
        c.status = labels == expected && profiles_ok ? CheckStatus::Pass : CheckStatus::Fail;
    }

    void empty_scans_check(Check& c) {
        auto h6 = noncontractible_scan(k_minus_, 6);
        auto h7 = noncontractible_scan(k_minus_, 7);
        c.expected = "no nonvanishing subcomplexes at cardinality 6 or 7";
        c.computed = "cardinality 6: " + std::to_string(h6.size()) +
                     " hits, cardinality 7: " + std::to_string(h7.size()) + " hits";
        c.status = h6.empty() && h7.empty() ? CheckStatus::Pass : CheckStatus::Fail;
    }

    void boundary_check(Check& c) {
        bool ok = true;
        for (const auto& i : fx_.scans.at(3))
            ok = ok && full_subcomplex(fx_.complex, i) == simplex_boundary(2, i);
        c.expected = "each 3-vertex hit is the boundary of a triangle";
        c.computed = ok ? "all are triangle boundaries" : "mismatch";
        c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    }

    /// Every subset in `expected_fillable` must be shown fillable; every one
    /// in `expected_not` must fail the exhaustive filling search.
    void fillable_check(Check& c, const std::vector<Simplex>& expected_fillable,
                        const std::vector<Simplex>& expected_not) {
        bool ok = true, inconclusive = false;
        std::string detail;
        auto run_one = [&](const Simplex& i, bool want_fillable) {
            FillWitness w = is_fillable(full_subcomplex(fx_.complex, i), budget_);
            const bool shown = w.outcome == FillOutcome::Fillable ||
                               w.outcome == FillOutcome::TriviallyContractible;
            if (!detail.empty()) detail += ", ";
            detail += simplex_to_string(i) + ":" + to_string(w.outcome);
            if (want_fillable) {
                if (shown) return;
                if (!w.search_exhausted) inconclusive = true;
                else ok = false;
            } else {
                if (shown) ok = false;
                else if (!w.search_exhausted) inconclusive = true;
            }
        };
        for (const auto& i : expected_fillable) run_one(i, true);
        for (const auto& i : expected_not) run_one(i, false);
        c.expected = "fillable: " + subsets_to_string(expected_fillable) +
                     (expected_not.empty()
                          ? ""
                          : "; not fillable: " + subsets_to_string(expected_not));
        c.computed = detail + " (contractibility certified via collapsibility)";
        c.status = !ok ? CheckStatus::Fail
                       : inconclusive ? CheckStatus::Inconclusive : CheckStatus::Pass;
    }

    void scan4_dichotomy(Check& c) {
        std::vector<Simplex> fillable_sets, product_sets;
        for (const auto& i : fx_.scans.at(4)) {
            // The full 4-element index set whose subcomplex is the 4-cycle is
            // the one where the product arises; it is exactly the union of
            // the two 2-element scan hits.
            Simplex product_index =
                simplex_union(fx_.scans.at(2).at(0), fx_.scans.at(2).at(1));
            if (i == product_index) product_sets.push_back(i);
            else fillable_sets.push_back(i);
        }
        fillable_check(c, fillable_sets, product_sets);
    }

    void wedge_check(Check& c) {
        PoincarePolynomial predicted = predicted_wedge_poincare(k_minus_, jobs_);
        std::vector<std::pair<PoincarePolynomial, long long>> summands;
        for (const auto& row : fx_.wedge_census) {
            PoincarePolynomial p = PoincarePolynomial::one();
            for (const auto& f : row.factors) {
                PoincarePolynomial sphere;
                sphere.add(0, 1);
                sphere.add(f.dim, 1);
                p = p * sphere;
            }
            summands.emplace_back(p, 1);
        }
        PoincarePolynomial census = wedge_poincare(summands);
        c.expected = fx_.predicted_wedge.to_string() + " (census of " +
                     std::to_string(fx_.wedge_census.size()) + " summands)";
        c.computed = predicted.to_string();
        c.status = predicted == census && predicted == fx_.predicted_wedge
                       ? CheckStatus::Pass
                       : CheckStatus::Fail;
    }

    void join_check(Check& c) {
        SimplicialComplex lk = link(fx_.complex, fx_.join_simplex);
        SimplicialComplex expected = build_complex(fx_.join_factors.at(0));
        for (std::size_t i = 1; i < fx_.join_factors.size(); ++i)
            expected = join(expected, build_complex(fx_.join_factors.at(i)));
        c.expected = "link of " + simplex_to_string(fx_.join_simplex) + " = " +
                     subsets_to_string(expected.facets());
        c.computed = subsets_to_string(lk.facets());
        c.status = lk == expected ? CheckStatus::Pass : CheckStatus::Fail;
    }

    void link_facets_check(Check& c) {
        SimplicialComplex l2 = link(fx_.complex, fx_.link2_simplex);
        SimplicialComplex l4 = link(fx_.complex, fx_.link4_simplex);
        auto e2 = fx_.link2_facets, e4 = fx_.link4_facets;
        std::sort(e2.begin(), e2.end(), SimplexOrder{});
        std::sort(e4.begin(), e4.end(), SimplexOrder{});
        const bool ok = l2.facets() == e2 && l4.facets() == e4;
        c.expected = subsets_to_string(e2) + " / " + subsets_to_string(e4);
        c.computed = subsets_to_string(l2.facets()) + " / " + subsets_to_string(l4.facets());
        c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    }

    void relabel_check(Check& c) {
        SimplicialComplex l2 = link(fx_.complex, fx_.link2_simplex);
        SimplicialComplex l4 = link(fx_.complex, fx_.link4_simplex);
        SimplicialComplex mapped = relabel(l2, fx_.relabel_perm);
        c.expected = "relabeled link equals " + subsets_to_string(l4.facets());
        c.computed = subsets_to_string(mapped.facets());
        c.status = mapped == l4 ? CheckStatus::Pass : CheckStatus::Fail;
    }

    void stacked_check(Check& c) {
        SimplicialComplex l2 = link(fx_.complex, fx_.link2_simplex);
        auto cert = recognize_stacked(l2);
        c.expected = "stacked with (k, ell) = (" + std::to_string(fx_.stacked_k) + ", " +
                     std::to_string(fx_.stacked_ell) + ")";
        if (!cert) {
            c.computed = "not stacked";
            c.status = CheckStatus::Fail;
            return;
        }
        const bool replay_ok = replay_certificate(*cert) == l2;
        c.computed = "(k, ell) = (" + std::to_string(cert->k) + ", " +
                     std::to_string(cert->ell) + "), peel replay " +
                     (replay_ok ? "consistent" : "INCONSISTENT");
        c.status = cert->k == fx_.stacked_k && cert->ell == fx_.stacked_ell && replay_ok
                       ? CheckStatus::Pass
                       : CheckStatus::Fail;
    }

    void link_poincare_check(Check& c) {
        SimplicialComplex l2 = link(fx_.complex, fx_.link2_simplex);
        MomentAnglePoincare za = moment_angle_poincare(l2, jobs_);
        PoincarePolynomial closed_form =
            connected_sum_poincare(stacked_connected_sum(fx_.stacked_k, fx_.stacked_ell));
        c.expected = fx_.link2_poincare.to_string() + " (closed form and fixture)";
        c.computed = za.poincare.to_string() + (za.torsion_free ? "" : " WITH TORSION");
        c.status = za.torsion_free && za.poincare == closed_form &&
                           za.poincare == fx_.link2_poincare
                       ? CheckStatus::Pass
                       : CheckStatus::Fail;
    }

    /// For each summand of a link table, exactly one factor S^k_I has the
    /// deleted vertex outside I. Each such factor is verified to arise from a
    /// homology (k-|I|-1)-sphere (link)_I; then either (k, I) is a wedge
    /// census label and the inclusion (link)_I into K_I must be a homology
    /// isomorphism, or K_I must be acyclic, certifying that the factor is not
    /// a wedge summand and maps trivially in homology.
    void inclusion_check(Check& c, const std::vector<SummandRow>& table,
                         const Simplex& link_simplex) {
        SimplicialComplex lk = link(fx_.complex, link_simplex);

        std::set<std::pair<int, Simplex>> census_labels;
        for (const auto& row : fx_.wedge_census)
            for (const auto& f : row.factors) census_labels.insert({f.dim, f.subset});

        int iso_count = 0, null_count = 0;
        std::vector<std::string> problems;
        for (const auto& row : table) {
            const SummandFactor* outside = nullptr;
            for (const auto& f : row.factors) {
                if (!std::binary_search(f.subset.begin(), f.subset.end(), fx_.deleted_vertex)) {
                    if (outside) problems.push_back("two factors avoid the deleted vertex");
                    outside = &f;
                }
            }
            if (!outside) {
                problems.push_back("no factor avoids the deleted vertex");
                continue;
            }
            SimplicialComplex li = full_subcomplex(lk, outside->subset);
            SimplicialComplex ki = full_subcomplex(fx_.complex, outside->subset);
            const int expected_dim = outside->dim - static_cast<int>(outside->subset.size()) - 1;
            if (!reduced_homology(li).is_sphere(expected_dim)) {
                problems.push_back(outside->to_string() + " not realized by the link subcomplex");
                continue;
            }
            if (census_labels.count({outside->dim, outside->subset})) {
                if (is_homology_iso_inclusion(ki, li)) ++iso_count;
                else problems.push_back(outside->to_string() + " inclusion not a homology iso");
            } else {
                if (reduced_homology(ki).is_trivial()) ++null_count;
                else problems.push_back(outside->to_string() +
                                        " ambient subcomplex unexpectedly nonvanishing");
            }
        }
        c.expected = "17 factors: homology iso onto census labels, acyclic ambient otherwise";
        c.computed = std::to_string(iso_count) + " isomorphisms + " + std::to_string(null_count) +
                     " null factors";
        if (!problems.empty()) {
            c.computed += "; ";
            for (const auto& p : problems) c.computed += p + "; ";
        }
        c.status = problems.empty() && iso_count + null_count == static_cast<int>(table.size())
                       ? CheckStatus::Pass
                       : CheckStatus::Fail;
    }

    void grand_check(Check& c) {
        MomentAnglePoincare za = moment_angle_poincare(fx_.complex, jobs_);
        PoincarePolynomial sum = connected_sum_poincare(fx_.connected_sum);
        c.expected = fx_.moment_angle_poly.to_string() + " = " + fx_.connected_sum.to_string();
        c.computed = za.poincare.to_string() + (za.torsion_free ? ", torsion-free" : " WITH TORSION");
        c.status = za.torsion_free && za.poincare == sum && za.poincare == fx_.moment_angle_poly
                       ? CheckStatus::Pass
                       : CheckStatus::Fail;
    }

    const Fixture& fx_;
    int jobs_;
    long long budget_;
    SimplicialComplex k_minus_;
    VerificationReport report_;
};

}  // namespace detail

/// Replays every finitely checkable claim about the fixture complex and its
/// moment-angle invariants; returns the structured pass/fail report.
inline VerificationReport verify_paper(const Fixture& fixture, int jobs = 1,
                                       long long budget = 1'000'000) {
    return detail::Verifier(fixture, jobs, budget).run();
}

}  // namespace mac
