// Command-line front end: combinatorial and homological invariants of
// simplicial complexes, moment-angle invariants, and the claims verifier.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mac/fillability.hpp"
#include "mac/homology.hpp"
#include "mac/json_io.hpp"
#include "mac/moment_angle.hpp"
#include "mac/simplicial_complex.hpp"
#include "mac/stacked.hpp"
#include "mac/verify.hpp"

#ifndef MAC_DEFAULT_FIXTURE
#define MAC_DEFAULT_FIXTURE "fixtures/p8_28_claims.json"
#endif

namespace {

mac::Simplex parse_labels(const std::string& csv) {
    mac::Simplex out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ','))
        if (!token.empty()) out.push_back(std::stoi(token));
    return mac::make_simplex(std::move(out));
}

std::string subsets_line(const std::vector<mac::Simplex>& sets, const char* sep) {
    std::string out;
    for (const auto& s : sets) {
        if (!out.empty()) out += sep;
        out += mac::simplex_to_string(s);
    }
    return out;
}

void print_homology(const mac::HomologyProfile& h) {
    if (h.is_trivial()) {
        std::cout << "all reduced homology vanishes\n";
        return;
    }
    for (const auto& [degree, group] : h.groups()) {
        std::cout << "H~" << degree << " = ";
        std::string part;
        if (group.betti == 1) part = "Z";
        else if (group.betti > 1) part = "Z^" + std::to_string(group.betti);
        for (const auto& t : group.torsion) {
            if (!part.empty()) part += " + ";
            part += "Z/" + t.str();
        }
        std::cout << part << "\n";
    }
}

int run_info(const std::string& file) {
    auto k = mac::read_complex_file(file);
    std::cout << "vertices: " << mac::simplex_to_string(k.vertices()) << " ("
              << k.vertices().size() << ")\n";
    std::cout << "dimension: " << k.dim() << "\n";
    auto fv = k.f_vector();
    std::cout << "f-vector: (";
    for (std::size_t i = 0; i < fv.size(); ++i) std::cout << (i ? ", " : "") << fv[i];
    std::cout << ")\n";
    std::cout << "facets: " << subsets_line(k.facets(), " ") << "\n";
    std::cout << "missing faces: " << subsets_line(mac::missing_faces(k), " ") << "\n";
    std::cout << (k.is_pseudomanifold() ? "pseudomanifold" : "not a pseudomanifold") << "\n";
    return 0;
}

int run_homology(const std::string& file, const std::string& subset) {
    auto k = mac::read_complex_file(file);
    if (!subset.empty()) k = mac::full_subcomplex(k, parse_labels(subset));
    print_homology(mac::reduced_homology(k));
    return 0;
}

int run_link(const std::string& file, const std::string& simplex) {
    auto k = mac::read_complex_file(file);
    auto lk = mac::link(k, parse_labels(simplex));
    std::cout << subsets_line(lk.facets(), " ") << "\n";
    return 0;
}

int run_scan(const std::string& file, int card) {
    auto k = mac::read_complex_file(file);
    std::vector<mac::Simplex> labels;
    for (const auto& [subset, profile] : mac::noncontractible_scan(k, card))
        labels.push_back(subset);
    std::cout << subsets_line(labels, ", ") << "\n";
    return 0;
}

int run_hochster(const std::string& file, bool table, int jobs) {
    auto k = mac::read_complex_file(file);
    if (table) {
        std::cout << mac::table_to_json(mac::bigraded_table(k, jobs)).dump(1) << "\n";
        return 0;
    }
    auto za = mac::moment_angle_poincare(k, jobs);
    std::cout << za.poincare.to_string() << "\n";
    if (!za.torsion_free) {
        std::cout << "warning: torsion at " << subsets_line(za.torsion_subsets, ", ") << "\n";
    }
    return 0;
}

int run_stacked(const std::string& file) {
    auto k = mac::read_complex_file(file);
    try {
        auto cert = mac::recognize_stacked(k);
        if (!cert) {
            std::cout << "not stacked\n";
            return 0;
        }
        std::cout << mac::certificate_to_json(*cert).dump() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cout << "not stacked (" << e.what() << ")\n";
    }
    return 0;
}

int run_fillable(const std::string& file, long long budget) {
    auto k = mac::read_complex_file(file);
    std::cout << mac::witness_to_json(mac::is_fillable(k, budget)).dump() << "\n";
    return 0;
}

std::string resolve_fixture(const std::string& arg) {
    namespace fs = std::filesystem;
    if (!arg.empty()) return arg;
    if (fs::exists("fixtures/p8_28_claims.json")) return "fixtures/p8_28_claims.json";
    return MAC_DEFAULT_FIXTURE;
}

int run_verify(const std::string& fixture_path, int jobs, long long budget, bool json) {
    auto fixture = mac::Fixture::load(resolve_fixture(fixture_path));
    auto report = mac::verify_paper(fixture, jobs, budget);
    if (json)
        std::cout << report.to_json().dump(1) << "\n";
    else
        std::cout << report.to_text();
    return report.failures() > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of simplicial complexes and their moment-angle manifolds"};
    app.require_subcommand(1);

    std::string file, subset, simplex, fixture_path;
    int card = 0, jobs = 1;
    long long budget = 1'000'000;
    bool table = false, poincare = false, json = false;

    auto* info = app.add_subcommand("info", "f-vector, facets, missing faces");
    info->add_option("FILE", file)->required();

    auto* homology = app.add_subcommand("homology", "reduced integral homology");
    homology->add_option("FILE", file)->required();
    homology->add_option("--subset", subset, "restrict to the full subcomplex on these vertices");

    auto* link = app.add_subcommand("link", "facets of the link of a simplex");
    link->add_option("FILE", file)->required();
    link->add_option("--simplex", simplex, "comma-separated vertex labels")->required();

    auto* scan = app.add_subcommand("scan", "subsets with nonvanishing reduced homology");
    scan->add_option("FILE", file)->required();
    scan->add_option("--card", card, "subset cardinality")->required();

    auto* hochster = app.add_subcommand("hochster", "moment-angle homology via full subcomplexes");
    hochster->add_option("FILE", file)->required();
    auto* opt_poincare =
        hochster->add_flag("--poincare", poincare, "print the Poincare polynomial (default)");
    hochster->add_flag("--table", table, "print the full bigraded table as JSON")
        ->excludes(opt_poincare);
    hochster->add_option("--jobs", jobs, "worker threads");

    auto* stacked = app.add_subcommand("stacked", "recognize boundaries of stacked polytopes");
    stacked->add_option("FILE", file)->required();

    auto* fillable = app.add_subcommand("fillable", "search for a filling by missing faces");
    fillable->add_option("FILE", file)->required();
    fillable->add_option("--budget", budget, "collapse search node budget");

    auto* verify = app.add_subcommand("verify-paper", "replay all claims against the fixture");
    verify->add_option("FIXTURE", fixture_path, "claims fixture (default: fixtures/p8_28_claims.json)");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_option("--budget", budget, "collapse search node budget");
    verify->add_flag("--json", json, "emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems exit 2; --help exits 0
    }

    try {
        if (info->parsed()) return run_info(file);
        if (homology->parsed()) return run_homology(file, subset);
        if (link->parsed()) return run_link(file, simplex);
        if (scan->parsed()) return run_scan(file, card);
        if (hochster->parsed()) return run_hochster(file, table, jobs);
        if (stacked->parsed()) return run_stacked(file);
        if (fillable->parsed()) return run_fillable(file, budget);
        if (verify->parsed()) return run_verify(fixture_path, jobs, budget, json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
