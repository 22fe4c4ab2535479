#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "homology.hpp"
#include "simplicial_complex.hpp"

namespace mac {

/// Witness that a complex is the boundary sphere of a stacked polytope:
/// it is obtained from the boundary of the k-simplex by ell stacking moves.
/// peel_sequence lists the vertices removed (newest stacking first when
/// replayed forward); peel_facets[i] is the facet that replaced the star of
/// peel_sequence[i], and core_vertices spans the terminal simplex boundary.
struct StackedCertificate {
    int k = 0;
    int ell = 0;
    std::vector<int> peel_sequence;
    std::vector<Simplex> peel_facets;
    Simplex core_vertices;
};

/// Stellar subdivision of a facet: replaces it by the cone from a fresh
/// vertex over its boundary. The forward generator for stacked spheres.
inline SimplicialComplex stack_move(const SimplicialComplex& k, const Simplex& facet,
                                    int new_vertex) {
    Simplex f = make_simplex(facet);
    const auto& facets = k.facets();
    if (std::find(facets.begin(), facets.end(), f) == facets.end())
        throw std::invalid_argument("stack_move: not a facet");
    if (std::binary_search(k.vertices().begin(), k.vertices().end(), new_vertex))
        throw std::invalid_argument("stack_move: new vertex already present");
    if (new_vertex <= 0) throw std::invalid_argument("stack_move: vertex labels are positive");

    std::vector<Simplex> out;
    for (const auto& g : facets)
        if (g != f) out.push_back(g);
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Simplex g = f;
        g[drop] = new_vertex;
        out.push_back(make_simplex(std::move(g)));
    }
    return SimplicialComplex::from_facets(std::move(out));
}

namespace detail {

/// A vertex is peelable when its link is the boundary of a d-simplex on d+1
/// vertices, i.e. its star is the cone over that boundary; the reverse
/// stacking move swaps the star for the single facet on the link vertices.
inline std::optional<Simplex> peel_replacement(const SimplicialComplex& k, int v, int d) {
    std::vector<Simplex> star;
    Simplex neighbors;
    for (const auto& f : k.facets()) {
        if (!std::binary_search(f.begin(), f.end(), v)) continue;
        star.push_back(f);
        neighbors = simplex_union(neighbors, simplex_difference(f, Simplex{v}));
    }
    if (static_cast<int>(star.size()) != d + 1) return std::nullopt;
    if (static_cast<int>(neighbors.size()) != d + 1) return std::nullopt;
    // star must consist of {v} ∪ (neighbors minus one) for every neighbor
    std::set<Simplex> expected;
    for (std::size_t drop = 0; drop < neighbors.size(); ++drop) {
        Simplex f = neighbors;
        f[drop] = v;
        expected.insert(make_simplex(std::move(f)));
    }
    for (const auto& f : star)
        if (!expected.count(f)) return std::nullopt;
    // The replacement facet must be new, else the move does not invert a
    // stacking (only the terminal simplex boundary has it as a face).
    if (k.contains(neighbors)) return std::nullopt;
    return neighbors;
}

struct PeelSearch {
    int d;
    std::vector<int> peeled;
    std::vector<Simplex> replacements;
    std::set<std::vector<Simplex>> dead_states;

    bool run(const SimplicialComplex& k) {
        if (static_cast<int>(k.vertices().size()) == d + 2) {
            return k == simplex_boundary(d + 1, k.vertices());
        }
        if (dead_states.count(k.facets())) return false;
        for (int v : k.vertices()) {
            auto replacement = peel_replacement(k, v, d);
            if (!replacement) continue;
            std::vector<Simplex> next_facets;
            for (const auto& f : k.facets())
                if (!std::binary_search(f.begin(), f.end(), v)) next_facets.push_back(f);
            next_facets.push_back(*replacement);
            peeled.push_back(v);
            replacements.push_back(*replacement);
            if (run(SimplicialComplex::from_facets(std::move(next_facets)))) return true;
            peeled.pop_back();
            replacements.pop_back();
        }
        dead_states.insert(k.facets());
        return false;
    }
};

}  // namespace detail

/// Decides whether K is a stacked triangulated sphere and, if so, returns the
/// parameters: K is built from the boundary of the k-simplex by ell stacking
/// moves. Preconditions (pure, pseudomanifold, homology sphere) throw when
/// violated; a conforming complex that is simply not stacked yields nullopt.
inline std::optional<StackedCertificate> recognize_stacked(const SimplicialComplex& k) {
    const int d = k.dim();
    if (d < 1 || !k.is_pure())
        throw std::invalid_argument("recognize_stacked: complex must be pure of dimension >= 1");
    if (!k.is_pseudomanifold())
        throw std::invalid_argument("recognize_stacked: not a pseudomanifold");
    if (!is_homology_sphere(k, d))
        throw std::invalid_argument("recognize_stacked: not a homology sphere");

    if (d == 1) {
        // Every polygon is stacked: contract ears down to a triangle.
        StackedCertificate cert;
        cert.k = 2;
        SimplicialComplex cur = k;
        while (cur.vertices().size() > 3) {
            bool moved = false;
            for (int v : cur.vertices()) {
                auto replacement = detail::peel_replacement(cur, v, 1);
                if (!replacement) continue;
                std::vector<Simplex> next;
                for (const auto& f : cur.facets())
                    if (!std::binary_search(f.begin(), f.end(), v)) next.push_back(f);
                next.push_back(*replacement);
                cert.peel_sequence.push_back(v);
                cert.peel_facets.push_back(*replacement);
                cur = SimplicialComplex::from_facets(std::move(next));
                moved = true;
                break;
            }
            if (!moved) return std::nullopt;
        }
        if (!(cur == simplex_boundary(2, cur.vertices()))) return std::nullopt;
        cert.ell = static_cast<int>(cert.peel_sequence.size());
        cert.core_vertices = cur.vertices();
        return cert;
    }

    detail::PeelSearch search{d, {}, {}, {}};
    if (!search.run(k)) return std::nullopt;

    StackedCertificate cert;
    cert.k = d + 1;
    cert.ell = static_cast<int>(search.peeled.size());
    cert.peel_sequence = std::move(search.peeled);
    cert.peel_facets = std::move(search.replacements);
    cert.core_vertices = k.vertices();
    for (int v : cert.peel_sequence)
        cert.core_vertices = simplex_difference(cert.core_vertices, Simplex{v});
    return cert;
}

/// Rebuilds the complex a certificate describes: start from the boundary of
/// the k-simplex on the core vertices and replay the stackings in reverse.
inline SimplicialComplex replay_certificate(const StackedCertificate& cert) {
    SimplicialComplex k = simplex_boundary(cert.k, cert.core_vertices);
    for (std::size_t i = cert.peel_sequence.size(); i-- > 0;)
        k = stack_move(k, cert.peel_facets[i], cert.peel_sequence[i]);
    return k;
}

}  // namespace mac
