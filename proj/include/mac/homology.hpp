#pragma once

#include <map>
#include <string>
#include <vector>

#include "integer_matrix.hpp"
#include "simplicial_complex.hpp"

namespace mac {

/// One homology group: free rank plus invariant factors (> 1, each dividing
/// the next).
struct HomologyGroup {
    long long betti = 0;
    std::vector<Integer> torsion;

    bool trivial() const { return betti == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Per-degree reduced (or relative) integral homology. Trivial degrees are
/// omitted, so two profiles compare equal iff the groups agree everywhere.
class HomologyProfile {
public:
    void set(int degree, HomologyGroup g) {
        if (!g.trivial()) groups_[degree] = std::move(g);
    }

    HomologyGroup group(int degree) const {
        auto it = groups_.find(degree);
        return it == groups_.end() ? HomologyGroup{} : it->second;
    }

    const std::map<int, HomologyGroup>& groups() const { return groups_; }

    bool is_trivial() const { return groups_.empty(); }

    bool is_torsion_free() const {
        for (const auto& [d, g] : groups_)
            if (!g.torsion.empty()) return false;
        return true;
    }

    /// Exactly one Z in the given degree and nothing else.
    bool is_sphere(int n) const {
        return groups_.size() == 1 && group(n) == HomologyGroup{1, {}};
    }

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;

    std::string to_string() const {
        if (groups_.empty()) return "0";
        std::string out;
        for (const auto& [d, g] : groups_) {
            if (!out.empty()) out += ", ";
            out += "H" + std::to_string(d) + "=";
            if (g.betti == 1) out += "Z";
            else if (g.betti > 1) out += "Z^" + std::to_string(g.betti);
            for (std::size_t i = 0; i < g.torsion.size(); ++i) {
                if (g.betti > 0 || i > 0) out += "+";
                out += "Z/" + g.torsion[i].str();
            }
            if (g.betti == 0 && g.torsion.empty()) out += "0";
        }
        return out;
    }

private:
    std::map<int, HomologyGroup> groups_;
};

/// Boundary matrices of the augmented chain complex, index n = 0..dim:
/// entry n maps n-chains to (n-1)-chains; n = 0 is the augmentation row.
/// Signs follow the alternating convention on sorted vertex order.
inline std::vector<IntegerMatrix> chain_boundary_matrices(const SimplicialComplex& k) {
    const int top = k.dim();
    std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(top + 2));
    for (const auto& s : k.faces())
        by_dim[s.size()].push_back(s);  // index = dim + 1

    std::vector<IntegerMatrix> boundaries;
    for (int n = 0; n <= top; ++n) {
        const auto& rows = by_dim[static_cast<std::size_t>(n)];
        const auto& cols = by_dim[static_cast<std::size_t>(n) + 1];
        std::map<Simplex, std::size_t> row_index;
        for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

        IntegerMatrix d(rows.size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const Simplex& s = cols[j];
            int sign = 1;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(drop));
                d.at(row_index.at(face), j) = sign;
                sign = -sign;
            }
        }
        boundaries.push_back(std::move(d));
    }
    return boundaries;
}

namespace detail {

/// Homology from chain sizes and boundary ranks/factors. Degrees run from
/// `lowest` (-1 reduced, 0 relative); chain_sizes[i] is the rank of the chain
/// group at index i and boundaries[x] maps chain index x+1 down to x.
inline HomologyProfile homology_from_boundaries(const std::vector<std::size_t>& chain_sizes,
                                                const std::vector<IntegerMatrix>& boundaries,
                                                int lowest) {
    std::vector<SmithResult> snf(boundaries.size());
    for (std::size_t i = 0; i < boundaries.size(); ++i)
        snf[i] = smith_normal_form(boundaries[i]);

    HomologyProfile profile;
    for (std::size_t i = 0; i < chain_sizes.size(); ++i) {
        if (chain_sizes[i] == 0) continue;
        long long rank_out = (i >= 1 && i - 1 < snf.size()) ? snf[i - 1].rank : 0;
        long long rank_in = i < snf.size() ? snf[i].rank : 0;
        HomologyGroup g;
        g.betti = static_cast<long long>(chain_sizes[i]) - rank_out - rank_in;
        if (i < snf.size())
            for (const auto& d : snf[i].invariant_factors)
                if (d > 1) g.torsion.push_back(d);
        profile.set(lowest + static_cast<int>(i), std::move(g));
    }
    return profile;
}

/// True when some vertex lies in every facet (the complex is a cone, hence
/// acyclic). Cheap shortcut used before running Smith reductions.
inline bool is_cone(const SimplicialComplex& k) {
    if (k.is_empty_space()) return false;
    Simplex apex_candidates = k.facets().front();
    for (const auto& f : k.facets()) {
        Simplex next;
        std::set_intersection(apex_candidates.begin(), apex_candidates.end(),
                              f.begin(), f.end(), std::back_inserter(next));
        apex_candidates = std::move(next);
        if (apex_candidates.empty()) return false;
    }
    return true;
}

/// Reduced homology via Smith reduction of the full augmented chain complex,
/// with no shortcuts. Exposed so the cone fast path can be validated against it.
inline HomologyProfile reduced_homology_by_smith(const SimplicialComplex& k) {
    if (k.is_empty_space()) {
        HomologyProfile p;
        p.set(-1, HomologyGroup{1, {}});
        return p;
    }
    auto boundaries = chain_boundary_matrices(k);
    std::vector<std::size_t> chain_sizes(static_cast<std::size_t>(k.dim()) + 2, 0);
    for (const auto& s : k.faces())
        ++chain_sizes[s.size()];  // index = dim + 1; counts the empty simplex at 0
    return homology_from_boundaries(chain_sizes, boundaries, -1);
}

}  // namespace detail

/// Reduced integral homology in every degree. The empty space has H_{-1} = Z;
/// a cone (in particular any full simplex) has no reduced homology at all.
inline HomologyProfile reduced_homology(const SimplicialComplex& k) {
    if (k.is_empty_space()) {
        HomologyProfile p;
        p.set(-1, HomologyGroup{1, {}});
        return p;
    }
    if (detail::is_cone(k)) return {};
    return detail::reduced_homology_by_smith(k);
}

inline bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& super) {
    for (const auto& f : sub.facets())
        if (!super.contains(f)) return false;
    return true;
}

/// Homology of the quotient chain complex C(K)/C(L) for a subcomplex L ⊆ K.
inline HomologyProfile relative_homology(const SimplicialComplex& k, const SimplicialComplex& l) {
    if (!is_subcomplex(l, k))
        throw std::invalid_argument("relative_homology: second complex is not a subcomplex of the first");

    // Quotient basis: faces of K not in L (the empty simplex always cancels).
    const int top = k.dim();
    std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(top + 1));
    for (const auto& s : k.faces()) {
        if (s.empty() || l.contains(s)) continue;
        by_dim[s.size() - 1].push_back(s);
    }

    std::vector<std::map<Simplex, std::size_t>> index(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d)
        for (std::size_t i = 0; i < by_dim[d].size(); ++i) index[d][by_dim[d][i]] = i;

    std::vector<std::size_t> chain_sizes;
    std::vector<IntegerMatrix> boundaries;
    for (std::size_t d = 0; d < by_dim.size(); ++d)
        chain_sizes.push_back(by_dim[d].size());
    for (std::size_t d = 1; d < by_dim.size(); ++d) {
        IntegerMatrix m(by_dim[d - 1].size(), by_dim[d].size());
        for (std::size_t j = 0; j < by_dim[d].size(); ++j) {
            const Simplex& s = by_dim[d][j];
            int sign = 1;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(drop));
                auto it = index[d - 1].find(face);
                if (it != index[d - 1].end()) m.at(it->second, j) = sign;
                sign = -sign;
            }
        }
        boundaries.push_back(std::move(m));
    }

    return detail::homology_from_boundaries(chain_sizes, boundaries, 0);
}

/// True iff the inclusion L ↪ K induces isomorphisms on all (reduced)
/// homology groups, i.e. the relative homology vanishes identically.
inline bool is_homology_iso_inclusion(const SimplicialComplex& k, const SimplicialComplex& l) {
    return relative_homology(k, l).is_trivial();
}

/// Ordinary (unreduced) homology: the reduced groups plus one extra Z in
/// degree 0 per connected component. Computed as homology relative to the
/// empty space, which drops the augmentation row.
inline HomologyProfile unreduced_homology(const SimplicialComplex& k) {
    return relative_homology(k, full_subcomplex(k, {}));
}

inline bool is_homology_point(const SimplicialComplex& k) {
    return reduced_homology(k).is_trivial();
}

inline bool is_homology_sphere(const SimplicialComplex& k, int n) {
    return reduced_homology(k).is_sphere(n);
}

}  // namespace mac
