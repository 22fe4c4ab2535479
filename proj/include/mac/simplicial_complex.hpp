#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mac {

/// A simplex is a strictly increasing list of positive integer vertex labels.
/// The empty simplex {} is valid and is a face of every complex.
using Simplex = std::vector<int>;

inline bool is_valid_simplex(const Simplex& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] <= 0) return false;
        if (i > 0 && s[i] <= s[i - 1]) return false;
    }
    return true;
}

/// Sorts and validates a raw label list; throws on duplicates or non-positive labels.
inline Simplex make_simplex(Simplex labels) {
    std::sort(labels.begin(), labels.end());
    if (!is_valid_simplex(labels))
        throw std::invalid_argument("simplex labels must be distinct positive integers");
    return labels;
}

inline bool subset_of(const Simplex& a, const Simplex& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Simplex simplex_union(const Simplex& a, const Simplex& b) {
    Simplex out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Simplex simplex_difference(const Simplex& a, const Simplex& b) {
    Simplex out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::string simplex_to_string(const Simplex& s) {
    if (s.empty()) return "{}";
    bool compact = s.back() <= 9;
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i && !compact) out += '.';
        out += std::to_string(s[i]);
    }
    return out;
}

/// Order used for deterministic listings: by cardinality, then lexicographic.
struct SimplexOrder {
    bool operator()(const Simplex& a, const Simplex& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// A finite abstract simplicial complex, stored by its facets (maximal faces).
///
/// Invariants: facets are sorted simplices forming an antichain; every facet is
/// a subset of the vertex set; every vertex lies in some facet unless the
/// complex was built with allow_ghosts. The complex whose only face is {} (the
/// empty space) is represented by the single empty facet.
class SimplicialComplex {
public:
    SimplicialComplex() : facets_{Simplex{}} {}

    /// Builds from arbitrary facet lists: deduplicates, removes contained
    /// facets, checks labels. `universe`, when given, fixes the vertex set.
    static SimplicialComplex from_facets(std::vector<Simplex> facet_list,
                                         std::optional<Simplex> universe = std::nullopt,
                                         bool allow_ghosts = false) {
        if (facet_list.empty()) throw std::invalid_argument("facet list is empty");
        for (auto& f : facet_list) f = make_simplex(std::move(f));
        std::sort(facet_list.begin(), facet_list.end(), SimplexOrder{});
        facet_list.erase(std::unique(facet_list.begin(), facet_list.end()), facet_list.end());

        std::vector<Simplex> maximal;
        for (std::size_t i = 0; i < facet_list.size(); ++i) {
            bool contained = false;
            for (std::size_t j = 0; j < facet_list.size(); ++j) {
                if (i == j) continue;
                if (facet_list[j].size() > facet_list[i].size() ||
                    (facet_list[j].size() == facet_list[i].size() && j > i)) {
                    if (subset_of(facet_list[i], facet_list[j])) { contained = true; break; }
                }
            }
            if (!contained) maximal.push_back(facet_list[i]);
        }

        Simplex support;
        for (const auto& f : maximal)
            support = simplex_union(support, f);

        SimplicialComplex k;
        k.allow_ghosts_ = allow_ghosts;
        k.facets_ = std::move(maximal);
        if (universe) {
            Simplex u = make_simplex(*universe);
            if (!subset_of(support, u))
                throw std::invalid_argument("facet vertex outside the given universe");
            if (!allow_ghosts && u != support)
                throw std::invalid_argument("ghost vertex in universe (pass allow_ghosts to permit)");
            k.vertices_ = std::move(u);
        } else {
            k.vertices_ = std::move(support);
        }
        return k;
    }

    const Simplex& vertices() const { return vertices_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    bool allows_ghosts() const { return allow_ghosts_; }

    /// Dimension: largest facet size minus one; the empty space has dim -1.
    int dim() const {
        int d = -1;
        for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    bool is_empty_space() const { return dim() == -1; }

    /// Face membership test. The empty simplex is always a face.
    bool contains(const Simplex& s) const {
        if (s.empty()) return true;
        for (const auto& f : facets_)
            if (subset_of(s, f)) return true;
        return false;
    }

    /// All faces, including {}, ordered by (cardinality, lex).
    std::vector<Simplex> faces() const {
        std::set<Simplex, SimplexOrder> all;
        Simplex sub;
        for (const auto& f : facets_) enumerate_subsets(f, 0, sub, all);
        return {all.begin(), all.end()};
    }

    /// Faces of one dimension (dim -1 yields the empty simplex).
    std::vector<Simplex> faces(int d) const {
        std::vector<Simplex> out;
        for (const auto& s : faces())
            if (static_cast<int>(s.size()) == d + 1) out.push_back(s);
        return out;
    }

    /// Number of faces in each dimension 0..dim().
    std::vector<long long> f_vector() const {
        std::vector<long long> fv(static_cast<std::size_t>(std::max(dim() + 1, 0)), 0);
        for (const auto& s : faces())
            if (!s.empty()) ++fv[s.size() - 1];
        return fv;
    }

    bool is_pure() const {
        const int d = dim();
        for (const auto& f : facets_)
            if (static_cast<int>(f.size()) - 1 != d) return false;
        return true;
    }

    /// Pure, and every (d-1)-face lies in exactly two facets.
    bool is_pseudomanifold() const {
        const int d = dim();
        if (d < 1 || !is_pure()) return false;
        std::map<Simplex, int> ridge_count;
        for (const auto& f : facets_) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                Simplex r = f;
                r.erase(r.begin() + static_cast<long>(i));
                ++ridge_count[r];
            }
        }
        for (const auto& [r, c] : ridge_count)
            if (c != 2) return false;
        return true;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
    }

private:
    static void enumerate_subsets(const Simplex& f, std::size_t i, Simplex& cur,
                                  std::set<Simplex, SimplexOrder>& out) {
        if (i == f.size()) { out.insert(cur); return; }
        enumerate_subsets(f, i + 1, cur, out);
        cur.push_back(f[i]);
        enumerate_subsets(f, i + 1, cur, out);
        cur.pop_back();
    }

    Simplex vertices_;
    std::vector<Simplex> facets_;
    bool allow_ghosts_ = false;
};

inline SimplicialComplex build_complex(std::vector<Simplex> facet_list,
                                       std::optional<Simplex> universe = std::nullopt,
                                       bool allow_ghosts = false) {
    return SimplicialComplex::from_facets(std::move(facet_list), std::move(universe), allow_ghosts);
}

inline std::vector<Simplex> faces(const SimplicialComplex& k) { return k.faces(); }
inline std::vector<Simplex> faces(const SimplicialComplex& k, int d) { return k.faces(d); }

/// Minimal non-faces: subsets that are not faces but all of whose proper
/// subsets are. Candidates are enumerated by increasing cardinality up to
/// dim+2 (a minimal non-face can be no larger), pruning supersets of hits.
inline std::vector<Simplex> missing_faces(const SimplicialComplex& k) {
    std::vector<Simplex> missing;
    const Simplex& verts = k.vertices();
    const int max_card = k.dim() + 2;

    std::vector<Simplex> candidates = {Simplex{}};
    for (int card = 1; card <= max_card; ++card) {
        std::vector<Simplex> next;
        for (const auto& base : candidates) {
            int start = base.empty() ? 0
                : static_cast<int>(std::upper_bound(verts.begin(), verts.end(), base.back()) - verts.begin());
            for (std::size_t vi = static_cast<std::size_t>(start); vi < verts.size(); ++vi) {
                Simplex c = base;
                c.push_back(verts[vi]);
                bool prunable = false;
                for (const auto& m : missing)
                    if (subset_of(m, c)) { prunable = true; break; }
                if (prunable) continue;
                if (k.contains(c)) {
                    next.push_back(c);
                    continue;
                }
                // c is a non-face: minimal iff every proper subset is a face.
                bool minimal = true;
                for (std::size_t drop = 0; drop < c.size() && minimal; ++drop) {
                    Simplex sub = c;
                    sub.erase(sub.begin() + static_cast<long>(drop));
                    if (!k.contains(sub)) minimal = false;
                }
                if (minimal) missing.push_back(c);
            }
        }
        candidates = std::move(next);
    }
    std::sort(missing.begin(), missing.end(), SimplexOrder{});
    return missing;
}

/// Full subcomplex on I: all faces of K contained in I. Labels outside K are
/// ignored; ghost labels are kept only when K itself allows ghosts.
inline SimplicialComplex full_subcomplex(const SimplicialComplex& k, const Simplex& index_set) {
    Simplex idx = make_simplex(index_set);
    std::vector<Simplex> sub_facets;
    for (const auto& f : k.facets()) {
        Simplex cut;
        std::set_intersection(f.begin(), f.end(), idx.begin(), idx.end(), std::back_inserter(cut));
        sub_facets.push_back(std::move(cut));
    }
    if (k.allows_ghosts()) {
        Simplex u;
        std::set_intersection(idx.begin(), idx.end(), k.vertices().begin(), k.vertices().end(),
                              std::back_inserter(u));
        return SimplicialComplex::from_facets(std::move(sub_facets), u, true);
    }
    return SimplicialComplex::from_facets(std::move(sub_facets));
}

inline SimplicialComplex vertex_delete(const SimplicialComplex& k, int v) {
    const Simplex& verts = k.vertices();
    if (!std::binary_search(verts.begin(), verts.end(), v))
        throw std::invalid_argument("vertex_delete: " + std::to_string(v) + " is not a vertex");
    Simplex rest;
    std::copy_if(verts.begin(), verts.end(), std::back_inserter(rest), [v](int w) { return w != v; });
    return full_subcomplex(k, rest);
}

/// link_K(s) = { t disjoint from s : t ∪ s ∈ K }.
inline SimplicialComplex link(const SimplicialComplex& k, const Simplex& s) {
    Simplex sx = make_simplex(s);
    if (!k.contains(sx))
        throw std::invalid_argument("link: simplex is not a face");
    // Every link face t satisfies t ∪ s ⊆ g for some facet g ⊇ s, so the
    // maximal link faces are among the differences g \ s.
    std::vector<Simplex> link_facets;
    for (const auto& f : k.facets()) {
        if (!subset_of(sx, f)) continue;
        link_facets.push_back(simplex_difference(f, sx));
    }
    return SimplicialComplex::from_facets(std::move(link_facets));
}

/// Join: faces are unions of a face of K and a face of L (disjoint labels).
inline SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
    Simplex common;
    std::set_intersection(k.vertices().begin(), k.vertices().end(),
                          l.vertices().begin(), l.vertices().end(), std::back_inserter(common));
    if (!common.empty())
        throw std::invalid_argument("join: vertex label sets overlap");
    std::vector<Simplex> out;
    for (const auto& a : k.facets())
        for (const auto& b : l.facets())
            out.push_back(simplex_union(a, b));
    return SimplicialComplex::from_facets(std::move(out));
}

/// Vertex permutation for relabel(); entries absent from the map are fixed.
using VertexPermutation = std::map<int, int>;

inline Simplex apply_permutation(const VertexPermutation& perm, const Simplex& s) {
    Simplex out;
    out.reserve(s.size());
    for (int v : s) {
        auto it = perm.find(v);
        out.push_back(it == perm.end() ? v : it->second);
    }
    return make_simplex(std::move(out));
}

inline SimplicialComplex relabel(const SimplicialComplex& k, const VertexPermutation& perm) {
    std::set<int> images;
    for (int v : k.vertices()) {
        auto it = perm.find(v);
        int w = it == perm.end() ? v : it->second;
        if (w <= 0 || !images.insert(w).second)
            throw std::invalid_argument("relabel: permutation is not injective on the vertex set");
    }
    std::vector<Simplex> out;
    out.reserve(k.facets().size());
    for (const auto& f : k.facets()) out.push_back(apply_permutation(perm, f));
    return SimplicialComplex::from_facets(std::move(out));
}

/// Boundary of the n-simplex on the given n+1 labels: all n-subsets as facets.
inline SimplicialComplex simplex_boundary(int n, const Simplex& labels) {
    if (n < 0) throw std::invalid_argument("simplex_boundary: n must be >= 0");
    Simplex ls = make_simplex(labels);
    if (static_cast<int>(ls.size()) != n + 1)
        throw std::invalid_argument("simplex_boundary: need exactly n+1 labels");
    std::vector<Simplex> out;
    for (std::size_t drop = 0; drop < ls.size(); ++drop) {
        Simplex f = ls;
        f.erase(f.begin() + static_cast<long>(drop));
        out.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(std::move(out));
}

}  // namespace mac
