#pragma once

#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "homology.hpp"
#include "poincare.hpp"
#include "simplicial_complex.hpp"

namespace mac {

/// Reduced homology of every full subcomplex K_I, the bigraded data behind
/// the additive invariants of the associated moment-angle complex. Entries
/// are kept for all 2^m subsets (trivial profiles included) and are sorted
/// by (|I|, lex), so serialized tables are byte-stable.
struct BigradedTable {
    struct Entry {
        Simplex subset;
        HomologyProfile profile;
    };
    std::vector<Entry> entries;

    const HomologyProfile* find(const Simplex& subset) const {
        for (const auto& e : entries)
            if (e.subset == subset) return &e.profile;
        return nullptr;
    }
};

namespace detail {

constexpr int kMaxBigradedVertices = 24;

inline Simplex subset_from_mask(const Simplex& verts, std::uint32_t mask) {
    Simplex out;
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (mask >> i & 1u) out.push_back(verts[i]);
    return out;
}

}  // namespace detail

/// Full Hochster-style table over all vertex subsets. `jobs` > 1 partitions
/// the 2^m index space across threads; the merged result is identical to the
/// single-threaded one.
inline BigradedTable bigraded_table(const SimplicialComplex& k, int jobs = 1) {
    const Simplex& verts = k.vertices();
    const int m = static_cast<int>(verts.size());
    if (m > detail::kMaxBigradedVertices)
        throw std::invalid_argument("bigraded_table: vertex budget (24) exceeded");
    if (k.allows_ghosts()) {
        Simplex support;
        for (const auto& f : k.facets()) support = simplex_union(support, f);
        if (support != verts)
            throw std::invalid_argument("bigraded_table: ghost vertices are not supported");
    }
    const std::uint32_t count = 1u << m;

    std::vector<BigradedTable::Entry> entries(count);
    auto work = [&](std::uint32_t begin, std::uint32_t end) {
        for (std::uint32_t mask = begin; mask < end; ++mask) {
            Simplex subset = detail::subset_from_mask(verts, mask);
            entries[mask] = {subset, reduced_homology(full_subcomplex(k, subset))};
        }
    };

    if (jobs <= 1 || count < 64) {
        work(0, count);
    } else {
        const std::uint32_t chunk = (count + jobs - 1) / jobs;
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) {
            std::uint32_t begin = static_cast<std::uint32_t>(t) * chunk;
            if (begin >= count) break;
            pool.emplace_back(work, begin, std::min(count, begin + chunk));
        }
        for (auto& th : pool) th.join();
    }

    std::sort(entries.begin(), entries.end(),
              [](const BigradedTable::Entry& a, const BigradedTable::Entry& b) {
                  return SimplexOrder{}(a.subset, b.subset);
              });
    return BigradedTable{std::move(entries)};
}

/// Poincare polynomial of the moment-angle complex plus a torsion flag.
struct MomentAnglePoincare {
    PoincarePolynomial poincare;
    bool torsion_free = true;
    std::vector<Simplex> torsion_subsets;
};

/// Additive fingerprint of the moment-angle complex: the coefficient of t^i
/// is the sum over subsets I of rank H~_{i-|I|-1}(K_I). The I = {} term
/// contributes the constant 1. Torsion anywhere is reported, not fatal.
inline MomentAnglePoincare moment_angle_poincare(const SimplicialComplex& k, int jobs = 1) {
    MomentAnglePoincare out;
    for (const auto& e : bigraded_table(k, jobs).entries) {
        const int shift = static_cast<int>(e.subset.size()) + 1;
        for (const auto& [degree, group] : e.profile.groups()) {
            if (group.betti > 0) out.poincare.add(degree + shift, group.betti);
            if (!group.torsion.empty()) {
                out.torsion_free = false;
                out.torsion_subsets.push_back(e.subset);
            }
        }
    }
    return out;
}

/// All subsets of the given cardinality whose full subcomplex has nonvanishing
/// reduced homology, in lexicographic order.
inline std::vector<std::pair<Simplex, HomologyProfile>>
noncontractible_scan(const SimplicialComplex& k, int card) {
    const Simplex& verts = k.vertices();
    if (card < 0 || card > static_cast<int>(verts.size()))
        throw std::invalid_argument("noncontractible_scan: cardinality out of range");

    std::vector<std::pair<Simplex, HomologyProfile>> hits;
    Simplex current;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (static_cast<int>(current.size()) == card) {
            HomologyProfile h = reduced_homology(full_subcomplex(k, current));
            if (!h.is_trivial()) hits.emplace_back(current, std::move(h));
            return;
        }
        for (std::size_t i = start; i < verts.size(); ++i) {
            if (verts.size() - i < card - current.size()) break;
            current.push_back(verts[i]);
            self(self, i + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return hits;
}

/// Degree census of the wedge predicted when every attaching map in the fat
/// wedge filtration is null: each I with H~_j(K_I) = Z^r contributes r copies
/// of t^{j+|I|+1}, plus the constant 1. Torsion makes the prediction
/// meaningless and throws.
inline PoincarePolynomial predicted_wedge_poincare(const SimplicialComplex& k, int jobs = 1) {
    PoincarePolynomial out;
    for (const auto& e : bigraded_table(k, jobs).entries) {
        const int shift = static_cast<int>(e.subset.size()) + 1;
        for (const auto& [degree, group] : e.profile.groups()) {
            if (!group.torsion.empty())
                throw std::domain_error("predicted_wedge_poincare: torsion in the bigraded table");
            out.add(degree + shift, group.betti);
        }
    }
    return out;
}

}  // namespace mac
