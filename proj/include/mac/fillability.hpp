#pragma once

#include <set>
#include <string>
#include <vector>

#include "simplicial_complex.hpp"

namespace mac {

/// Outcome of a collapsibility search. `Collapsed` and `Exhausted` are
/// definitive for collapsibility; `OutOfBudget` means the search space was
/// not exhausted, so nothing is known.
enum class CollapseStatus { Collapsed, Exhausted, OutOfBudget };

struct CollapseResult {
    CollapseStatus status = CollapseStatus::OutOfBudget;
    std::vector<std::pair<Simplex, Simplex>> log;  // (free face, its unique coface)
};

namespace detail {

using FaceSet = std::set<Simplex, SimplexOrder>;

/// Free pairs of the current face set: faces with exactly one proper coface,
/// ordered by (dimension descending, lex) for deterministic search.
inline std::vector<std::pair<Simplex, Simplex>> free_pairs(const FaceSet& faces) {
    std::vector<std::pair<Simplex, Simplex>> out;
    for (const auto& s : faces) {
        const Simplex* coface = nullptr;
        int count = 0;
        for (const auto& t : faces) {
            if (t.size() <= s.size()) continue;
            if (subset_of(s, t)) {
                coface = &t;
                if (++count > 1) break;
            }
        }
        if (count == 1) out.emplace_back(s, *coface);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return out;
}

enum class SearchVerdict { Success, Fail, Truncated };

struct CollapseSearch {
    long long budget;
    std::set<FaceSet> dead;
    std::vector<std::pair<Simplex, Simplex>> log;

    SearchVerdict run(const FaceSet& faces) {
        if (faces.size() == 1 && faces.begin()->size() == 1)
            return SearchVerdict::Success;  // a single vertex
        if (budget-- <= 0) return SearchVerdict::Truncated;
        if (dead.count(faces)) return SearchVerdict::Fail;

        bool truncated = false;
        for (const auto& [s, t] : free_pairs(faces)) {
            FaceSet next = faces;
            next.erase(s);
            next.erase(t);
            log.emplace_back(s, t);
            switch (run(next)) {
                case SearchVerdict::Success: return SearchVerdict::Success;
                case SearchVerdict::Truncated: truncated = true; break;
                case SearchVerdict::Fail: break;
            }
            log.pop_back();
        }
        if (truncated) return SearchVerdict::Truncated;
        // Memoize only definite failures; truncated subtrees may still hide
        // a collapse sequence.
        dead.insert(faces);
        return SearchVerdict::Fail;
    }
};

}  // namespace detail

/// Tries to reduce K to a point by elementary collapses (remove a free face
/// together with its unique coface), depth-first with backtracking. The
/// budget bounds the number of search nodes expanded.
inline CollapseResult collapse(const SimplicialComplex& k, long long budget = 1'000'000) {
    if (k.is_empty_space())
        return {CollapseStatus::Exhausted, {}};
    detail::FaceSet faces;
    for (const auto& s : k.faces())
        if (!s.empty()) faces.insert(s);

    detail::CollapseSearch search{budget, {}, {}};
    switch (search.run(faces)) {
        case detail::SearchVerdict::Success:
            return {CollapseStatus::Collapsed, std::move(search.log)};
        case detail::SearchVerdict::Truncated:
            return {CollapseStatus::OutOfBudget, {}};
        case detail::SearchVerdict::Fail:
            break;
    }
    return {CollapseStatus::Exhausted, {}};
}

enum class FillOutcome { Fillable, NotShown, TriviallyContractible };

inline std::string to_string(FillOutcome o) {
    switch (o) {
        case FillOutcome::Fillable: return "fillable";
        case FillOutcome::NotShown: return "not_shown";
        case FillOutcome::TriviallyContractible: return "trivially_contractible";
    }
    return "?";
}

/// A filling: missing faces whose addition makes the complex collapsible.
/// `search_exhausted` distinguishes a definitive NotShown (every subset of
/// missing faces tried, none collapsed) from a budget-limited one.
struct FillWitness {
    std::vector<Simplex> added_missing_faces;
    FillOutcome outcome = FillOutcome::NotShown;
    bool search_exhausted = false;
};

/// Searches subsets of missing_faces(K), smallest first (then lex), for one
/// whose addition makes K collapsible. Collapsibility certifies
/// contractibility, so a hit certifies fillability; NotShown is inconclusive
/// unless search_exhausted is set.
inline FillWitness is_fillable(const SimplicialComplex& k, long long budget = 1'000'000) {
    if (k.is_empty_space())
        throw std::invalid_argument("is_fillable: empty complex");

    const std::vector<Simplex> missing = missing_faces(k);
    FillWitness result;
    result.search_exhausted = true;

    const std::size_t n = missing.size();
    auto try_subset = [&](const std::vector<std::size_t>& picked) -> bool {
        std::vector<Simplex> facets = k.facets();
        for (std::size_t i : picked) facets.push_back(missing[i]);
        auto filled = SimplicialComplex::from_facets(std::move(facets));
        CollapseResult c = collapse(filled, budget);
        if (c.status == CollapseStatus::Collapsed) {
            for (std::size_t i : picked) result.added_missing_faces.push_back(missing[i]);
            result.outcome = picked.empty() ? FillOutcome::TriviallyContractible
                                            : FillOutcome::Fillable;
            return true;
        }
        if (c.status == CollapseStatus::OutOfBudget) result.search_exhausted = false;
        return false;
    };

    for (std::size_t size = 0; size <= n; ++size) {
        bool found = false;
        std::vector<std::size_t> picked(size);
        auto choose = [&](auto&& self, std::size_t pos, std::size_t start) -> bool {
            if (pos == size) return try_subset(picked);
            for (std::size_t i = start; i + (size - pos) <= n; ++i) {
                picked[pos] = i;
                if (self(self, pos + 1, i + 1)) return true;
            }
            return false;
        };
        found = choose(choose, 0, 0);
        if (found) return result;
    }
    result.outcome = FillOutcome::NotShown;
    return result;
}

}  // namespace mac
