#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <random>
#include <string>
#include <vector>

#include "mac/integer_matrix.hpp"
#include "mac/simplicial_complex.hpp"

namespace mactest {

inline std::string fixture_path(const std::string& name) {
    return std::string(MAC_FIXTURE_DIR) + "/" + name;
}

inline mac::Simplex S(const std::string& digits) {
    mac::Simplex out;
    for (char c : digits) out.push_back(c - '0');
    return mac::make_simplex(std::move(out));
}

inline std::vector<mac::Simplex> facet_list(std::initializer_list<const char*> names) {
    std::vector<mac::Simplex> out;
    for (const char* n : names) out.push_back(S(n));
    return out;
}

/// The fixture complex: boundary of the 4-polytope with 8 vertices and 18
/// facets whose moment-angle manifold the verifier is about.
inline mac::SimplicialComplex p8_28() {
    return mac::build_complex(facet_list({"1245", "1246", "1257", "1267", "1357", "1367",
                                          "2347", "2367", "2457", "3457", "1458", "1468",
                                          "1358", "1368", "2348", "2368", "2468", "3458"}));
}

/// Minimal 6-vertex triangulation of the real projective plane; the smallest
/// complex with torsion (H~1 = Z/2).
inline mac::SimplicialComplex projective_plane() {
    return mac::build_complex(facet_list(
        {"123", "124", "135", "146", "156", "236", "245", "256", "345", "346"}));
}

/// Random small complex on labels {base, ..., base+span-1}.
inline mac::SimplicialComplex random_complex(std::mt19937& rng, int base = 1, int span = 4) {
    std::uniform_int_distribution<int> facet_count(1, 4);
    std::uniform_int_distribution<int> label(base, base + span - 1);
    std::uniform_int_distribution<int> size(1, span);
    std::vector<mac::Simplex> facets;
    const int n = facet_count(rng);
    for (int i = 0; i < n; ++i) {
        std::set<int> f;
        const int s = size(rng);
        while (static_cast<int>(f.size()) < s) f.insert(label(rng));
        facets.emplace_back(f.begin(), f.end());
    }
    return mac::build_complex(std::move(facets));
}

// ---- independent linear-algebra oracles (not the Smith reduction path) ----

/// Determinant by fraction-free (Bareiss) elimination.
inline mac::Integer determinant_oracle(const mac::IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    std::vector<std::vector<mac::Integer>> m(n, std::vector<mac::Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a.at(i, j);

    mac::Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Rank by Gaussian elimination over the rationals.
inline int rank_oracle(const mac::IntegerMatrix& a) {
    using Rational = boost::multiprecision::cpp_rational;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = Rational(a.at(i, j));

    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++rank;
        ++row;
    }
    return rank;
}

inline mac::IntegerMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                        int max_abs = 9) {
    std::uniform_int_distribution<int> entry(-max_abs, max_abs);
    mac::IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    return m;
}

}  // namespace mactest
