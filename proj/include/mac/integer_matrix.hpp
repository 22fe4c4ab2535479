#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mac {

using Integer = boost::multiprecision::cpp_int;

/// Dense integer matrix with exact arbitrary-precision entries, row-major.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("entry count must equal rows*cols");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        for (const auto& e : data_)
            if (e != 0) return false;
        return true;
    }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
        IntegerMatrix out(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a.at(i, k) == 0) continue;
                for (std::size_t j = 0; j < b.cols(); ++j)
                    out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

struct SmithResult {
    std::vector<Integer> invariant_factors;  // d1 | d2 | ... | dr, all positive
    int rank = 0;
};

/// Smith normal form over the integers by unimodular row/column operations.
///
/// Pivot selection takes the minimum nonzero absolute value of the trailing
/// submatrix, which keeps entry growth small on incidence-type matrices. After
/// clearing a pivot's row and column, any trailing entry not divisible by the
/// pivot is folded into the pivot row and the elimination repeats, so the
/// divisibility chain holds by construction.
inline SmithResult smith_normal_form(IntegerMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithResult result;
    std::size_t t = 0;

    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(r1, j), a.at(r2, j));
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        if (c1 == c2) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(a.at(i, c1), a.at(i, c2));
    };

    while (t < m && t < n) {
        // Locate minimal nonzero |entry| in the trailing submatrix.
        bool found = false;
        std::size_t pi = t, pj = t;
        Integer best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (a.at(i, j) == 0) continue;
                Integer mag = abs(a.at(i, j));
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a.at(i, t) == 0) continue;
                Integer q = a.at(i, t) / a.at(t, t);  // truncated: |remainder| < |pivot|
                if (q != 0)
                    for (std::size_t j = t; j < n; ++j) a.at(i, j) -= q * a.at(t, j);
                if (a.at(i, t) != 0) {
                    swap_rows(t, i);
                    settled = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0) continue;
                Integer q = a.at(t, j) / a.at(t, t);
                if (q != 0)
                    for (std::size_t i = t; i < m; ++i) a.at(i, j) -= q * a.at(i, t);
                if (a.at(t, j) != 0) {
                    swap_cols(t, j);
                    settled = false;
                }
            }
            if (!settled) continue;

            for (std::size_t i = t + 1; i < m && settled; ++i)
                for (std::size_t j = t + 1; j < n && settled; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        for (std::size_t jj = t; jj < n; ++jj) a.at(t, jj) += a.at(i, jj);
                        settled = false;
                    }
        }

        result.invariant_factors.push_back(abs(a.at(t, t)));
        ++t;
    }
    result.rank = static_cast<int>(result.invariant_factors.size());
    return result;
}

}  // namespace mac
