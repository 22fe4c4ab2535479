#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "poincare.hpp"

namespace mac {

/// A product of spheres S^{d1} x ... x S^{dn}, recorded by its dimensions.
struct SphereProduct {
    std::vector<int> dims;

    explicit SphereProduct(std::vector<int> ds) : dims(std::move(ds)) {
        if (dims.empty()) throw std::invalid_argument("sphere product needs at least one factor");
        for (int d : dims)
            if (d < 1) throw std::invalid_argument("sphere dimensions must be >= 1");
        std::sort(dims.begin(), dims.end());
    }

    int total_dimension() const {
        int t = 0;
        for (int d : dims) t += d;
        return t;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (i) out += "x";
            out += "S^" + std::to_string(dims[i]);
        }
        return out;
    }
};

/// Kuenneth for sphere factors: the product of (1 + t^d) over the dimensions.
inline PoincarePolynomial product_poincare(const SphereProduct& p) {
    PoincarePolynomial out = PoincarePolynomial::one();
    for (int d : p.dims) {
        PoincarePolynomial factor;
        factor.add(0, 1);
        factor.add(d, 1);
        out = out * factor;
    }
    return out;
}

/// A connected sum of sphere products of one common total dimension.
struct ConnectedSumSpec {
    std::vector<std::pair<SphereProduct, long long>> summands;  // (product, multiplicity)

    int total_dimension() const {
        if (summands.empty()) throw std::logic_error("empty connected-sum spec");
        return summands.front().first.total_dimension();
    }

    long long summand_count() const {
        long long n = 0;
        for (const auto& [p, mult] : summands) n += mult;
        return n;
    }

    std::string to_string() const {
        std::string out;
        for (const auto& [p, mult] : summands) {
            if (!out.empty()) out += " # ";
            out += "(" + p.to_string() + ")";
            if (mult != 1) out += "#" + std::to_string(mult);
        }
        return out;
    }
};

/// Betti numbers of a connected sum of simply connected sphere products:
/// middle-degree ranks add; degree 0 and d each stay rank one. Products with
/// an S^1 factor are rejected since the rule needs simple connectivity.
inline PoincarePolynomial connected_sum_poincare(const ConnectedSumSpec& spec) {
    if (spec.summands.empty()) throw std::invalid_argument("empty connected-sum spec");
    const int d = spec.total_dimension();
    if (d < 2) throw std::invalid_argument("connected sum needs dimension >= 2");

    PoincarePolynomial total;
    long long n = 0;
    for (const auto& [product, mult] : spec.summands) {
        if (mult < 1) throw std::invalid_argument("multiplicities must be >= 1");
        if (product.total_dimension() != d)
            throw std::invalid_argument("summand dimension mismatch in connected sum");
        if (product.dims.front() < 2)
            throw std::invalid_argument("connected-sum rule requires all sphere factors of dim >= 2");
        total = total + mult * product_poincare(product);
        n += mult;
    }
    PoincarePolynomial overlap;
    overlap.add(0, n - 1);
    overlap.add(d, n - 1);
    return total - overlap;
}

/// The closed-form decomposition for the boundary sphere of a stacked
/// polytope built from the k-simplex by cutting ell > 0 vertices:
///   #_{j=1..ell} (S^{j+2} x S^{2k+ell-j-1})^{# j*C(ell+1, j+1)}.
/// ell = 0 is rejected: the moment-angle manifold is then the single sphere
/// S^{2k+1} and there is no connected-sum decomposition to return.
inline ConnectedSumSpec stacked_connected_sum(int k, int ell) {
    if (k < 2) throw std::invalid_argument("stacked_connected_sum: k must be >= 2");
    if (ell == 0)
        throw std::domain_error("stacked_connected_sum: ell = 0 gives the sphere S^" +
                                std::to_string(2 * k + 1) + ", not a connected sum");
    if (ell < 0) throw std::invalid_argument("stacked_connected_sum: ell must be >= 0");

    auto binomial = [](int n, int r) -> long long {
        if (r < 0 || r > n) return 0;
        long long num = 1;
        for (int i = 1; i <= r; ++i) num = num * (n - r + i) / i;
        return num;
    };

    ConnectedSumSpec spec;
    for (int j = 1; j <= ell; ++j) {
        long long mult = static_cast<long long>(j) * binomial(ell + 1, j + 1);
        if (mult == 0) continue;
        spec.summands.emplace_back(SphereProduct({j + 2, 2 * k + ell - j - 1}), mult);
    }
    return spec;
}

/// Reduced Betti sum of a wedge: 1 + sum of multiplicity * (poly - 1).
/// Every summand polynomial must have constant term 1.
inline PoincarePolynomial wedge_poincare(
    const std::vector<std::pair<PoincarePolynomial, long long>>& summands) {
    PoincarePolynomial out = PoincarePolynomial::one();
    for (const auto& [p, mult] : summands) {
        if (p.coeff(0) != 1)
            throw std::invalid_argument("wedge summand polynomial must have constant term 1");
        out = out + mult * (p - PoincarePolynomial::one());
    }
    return out;
}

}  // namespace mac
