#pragma once

#include <iterator>
#include <map>
#include <stdexcept>
#include <string>

namespace mac {

/// Integer polynomial in one variable t, sparse by degree. Used as the
/// additive fingerprint of a space (coefficient of t^i = i-th Betti number).
class PoincarePolynomial {
public:
    PoincarePolynomial() = default;
    explicit PoincarePolynomial(std::map<int, long long> coeffs) : coeffs_(std::move(coeffs)) {
        prune();
    }

    static PoincarePolynomial one() { return PoincarePolynomial(std::map<int, long long>{{0, 1}}); }

    long long coeff(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? 0 : it->second;
    }

    void add(int degree, long long value) {
        coeffs_[degree] += value;
        if (coeffs_[degree] == 0) coeffs_.erase(degree);
    }

    const std::map<int, long long>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    int degree() const {
        if (coeffs_.empty()) throw std::logic_error("degree of zero polynomial");
        return coeffs_.rbegin()->first;
    }

    /// True when coeff(i) == coeff(d - i) for all i.
    bool is_palindromic(int d) const {
        for (const auto& [deg, c] : coeffs_)
            if (coeff(d - deg) != c) return false;
        return true;
    }

    long long evaluate(long long t) const {
        long long total = 0;
        for (const auto& [deg, c] : coeffs_) {
            long long p = 1;
            for (int i = 0; i < deg; ++i) p *= t;
            total += c * p;
        }
        return total;
    }

    friend PoincarePolynomial operator+(const PoincarePolynomial& a, const PoincarePolynomial& b) {
        PoincarePolynomial out = a;
        for (const auto& [deg, c] : b.coeffs_) out.add(deg, c);
        return out;
    }

    friend PoincarePolynomial operator-(const PoincarePolynomial& a, const PoincarePolynomial& b) {
        PoincarePolynomial out = a;
        for (const auto& [deg, c] : b.coeffs_) out.add(deg, -c);
        return out;
    }

    friend PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b) {
        PoincarePolynomial out;
        for (const auto& [da, ca] : a.coeffs_)
            for (const auto& [db, cb] : b.coeffs_)
                out.add(da + db, ca * cb);
        return out;
    }

    friend PoincarePolynomial operator*(long long s, const PoincarePolynomial& p) {
        PoincarePolynomial out;
        for (const auto& [deg, c] : p.coeffs_) out.add(deg, s * c);
        return out;
    }

    friend bool operator==(const PoincarePolynomial& a, const PoincarePolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Renders e.g. "1 + 2t^3 + 8t^5" (ascending degrees, unit coefficients elided).
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (const auto& [deg, c] : coeffs_) {
            if (!out.empty()) out += c < 0 ? " - " : " + ";
            long long mag = (!out.empty() && c < 0) ? -c : c;
            if (deg == 0) {
                out += std::to_string(mag);
            } else {
                if (mag != 1) out += std::to_string(mag);
                out += "t";
                if (deg != 1) out += "^" + std::to_string(deg);
            }
        }
        return out;
    }

private:
    void prune() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
    }

    std::map<int, long long> coeffs_;
};

}  // namespace mac
