#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gpp/bignat.hpp"

namespace gpp {

// Dense coefficient sequence (alpha_0..alpha_d); alpha_k counts general
// position sets of size k. Trailing zeros are trimmed on construction so
// degree() equals the gp number of the originating graph.
class GpPolynomial {
public:
    GpPolynomial() : coeffs_{BigNat(1)} {}  // the empty-product polynomial 1
    explicit GpPolynomial(std::vector<BigNat> coeffs) : coeffs_(std::move(coeffs)) {
        while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
        if (coeffs_.empty()) coeffs_.push_back(BigNat(0));
    }

    std::size_t degree() const { return coeffs_.size() - 1; }
    std::size_t size() const { return coeffs_.size(); }

    const BigNat& operator[](std::size_t k) const {
        static const BigNat zero = 0;
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }

    const std::vector<BigNat>& coeffs() const { return coeffs_; }

    friend bool operator==(const GpPolynomial& a, const GpPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const GpPolynomial& a, const GpPolynomial& b) {
        return !(a == b);
    }

    friend GpPolynomial operator*(const GpPolynomial& a, const GpPolynomial& b) {
        std::vector<BigNat> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigNat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return GpPolynomial(std::move(c));
    }

    GpPolynomial pow(unsigned n) const {
        GpPolynomial result;  // 1
        GpPolynomial base = *this;
        while (n > 0) {
            if (n & 1u) result = result * base;
            n >>= 1u;
            if (n > 0) base = base * base;
        }
        return result;
    }

    // Ascending-power rendering: "1 + 16x + 120x^2 + ...".
    std::string str() const {
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k].is_zero() && coeffs_.size() > 1) continue;
            if (!out.empty()) out += " + ";
            if (k == 0) {
                out += coeffs_[k].str();
            } else {
                if (coeffs_[k] != BigNat(1)) out += coeffs_[k].str();
                out += "x";
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

    // Coefficients as decimal strings (they routinely exceed 64 bits).
    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const auto& c : coeffs_) out.push_back(c.str());
        return out;
    }

private:
    std::vector<BigNat> coeffs_;
};

inline GpPolynomial poly_mul(const GpPolynomial& a, const GpPolynomial& b) { return a * b; }
inline GpPolynomial poly_pow(const GpPolynomial& p, unsigned n) { return p.pow(n); }

}  // namespace gpp
