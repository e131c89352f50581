#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <ostream>
#include <string>
#include <utility>

namespace gpp {

// Arbitrary-precision nonnegative integer. Set counts and coefficient scans
// (e.g. C(200,100)*4^100) overflow any fixed width, so everything that holds
// a coefficient holds one of these. There is deliberately no operator-:
// callers compare first and phrase the logic so no negative value can arise.
class BigNat {
public:
    BigNat() = default;
    BigNat(unsigned long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return v_.is_zero(); }

    BigNat& operator+=(const BigNat& o) {
        v_ += o.v_;
        return *this;
    }
    BigNat& operator*=(const BigNat& o) {
        v_ *= o.v_;
        return *this;
    }

    // Exact division by a small factor; quotient must be integral.
    // Used by the multiplicative binomial recurrence, where it always is.
    BigNat& div_exact(unsigned long long d) {
        assert(d != 0 && v_ % d == 0);
        v_ /= d;
        return *this;
    }

    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
    friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }

    friend bool operator==(const BigNat& a, const BigNat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigNat& a, const BigNat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigNat& a, const BigNat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigNat& a, const BigNat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigNat& a, const BigNat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigNat& a, const BigNat& b) { return a.v_ >= b.v_; }

    std::string str() const { return v_.str(); }

    friend std::ostream& operator<<(std::ostream& os, const BigNat& x) {
        return os << x.v_;
    }

private:
    boost::multiprecision::cpp_int v_;
};

inline BigNat nat_pow(unsigned long long base, unsigned exp) {
    BigNat r = 1;
    BigNat b = base;
    for (unsigned i = 0; i < exp; ++i) r *= b;
    return r;
}

}  // namespace gpp
