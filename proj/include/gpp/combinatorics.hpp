#pragma once

#include <cstddef>
#include <vector>

#include "gpp/bignat.hpp"

namespace gpp {

// C(n,k), with C(n,k) = 0 for k < 0 or k > n. The multiplicative recurrence
// res = res*(n-k+i)/i keeps every intermediate integral.
inline BigNat binom(unsigned long long n, long long k) {
    if (k < 0 || static_cast<unsigned long long>(k) > n) return 0;
    auto kk = static_cast<unsigned long long>(k);
    if (kk > n - kk) kk = n - kk;
    BigNat res = 1;
    for (unsigned long long i = 1; i <= kk; ++i) {
        res *= n - kk + i;
        res.div_exact(i);
    }
    return res;
}

inline BigNat factorial(unsigned n) {
    BigNat res = 1;
    for (unsigned i = 2; i <= n; ++i) res *= i;
    return res;
}

// e_0..e_kmax over the multiset `values`, by the prefix recurrence
// e_k(v_1..v_t) = e_k(v_1..v_{t-1}) + v_t * e_{k-1}(v_1..v_{t-1}).
inline std::vector<BigNat> elem_sym_all(const std::vector<unsigned long long>& values,
                                        std::size_t kmax) {
    std::vector<BigNat> e(kmax + 1, BigNat(0));
    e[0] = 1;
    std::size_t used = 0;
    for (unsigned long long v : values) {
        ++used;
        std::size_t top = used < kmax ? used : kmax;
        for (std::size_t k = top; k >= 1; --k) {
            e[k] += BigNat(v) * e[k - 1];
        }
    }
    return e;
}

inline BigNat elem_sym(const std::vector<unsigned long long>& values, std::size_t k) {
    if (k > values.size()) return 0;
    return elem_sym_all(values, k)[k];
}

}  // namespace gpp
