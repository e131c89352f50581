#include <random>
#include <vector>

#include "doctest.h"
#include "gpp/closed_forms.hpp"
#include "gpp/errors.hpp"
#include "gpp/sequence.hpp"
#include "test_helpers.hpp"

using namespace gpp;
using gpp::testing::poly_of;

namespace {

std::vector<BigNat> seq_of(std::vector<unsigned long long> v) {
    return std::vector<BigNat>(v.begin(), v.end());
}

// Definitional unimodality: some split index m works.
bool unimodal_by_definition(const std::vector<BigNat>& s) {
    for (std::size_t m = 0; m < s.size(); ++m) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 <= m; ++i) ok = ok && s[i] <= s[i + 1];
        for (std::size_t i = m; i + 1 < s.size(); ++i) ok = ok && s[i] >= s[i + 1];
        if (ok) return true;
    }
    return s.empty();
}

}  // namespace

TEST_CASE("unimodality verdicts on reference sequences") {
    auto [u1, w1] = is_unimodal(seq_of({1, 16, 120, 112, 140, 112, 56, 16, 2}));
    CHECK(!u1);
    CHECK(*w1 == 3);  // 120 > 112 < 140

    auto [u2, w2] = is_unimodal(seq_of({1, 2, 3, 2, 1}));
    CHECK(u2);
    CHECK(!w2.has_value());

    auto [u3, w3] = is_unimodal(seq_of({1, 10, 45, 20, 10, 2}));
    CHECK(u3);

    auto [u4, w4] = is_unimodal(seq_of({5, 3, 3, 4}));
    CHECK(!u4);
    CHECK(*w4 == 2);  // plateau valley, then a rise

    CHECK(is_unimodal({}).first);
    CHECK(is_unimodal(seq_of({7})).first);
    CHECK(is_unimodal(seq_of({3, 1})).first);
}

TEST_CASE("unimodality matches the definitional split check on random data") {
    std::mt19937 rng(333);
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<unsigned long long> val(0, 4);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<BigNat> s(len(rng));
        for (auto& x : s) x = val(rng);
        CHECK(is_unimodal(s).first == unimodal_by_definition(s));
    }
}

TEST_CASE("log-concavity verdicts") {
    auto [lc1, f1] = is_log_concave(seq_of({1, 10, 45, 20, 10, 2}));
    CHECK(!lc1);
    CHECK(f1 == std::vector<std::size_t>{3});  // 400 < 450

    auto [lc2, f2] =
        is_log_concave(seq_of({1, 45, 990, 6630, 9135, 3465, 1050, 360, 90, 10}));
    CHECK(!lc2);
    CHECK(f2 == std::vector<std::size_t>{6});  // 1102500 < 1247400

    CHECK(is_log_concave(seq_of({1, 3, 3, 1})).first);
    CHECK(is_log_concave(seq_of({4})).first);
    CHECK(is_log_concave(seq_of({9, 1})).first);
}

TEST_CASE("internal zeros") {
    CHECK(internal_zeros(seq_of({1, 0, 1})) == std::vector<std::size_t>{1});
    CHECK(internal_zeros(seq_of({1, 2, 0})).empty());
    CHECK(internal_zeros(seq_of({0, 1, 2})).empty());
    CHECK(internal_zeros(seq_of({1, 0, 0, 2, 0, 3})) ==
          std::vector<std::size_t>({1, 2, 4}));
    CHECK(internal_zeros(seq_of({0, 0})).empty());
    for (const auto& poly :
         {psi_broom(9, 5).poly, psi_multipartite({4, 2, 2}).poly, psi_kneser2(8).poly}) {
        CHECK(internal_zeros(poly.coeffs()).empty());
    }
}

TEST_CASE("analyze bundles the verdicts consistently") {
    const SequenceReport broom = analyze(psi_broom(17, 6).poly);
    CHECK(!broom.unimodal);
    CHECK(!broom.log_concave);

    const SequenceReport t73 = analyze(psi_tstar(7, 3).poly);
    CHECK(t73.unimodal);
    CHECK(!t73.log_concave);
    CHECK(t73.lc_failures == std::vector<std::size_t>{4});  // 28224 < 36162

    const SequenceReport k9 = analyze(psi_complete(9).poly);
    CHECK(k9.unimodal);
    CHECK(k9.log_concave);
    REQUIRE(k9.peak_range.has_value());
    CHECK(k9.peak_range->first == 4);
    CHECK(k9.peak_range->second == 5);  // C(9,4) = C(9,5)

    const SequenceReport plateau = analyze(poly_of({1, 3, 3, 1}));
    CHECK(plateau.peak_range->first == 1);
    CHECK(plateau.peak_range->second == 2);
}

TEST_CASE("balanced scans: small part sizes stay log-concave") {
    const auto cells = scan_balanced({1, 4}, {2, 40});
    CHECK(cells.size() == 4 * 39);
    for (const auto& cell : cells) {
        CHECK(cell.report.log_concave);
        CHECK(cell.report.unimodal);
        CHECK(cell.report.internal_zeros.empty());
    }
    CHECK_THROWS_AS(scan_balanced({0, 3}, {2, 5}), InputError);
    CHECK_THROWS_AS(scan_balanced({1, 3}, {1, 5}), InputError);
}

TEST_CASE("balanced scan hits the known bad cells") {
    const auto cells = scan_balanced({5, 8}, {2, 2});
    for (const auto& cell : cells) {
        if (cell.r == 5) {
            CHECK(cell.report.unimodal);
            CHECK(!cell.report.log_concave);
        }
        if (cell.r == 8) {
            CHECK(!cell.report.unimodal);
            CHECK(!cell.report.log_concave);
        }
    }
}

TEST_CASE("broom scans") {
    const ThresholdScan r2 = scan_broom(2, {0, 200});
    CHECK(!r2.first_lc_failure.has_value());
    CHECK(!r2.first_unimodality_failure.has_value());

    const ThresholdScan r5 = scan_broom(5, {0, 200});
    CHECK(!r5.first_unimodality_failure.has_value());

    const ThresholdScan r6 = scan_broom(6, {0, 30});
    REQUIRE(r6.first_unimodality_failure.has_value());
    CHECK(*r6.first_unimodality_failure == 17);

    // First log-concavity failure for r=3 sits at s=12:
    // (1+3s)^2 < C(s+4,2)*s from there on.
    const ThresholdScan r3 = scan_broom(3, {0, 200});
    REQUIRE(r3.first_lc_failure.has_value());
    CHECK(*r3.first_lc_failure == 12);

    // Failures only ever show up at index 3.
    for (int r = 0; r <= 10; ++r) {
        for (const auto& [s, rep] : scan_broom(r, {0, 120}).verdict_per_value) {
            for (std::size_t k : rep.lc_failures) CHECK(k == 3);
        }
    }
}

TEST_CASE("tstar scans reproduce the threshold windows") {
    const ThresholdScan a3 = scan_tstar(3, {3, 30});
    for (const auto& [r, rep] : a3.verdict_per_value) {
        CHECK(rep.log_concave == (r >= 3 && r <= 6));
        CHECK(rep.unimodal == !(r >= 11 && r <= 17));
    }
    REQUIRE(a3.first_lc_failure.has_value());
    CHECK(*a3.first_lc_failure == 7);
    REQUIRE(a3.first_unimodality_failure.has_value());
    CHECK(*a3.first_unimodality_failure == 11);

    const ThresholdScan a2 = scan_tstar(2, {3, 20});
    for (const auto& [m, rep] : a2.verdict_per_value) {
        CHECK(rep.log_concave == (m <= 4));
        CHECK(rep.unimodal == (m != 8));
    }

    CHECK_THROWS_AS(scan_tstar(1, {3, 5}), InputError);
    CHECK_THROWS_AS(scan_tstar(2, {2, 5}), InputError);
}

TEST_CASE("comb polynomials stay log-concave") {
    for (int n = 1; n <= 60; ++n) {
        const SequenceReport rep = analyze(psi_comb(n).poly);
        CHECK(rep.log_concave);
        CHECK(rep.unimodal);
    }
}

TEST_CASE("multipartite gp number equals max of part size and part count") {
    std::mt19937 rng(909);
    std::uniform_int_distribution<int> count(2, 6);
    std::uniform_int_distribution<int> size(1, 9);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<int> parts(count(rng));
        int biggest = 0;
        for (auto& p : parts) {
            p = size(rng);
            biggest = std::max(biggest, p);
        }
        CHECK(psi_multipartite(parts).gp ==
              std::max(biggest, static_cast<int>(parts.size())));
    }
}
