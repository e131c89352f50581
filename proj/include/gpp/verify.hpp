#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpp/bignat.hpp"
#include "gpp/enumerator.hpp"
#include "gpp/families.hpp"
#include "gpp/polynomial.hpp"
#include "gpp/sequence.hpp"

namespace gpp {

// A closed form checked against the brute-force enumerator on one instance.
struct FirstDiff {
    std::size_t k = 0;
    BigNat formula_value;
    BigNat oracle_value;
};

struct VerificationRecord {
    FamilySpec spec;
    GpPolynomial formula_poly;
    GpPolynomial oracle_poly;
    bool match = false;
    std::optional<FirstDiff> first_diff;
    bool skipped = false;
    std::string skip_reason;
    // Rows checking the superseded formula expect a mismatch whose first
    // difference sits at k = 3.
    bool expect_mismatch = false;

    bool ok() const {
        if (skipped) return true;
        if (expect_mismatch) return !match && first_diff && first_diff->k == 3;
        return match;
    }
};

struct GridOptions {
    int multipartite_total_max = 10;
    int balanced_r_max = 3;
    int balanced_t_max = 3;
    int broom_s_max = 8;
    int broom_r_max = 6;
    int comb_n_max = 7;
    std::vector<int> kneser_ns = {5, 6};
    int tstar_product_max = 16;
    int corona_order_max = 6;
    int disjoint_samples = 12;
    unsigned seed = 20240601;
    // When set, the tstar-legacy grid checks just this instance.
    std::optional<int> only_r;
    std::optional<int> only_a;
    EnumeratorOptions enumerator;
};

// Grids: multipartite, balanced, broom, comb, kneser2, tstar, tstar-legacy,
// corona, disjoint. "all" concatenates every grid.
std::vector<VerificationRecord> verify_grid(const std::string& grid,
                                            const GridOptions& opt = {});
const std::vector<std::string>& known_grids();

// Per-line batch report over newline-delimited graph6 input.
struct BatchRow {
    std::size_t line_no = 0;
    std::string graph6;
    std::string parse_error;  // nonempty: the line did not decode

    bool enumerated = false;
    std::string skip_reason;  // budget refusals
    GpPolynomial psi;
    SequenceReport psi_report;

    bool corona_enumerated = false;
    std::string corona_skip_reason;
    GpPolynomial corona_psi;
    SequenceReport corona_report;

    // ψ(G) unimodal but ψ(G∘K_1) not: the pattern the corona screening hunts.
    bool unimodality_broken_by_corona = false;
};

std::vector<BatchRow> batch_process(const std::vector<std::string>& lines,
                                    const EnumeratorOptions& opt = {});

}  // namespace gpp
