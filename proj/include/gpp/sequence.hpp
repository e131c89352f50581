#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpp/bignat.hpp"
#include "gpp/polynomial.hpp"

namespace gpp {

// Shape verdicts for one coefficient sequence. A sequence is unimodal when it
// rises (weakly) to a peak and then falls (weakly); log-concave when
// b_k^2 >= b_{k-1} b_{k+1} at every interior index. Sequences of length <= 2
// satisfy both vacuously.
struct SequenceReport {
    std::size_t length = 0;
    bool unimodal = true;
    // Closed index range of the maximum-value plateau; present when unimodal.
    std::optional<std::pair<std::size_t, std::size_t>> peak_range;
    // Valley where the first offending rise starts: smallest k with
    // seq[k] < seq[k+1] after a strict descent. Present iff not unimodal.
    std::optional<std::size_t> unimodality_witness;
    bool log_concave = true;
    std::vector<std::size_t> lc_failures;   // all k with seq[k]^2 < seq[k-1]*seq[k+1]
    std::vector<std::size_t> internal_zeros;
};

std::pair<bool, std::optional<std::size_t>> is_unimodal(const std::vector<BigNat>& seq);
std::pair<bool, std::vector<std::size_t>> is_log_concave(const std::vector<BigNat>& seq);
std::vector<std::size_t> internal_zeros(const std::vector<BigNat>& seq);

// Bundles the three checks over coefficients 0..degree. Log-concave with no
// internal zeros must come out unimodal; analyze() asserts that implication.
SequenceReport analyze(const GpPolynomial& poly);

// One swept parameter with per-value verdicts and the first observed
// failures. The scan reports observed minima only; whether they are minimal
// beyond the scanned range is not decided here.
struct ThresholdScan {
    std::string family;
    std::map<std::string, int> fixed_params;
    std::string swept_param;
    std::pair<int, int> range;  // inclusive
    std::vector<std::pair<int, SequenceReport>> verdict_per_value;
    std::optional<int> first_lc_failure;
    std::optional<int> first_unimodality_failure;
};

struct BalancedCell {
    int r = 0;
    int t = 0;
    SequenceReport report;
};

// Per-(r,t) reports over inclusive ranges; r >= 1, t >= 2 throughout.
std::vector<BalancedCell> scan_balanced(std::pair<int, int> r_range,
                                        std::pair<int, int> t_range);

// Brooms B_{s,r} for fixed r, s swept over the inclusive range.
ThresholdScan scan_broom(int r, std::pair<int, int> s_range);

// T*(r,a) for fixed a >= 2, r swept over the inclusive range.
ThresholdScan scan_tstar(int a, std::pair<int, int> r_range);

}  // namespace gpp
