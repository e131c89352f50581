#include "gpp/sequence.hpp"

#include <algorithm>
#include <stdexcept>

#include "gpp/closed_forms.hpp"
#include "gpp/errors.hpp"

namespace gpp {

std::pair<bool, std::optional<std::size_t>> is_unimodal(const std::vector<BigNat>& seq) {
    bool descended = false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (seq[i] < seq[i + 1]) {
            if (descended) return {false, i};  // valley: the offending rise starts here
        } else if (seq[i] > seq[i + 1]) {
            descended = true;
        }
    }
    return {true, std::nullopt};
}

std::pair<bool, std::vector<std::size_t>> is_log_concave(const std::vector<BigNat>& seq) {
    std::vector<std::size_t> failures;
    for (std::size_t k = 1; k + 1 < seq.size(); ++k) {
        if (seq[k] * seq[k] < seq[k - 1] * seq[k + 1]) failures.push_back(k);
    }
    return {failures.empty(), failures};
}

std::vector<std::size_t> internal_zeros(const std::vector<BigNat>& seq) {
    std::vector<std::size_t> zeros;
    std::size_t first_nz = seq.size();
    std::size_t last_nz = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!seq[i].is_zero()) {
            if (first_nz == seq.size()) first_nz = i;
            last_nz = i;
        }
    }
    if (first_nz == seq.size()) return zeros;
    for (std::size_t i = first_nz + 1; i < last_nz; ++i) {
        if (seq[i].is_zero()) zeros.push_back(i);
    }
    return zeros;
}

SequenceReport analyze(const GpPolynomial& poly) {
    const std::vector<BigNat>& seq = poly.coeffs();
    SequenceReport rep;
    rep.length = seq.size();

    auto [uni, witness] = is_unimodal(seq);
    rep.unimodal = uni;
    rep.unimodality_witness = witness;
    if (uni && !seq.empty()) {
        const BigNat& top = *std::max_element(seq.begin(), seq.end());
        std::size_t lo = 0;
        while (seq[lo] != top) ++lo;
        std::size_t hi = seq.size() - 1;
        while (seq[hi] != top) --hi;
        rep.peak_range = {{lo, hi}};
    }

    auto [lc, failures] = is_log_concave(seq);
    rep.log_concave = lc;
    rep.lc_failures = std::move(failures);
    rep.internal_zeros = internal_zeros(seq);

    // Log-concave with no internal zeros forces unimodality.
    if (rep.log_concave && rep.internal_zeros.empty() && !rep.unimodal) {
        throw std::logic_error("sequence analysis inconsistency: log-concave without "
                               "internal zeros but not unimodal");
    }
    return rep;
}

std::vector<BalancedCell> scan_balanced(std::pair<int, int> r_range,
                                        std::pair<int, int> t_range) {
    if (r_range.first < 1 || r_range.first > r_range.second) {
        throw InputError("balanced scan needs 1 <= r_lo <= r_hi");
    }
    if (t_range.first < 2 || t_range.first > t_range.second) {
        throw InputError("balanced scan needs 2 <= t_lo <= t_hi");
    }
    const int nr = r_range.second - r_range.first + 1;
    const int nt = t_range.second - t_range.first + 1;
    std::vector<BalancedCell> cells(static_cast<std::size_t>(nr) * nt);

#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < nr * nt; ++idx) {
        const int r = r_range.first + idx / nt;
        const int t = t_range.first + idx % nt;
        cells[idx] = {r, t, analyze(psi_balanced(r, t).poly)};
    }
    return cells;
}

namespace {

void note_failures(ThresholdScan& scan) {
    for (const auto& [value, report] : scan.verdict_per_value) {
        if (!report.log_concave && !scan.first_lc_failure) scan.first_lc_failure = value;
        if (!report.unimodal && !scan.first_unimodality_failure) {
            scan.first_unimodality_failure = value;
        }
    }
}

}  // namespace

ThresholdScan scan_broom(int r, std::pair<int, int> s_range) {
    if (r < 0) throw InputError("broom scan needs r >= 0");
    if (s_range.first < 0 || s_range.first > s_range.second) {
        throw InputError("broom scan needs 0 <= s_lo <= s_hi");
    }
    ThresholdScan scan;
    scan.family = "broom";
    scan.fixed_params["r"] = r;
    scan.swept_param = "s";
    scan.range = s_range;
    scan.verdict_per_value.resize(s_range.second - s_range.first + 1);

#pragma omp parallel for schedule(dynamic)
    for (int s = s_range.first; s <= s_range.second; ++s) {
        // B_{0,0} degenerates to a single vertex; use the one-vertex path.
        const GpPolynomial poly =
            (s == 0 && r == 0) ? psi_path(1).poly : psi_broom(s, r).poly;
        scan.verdict_per_value[s - s_range.first] = {s, analyze(poly)};
    }
    note_failures(scan);
    return scan;
}

ThresholdScan scan_tstar(int a, std::pair<int, int> r_range) {
    if (a < 2) throw InputError("tstar scan needs a >= 2");
    if (r_range.first < 1 || r_range.first > r_range.second) {
        throw InputError("tstar scan needs 1 <= r_lo <= r_hi");
    }
    if (a == 2 && r_range.first <= 2 && r_range.second >= 2) {
        throw InputError("tstar(2,2) has no closed form; scan r from 3 when a = 2");
    }
    ThresholdScan scan;
    scan.family = "tstar";
    scan.fixed_params["a"] = a;
    scan.swept_param = "r";
    scan.range = r_range;
    scan.verdict_per_value.resize(r_range.second - r_range.first + 1);

#pragma omp parallel for schedule(dynamic)
    for (int r = r_range.first; r <= r_range.second; ++r) {
        scan.verdict_per_value[r - r_range.first] = {r, analyze(psi_tstar(r, a).poly)};
    }
    note_failures(scan);
    return scan;
}

}  // namespace gpp
