#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpp/families.hpp"
#include "gpp/polynomial.hpp"

namespace gpp {

// A closed-form evaluation: the polynomial, its degree (the gp number), the
// spec it came from, and notes saying which case fired or what to watch for.
struct FormulaResult {
    GpPolynomial poly;
    int gp = 0;
    FamilySpec family;
    std::vector<std::string> notes;
};

FormulaResult psi_complete(int n);                       // (1+x)^n
FormulaResult psi_edgeless(int n);                       // (1+x)^n, every set qualifies
FormulaResult psi_path(int n);                           // 1 + nx + C(n,2)x^2
FormulaResult psi_multipartite(const std::vector<int>& parts);
FormulaResult psi_balanced(int r, int t);                // t parts of size r
FormulaResult psi_broom(int s, int r);
FormulaResult psi_comb(int n);
FormulaResult psi_kneser2(int n);                        // n >= 5
FormulaResult psi_tstar(int r, int a);                   // refuses (2,2); see notes
FormulaResult psi_tstar_legacy(int r, int a);            // superseded formula, kept
                                                         // for discrepancy checks
FormulaResult psi_corona_edgeless(int n);                // (1 + 2x + x^2)^n

// Product over the inputs (empty product = 1).
GpPolynomial psi_disjoint_union(const std::vector<GpPolynomial>& polys);

// Dispatch: the closed form for this spec, or nullopt when none exists
// (cycles, general coronas, file-backed graphs).
std::optional<FormulaResult> closed_form_for(const FamilySpec& spec);

}  // namespace gpp
