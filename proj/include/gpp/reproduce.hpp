#pragma once

#include <string>
#include <vector>

#include "gpp/enumerator.hpp"

namespace gpp {

// One reproduction check: a reference polynomial or verdict evaluated and
// compared against what the toolkit computes.
struct ReproItem {
    std::string id;
    int criterion = 0;  // 1..6
    bool pass = false;
    std::string detail;
};

struct ReproReport {
    std::vector<ReproItem> items;
    bool all_pass = true;
};

// Runs every reference check; `only` keeps items whose id contains it.
// Self-contained: needs no files.
ReproReport run_reproduction(const std::string& only = "",
                             const EnumeratorOptions& opt = {});

// Every simple graph on at most 5 vertices, one representative per
// isomorphism class (52 graphs), as graph6 lines. Externally generated and
// embedded so batch-style screening needs no input file.
const std::vector<std::string>& corpus_graphs_le5();

}  // namespace gpp
