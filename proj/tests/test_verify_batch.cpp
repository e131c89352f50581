#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gpp/closed_forms.hpp"
#include "gpp/errors.hpp"
#include "gpp/formats.hpp"
#include "gpp/reproduce.hpp"
#include "gpp/verify.hpp"
#include "test_helpers.hpp"

using namespace gpp;
using gpp::testing::poly_of;

TEST_CASE("multipartite grid agrees everywhere") {
    GridOptions opt;
    opt.multipartite_total_max = 8;
    const auto records = verify_grid("multipartite", opt);
    CHECK(records.size() > 10);
    for (const auto& rec : records) {
        CHECK(rec.ok());
        CHECK(rec.match);
        CHECK(!rec.skipped);
    }
}

TEST_CASE("legacy grid: a single pinned instance") {
    GridOptions opt;
    opt.only_r = 3;
    opt.only_a = 2;
    const auto records = verify_grid("tstar-legacy", opt);
    REQUIRE(records.size() == 1);
    const VerificationRecord& rec = records[0];
    CHECK(rec.ok());
    CHECK(!rec.match);
    REQUIRE(rec.first_diff.has_value());
    CHECK(rec.first_diff->k == 3);
    CHECK(rec.first_diff->formula_value == BigNat(14));
    CHECK(rec.first_diff->oracle_value == BigNat(2));
}

TEST_CASE("legacy grid over the default window") {
    GridOptions opt;
    opt.tstar_product_max = 12;
    for (const auto& rec : verify_grid("tstar-legacy", opt)) {
        CHECK(rec.ok());
        const int r = rec.spec.params[0];
        const int a = rec.spec.params[1];
        if (std::min(r, a) == 1 || (r == 2 && a == 2)) {
            CHECK(rec.match);
        } else {
            CHECK(!rec.match);
            REQUIRE(rec.first_diff.has_value());
            CHECK(rec.first_diff->k == 3);
        }
    }
}

TEST_CASE("tstar grid skips (2,2) and matches elsewhere") {
    GridOptions opt;
    opt.tstar_product_max = 9;
    bool saw_skip = false;
    for (const auto& rec : verify_grid("tstar", opt)) {
        if (rec.skipped) {
            saw_skip = true;
            CHECK(rec.spec.params == std::vector<int>{2, 2});
        } else {
            CHECK(rec.match);
        }
    }
    CHECK(saw_skip);
}

TEST_CASE("corona and disjoint grids") {
    GridOptions opt;
    opt.corona_order_max = 5;
    opt.disjoint_samples = 6;
    for (const auto& rec : verify_grid("corona", opt)) {
        CHECK(rec.match);
    }
    for (const auto& rec : verify_grid("disjoint", opt)) {
        CHECK(rec.match);
    }
}

TEST_CASE("oracle budget marks records skipped instead of failing") {
    GridOptions opt;
    opt.comb_n_max = 7;
    opt.enumerator.vertex_budget = 10;  // combs beyond n=5 have 2n > 10
    const auto records = verify_grid("comb", opt);
    REQUIRE(records.size() == 7);
    int skipped = 0;
    for (const auto& rec : records) {
        CHECK(rec.ok());
        if (rec.skipped) ++skipped;
    }
    CHECK(skipped == 2);
}

TEST_CASE("unknown grid is an input error") {
    CHECK_THROWS_AS(verify_grid("pentagon"), InputError);
}

TEST_CASE("user-supplied parameter files drive the verifier") {
    const std::string path = "verify_params_test.txt";
    {
        std::ofstream out(path);
        out << "# instances to check\n"
            << "broom:3:4\n"
            << "comb:3\n"
            << "cycle:5\n"
            << "\n"
            << "tstar:3:3\n";
    }
    const auto records = verify_grid(path);
    REQUIRE(records.size() == 4);
    CHECK(records[0].match);
    CHECK(records[1].match);
    CHECK(records[2].skipped);  // no closed form for cycles
    CHECK(records[3].match);
    for (const auto& rec : records) CHECK(rec.ok());
    std::remove(path.c_str());

    {
        std::ofstream out(path);
        out << "broom:oops\n";
    }
    CHECK_THROWS_AS(verify_grid(path), InputError);
    std::remove(path.c_str());
}

TEST_CASE("batch processing") {
    const std::string c6 = encode_graph6(build(FamilySpec::cycle(6)));
    const std::vector<std::string> lines = {"A_", "", "!!!not-graph6!!!", c6};
    const auto rows = batch_process(lines);
    REQUIRE(rows.size() == 3);  // blank line skipped

    CHECK(rows[0].line_no == 1);
    CHECK(rows[0].psi == poly_of({1, 2, 1}));
    CHECK(rows[0].psi_report.unimodal);

    CHECK(rows[1].line_no == 3);
    CHECK(!rows[1].parse_error.empty());

    CHECK(rows[2].line_no == 4);
    CHECK(rows[2].psi == poly_of({1, 6, 15, 2}));
    CHECK(rows[2].psi_report.log_concave);
    CHECK(rows[2].corona_enumerated);
    CHECK(rows[2].corona_psi == poly_of({1, 12, 66, 88, 39, 6, 1}));
    CHECK(!rows[2].corona_report.log_concave);
    CHECK(!rows[2].unimodality_broken_by_corona);
}

TEST_CASE("batch output does not depend on the thread count") {
    std::vector<std::string> lines = corpus_graphs_le5();
    EnumeratorOptions one;
    one.threads = 1;
    EnumeratorOptions two;
    two.threads = 2;
    const auto a = batch_process(lines, one);
    const auto b = batch_process(lines, two);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].graph6 == b[i].graph6);
        CHECK(a[i].psi == b[i].psi);
        CHECK(a[i].corona_psi == b[i].corona_psi);
        CHECK(a[i].psi_report.unimodal == b[i].psi_report.unimodal);
        CHECK(a[i].psi_report.lc_failures == b[i].psi_report.lc_failures);
        CHECK(a[i].unimodality_broken_by_corona == b[i].unimodality_broken_by_corona);
    }
}

TEST_CASE("batch respects budgets with per-row refusals") {
    EnumeratorOptions opt;
    opt.vertex_budget = 4;
    const std::string c6 = encode_graph6(build(FamilySpec::cycle(6)));
    const auto rows = batch_process({"A_", c6}, opt);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].enumerated);
    CHECK(rows[0].corona_enumerated);  // the K_2 corona has exactly 4 vertices
    CHECK(!rows[1].enumerated);
    CHECK(!rows[1].skip_reason.empty());
}

TEST_CASE("embedded small-graph corpus is intact") {
    const auto& corpus = corpus_graphs_le5();
    CHECK(corpus.size() == 52);
    int per_order[6] = {0, 0, 0, 0, 0, 0};
    for (const auto& line : corpus) {
        const Graph g = parse_graph6(line);
        REQUIRE(g.order() >= 1);
        REQUIRE(g.order() <= 5);
        ++per_order[g.order()];
        CHECK(encode_graph6(g) == line);
    }
    CHECK(per_order[1] == 1);
    CHECK(per_order[2] == 2);
    CHECK(per_order[3] == 4);
    CHECK(per_order[4] == 11);
    CHECK(per_order[5] == 34);
}

TEST_CASE("targeted reproduction runs") {
    const ReproReport k88 = run_reproduction("K88");
    CHECK(k88.all_pass);
    CHECK(k88.items.size() >= 2);  // the polynomial and its verdict

    const ReproReport c6 = run_reproduction("C6corona");
    CHECK(c6.all_pass);
    bool saw_poly = false;
    for (const auto& item : c6.items) {
        if (item.id == "C6corona") saw_poly = true;
        CHECK((item.criterion >= 1 && item.criterion <= 6));
    }
    CHECK(saw_poly);
}
