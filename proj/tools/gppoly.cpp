// gppoly: general position polynomials of graphs, two ways — closed family
// formulas and a brute-force geodesic enumerator — plus unimodality and
// log-concavity analysis of the coefficient sequences.

#include <omp.h>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gpp/closed_forms.hpp"
#include "gpp/enumerator.hpp"
#include "gpp/errors.hpp"
#include "gpp/families.hpp"
#include "gpp/formats.hpp"
#include "gpp/reproduce.hpp"
#include "gpp/sequence.hpp"
#include "gpp/verify.hpp"
#include "json.hpp"

using nlohmann::ordered_json;
using namespace gpp;

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitRefusal = 3;

struct CliConfig {
    std::string format = "text";
    std::string out_path;
    int vertex_budget = 24;
    unsigned long long node_budget = 100'000'000ULL;
    int parallelism = 0;

    EnumeratorOptions enumerator() const {
        EnumeratorOptions opt;
        opt.vertex_budget = vertex_budget;
        opt.node_budget = node_budget;
        opt.threads = parallelism;
        return opt;
    }
};

// Writes either to stdout or to --out.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw InputError("cannot open output file: " + path);
        }
    }
    std::ostream& out() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::string family_head(const FamilySpec& spec) {
    const std::string full = spec.name();
    return full.substr(0, full.find(':'));
}

ordered_json params_json(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    ordered_json p = ordered_json::object();
    switch (spec.kind) {
        case Kind::Path:
        case Kind::Cycle:
        case Kind::Complete:
        case Kind::Edgeless:
        case Kind::Comb:
        case Kind::Kneser2:
            p["n"] = spec.params[0];
            break;
        case Kind::Multipartite:
            p["parts"] = spec.params;
            break;
        case Kind::Balanced:
            p["r"] = spec.params[0];
            p["t"] = spec.params[1];
            break;
        case Kind::Broom:
            p["s"] = spec.params[0];
            p["r"] = spec.params[1];
            break;
        case Kind::TStar:
            p["r"] = spec.params[0];
            p["a"] = spec.params[1];
            break;
        case Kind::Corona:
            p["inner"] = spec.children[0].name();
            break;
        case Kind::DisjointUnion: {
            std::vector<std::string> names;
            for (const auto& c : spec.children) names.push_back(c.name());
            p["parts"] = names;
            break;
        }
        case Kind::EdgeListFile:
            p["path"] = spec.text;
            break;
        case Kind::Graph6:
            p["graph6"] = spec.text;
            break;
    }
    return p;
}

struct PolyOutput {
    std::string family;
    FamilySpec spec;
    GpPolynomial poly;
    int gp = 0;
    SequenceReport report;
    std::vector<std::string> notes;
};

PolyOutput make_output(std::string family, FamilySpec spec, GpPolynomial poly,
                       std::vector<std::string> notes = {}) {
    PolyOutput out;
    out.family = std::move(family);
    out.spec = std::move(spec);
    out.report = analyze(poly);
    out.gp = static_cast<int>(poly.degree());
    out.poly = std::move(poly);
    out.notes = std::move(notes);
    return out;
}

ordered_json result_json(const PolyOutput& r) {
    ordered_json j;
    j["family"] = r.family;
    j["params"] = params_json(r.spec);
    j["coeffs"] = r.poly.coeff_strings();
    j["gp"] = r.gp;
    j["unimodal"] = r.report.unimodal;
    j["log_concave"] = r.report.log_concave;
    j["lc_failures"] = r.report.lc_failures;
    if (r.report.unimodality_witness) {
        j["witness"] = *r.report.unimodality_witness;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

// Quote a CSV field when it carries a comma (e.g. "multipartite:8,4").
std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ";";
        out += std::to_string(v[i]);
    }
    return out;
}

void print_result(Sink& sink, const CliConfig& cfg, const PolyOutput& r) {
    std::ostream& os = sink.out();
    if (cfg.format == "json") {
        os << result_json(r).dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv") {
        os << "family,params,gp,unimodal,log_concave,lc_failures,witness,coeffs\n";
        os << r.family << "," << csv_field(r.spec.name()) << "," << r.gp << ","
           << (r.report.unimodal ? "true" : "false") << ","
           << (r.report.log_concave ? "true" : "false") << ","
           << join_sizes(r.report.lc_failures) << ",";
        if (r.report.unimodality_witness) os << *r.report.unimodality_witness;
        os << ",";
        const auto strings = r.poly.coeff_strings();
        for (std::size_t i = 0; i < strings.size(); ++i) {
            if (i) os << ";";
            os << strings[i];
        }
        os << "\n";
        return;
    }
    os << "family: " << r.spec.name() << "\n";
    os << "psi: " << r.poly.str() << "\n";
    os << "gp: " << r.gp << "\n";
    os << "unimodal: " << (r.report.unimodal ? "yes" : "no");
    if (r.report.unimodality_witness) {
        os << " (valley at k=" << *r.report.unimodality_witness << ")";
    } else if (r.report.peak_range) {
        os << " (peak at k=" << r.report.peak_range->first;
        if (r.report.peak_range->second != r.report.peak_range->first) {
            os << ".." << r.report.peak_range->second;
        }
        os << ")";
    }
    os << "\n";
    os << "log-concave: " << (r.report.log_concave ? "yes" : "no");
    if (!r.report.lc_failures.empty()) {
        os << " (fails at k=" << join_sizes(r.report.lc_failures) << ")";
    }
    os << "\n";
    for (const auto& note : r.notes) os << "note: " << note << "\n";
}

// ---- poly ------------------------------------------------------------

FormulaResult poly_by_name(const std::string& head, const std::vector<int>& args) {
    auto want = [&](std::size_t n, const char* usage) {
        if (args.size() != n) {
            throw InputError(head + " takes " + std::to_string(n) +
                             " parameter(s): " + usage);
        }
    };
    if (head == "complete") {
        want(1, "poly complete <n>");
        return psi_complete(args[0]);
    }
    if (head == "edgeless") {
        want(1, "poly edgeless <n>");
        return psi_edgeless(args[0]);
    }
    if (head == "path") {
        want(1, "poly path <n>");
        return psi_path(args[0]);
    }
    if (head == "multipartite") {
        if (args.size() < 2) throw InputError("poly multipartite <n1> <n2> [...]");
        return psi_multipartite(args);
    }
    if (head == "balanced") {
        want(2, "poly balanced <r> <t>");
        return psi_balanced(args[0], args[1]);
    }
    if (head == "broom") {
        want(2, "poly broom <s> <r>");
        return psi_broom(args[0], args[1]);
    }
    if (head == "comb") {
        want(1, "poly comb <n>");
        return psi_comb(args[0]);
    }
    if (head == "kneser2") {
        want(1, "poly kneser2 <n>");
        return psi_kneser2(args[0]);
    }
    if (head == "tstar") {
        want(2, "poly tstar <r> <a>");
        return psi_tstar(args[0], args[1]);
    }
    if (head == "tstar-legacy") {
        want(2, "poly tstar-legacy <r> <a>");
        return psi_tstar_legacy(args[0], args[1]);
    }
    if (head == "corona-edgeless") {
        want(1, "poly corona-edgeless <n>");
        return psi_corona_edgeless(args[0]);
    }
    throw InputError("unknown family '" + head + "' (try --help)");
}

int cmd_poly(const CliConfig& cfg, const std::vector<std::string>& args) {
    if (args.empty()) throw InputError("poly needs a family, e.g. `poly broom 17 6`");
    FormulaResult result;
    std::string family = args[0];
    if (args[0].find(':') != std::string::npos) {
        if (args.size() > 1) throw InputError("colon specs take no extra parameters");
        const FamilySpec spec = parse_family_spec(args[0]);
        auto closed = closed_form_for(spec);
        if (!closed) {
            throw RefusalError("no closed form for '" + spec.name() +
                               "'; use `enumerate --family " + spec.name() + "`");
        }
        result = std::move(*closed);
        family = family_head(spec);
    } else {
        std::vector<int> params;
        for (std::size_t i = 1; i < args.size(); ++i) {
            try {
                params.push_back(std::stoi(args[i]));
            } catch (const std::exception&) {
                throw InputError("expected an integer parameter, got '" + args[i] + "'");
            }
        }
        result = poly_by_name(args[0], params);
    }
    Sink sink(cfg.out_path);
    PolyOutput out = make_output(family, result.family, result.poly, result.notes);
    out.gp = result.gp;
    print_result(sink, cfg, out);
    return 0;
}

// ---- enumerate / analyze ----------------------------------------------

struct GraphSource {
    std::string family_spec;
    std::string edge_list_path;
    std::string graph6_text;

    FamilySpec resolve() const {
        const int given = (family_spec.empty() ? 0 : 1) +
                          (edge_list_path.empty() ? 0 : 1) +
                          (graph6_text.empty() ? 0 : 1);
        if (given != 1) {
            throw InputError("give exactly one of --family, --edge-list, --graph6");
        }
        if (!family_spec.empty()) return parse_family_spec(family_spec);
        if (!edge_list_path.empty()) return FamilySpec::edge_list_file(edge_list_path);
        return FamilySpec::graph6(graph6_text);
    }
};

int cmd_enumerate(const CliConfig& cfg, const GraphSource& source) {
    const FamilySpec spec = source.resolve();
    const GpPolynomial poly = count_gp_sets(build(spec), cfg.enumerator());
    Sink sink(cfg.out_path);
    print_result(sink, cfg, make_output(family_head(spec), spec, poly));
    return 0;
}

int cmd_analyze(const CliConfig& cfg, const GraphSource& source) {
    const FamilySpec spec = source.resolve();
    GpPolynomial poly;
    std::vector<std::string> notes;
    if (auto closed = closed_form_for(spec)) {
        poly = std::move(closed->poly);
        notes = std::move(closed->notes);
    } else {
        poly = count_gp_sets(build(spec), cfg.enumerator());
        notes = {"no closed form; counted by the enumerator"};
    }
    Sink sink(cfg.out_path);
    print_result(sink, cfg, make_output(family_head(spec), spec, poly, notes));
    return 0;
}

// ---- verify ------------------------------------------------------------

int cmd_verify(const CliConfig& cfg, const std::string& grid, const GridOptions& gopt) {
    const auto records = verify_grid(grid, gopt);
    Sink sink(cfg.out_path);
    std::ostream& os = sink.out();

    std::size_t ok = 0, mismatched = 0, skipped = 0;
    for (const auto& rec : records) {
        ok += rec.ok() ? 1 : 0;
        mismatched += (!rec.skipped && !rec.match) ? 1 : 0;
        skipped += rec.skipped ? 1 : 0;
    }
    const bool all_ok = ok == records.size();

    if (cfg.format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& rec : records) {
            ordered_json j;
            j["spec"] = rec.spec.name();
            j["ok"] = rec.ok();
            j["match"] = rec.match;
            j["skipped"] = rec.skipped;
            j["skip_reason"] = rec.skip_reason;
            j["expect_mismatch"] = rec.expect_mismatch;
            if (rec.first_diff) {
                j["first_diff"] = {{"k", rec.first_diff->k},
                                   {"formula", rec.first_diff->formula_value.str()},
                                   {"oracle", rec.first_diff->oracle_value.str()}};
            } else {
                j["first_diff"] = nullptr;
            }
            rows.push_back(std::move(j));
        }
        ordered_json top;
        top["grid"] = grid;
        top["records"] = std::move(rows);
        top["all_ok"] = all_ok;
        os << top.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "spec,ok,match,skipped,expect_mismatch,diff_k,diff_formula,diff_oracle\n";
        for (const auto& rec : records) {
            os << csv_field(rec.spec.name()) << "," << (rec.ok() ? "true" : "false") << ","
               << (rec.match ? "true" : "false") << ","
               << (rec.skipped ? "true" : "false") << ","
               << (rec.expect_mismatch ? "true" : "false") << ",";
            if (rec.first_diff) {
                os << rec.first_diff->k << "," << rec.first_diff->formula_value.str()
                   << "," << rec.first_diff->oracle_value.str();
            } else {
                os << ",,";
            }
            os << "\n";
        }
    } else {
        for (const auto& rec : records) {
            std::string status;
            if (rec.skipped) {
                status = "skip    ";
            } else if (rec.ok()) {
                status = rec.expect_mismatch ? "ok(diff)" : "ok      ";
            } else {
                status = "MISMATCH";
            }
            os << "[" << status << "] " << rec.spec.name();
            if (rec.first_diff) {
                os << "  first diff at k=" << rec.first_diff->k
                   << ": formula=" << rec.first_diff->formula_value.str()
                   << " oracle=" << rec.first_diff->oracle_value.str();
            }
            if (rec.skipped) os << "  (" << rec.skip_reason << ")";
            os << "\n";
        }
        os << records.size() << " records: " << ok << " ok, " << mismatched
           << " mismatched, " << skipped << " skipped\n";
    }
    return all_ok ? 0 : kExitVerificationFailure;
}

// ---- scan ----------------------------------------------------------------

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw InputError("bad range '" + text + "'; use lo..hi or a single value");
    }
}

ordered_json report_json(const SequenceReport& rep) {
    ordered_json j;
    j["length"] = rep.length;
    j["unimodal"] = rep.unimodal;
    if (rep.unimodality_witness) {
        j["witness"] = *rep.unimodality_witness;
    } else {
        j["witness"] = nullptr;
    }
    j["log_concave"] = rep.log_concave;
    j["lc_failures"] = rep.lc_failures;
    j["internal_zeros"] = rep.internal_zeros;
    return j;
}

void print_scan_cells(std::ostream& os, const CliConfig& cfg, const ThresholdScan& scan) {
    if (cfg.format == "json") {
        ordered_json j;
        j["family"] = scan.family;
        j["fixed_params"] = scan.fixed_params;
        j["swept_param"] = scan.swept_param;
        j["range"] = {scan.range.first, scan.range.second};
        ordered_json cells = ordered_json::array();
        for (const auto& [value, rep] : scan.verdict_per_value) {
            ordered_json cell = report_json(rep);
            ordered_json keyed;
            keyed[scan.swept_param] = value;
            for (auto& [k, v] : cell.items()) keyed[k] = v;
            cells.push_back(std::move(keyed));
        }
        j["cells"] = std::move(cells);
        j["first_lc_failure"] = scan.first_lc_failure
                                    ? ordered_json(*scan.first_lc_failure)
                                    : ordered_json(nullptr);
        j["first_unimodality_failure"] = scan.first_unimodality_failure
                                             ? ordered_json(*scan.first_unimodality_failure)
                                             : ordered_json(nullptr);
        os << j.dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv") {
        std::string fixed_name, fixed_value;
        for (const auto& [k, v] : scan.fixed_params) {
            fixed_name = k;
            fixed_value = std::to_string(v);
        }
        os << fixed_name << "," << scan.swept_param
           << ",length,unimodal,witness,log_concave,lc_failures,internal_zeros\n";
        for (const auto& [value, rep] : scan.verdict_per_value) {
            os << fixed_value << "," << value << "," << rep.length << ","
               << (rep.unimodal ? "true" : "false") << ",";
            if (rep.unimodality_witness) os << *rep.unimodality_witness;
            os << "," << (rep.log_concave ? "true" : "false") << ","
               << join_sizes(rep.lc_failures) << "," << join_sizes(rep.internal_zeros)
               << "\n";
        }
        return;
    }
    for (const auto& [value, rep] : scan.verdict_per_value) {
        os << scan.swept_param << "=" << value << ": unimodal="
           << (rep.unimodal ? "yes" : "no");
        if (rep.unimodality_witness) os << "(valley k=" << *rep.unimodality_witness << ")";
        os << " log-concave=" << (rep.log_concave ? "yes" : "no");
        if (!rep.lc_failures.empty()) os << "(fails k=" << join_sizes(rep.lc_failures) << ")";
        os << "\n";
    }
    os << "first log-concavity failure: ";
    if (scan.first_lc_failure) {
        os << scan.swept_param << "=" << *scan.first_lc_failure;
    } else {
        os << "none in range";
    }
    os << "\nfirst unimodality failure: ";
    if (scan.first_unimodality_failure) {
        os << scan.swept_param << "=" << *scan.first_unimodality_failure;
    } else {
        os << "none in range";
    }
    os << "\n";
}

int cmd_scan(const CliConfig& cfg, const std::string& family, const std::string& r_arg,
             const std::string& t_arg, const std::string& s_arg, int a_arg) {
    Sink sink(cfg.out_path);
    std::ostream& os = sink.out();
    if (cfg.parallelism > 0) omp_set_num_threads(cfg.parallelism);

    if (family == "balanced") {
        if (r_arg.empty() || t_arg.empty()) {
            throw InputError("scan balanced needs --r lo..hi and --t lo..hi");
        }
        const auto cells = scan_balanced(parse_range(r_arg), parse_range(t_arg));
        if (cfg.format == "json") {
            ordered_json rows = ordered_json::array();
            for (const auto& cell : cells) {
                ordered_json j;
                j["r"] = cell.r;
                j["t"] = cell.t;
                for (auto& [k, v] : report_json(cell.report).items()) j[k] = v;
                rows.push_back(std::move(j));
            }
            ordered_json top;
            top["family"] = "balanced";
            top["cells"] = std::move(rows);
            os << top.dump(2) << "\n";
        } else if (cfg.format == "csv") {
            os << "r,t,length,unimodal,witness,log_concave,lc_failures,internal_zeros\n";
            for (const auto& cell : cells) {
                os << cell.r << "," << cell.t << "," << cell.report.length << ","
                   << (cell.report.unimodal ? "true" : "false") << ",";
                if (cell.report.unimodality_witness) os << *cell.report.unimodality_witness;
                os << "," << (cell.report.log_concave ? "true" : "false") << ","
                   << join_sizes(cell.report.lc_failures) << ","
                   << join_sizes(cell.report.internal_zeros) << "\n";
            }
        } else {
            for (const auto& cell : cells) {
                os << "r=" << cell.r << " t=" << cell.t
                   << ": unimodal=" << (cell.report.unimodal ? "yes" : "no")
                   << " log-concave=" << (cell.report.log_concave ? "yes" : "no");
                if (!cell.report.lc_failures.empty()) {
                    os << " (fails k=" << join_sizes(cell.report.lc_failures) << ")";
                }
                os << "\n";
            }
        }
        return 0;
    }
    if (family == "broom") {
        if (r_arg.empty() || s_arg.empty()) {
            throw InputError("scan broom needs --r <int> and --s lo..hi");
        }
        const auto r = parse_range(r_arg);
        if (r.first != r.second) throw InputError("scan broom takes a single --r value");
        print_scan_cells(os, cfg, scan_broom(r.first, parse_range(s_arg)));
        return 0;
    }
    if (family == "tstar") {
        if (a_arg < 0 || r_arg.empty()) {
            throw InputError("scan tstar needs --a <int> and --r lo..hi");
        }
        print_scan_cells(os, cfg, scan_tstar(a_arg, parse_range(r_arg)));
        return 0;
    }
    throw InputError("unknown scan family '" + family +
                     "' (balanced, broom, tstar)");
}

// ---- reproduce -------------------------------------------------------------

int cmd_reproduce(const CliConfig& cfg, const std::string& only) {
    const ReproReport report = run_reproduction(only, cfg.enumerator());
    Sink sink(cfg.out_path);
    std::ostream& os = sink.out();

    if (cfg.format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& item : report.items) {
            rows.push_back({{"id", item.id},
                            {"criterion", item.criterion},
                            {"pass", item.pass},
                            {"detail", item.detail}});
        }
        ordered_json top;
        top["items"] = std::move(rows);
        top["all_pass"] = report.all_pass;
        os << top.dump(2) << "\n";
    } else {
        for (const auto& item : report.items) {
            os << (item.pass ? "[PASS] " : "[FAIL] ") << item.id << " — " << item.detail
               << "\n";
        }
        os << (report.all_pass ? "all checks pass" : "CHECKS FAILED") << " ("
           << report.items.size() << " items)\n";
    }
    if (report.items.empty()) {
        throw InputError("no reproduction item matches '" + only + "'");
    }
    return report.all_pass ? 0 : kExitVerificationFailure;
}

// ---- batch -------------------------------------------------------------

int cmd_batch(const CliConfig& cfg, const std::string& input_path) {
    std::vector<std::string> lines;
    std::string line;
    if (input_path == "-" || input_path.empty()) {
        while (std::getline(std::cin, line)) lines.push_back(line);
    } else {
        std::ifstream in(input_path);
        if (!in) throw InputError("cannot open input file: " + input_path);
        while (std::getline(in, line)) lines.push_back(line);
    }
    const auto rows = batch_process(lines, cfg.enumerator());

    Sink sink(cfg.out_path);
    std::ostream& os = sink.out();
    bool any_parse_error = false;
    std::vector<std::string> counterexamples;
    for (const auto& row : rows) {
        any_parse_error = any_parse_error || !row.parse_error.empty();
        if (row.unimodality_broken_by_corona) counterexamples.push_back(row.graph6);
    }

    if (cfg.format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json j;
            j["line"] = row.line_no;
            j["graph6"] = row.graph6;
            if (!row.parse_error.empty()) {
                j["error"] = row.parse_error;
                out.push_back(std::move(j));
                continue;
            }
            if (row.enumerated) {
                j["psi"] = {{"coeffs", row.psi.coeff_strings()},
                            {"gp", row.psi.degree()},
                            {"unimodal", row.psi_report.unimodal},
                            {"log_concave", row.psi_report.log_concave},
                            {"lc_failures", row.psi_report.lc_failures},
                            {"witness", row.psi_report.unimodality_witness
                                            ? ordered_json(*row.psi_report.unimodality_witness)
                                            : ordered_json(nullptr)}};
            } else {
                j["psi"] = nullptr;
                j["skip_reason"] = row.skip_reason;
            }
            if (row.corona_enumerated) {
                j["corona_psi"] = {{"coeffs", row.corona_psi.coeff_strings()},
                                   {"gp", row.corona_psi.degree()},
                                   {"unimodal", row.corona_report.unimodal},
                                   {"log_concave", row.corona_report.log_concave},
                                   {"lc_failures", row.corona_report.lc_failures},
                                   {"witness", row.corona_report.unimodality_witness
                                                   ? ordered_json(*row.corona_report.unimodality_witness)
                                                   : ordered_json(nullptr)}};
            } else {
                j["corona_psi"] = nullptr;
            }
            j["unimodality_broken_by_corona"] = row.unimodality_broken_by_corona;
            out.push_back(std::move(j));
        }
        os << out.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        os << "line,graph6,error,gp,unimodal,log_concave,corona_gp,corona_unimodal,"
              "corona_log_concave,unimodality_broken_by_corona\n";
        for (const auto& row : rows) {
            os << row.line_no << "," << row.graph6 << ",";
            if (!row.parse_error.empty()) {
                os << "parse-error,,,,,,,\n";
                continue;
            }
            os << ",";
            if (row.enumerated) {
                os << row.psi.degree() << ","
                   << (row.psi_report.unimodal ? "true" : "false") << ","
                   << (row.psi_report.log_concave ? "true" : "false");
            } else {
                os << ",,";
            }
            os << ",";
            if (row.corona_enumerated) {
                os << row.corona_psi.degree() << ","
                   << (row.corona_report.unimodal ? "true" : "false") << ","
                   << (row.corona_report.log_concave ? "true" : "false");
            } else {
                os << ",,";
            }
            os << "," << (row.unimodality_broken_by_corona ? "true" : "false") << "\n";
        }
    } else {
        for (const auto& row : rows) {
            os << "line " << row.line_no << ": " << row.graph6;
            if (!row.parse_error.empty()) {
                os << "  ERROR " << row.parse_error << "\n";
                continue;
            }
            if (row.enumerated) {
                os << "  psi = " << row.psi.str()
                   << "  [unimodal=" << (row.psi_report.unimodal ? "yes" : "no")
                   << " lc=" << (row.psi_report.log_concave ? "yes" : "no") << "]";
            } else {
                os << "  skipped (" << row.skip_reason << ")";
            }
            if (row.corona_enumerated) {
                os << "\n        corona psi = " << row.corona_psi.str()
                   << "  [unimodal=" << (row.corona_report.unimodal ? "yes" : "no")
                   << " lc=" << (row.corona_report.log_concave ? "yes" : "no") << "]";
            }
            if (row.unimodality_broken_by_corona) os << "  << COUNTEREXAMPLE";
            os << "\n";
        }
        os << rows.size() << " graphs processed\n";
    }

    for (const auto& g6 : counterexamples) {
        std::cerr << "COUNTEREXAMPLE: unimodal psi(G) but non-unimodal psi(G o K1) "
                     "for graph6 "
                  << g6 << "\n";
    }
    return any_parse_error ? kExitInputError : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"general position polynomials: closed forms, brute-force "
                 "enumeration, and coefficient-sequence analysis"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "write output to this file");
    app.add_option("--vertex-budget", cfg.vertex_budget, "largest graph the enumerator accepts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--node-budget", cfg.node_budget, "search-node cap for one enumeration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--parallelism", cfg.parallelism, "worker threads (0 = auto)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    std::function<int()> action;

    auto* poly = app.add_subcommand("poly", "closed-form polynomial of a family");
    std::vector<std::string> poly_args;
    poly->add_option("family", poly_args,
                     "family name and integer parameters, or a colon spec");
    poly->callback([&] { action = [&] { return cmd_poly(cfg, poly_args); }; });

    GraphSource enum_source;
    auto* enumerate = app.add_subcommand("enumerate",
                                         "count general position sets by brute force");
    enumerate->add_option("--family", enum_source.family_spec, "family spec, e.g. corona:cycle:6");
    enumerate->add_option("--edge-list", enum_source.edge_list_path, "edge-list file");
    enumerate->add_option("--graph6", enum_source.graph6_text, "one graph6 line");
    enumerate->callback([&] { action = [&] { return cmd_enumerate(cfg, enum_source); }; });

    GraphSource analyze_source;
    auto* analyze_cmd = app.add_subcommand("analyze",
                                           "sequence verdicts for one graph's polynomial");
    analyze_cmd->add_option("--family", analyze_source.family_spec, "family spec");
    analyze_cmd->add_option("--edge-list", analyze_source.edge_list_path, "edge-list file");
    analyze_cmd->add_option("--graph6", analyze_source.graph6_text, "one graph6 line");
    analyze_cmd->callback([&] { action = [&] { return cmd_analyze(cfg, analyze_source); }; });

    auto* verify = app.add_subcommand("verify", "closed forms vs the enumerator on a grid");
    std::string grid = "all";
    GridOptions gopt;
    int opt_r = -1, opt_a = -1;
    verify->add_option("grid", grid,
                       "grid name, 'all', or a parameter file (one family spec "
                       "per line)");
    verify->add_option("--total-max", gopt.multipartite_total_max, "multipartite: max total order");
    verify->add_option("--r-max", gopt.balanced_r_max, "balanced: max part size");
    verify->add_option("--t-max", gopt.balanced_t_max, "balanced: max part count");
    verify->add_option("--s-max", gopt.broom_s_max, "broom: max tail length");
    verify->add_option("--broom-r-max", gopt.broom_r_max, "broom: max leaf count");
    verify->add_option("--n-max", gopt.comb_n_max, "comb: max n");
    verify->add_option("--ra-max", gopt.tstar_product_max, "tstar: max r*a");
    verify->add_option("--order-max", gopt.corona_order_max, "corona: max inner order");
    verify->add_option("--samples", gopt.disjoint_samples, "disjoint: sample count");
    verify->add_option("--seed", gopt.seed, "disjoint: RNG seed");
    verify->add_option("--r", opt_r, "tstar-legacy: check a single r");
    verify->add_option("--a", opt_a, "tstar-legacy: check a single a");
    verify->callback([&] {
        action = [&] {
            if (opt_r >= 0) gopt.only_r = opt_r;
            if (opt_a >= 0) gopt.only_a = opt_a;
            gopt.enumerator = cfg.enumerator();
            return cmd_verify(cfg, grid, gopt);
        };
    });

    auto* scan = app.add_subcommand("scan", "parameter sweeps with per-value verdicts");
    std::string scan_family, scan_r, scan_t, scan_s;
    int scan_a = -1;
    scan->add_option("family", scan_family, "balanced | broom | tstar")->required();
    scan->add_option("--r", scan_r, "r value or range lo..hi");
    scan->add_option("--t", scan_t, "t range lo..hi (balanced)");
    scan->add_option("--s", scan_s, "s range lo..hi (broom)");
    scan->add_option("--a", scan_a, "a value (tstar)");
    scan->callback([&] {
        action = [&] { return cmd_scan(cfg, scan_family, scan_r, scan_t, scan_s, scan_a); };
    });

    auto* reproduce = app.add_subcommand("reproduce",
                                         "run the built-in reference-value suite");
    std::string only;
    reproduce->add_option("--only", only, "run only items whose id contains this");
    reproduce->callback([&] { action = [&] { return cmd_reproduce(cfg, only); }; });

    auto* batch = app.add_subcommand("batch", "per-graph reports for graph6 input");
    std::string batch_input = "-";
    batch->add_option("input", batch_input, "graph6 file, one graph per line ('-' = stdin)");
    batch->callback([&] { action = [&] { return cmd_batch(cfg, batch_input); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (cfg.parallelism > 0) omp_set_num_threads(cfg.parallelism);
        return action();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const RefusalError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
