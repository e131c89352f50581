// Benchmark: serial reference vs OpenMP enumeration on graphs with large
// general-position families. Verifies the two runs agree before timing is
// reported.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "gpp/enumerator.hpp"
#include "gpp/families.hpp"

using namespace gpp;

namespace {

double run_ms(const Graph& g, const EnumeratorOptions& opt, bool parallel,
              GpPolynomial& out) {
    const auto start = std::chrono::steady_clock::now();
    out = parallel ? count_gp_sets(g, opt) : count_gp_sets_serial(g, opt);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

std::string total_sets(const GpPolynomial& p) {
    BigNat total = 0;
    for (const auto& c : p.coeffs()) total += c;
    return total.str();
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    int threads = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;
        if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
            threads = std::atoi(argv[++i]);
        }
    }

    std::vector<std::string> specs =
        quick ? std::vector<std::string>{"edgeless:18", "corona:edgeless:9",
                                         "balanced:2:9", "kneser2:6"}
              : std::vector<std::string>{"edgeless:22", "corona:edgeless:11",
                                         "balanced:2:11", "kneser2:7", "cycle:24"};

    EnumeratorOptions opt;
    opt.vertex_budget = 24;
    opt.threads = threads;
    const int used_threads = threads > 0 ? threads : omp_get_max_threads();
    std::printf("threads: %d\n", used_threads);
    std::printf("%-22s %6s %14s %12s %12s %8s\n", "graph", "n", "gp sets", "serial ms",
                "parallel ms", "speedup");

    bool all_equal = true;
    for (const auto& text : specs) {
        const Graph g = build(parse_family_spec(text));
        GpPolynomial serial_poly, parallel_poly;
        const double serial_ms = run_ms(g, opt, false, serial_poly);
        const double parallel_ms = run_ms(g, opt, true, parallel_poly);
        const bool equal = serial_poly == parallel_poly;
        all_equal = all_equal && equal;
        std::printf("%-22s %6d %14s %12.1f %12.1f %7.2fx%s\n", text.c_str(), g.order(),
                    total_sets(serial_poly).c_str(), serial_ms, parallel_ms,
                    serial_ms / (parallel_ms > 0 ? parallel_ms : 1e-9),
                    equal ? "" : "  MISMATCH");
    }
    std::printf(all_equal ? "serial and parallel runs produced identical results\n"
                          : "MISMATCH between serial and parallel results\n");
    return all_equal ? 0 : 1;
}
