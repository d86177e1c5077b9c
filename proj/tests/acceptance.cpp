// Acceptance suite: runs every criterion at its stated range and prints one
// PASS/FAIL line each. Exit status is nonzero when any gated criterion fails.
//
// Usage: acceptance [--slow] [--workers K]
//   --slow also runs the n = 10 brute-force completeness sweeps.

#include <cstring>
#include <iostream>

#include "origami/verify.hpp"

int main(int argc, char** argv) {
    origami::verify::VerifyOptions opts;
    opts.workers = 2;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--slow") == 0) opts.slow = true;
        if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc)
            opts.workers = std::atoi(argv[++i]);
    }
    try {
        origami::verify::VerifyReport report = origami::verify::run_suite("all", opts);
        std::cout << origami::verify::format_report(report);
        return report.all_pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cout << "FAIL  acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }
}
