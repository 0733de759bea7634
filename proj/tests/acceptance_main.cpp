// Runs the acceptance suite; one PASS/FAIL line per check.  With arguments,
// runs only the named checks.  Exit 0 iff everything passed.
#include <cstdio>
#include <string>
#include <vector>

#include "hfree/selftest.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> names(argv + 1, argv + argc);
    bool all = true;
    try {
        hfree::run_acceptance_checks(names, [&](const hfree::CheckResult& r) {
            std::printf("%s %s (%.1fs) %s\n", r.pass ? "PASS" : "FAIL",
                        r.name.c_str(), r.seconds, r.detail.c_str());
            std::fflush(stdout);
            all = all && r.pass;
        });
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return all ? 0 : 1;
}
