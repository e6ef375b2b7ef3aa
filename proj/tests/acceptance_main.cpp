// Acceptance gate: runs every suite in the registry and prints one verdict
// line per criterion.  Exits nonzero if any suite fails.  The data directory
// (graph6 corpora from corpusgen) comes from argv[1] or the compiled-in
// default.

#include "pcon/sweeps.hpp"

#include <cstdio>
#include <string>

#ifndef PCON_TEST_DATA_DIR
#define PCON_TEST_DATA_DIR "tests/data"
#endif

int main(int argc, char** argv) {
    const std::string data_dir = argc > 1 ? argv[1] : PCON_TEST_DATA_DIR;
    int criterion = 0;
    int failed = 0;
    for (const std::string& name : pcon::suite_names()) {
        pcon::SuiteResult r = pcon::run_suite(name, data_dir);
        ++criterion;
        if (!r.pass) ++failed;
        std::printf("criterion %2d  %-16s %s  (%.1fs)  %s\n", criterion, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
        std::fflush(stdout);
    }
    if (failed) std::printf("%d of %d criteria failed\n", failed, criterion);
    else std::printf("all %d criteria passed\n", criterion);
    return failed ? 1 : 0;
}
