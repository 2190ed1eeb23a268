// Acceptance gate: runs the full verification suite and fails loudly.

#include <cstdlib>
#include <iostream>
#include <string>

#include "lynsys/selfcheck.hpp"

int main(int argc, char** argv) {
    lynsys::SelfCheckOptions options;
    if (argc > 1) options.seed = std::stoull(argv[1]);
    bool ok = lynsys::run_acceptance(options, std::cout);
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
