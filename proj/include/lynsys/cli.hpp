#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lynsys::cli {

struct RunConfig {
    unsigned precision_bits = 64;
    std::uint64_t enumeration_cap = 10000000;
    unsigned phi_cap = 40;
    std::uint64_t seed = 20260808;
    bool json = false;
};

// Dispatches one invocation. Exit status 0 on success, 1 on domain errors
// (message on err), 2 on usage errors. NEGABETA_PRECISION_BITS overrides the
// default precision.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lynsys::cli
