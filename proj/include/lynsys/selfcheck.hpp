#pragma once

#include <cstdint>
#include <iosfwd>

namespace lynsys {

struct SelfCheckOptions {
    unsigned precision_bits = 64;
    std::uint64_t seed = 20260808;
};

// Runs the full verification suite (golden bases, the gamma cascade,
// counting oracle equivalence, morphic identities, the entropy classifier,
// the expansion loop closure, monotonicity/cylinder geometry, and the
// generating-function and substitution identities), printing one pass/fail
// line per criterion. Returns true when everything passed.
bool run_acceptance(const SelfCheckOptions& options, std::ostream& out);

}  // namespace lynsys
