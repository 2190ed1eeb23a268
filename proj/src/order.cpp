#include "lynsys/order.hpp"

#include <numeric>
#include <stdexcept>

namespace lynsys {

OrderOutcome alt_compare(const Word& x, const Word& y) {
    std::uint64_t p = std::max(x.preperiod().size(), y.preperiod().size());
    std::uint64_t qx = x.period().empty() ? 1 : x.period().size();
    std::uint64_t qy = y.period().empty() ? 1 : y.period().size();
    std::uint64_t n = p + std::lcm(qx, qy);
    for (std::uint64_t k = 1; k <= n; ++k) {
        Letter a = x.letter_at(k);
        Letter b = y.letter_at(k);
        if (a != b) return outcome_at(k, a, b);
    }
    return {Rel::Equal, std::nullopt};
}

OrderOutcome alt_compare_vs_phi_limit(const Word& x, std::uint64_t letter_cap) {
    for (std::uint64_t k = 1; k <= letter_cap; ++k) {
        Letter a = x.letter_at(k);
        Letter b = phi_limit_letter(k);
        if (a != b) return outcome_at(k, a, b);
    }
    throw std::domain_error(
        "alt_compare_vs_phi_limit: no difference within the letter cap "
        "(aperiodicity makes this impossible for eventually periodic input)");
}

}  // namespace lynsys
