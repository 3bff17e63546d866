#ifndef GROUPORDER_SELFTEST_HPP
#define GROUPORDER_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace grouporder {

struct SuiteResult {
    int id = 0;
    std::string name;
    bool ok = true;
    std::size_t checks = 0;
    std::vector<std::string> failures; // truncated to the first few witnesses
    double seconds = 0.0;

    void fail(std::string message) {
        ok = false;
        if (failures.size() < 8) failures.push_back(std::move(message));
    }
};

struct SelftestOptions {
    std::uint64_t seed = 0xC0C0;
};

// The full invariant suite, one result per acceptance criterion. All
// tolerances are zero: every check is exact integer/structural equality.
// A single seeded stream derived from `seed` feeds all sampled checks.
std::vector<SuiteResult> run_selftest(const SelftestOptions& options = {});

} // namespace grouporder

#endif // GROUPORDER_SELFTEST_HPP
