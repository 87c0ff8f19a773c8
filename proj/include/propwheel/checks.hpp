#ifndef PROPWHEEL_CHECKS_HPP
#define PROPWHEEL_CHECKS_HPP

#include <string>
#include <vector>

namespace propwheel {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // empty when passing, diagnostic otherwise
};

// Names of the built-in invariant suites, in recommended run order.
std::vector<std::string> suite_names();

// Runs one suite. seed feeds the randomized checks; max_dim bounds the
// cochain level sizes on the linear-algebra side. Throws
// std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& name, unsigned seed = 1,
                                   int max_dim = 10000);

// Every suite in order, concatenated.
std::vector<CheckResult> run_all(unsigned seed = 1, int max_dim = 10000);

}  // namespace propwheel

#endif
