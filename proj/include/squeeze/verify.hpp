#ifndef SQUEEZE_VERIFY_HPP
#define SQUEEZE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace squeeze {

struct CheckResult {
    std::string id;
    std::string name;
    bool passed = false;
    std::string detail;  // failure explanation or short summary
    double seconds = 0.0;
};

// Named verification suites: "paper-examples", "gin", "sweep", "operators",
// "exterior", or "all".
std::vector<std::string> verify_suites();
std::vector<CheckResult> run_verify_suite(const std::string& suite, std::uint64_t seed);

}  // namespace squeeze

#endif
