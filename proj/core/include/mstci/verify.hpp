#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mstci {

// Named property suites exercising the library's identities and minimality
// statements end to end: closed forms against the pairwise oracle, the star
// local minimum, the edge-removal identity, the principal-subtree partition,
// the interbranch reduction, the two-graph invariant construction, and
// enumeration counts against the determinant.
struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;  // failing instance when pass == false
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<PropertyResult> properties;
    bool all_pass() const;
};

const std::vector<std::string>& verify_suite_names();

// Runs one suite. Throws std::invalid_argument for an unknown name.
SuiteReport run_verify_suite(const std::string& name, std::uint64_t seed);

}  // namespace mstci
