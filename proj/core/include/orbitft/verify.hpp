#pragma once

#include <orbitft/formulas.hpp>
#include <functional>
#include <string>
#include <vector>

namespace orbitft {

struct SuiteResult {
    std::string suite;
    int cells = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    long long wall_ms = 0;

    bool ok() const { return failures.empty(); }
};

// suites, in the order they run: oracle, homogeneity, matching, integrality,
// support, counting, commutator, rossmann, regular_elliptic
std::vector<std::string> suite_names();

// n_max caps the sweep; jobs > 1 runs cells on a thread pool. Results are
// byte-identical for any jobs value: every cell owns a result slot and the
// slots are merged in cell order.
SuiteResult run_suite(const std::string& name, int n_max, int jobs);

// evaluate cells 0..count-1, empty string = pass; failures keep cell order
std::vector<std::string> run_cells(int jobs, int count, const std::function<std::string(int)>& cell);

}
