#pragma once

#include <string>
#include <vector>

namespace evoalg {

// One check of the regression suite over the worked examples the library is
// built around (the two 10-vertex graphs, friendship graphs, cycles, complete
// bipartite graphs, the diameter-3 tree transcript).
struct ExampleResult {
    std::string name;
    bool passed = false;
    std::string expected;
    std::string actual;
};

std::vector<ExampleResult> run_worked_examples();

}  // namespace evoalg
