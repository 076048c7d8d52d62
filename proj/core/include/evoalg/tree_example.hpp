#pragma once

#include <string>
#include <vector>

#include "evoalg/graph.hpp"
#include "evoalg/radical.hpp"

namespace evoalg {

// Machine-checked replay of the hand case analysis for the diameter-3 tree
// with two leaves on each center (vertices 1..4 leaves, 5-6 the centers,
// 1-based): every homomorphism f: A_RW(T) -> A(T) is the null map.
//
// The full quadratic equation set is derived symbolically from the
// homomorphism conditions on basis pairs. The case split comes from the
// equation t55 t65 = 0. Case 1 (t55 = t65 = 0) zero-propagates to T = 0.
// Cases 2 and 3 (exactly one of them zero) each pin two entries by a pair of
// incompatible radical equations, so they are impossible.
//
// The published chain for Case 2 drops a factor 2 in the final univariate
// equation (it states 2 t56 = 9 t56^4 where the system gives 2 t56 = 18
// t56^4). Both variants are replayed: `reference` carries the well-known
// reported constants, `strict` the recomputed ones. The contradiction, and
// hence the null-map conclusion, holds in both.
struct TreeCaseValues {
    RadicalScalar pinned;   // Case 2: t56; Case 3: t66
    RadicalScalar first;    // the value forced by one pinning equation
    RadicalScalar second;   // the value forced by the other
    bool contradiction = false;  // first != second, exactly
};

struct TreeExampleReport {
    int equation_count = 0;

    bool case_split_valid = false;   // t55 * t65 = 0 is one of the equations
    bool case1_null_forced = false;  // all 36 entries propagate to zero

    TreeCaseValues case2_reference;  // 2t = 9t^4  -> t56 = (2/9)^(1/3)
    TreeCaseValues case2_strict;     // 2t = 18t^4 -> t56 = (1/9)^(1/3)
    TreeCaseValues case3_reference;
    TreeCaseValues case3_strict;

    bool null_only = false;  // the overall conclusion
    bool passed = false;     // every machine check succeeded
    std::vector<std::string> transcript;
};

// The fixed 6-vertex instance (edges 1-5, 2-5, 3-6, 4-6, 5-6).
Graph tree_example_graph();

TreeExampleReport verify_tree_example();

}  // namespace evoalg
