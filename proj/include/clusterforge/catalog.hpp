#pragma once

#include "clusterforge/quiver.hpp"

#include <string>
#include <utility>
#include <vector>

// Named quivers used by the classifier, the tests and the CLI `--named` flag.
namespace cf::catalog {

Quiver linear_a(int n);          // 1 -> 2 -> ... -> n
Quiver type_d(int n);            // branch vertex with two short legs, n >= 4
Quiver type_e(int n);            // n in {6, 7, 8}
Quiver affine_e(int n);          // E6^(1), E7^(1), E8^(1)
Quiver elliptic_e(int n);        // E6^(1,1), E7^(1,1), E8^(1,1)
Quiver kronecker(int m);         // m parallel arrows 1 -> 2
Quiver oriented_cycle(int n);    // 1 -> 2 -> ... -> n -> 1
Quiver x6();
Quiver x7();
Quiver markov();                 // double arrows around a triangle
Quiver t2();                     // rank-4 quiver carrying two tame potentials

// Table of exceptional finite-mutation quivers of rank >= 3 checked by classify.
const std::vector<std::pair<std::string, Quiver>>& exceptional_quivers();

// Accepts "A4", "D5", "E7", "E6^(1)", "E8^(1,1)", "K3", "X6", "X7", "markov", "T2",
// "cycle3". Throws Error(ParseError) otherwise.
Quiver by_name(const std::string& name);

}  // namespace cf::catalog
