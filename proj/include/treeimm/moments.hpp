#pragma once

/*
 * The u = qt analogue of vertex moments, the centroid, and moment
 * monotonicity along cover pairs.
 */

#include "treeimm/bipoly.hpp"
#include "treeimm/gts.hpp"
#include "treeimm/tree.hpp"

#include <vector>

namespace treeimm {

// [d_{i,j}]_u = 1 + u + ... + u^{d-1}; zero when i = j.
BiPoly qdist(const Tree& t, int i, int j);

enum class MomentRoute { Definition, Alternate, Orientation };

// Moment of vertex i; all three routes agree and the bridging identity
// sum_j u (d_j - 1)[d_{i,j}] = sum_j [d_{i,j}] - (n-1) is asserted inside.
BiPoly moment(const Tree& t, int i, MomentRoute route = MomentRoute::Definition);

BiPoly moment_sum(const Tree& t);

// sum_i Moment(i) == c_{(2,1^{n-2}), n-1}; needs n >= 2.
bool moment_theorem_check(const Tree& t);

enum class MomentMode { Sum, MinAtQ };

// Sum mode: coefficientwise dominance of the lower tree's moment sum.
// Min mode: pointwise comparison of the minimum moment at u = q0^2.
bool moment_monotonicity(const LabeledCoverPair& pair, MomentMode mode,
                         const Rational& q0 = Rational(1));

// All argmin vertices of the moment at u = q0^2; q0 must be nonzero.
std::vector<int> centroid_at(const Tree& t, const Rational& q0);

// Merris' classical moment sum_j d_j d_{i,j}, for the u = 1 cross-check.
Int classical_moment(const Tree& t, int i);

}  // namespace treeimm
