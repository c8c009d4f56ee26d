#pragma once

/*
 * Integer partitions, irreducible symmetric-group character values at
 * cycle types via the Murnaghan-Nakayama rule, and the Chan-Lam
 * constants alpha_{lambda,i}.
 */

#include "treeimm/bipoly.hpp"

#include <string>
#include <vector>

namespace treeimm {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int n() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }

    bool is_hook() const;        // (k, 1^{n-k})
    bool is_two_column() const;  // (2^k, 1^{n-2k})
    std::string to_string() const;            // "2,1,1"
    static Partition parse(const std::string& s);
};

// All partitions of n in descending lexicographic order: (n) first, 1^n last.
std::vector<Partition> partitions(int n);

// chi_lambda at a permutation of the given cycle type (any multiset of
// positive cycle lengths summing to |lambda|); Murnaghan-Nakayama, memoized.
Int chi_at_type(const Partition& lambda, const std::vector<int>& cycle_type);

// chiptr at cycle type 2^j 1^{n-2j}; requires 0 <= 2j <= n.
Int chi(const Partition& lambda, int j);

// Dimension f^lambda = chi(lambda, 0).
Int chi_dimension(const Partition& lambda);

Int binomial(int n, int k);

// alpha_{lambda,i} = 2^{-i} * sum_j C(i,j) chi(lambda, j); requires
// 0 <= i <= n/2.  Throws if the value comes out negative.
Rational alpha(const Partition& lambda, int i);

// The integer weight alpha_{lambda,i} * 2^i used by the orientation route.
Int alpha_weight(const Partition& lambda, int i);

}  // namespace treeimm
