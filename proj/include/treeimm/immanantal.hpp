#pragma once

/*
 * Immanantal-polynomial coefficients by three independent routes, full
 * immanantal polynomials, the cover-pair monotonicity verdict, and the
 * exponential-distance identities.
 *
 * Coefficients follow the absolute-value convention: the polynomial is
 * sum_r (-1)^r c_{lambda,r} x^{n-r}, and the c tables store c_{lambda,r}.
 */

#include "treeimm/bipoly.hpp"
#include "treeimm/gts.hpp"
#include "treeimm/orientmatch.hpp"
#include "treeimm/polymatrix.hpp"
#include "treeimm/symchar.hpp"
#include "treeimm/tree.hpp"

#include <vector>

namespace treeimm {

inline constexpr int kBruteForceMaxN = 8;

struct CoeffTable {
    Partition lambda;
    std::vector<BiPoly> c;  // c[r] for 0 <= r <= n
};

// Matching route: c_{lambda,r} = sum_j chi(lambda,j) m_{r,j}.
BiPoly coeff_via_matchings(const Tree& t, const Partition& lambda, int r);
BiPoly coeff_via_matchings(const OrientTables& tab, const Partition& lambda, int r);

// Orientation route: c_{lambda,r} = sum_i (alpha 2^i) a_{r,i}.
BiPoly coeff_via_orientations(const Tree& t, const Partition& lambda, int r);
BiPoly coeff_via_orientations(const OrientTables& tab, const Partition& lambda, int r);

CoeffTable coeff_table(const OrientTables& tab, const Partition& lambda);

// Brute-force minor route over an arbitrary polynomial matrix:
// c_{lambda,r} = sum_{|B|=r} sum_{sigma in Sym(B)} chi(type) prod M[v,sigma v].
BiPoly coeff_via_minors(const PolyMatrix& m, const Partition& lambda, int r);

// d_lambda(M) over the full symmetric group; n <= 8.
BiPoly immanant_bruteforce(const PolyMatrix& m, const Partition& lambda);
Rational immanant_bruteforce(const RatMatrix& m, const Partition& lambda);

enum class MatrixKind { QtLaplacian, ExpDistance };

// f_lambda(x) = d_lambda(xI - M) as an XPoly; coefficient of x^{n-r} is
// (-1)^r c_{lambda,r}.
XPoly immanantal_polynomial(const Tree& t, const Partition& lambda, MatrixKind kind);
CoeffTable coeff_table_for_kind(const Tree& t, const Partition& lambda, MatrixKind kind);

struct MonotonicityVerdict {
    BiPoly difference;  // c^{T1} - c^{T2}
    bool ok = false;    // nonnegative and in the qt subring
};

MonotonicityVerdict monotonicity_check(const OrientTables& lower, const OrientTables& upper,
                                       const Partition& lambda, int r);

// Cleared form of the minor/coefficient relation between ED and L^q:
// c^{ED}_{1^n,r} (1-q^2) == (1-q^2)^r c^{Lq}_{1^n,n-r}, univariate.
bool ed_coefficient_relation(const Tree& t, int r);

// d_lambda(ED) == d_lambda(L^q) (1-q^2)^{n-2} for lambda = 2^k 1^{n-2k}.
bool two_column_identity(const Tree& t, int k);

// d_lambda(A) det(A^{-1}) == d_lambda(A^{-1}) det(A); exact rationals.
bool merris_watkins_check(const RatMatrix& a, const Partition& lambda);

// Classical integer Laplacian coefficients by brute force (the u = 1 oracle).
std::vector<Int> classical_laplacian_coeffs(const Tree& t, const Partition& lambda);

// Substituting u = qt := 1 into the bivariate table reproduces the
// classical-Laplacian immanantal coefficients.
bool qt_unit_specialization(const Tree& t, const Partition& lambda);

}  // namespace treeimm
