#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "treeimm/gts.hpp"
#include "treeimm/immanantal.hpp"

using namespace treeimm;

namespace {
const BiPoly kOne = BiPoly::one();
const BiPoly kU = BiPoly::qt_power(1);
const BiPoly kQ2 = BiPoly::monomial(2, 0);
}  // namespace

TEST_CASE("P3 coefficient examples") {
    Tree p3 = path_tree(3);
    // lambda = (2,1), r = 2: 2*(3+2u)
    CHECK(coeff_via_matchings(p3, Partition({2, 1}), 2) == BiPoly(6) + BiPoly(4) * kU);
    CHECK(coeff_via_orientations(p3, Partition({2, 1}), 2) == BiPoly(6) + BiPoly(4) * kU);
    // lambda = 1^3: table (1, 3+u, 3, 1-u)
    Partition sign({1, 1, 1});
    CHECK(coeff_via_orientations(p3, sign, 0) == kOne);
    CHECK(coeff_via_orientations(p3, sign, 1) == BiPoly(3) + kU);
    CHECK(coeff_via_orientations(p3, sign, 2) == BiPoly(3));
    CHECK(coeff_via_orientations(p3, sign, 3) == kOne - kU);
    // r = 0 is the dimension
    CHECK(coeff_via_orientations(p3, Partition({2, 1}), 0) == BiPoly(chi_dimension(Partition({2, 1}))));
}

TEST_CASE("brute-force immanant basics") {
    // d on the identity matrix is the dimension
    PolyMatrix eye = PolyMatrix::scaled_identity(4, kOne);
    for (const auto& lam : partitions(4))
        CHECK(immanant_bruteforce(eye, lam) == BiPoly(chi_dimension(lam)));

    // P2: determinant and permanent of the q-Laplacian
    Tree p2 = path_tree(2);
    PolyMatrix lap = q_laplacian(p2);
    CHECK(immanant_bruteforce(lap, Partition({1, 1})) == kOne - kQ2);
    CHECK(immanant_bruteforce(lap, Partition({2})) == kOne + kQ2);
    CHECK_THROWS_AS(immanant_bruteforce(PolyMatrix(9), Partition(std::vector<int>(9, 1))),
                    std::invalid_argument);
}

TEST_CASE("immanantal polynomial of P2") {
    Tree p2 = path_tree(2);
    // exp-distance, lambda = 1^2: x^2 - 2x + (1 - q^2)
    XPoly f = immanantal_polynomial(p2, Partition({1, 1}), MatrixKind::ExpDistance);
    CHECK(f.coeff(2) == kOne);
    CHECK(f.coeff(1) == BiPoly(-2));
    CHECK(f.coeff(0) == kOne - kQ2);
    // laplacian, lambda = (2): c = (1, 2, 1+u)
    CoeffTable t = coeff_table_for_kind(p2, Partition({2}), MatrixKind::QtLaplacian);
    CHECK(t.c[0] == kOne);
    CHECK(t.c[1] == BiPoly(2));
    CHECK(t.c[2] == kOne + kU);
    // leading coefficient of the assembled polynomial is the dimension
    XPoly g = immanantal_polynomial(p2, Partition({2}), MatrixKind::QtLaplacian);
    CHECK(g.coeff(2) == BiPoly(chi_dimension(Partition({2}))));
}

TEST_CASE("three-route agreement on small trees") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& t : all_trees(n)) {
            OrientTables tab = compute_orient_tables(t);
            PolyMatrix lap = qt_laplacian(t, ArcWeighting::canonical(t));
            for (const auto& lam : partitions(n))
                for (int r = 0; r <= n; ++r) {
                    BiPoly via_m = coeff_via_matchings(tab, lam, r);
                    BiPoly via_o = coeff_via_orientations(tab, lam, r);
                    BiPoly via_b = coeff_via_minors(lap, lam, r);
                    CHECK(via_m == via_o);
                    CHECK(via_o == via_b);
                }
        }
}

TEST_CASE("sign-character coefficients reduce to a_{r,0}") {
    for (int n = 2; n <= 6; ++n) {
        Partition sign(std::vector<int>(static_cast<size_t>(n), 1));
        for (const auto& t : all_trees(n))
            for (int r = 0; r <= n; ++r)
                CHECK(coeff_via_orientations(t, sign, r) == a_r(t, r, 0));
    }
    // hand-enumerated values for the two n=4 trees at r=2
    Partition sign4({1, 1, 1, 1});
    CHECK(coeff_via_orientations(path_tree(4), sign4, 2) == BiPoly(6) + BiPoly(3) * kU + kU * kU);
    CHECK(coeff_via_orientations(star_tree(4), sign4, 2) == BiPoly(6) + BiPoly(3) * kU);
}

TEST_CASE("q := 0 collapses the laplacian polynomial to (x-1)^n") {
    Tree t = star_tree(5);
    OrientTables tab = compute_orient_tables(t);
    Rational zero(0);
    for (const auto& lam : partitions(5)) {
        for (int r = 0; r <= 5; ++r) {
            Rational c0 = coeff_via_orientations(tab, lam, r).eval(zero, zero);
            // (x-1)^n has |coefficients| binom(n,r) * f^lambda
            CHECK(c0 == Rational(binomial(5, r) * chi_dimension(lam)));
        }
    }
}

TEST_CASE("monotonicity on the n=4 cover") {
    Tree p4 = path_tree(4);
    LabeledCoverPair pair = label_cover_pair(p4, make_gts_move(p4, 2, 3));
    OrientTables lo = compute_orient_tables(pair.t1);
    OrientTables hi = compute_orient_tables(pair.t2);
    Partition sign({1, 1, 1, 1});
    auto v = monotonicity_check(lo, hi, sign, 2);
    CHECK(v.ok);
    CHECK(v.difference == kU * kU);
    // r = 0 difference vanishes
    CHECK(monotonicity_check(lo, hi, sign, 0).difference.is_zero());
    // r = n difference vanishes: both sides are 1 - u
    CHECK(monotonicity_check(lo, hi, sign, 4).difference.is_zero());
    // all lambda, all r
    for (const auto& lam : partitions(4))
        for (int r = 0; r <= 4; ++r) CHECK(monotonicity_check(lo, hi, lam, r).ok);
}

TEST_CASE("ed coefficient relation") {
    Tree p2 = path_tree(2);
    for (int r = 0; r <= 2; ++r) CHECK(ed_coefficient_relation(p2, r));
    for (int n = 2; n <= 6; ++n)
        for (const auto& t : all_trees(n))
            for (int r = 0; r <= n; ++r) CHECK(ed_coefficient_relation(t, r));
}

TEST_CASE("two column identity") {
    Tree p2 = path_tree(2);
    CHECK(two_column_identity(p2, 1));
    CHECK(two_column_identity(p2, 0));
    for (int n = 2; n <= 5; ++n)
        for (const auto& t : all_trees(n))
            for (int k = 0; 2 * k <= n; ++k) CHECK(two_column_identity(t, k));
}

TEST_CASE("merris-watkins identity and negative control") {
    RatMatrix a(4);
    int seed[4][4] = {{2, 1, 0, 3}, {1, 4, 1, 0}, {0, 2, 5, 1}, {3, 0, 1, 2}};
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) a.at(i, j) = Rational(seed[i - 1][j - 1]);
    REQUIRE(a.determinant() != 0);
    CHECK(merris_watkins_check(a, Partition({1, 1, 1, 1})));
    CHECK(merris_watkins_check(a, Partition({2, 1, 1})));
    CHECK(merris_watkins_check(a, Partition({2, 2})));
    // non-two-column partition generically fails
    CHECK_FALSE(merris_watkins_check(a, Partition({3, 1})));
}

TEST_CASE("qt unit specialization") {
    Tree p3 = path_tree(3);
    // classical laplacian of P3 has characteristic coefficients (1,4,3,0)
    auto classical = classical_laplacian_coeffs(p3, Partition({1, 1, 1}));
    CHECK(classical == std::vector<Int>{1, 4, 3, 0});
    CHECK(qt_unit_specialization(p3, Partition({1, 1, 1})));
    for (int n = 2; n <= 5; ++n)
        for (const auto& t : all_trees(n))
            for (const auto& lam : partitions(n)) CHECK(qt_unit_specialization(t, lam));
}

TEST_CASE("full immanants decrease going up the order") {
    for (int n = 4; n <= 6; ++n) {
        HasseDiagram h = build_poset(n);
        for (const auto& w : cover_pairs(h)) {
            LabeledCoverPair pair = label_cover_pair(h.reps[static_cast<size_t>(w.lower)], w.move);
            OrientTables lo = compute_orient_tables(pair.t1);
            OrientTables hi = compute_orient_tables(pair.t2);
            for (const auto& lam : partitions(n)) {
                BiPoly diff = coeff_via_orientations(lo, lam, n) - coeff_via_orientations(hi, lam, n);
                CHECK(diff.is_nonneg());
            }
        }
    }
}
