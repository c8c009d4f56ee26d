#pragma once

/*
 * Matrices over the exact polynomial ring: q,t-Laplacian, exponential
 * distance matrices, exact determinants and the Sturm signature check.
 */

#include "treeimm/bipoly.hpp"
#include "treeimm/tree.hpp"

#include <map>
#include <vector>

namespace treeimm {

class PolyMatrix {
public:
    PolyMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * static_cast<size_t>(n)) {}

    int n() const { return n_; }
    // 1-indexed by vertex label, matching the tree side.
    BiPoly& at(int i, int j) { return e_[idx(i, j)]; }
    const BiPoly& at(int i, int j) const { return e_[idx(i, j)]; }
    bool operator==(const PolyMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    static PolyMatrix scaled_identity(int n, const BiPoly& s);

private:
    size_t idx(int i, int j) const;
    int n_;
    std::vector<BiPoly> e_;
};

// One arc per edge carries weight q, the reverse carries t.
struct ArcWeighting {
    // maps sorted edge (u,v), u<v -> true if the arc (u,v) carries q
    std::map<std::pair<int, int>, bool> q_from_lower;

    // q on the (min,max) arc of every edge
    static ArcWeighting canonical(const Tree& t);
    // weight of the arc (u,v) as a monomial (q or t)
    BiPoly arc_weight(int u, int v) const;
};

// D - A with d_{ii} = 1 + qt(deg(i)-1) and off-diagonal -q/-t per arcs.
PolyMatrix qt_laplacian(const Tree& t, const ArcWeighting& w);
// t:=q image: I + q^2(D - I) - qA.
PolyMatrix q_laplacian(const Tree& t);
PolyMatrix subst_t_eq_q(const PolyMatrix& m);

// Entries q^{d_{i,j}}, ones on the diagonal.
PolyMatrix exp_distance(const Tree& t);
// Entry (i,j) is the product of arc weights along the path i -> j.
PolyMatrix qt_exp_distance(const Tree& t, const ArcWeighting& w);

// Exact determinant by expansion over column prefixes with memoized
// minors; fine up to n = 10 or so.
BiPoly det(const PolyMatrix& m);
PolyMatrix principal_minor(const PolyMatrix& m, const std::vector<int>& b);
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);

struct Signature {
    int pos = 0, neg = 0, zero = 0;
    bool operator==(const Signature& o) const {
        return pos == o.pos && neg == o.neg && zero == o.zero;
    }
};

// Sign changes among leading principal minors of L^q evaluated exactly at
// q0 (Sturm).  Throws on q0 = +-1 or on a vanishing principal minor.
Signature signature_at(const Tree& t, const Rational& q0);

// Exact rational matrices, used for the Sturm check and Merris-Watkins.
class RatMatrix {
public:
    RatMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * static_cast<size_t>(n)) {}
    int n() const { return n_; }
    Rational& at(int i, int j) { return e_[idx(i, j)]; }
    const Rational& at(int i, int j) const { return e_[idx(i, j)]; }

    Rational determinant() const;
    // Throws std::domain_error when singular.
    RatMatrix inverse() const;

private:
    size_t idx(int i, int j) const;
    int n_;
    std::vector<Rational> e_;
};

RatMatrix eval_matrix(const PolyMatrix& m, const Rational& q0, const Rational& t0);

}  // namespace treeimm
