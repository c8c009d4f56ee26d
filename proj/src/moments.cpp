#include "treeimm/moments.hpp"

#include "treeimm/immanantal.hpp"
#include "treeimm/orientmatch.hpp"

#include <stdexcept>

namespace treeimm {

BiPoly qdist(const Tree& t, int i, int j) {
    int d = t.distances()[static_cast<size_t>(i)][static_cast<size_t>(j)];
    BiPoly s;
    for (int e = 0; e < d; ++e) s += BiPoly::qt_power(e);
    return s;
}

namespace {

BiPoly moment_def(const Tree& t, int i) {
    BiPoly total;
    for (int j = 1; j <= t.n(); ++j)
        total += (BiPoly::one() + BiPoly::qt_power(1, t.degree(j) - 1)) * qdist(t, i, j);
    return total;
}

BiPoly moment_alt(const Tree& t, int i) {
    int n = t.n();
    BiPoly sum;
    for (int j = 1; j <= n; ++j) sum += BiPoly(Int(t.degree(j) - 1)) * qdist(t, i, j);
    return BiPoly(Int(n - 1)) + BiPoly::qt_power(1, 2) * sum;
}

BiPoly moment_orient(const Tree& t, int i) {
    VertexSet b = without_vertex(full_set(t.n()), i);
    return BiPoly(Int(t.n() - 1)) * a_poly(t, b, 0) + BiPoly(2) * a_poly(t, b, 1);
}

}  // namespace

BiPoly moment(const Tree& t, int i, MomentRoute route) {
    int n = t.n();
    if (i < 1 || i > n) throw std::invalid_argument("moment: bad vertex");
    // bridging identity: u * sum_j (d_j - 1)[d_{i,j}] = sum_j [d_{i,j}] - (n-1)
    BiPoly lhs, rhs;
    for (int j = 1; j <= n; ++j) {
        lhs += BiPoly::qt_power(1, t.degree(j) - 1) * qdist(t, i, j);
        rhs += qdist(t, i, j);
    }
    rhs -= BiPoly(Int(n - 1));
    if (lhs != rhs) throw std::logic_error("moment: bridging identity failed");

    switch (route) {
        case MomentRoute::Definition: return moment_def(t, i);
        case MomentRoute::Alternate: return moment_alt(t, i);
        case MomentRoute::Orientation: return moment_orient(t, i);
    }
    throw std::logic_error("unreachable");
}

BiPoly moment_sum(const Tree& t) {
    BiPoly total;
    for (int i = 1; i <= t.n(); ++i) total += moment_def(t, i);
    return total;
}

bool moment_theorem_check(const Tree& t) {
    int n = t.n();
    if (n < 2) throw std::invalid_argument("moment_theorem_check: n >= 2");
    std::vector<int> parts{2};
    parts.insert(parts.end(), static_cast<size_t>(n - 2), 1);
    Partition lambda(parts);
    return moment_sum(t) == coeff_via_orientations(t, lambda, n - 1);
}

bool moment_monotonicity(const LabeledCoverPair& pair, MomentMode mode, const Rational& q0) {
    if (mode == MomentMode::Sum) {
        BiPoly diff = moment_sum(pair.t1) - moment_sum(pair.t2);
        return diff.is_nonneg() && diff.is_qt_poly();
    }
    auto min_at = [&](const Tree& t) {
        Rational best;
        bool first = true;
        for (int i = 1; i <= t.n(); ++i) {
            Rational v = moment_def(t, i).eval(q0, q0);
            if (first || v < best) {
                best = v;
                first = false;
            }
        }
        return best;
    };
    return min_at(pair.t2) <= min_at(pair.t1);
}

std::vector<int> centroid_at(const Tree& t, const Rational& q0) {
    if (q0 == 0) throw std::invalid_argument("centroid_at: q0 must be nonzero");
    std::vector<Rational> vals;
    for (int i = 1; i <= t.n(); ++i) vals.push_back(moment_def(t, i).eval(q0, q0));
    Rational best = vals[0];
    for (const auto& v : vals)
        if (v < best) best = v;
    std::vector<int> out;
    for (int i = 1; i <= t.n(); ++i)
        if (vals[static_cast<size_t>(i - 1)] == best) out.push_back(i);
    return out;
}

Int classical_moment(const Tree& t, int i) {
    Int total = 0;
    for (int j = 1; j <= t.n(); ++j)
        total += Int(t.degree(j)) * Int(t.distances()[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return total;
}

}  // namespace treeimm
