#include "treeimm/immanantal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace treeimm {

namespace {

std::vector<int> cycle_type_of(const std::vector<int>& perm) {
    // perm maps position index -> position index (0-based)
    std::vector<char> seen(perm.size(), 0);
    std::vector<int> type;
    for (size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        int len = 0;
        size_t cur = s;
        while (!seen[cur]) {
            seen[cur] = 1;
            ++len;
            cur = static_cast<size_t>(perm[cur]);
        }
        type.push_back(len);
    }
    return type;
}

// Visits every permutation of {0..m-1} (as image vectors).
template <typename Fn>
void for_each_permutation(int m, Fn&& fn) {
    std::vector<int> perm(static_cast<size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        fn(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

BiPoly coeff_via_matchings(const Tree& t, const Partition& lambda, int r) {
    if (r < 0 || r > t.n()) throw std::invalid_argument("coeff: r out of range");
    BiPoly total;
    for (int j = 0; 2 * j <= r; ++j) total += BiPoly(chi(lambda, j)) * m_r(t, r, j);
    return total;
}

BiPoly coeff_via_matchings(const OrientTables& tab, const Partition& lambda, int r) {
    BiPoly total;
    for (int j = 0; 2 * j <= r; ++j)
        total += BiPoly(chi(lambda, j)) * tab.m[static_cast<size_t>(r)][static_cast<size_t>(j)];
    return total;
}

BiPoly coeff_via_orientations(const Tree& t, const Partition& lambda, int r) {
    if (r < 0 || r > t.n()) throw std::invalid_argument("coeff: r out of range");
    BiPoly total;
    for (int i = 0; 2 * i <= r; ++i) total += BiPoly(alpha_weight(lambda, i)) * a_r(t, r, i);
    return total;
}

BiPoly coeff_via_orientations(const OrientTables& tab, const Partition& lambda, int r) {
    BiPoly total;
    for (int i = 0; 2 * i <= r; ++i)
        total += BiPoly(alpha_weight(lambda, i)) * tab.a[static_cast<size_t>(r)][static_cast<size_t>(i)];
    return total;
}

CoeffTable coeff_table(const OrientTables& tab, const Partition& lambda) {
    CoeffTable out;
    out.lambda = lambda;
    for (int r = 0; r <= tab.n; ++r) out.c.push_back(coeff_via_orientations(tab, lambda, r));
    return out;
}

BiPoly coeff_via_minors(const PolyMatrix& m, const Partition& lambda, int r) {
    int n = m.n();
    if (n > kBruteForceMaxN) throw std::invalid_argument("coeff_via_minors: n too large");
    if (r < 0 || r > n) throw std::invalid_argument("coeff: r out of range");
    BiPoly total;
    std::vector<int> verts;
    for (VertexSet b = 0;; ++b) {
        if (__builtin_popcount(b) == r) {
            verts.clear();
            for (int v = 1; v <= n; ++v)
                if (in_set(b, v)) verts.push_back(v);
            for_each_permutation(r, [&](const std::vector<int>& perm) {
                BiPoly prod = BiPoly::one();
                for (int idx = 0; idx < r; ++idx) {
                    const BiPoly& entry =
                        m.at(verts[static_cast<size_t>(idx)], verts[static_cast<size_t>(perm[static_cast<size_t>(idx)])]);
                    if (entry.is_zero()) {
                        prod = BiPoly::zero();
                        break;
                    }
                    prod *= entry;
                }
                if (prod.is_zero()) return;
                std::vector<int> type = cycle_type_of(perm);
                type.insert(type.end(), static_cast<size_t>(n - r), 1);
                total += BiPoly(chi_at_type(lambda, type)) * prod;
            });
        }
        if (b == full_set(n)) break;
    }
    return total;
}

BiPoly immanant_bruteforce(const PolyMatrix& m, const Partition& lambda) {
    int n = m.n();
    if (n > kBruteForceMaxN) throw std::invalid_argument("immanant_bruteforce: n too large");
    if (lambda.n() != n) throw std::invalid_argument("immanant: partition size mismatch");
    BiPoly total;
    for_each_permutation(n, [&](const std::vector<int>& perm) {
        BiPoly prod = BiPoly::one();
        for (int i = 0; i < n; ++i) {
            const BiPoly& entry = m.at(i + 1, perm[static_cast<size_t>(i)] + 1);
            if (entry.is_zero()) {
                prod = BiPoly::zero();
                break;
            }
            prod *= entry;
        }
        if (prod.is_zero()) return;
        total += BiPoly(chi_at_type(lambda, cycle_type_of(perm))) * prod;
    });
    return total;
}

Rational immanant_bruteforce(const RatMatrix& m, const Partition& lambda) {
    int n = m.n();
    if (n > kBruteForceMaxN) throw std::invalid_argument("immanant_bruteforce: n too large");
    if (lambda.n() != n) throw std::invalid_argument("immanant: partition size mismatch");
    Rational total(0);
    for_each_permutation(n, [&](const std::vector<int>& perm) {
        Rational prod(1);
        for (int i = 0; i < n; ++i) {
            prod *= m.at(i + 1, perm[static_cast<size_t>(i)] + 1);
            if (prod == 0) break;
        }
        if (prod == 0) return;
        total += Rational(chi_at_type(lambda, cycle_type_of(perm))) * prod;
    });
    total.canonicalize();
    return total;
}

CoeffTable coeff_table_for_kind(const Tree& t, const Partition& lambda, MatrixKind kind) {
    CoeffTable out;
    out.lambda = lambda;
    if (kind == MatrixKind::QtLaplacian) {
        OrientTables tab = compute_orient_tables(t);
        return coeff_table(tab, lambda);
    }
    PolyMatrix ed = exp_distance(t);
    for (int r = 0; r <= t.n(); ++r) out.c.push_back(coeff_via_minors(ed, lambda, r));
    return out;
}

XPoly immanantal_polynomial(const Tree& t, const Partition& lambda, MatrixKind kind) {
    CoeffTable table = coeff_table_for_kind(t, lambda, kind);
    int n = t.n();
    std::vector<BiPoly> coeffs(static_cast<size_t>(n) + 1);
    for (int r = 0; r <= n; ++r) {
        BiPoly c = table.c[static_cast<size_t>(r)];
        if (r % 2) c = -c;
        coeffs[static_cast<size_t>(n - r)] = c;  // coefficient of x^{n-r}
    }
    return XPoly(std::move(coeffs));
}

MonotonicityVerdict monotonicity_check(const OrientTables& lower, const OrientTables& upper,
                                       const Partition& lambda, int r) {
    MonotonicityVerdict v;
    v.difference = coeff_via_orientations(lower, lambda, r) - coeff_via_orientations(upper, lambda, r);
    v.ok = v.difference.is_nonneg() && v.difference.is_qt_poly();
    return v;
}

bool ed_coefficient_relation(const Tree& t, int r) {
    int n = t.n();
    if (r < 0 || r > n) throw std::invalid_argument("ed_coefficient_relation: r out of range");
    PolyMatrix ed = exp_distance(t);
    // c^{ED}_{1^n,r} is a sum of principal-minor determinants.
    BiPoly lhs;
    for (VertexSet b = 0;; ++b) {
        if (__builtin_popcount(b) == r) {
            std::vector<int> verts;
            for (int v = 1; v <= n; ++v)
                if (in_set(b, v)) verts.push_back(v);
            lhs += det(principal_minor(ed, verts));
        }
        if (b == full_set(n)) break;
    }
    BiPoly one_minus_q2 = BiPoly::one() - BiPoly::monomial(2, 0);
    BiPoly rhs = a_r(t, n - r, 0).subst_t_eq_q();  // c^{Lq}_{1^n,n-r}
    return lhs * one_minus_q2 == one_minus_q2.pow(static_cast<unsigned>(r)) * rhs;
}

bool two_column_identity(const Tree& t, int k) {
    int n = t.n();
    if (n < 2) throw std::invalid_argument("two_column_identity: n >= 2");
    if (k < 0 || 2 * k > n) throw std::invalid_argument("two_column_identity: bad k");
    std::vector<int> parts(static_cast<size_t>(k), 2);
    parts.insert(parts.end(), static_cast<size_t>(n - 2 * k), 1);
    Partition lambda(parts);
    BiPoly lhs = immanant_bruteforce(exp_distance(t), lambda);
    BiPoly rhs = immanant_bruteforce(q_laplacian(t), lambda);
    BiPoly one_minus_q2 = BiPoly::one() - BiPoly::monomial(2, 0);
    return lhs == rhs * one_minus_q2.pow(static_cast<unsigned>(n - 2));
}

bool merris_watkins_check(const RatMatrix& a, const Partition& lambda) {
    RatMatrix inv = a.inverse();
    Rational lhs = immanant_bruteforce(a, lambda) * inv.determinant();
    Rational rhs = immanant_bruteforce(inv, lambda) * a.determinant();
    return lhs == rhs;
}

std::vector<Int> classical_laplacian_coeffs(const Tree& t, const Partition& lambda) {
    int n = t.n();
    if (n > kBruteForceMaxN) throw std::invalid_argument("classical coeffs: n too large");
    // Plain integer Laplacian, no q machinery anywhere.
    std::vector<std::vector<Int>> lap(static_cast<size_t>(n) + 1,
                                      std::vector<Int>(static_cast<size_t>(n) + 1, 0));
    for (int v = 1; v <= n; ++v) lap[static_cast<size_t>(v)][static_cast<size_t>(v)] = t.degree(v);
    for (auto [u, v] : t.edges()) {
        lap[static_cast<size_t>(u)][static_cast<size_t>(v)] = -1;
        lap[static_cast<size_t>(v)][static_cast<size_t>(u)] = -1;
    }
    std::vector<Int> out;
    for (int r = 0; r <= n; ++r) {
        Int total = 0;
        std::vector<int> verts;
        for (VertexSet b = 0;; ++b) {
            if (__builtin_popcount(b) == r) {
                verts.clear();
                for (int v = 1; v <= n; ++v)
                    if (in_set(b, v)) verts.push_back(v);
                for_each_permutation(r, [&](const std::vector<int>& perm) {
                    Int prod = 1;
                    for (int idx = 0; idx < r; ++idx) {
                        prod *= lap[static_cast<size_t>(verts[static_cast<size_t>(idx)])]
                                   [static_cast<size_t>(verts[static_cast<size_t>(perm[static_cast<size_t>(idx)])])];
                        if (prod == 0) break;
                    }
                    if (prod == 0) return;
                    std::vector<int> type = cycle_type_of(perm);
                    type.insert(type.end(), static_cast<size_t>(n - r), 1);
                    total += chi_at_type(lambda, type) * prod;
                });
            }
            if (b == full_set(n)) break;
        }
        out.push_back(total);
    }
    return out;
}

bool qt_unit_specialization(const Tree& t, const Partition& lambda) {
    OrientTables tab = compute_orient_tables(t);
    std::vector<Int> classical = classical_laplacian_coeffs(t, lambda);
    Rational one(1);
    for (int r = 0; r <= t.n(); ++r) {
        Rational val = coeff_via_orientations(tab, lambda, r).eval(one, one);
        if (val != Rational(classical[static_cast<size_t>(r)])) return false;
    }
    return true;
}

}  // namespace treeimm
