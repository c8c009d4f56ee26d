#include "treeimm/polymatrix.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace treeimm {

size_t PolyMatrix::idx(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("matrix index");
    return static_cast<size_t>(i - 1) * static_cast<size_t>(n_) + static_cast<size_t>(j - 1);
}

PolyMatrix PolyMatrix::scaled_identity(int n, const BiPoly& s) {
    PolyMatrix m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = s;
    return m;
}

ArcWeighting ArcWeighting::canonical(const Tree& t) {
    ArcWeighting w;
    for (auto e : t.edges()) w.q_from_lower[e] = true;
    return w;
}

BiPoly ArcWeighting::arc_weight(int u, int v) const {
    auto key = std::minmax(u, v);
    auto it = q_from_lower.find({key.first, key.second});
    if (it == q_from_lower.end()) throw std::invalid_argument("arc weighting: not an edge");
    bool is_q = (u < v) ? it->second : !it->second;
    return is_q ? BiPoly::monomial(1, 0) : BiPoly::monomial(0, 1);
}

PolyMatrix qt_laplacian(const Tree& t, const ArcWeighting& w) {
    int n = t.n();
    PolyMatrix m(n);
    for (int i = 1; i <= n; ++i)
        m.at(i, i) = BiPoly::one() + BiPoly::qt_power(1, t.degree(i) - 1);
    for (auto [u, v] : t.edges()) {
        m.at(u, v) = -w.arc_weight(u, v);
        m.at(v, u) = -w.arc_weight(v, u);
    }
    return m;
}

PolyMatrix q_laplacian(const Tree& t) {
    return subst_t_eq_q(qt_laplacian(t, ArcWeighting::canonical(t)));
}

PolyMatrix subst_t_eq_q(const PolyMatrix& m) {
    PolyMatrix r(m.n());
    for (int i = 1; i <= m.n(); ++i)
        for (int j = 1; j <= m.n(); ++j) r.at(i, j) = m.at(i, j).subst_t_eq_q();
    return r;
}

PolyMatrix exp_distance(const Tree& t) {
    int n = t.n();
    const auto& d = t.distances();
    PolyMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.at(i, j) = BiPoly::monomial(d[static_cast<size_t>(i)][static_cast<size_t>(j)], 0);
    return m;
}

PolyMatrix qt_exp_distance(const Tree& t, const ArcWeighting& w) {
    int n = t.n();
    PolyMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        m.at(i, i) = BiPoly::one();
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            BiPoly prod = BiPoly::one();
            int cur = i;
            while (cur != j) {
                int nxt = t.next_on_path(cur, j);
                prod *= w.arc_weight(cur, nxt);
                cur = nxt;
            }
            m.at(i, j) = prod;
        }
    }
    return m;
}

BiPoly det(const PolyMatrix& m) {
    int n = m.n();
    if (n == 0) return BiPoly::one();
    if (n > 20) throw std::invalid_argument("det: matrix too large");
    // D[mask] = det of rows in mask against the first popcount(mask) columns.
    std::unordered_map<uint32_t, BiPoly> memo;
    memo.reserve(1u << n);
    auto rec = [&](auto&& self, uint32_t mask) -> BiPoly {
        if (mask == 0) return BiPoly::one();
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int col = __builtin_popcount(mask);  // expanding along column `col`
        BiPoly total;
        int sign_idx = 0;
        for (int row = 1; row <= n; ++row) {
            uint32_t bit = 1u << (row - 1);
            if (!(mask & bit)) continue;
            ++sign_idx;
            const BiPoly& entry = m.at(row, col);
            if (!entry.is_zero()) {
                BiPoly sub = self(self, mask & ~bit);
                BiPoly term = entry * sub;
                if ((sign_idx + col) % 2) term = -term;
                total += term;
            }
        }
        memo.emplace(mask, total);
        return total;
    };
    return rec(rec, (n == 32) ? ~0u : ((1u << n) - 1u));
}

PolyMatrix principal_minor(const PolyMatrix& m, const std::vector<int>& b) {
    int r = static_cast<int>(b.size());
    PolyMatrix out(r);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            out.at(i, j) = m.at(b[static_cast<size_t>(i - 1)], b[static_cast<size_t>(j - 1)]);
    return out;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("matmul: size mismatch");
    int n = a.n();
    PolyMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            const BiPoly& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 1; j <= n; ++j) {
                const BiPoly& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

size_t RatMatrix::idx(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("matrix index");
    return static_cast<size_t>(i - 1) * static_cast<size_t>(n_) + static_cast<size_t>(j - 1);
}

Rational RatMatrix::determinant() const {
    RatMatrix m = *this;
    Rational d(1);
    for (int col = 1; col <= n_; ++col) {
        int pivot = 0;
        for (int row = col; row <= n_; ++row)
            if (m.at(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot == 0) return Rational(0);
        if (pivot != col) {
            for (int j = 1; j <= n_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        for (int row = col + 1; row <= n_; ++row) {
            if (m.at(row, col) == 0) continue;
            Rational f = m.at(row, col) / m.at(col, col);
            for (int j = col; j <= n_; ++j) m.at(row, j) -= f * m.at(col, j);
        }
    }
    d.canonicalize();
    return d;
}

RatMatrix RatMatrix::inverse() const {
    RatMatrix m = *this;
    RatMatrix inv(n_);
    for (int i = 1; i <= n_; ++i) inv.at(i, i) = 1;
    for (int col = 1; col <= n_; ++col) {
        int pivot = 0;
        for (int row = col; row <= n_; ++row)
            if (m.at(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot == 0) throw std::domain_error("singular matrix");
        if (pivot != col)
            for (int j = 1; j <= n_; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Rational p = m.at(col, col);
        for (int j = 1; j <= n_; ++j) {
            m.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int row = 1; row <= n_; ++row) {
            if (row == col || m.at(row, col) == 0) continue;
            Rational f = m.at(row, col);
            for (int j = 1; j <= n_; ++j) {
                m.at(row, j) -= f * m.at(col, j);
                inv.at(row, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

RatMatrix eval_matrix(const PolyMatrix& m, const Rational& q0, const Rational& t0) {
    RatMatrix r(m.n());
    for (int i = 1; i <= m.n(); ++i)
        for (int j = 1; j <= m.n(); ++j) r.at(i, j) = m.at(i, j).eval(q0, t0);
    return r;
}

Signature signature_at(const Tree& t, const Rational& q0) {
    if (q0 == 1 || q0 == -1) throw std::invalid_argument("signature_at: q0 must not be +-1");
    int n = t.n();
    RatMatrix m = eval_matrix(q_laplacian(t), q0, q0);

    // Scale to integers; positive scale keeps minor signs.
    Int lcm_den = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Int den = m.at(i, j).get_den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        }
    std::vector<std::vector<Int>> a(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational scaled = m.at(i + 1, j + 1) * Rational(lcm_den);
            scaled.canonicalize();
            if (scaled.get_den() != 1) throw std::logic_error("scaling failed");
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] = scaled.get_num();
        }

    // Bareiss; pivot after step k is the k-th leading principal minor
    // (scaled by a positive constant).
    std::vector<int> signs;
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        Int pivot = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
        if (pivot == 0)
            throw std::domain_error("signature_at: zero principal minor at q0; perturb q0");
        signs.push_back(mpz_sgn(pivot.get_mpz_t()));
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * pivot -
                          a[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                              a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = num / prev;
            }
        prev = pivot;
    }
    Signature sig;
    int last = 1;
    for (int s : signs) {
        if (s != last) ++sig.neg;
        last = s;
    }
    sig.pos = n - sig.neg;
    sig.zero = 0;
    return sig;
}

}  // namespace treeimm
