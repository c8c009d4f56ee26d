#pragma once

/*
 * Exact sparse bivariate polynomials over arbitrary-precision integers.
 *
 * A BiPoly is a map from exponent pairs (a,b) -- meaning q^a t^b -- to
 * nonzero mpz coefficients, kept sorted by (a,b) so iteration order and
 * serialization are deterministic.  Everything the library computes lives
 * in this ring; rationals appear only at evaluation points.
 */

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace treeimm {

using Int = mpz_class;
using Rational = mpq_class;

// Parse "p", "-p" or "p/q" exactly; throws std::invalid_argument on junk.
Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& r);

class BiPoly {
public:
    using Exp = std::pair<int, int>;  // (power of q, power of t)
    using TermMap = std::map<Exp, Int>;

    BiPoly() = default;
    explicit BiPoly(const Int& constant);
    explicit BiPoly(long constant);

    static BiPoly zero() { return BiPoly{}; }
    static BiPoly one() { return BiPoly{1}; }
    static BiPoly monomial(int a, int b, Int coeff = 1);
    // (qt)^k, the subring generator u = qt raised to k
    static BiPoly qt_power(int k, Int coeff = 1) { return monomial(k, k, std::move(coeff)); }
    static BiPoly from_terms(const std::vector<std::tuple<int, int, long>>& terms);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(int a, int b) const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly operator*(const Int& c) const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return terms_ != o.terms_; }

    BiPoly pow(unsigned e) const;

    // Every monomial q^a t^b becomes q^{a+b}; result is univariate in q.
    BiPoly subst_t_eq_q() const;

    // Exact evaluation at rational points.
    Rational eval(const Rational& q0, const Rational& t0) const;

    // True iff every stored coefficient is > 0 (zero polynomial counts).
    bool is_nonneg() const;
    // True iff every monomial has equal q and t degree (lies in Z[qt]).
    bool is_qt_poly() const;

    std::string to_string() const;
    // Sorted list of [a, b, coefficient-as-decimal-string]; the wire format.
    std::vector<std::tuple<int, int, std::string>> serialize() const;

private:
    TermMap terms_;
    void add_term(int a, int b, const Int& c);
};

inline BiPoly operator*(const Int& c, const BiPoly& p) { return p * c; }

// Polynomial in x whose coefficients are BiPoly; coeffs[i] multiplies x^i.
class XPoly {
public:
    XPoly() = default;
    explicit XPoly(std::vector<BiPoly> coeffs) : coeffs_(std::move(coeffs)) {}

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BiPoly& coeff(int i) const;
    const std::vector<BiPoly>& coeffs() const { return coeffs_; }
    bool operator==(const XPoly& o) const { return coeffs_ == o.coeffs_; }

    std::string to_string() const;

private:
    std::vector<BiPoly> coeffs_;
};

}  // namespace treeimm
