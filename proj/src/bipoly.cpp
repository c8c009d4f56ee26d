#include "treeimm/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace treeimm {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (mpz_sgn(r.get_den().get_mpz_t()) == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

BiPoly::BiPoly(const Int& constant) {
    if (constant != 0) terms_[{0, 0}] = constant;
}

BiPoly::BiPoly(long constant) {
    if (constant != 0) terms_[{0, 0}] = Int(constant);
}

BiPoly BiPoly::monomial(int a, int b, Int coeff) {
    if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
    BiPoly p;
    if (coeff != 0) p.terms_[{a, b}] = std::move(coeff);
    return p;
}

BiPoly BiPoly::from_terms(const std::vector<std::tuple<int, int, long>>& terms) {
    BiPoly p;
    for (const auto& [a, b, c] : terms) p.add_term(a, b, Int(c));
    return p;
}

Int BiPoly::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Int(0) : it->second;
}

void BiPoly::add_term(int a, int b, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r = *this;
    r += o;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly r = *this;
    r -= o;
    return r;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    *this = *this * o;
    return *this;
}

BiPoly BiPoly::operator*(const Int& c) const {
    BiPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly r = one();
    BiPoly base = *this;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

BiPoly BiPoly::subst_t_eq_q() const {
    BiPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e.first + e.second, 0, c);
    return r;
}

Rational BiPoly::eval(const Rational& q0, const Rational& t0) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term(c);
        Rational qp(q0), tp(t0);
        mpz_pow_ui(qp.get_num_mpz_t(), q0.get_num_mpz_t(), e.first);
        mpz_pow_ui(qp.get_den_mpz_t(), q0.get_den_mpz_t(), e.first);
        mpz_pow_ui(tp.get_num_mpz_t(), t0.get_num_mpz_t(), e.second);
        mpz_pow_ui(tp.get_den_mpz_t(), t0.get_den_mpz_t(), e.second);
        acc += term * qp * tp;
    }
    acc.canonicalize();
    return acc;
}

bool BiPoly::is_nonneg() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

bool BiPoly::is_qt_poly() const {
    for (const auto& [e, c] : terms_)
        if (e.first != e.second) return false;
    return true;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = e.first > 0 || e.second > 0;
        if (a != 1 || !has_var) os << a.get_str();
        if (e.first > 0) {
            os << "q";
            if (e.first > 1) os << "^" << e.first;
        }
        if (e.second > 0) {
            os << "t";
            if (e.second > 1) os << "^" << e.second;
        }
    }
    return os.str();
}

std::vector<std::tuple<int, int, std::string>> BiPoly::serialize() const {
    std::vector<std::tuple<int, int, std::string>> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.emplace_back(e.first, e.second, c.get_str());
    return out;
}

const BiPoly& XPoly::coeff(int i) const {
    static const BiPoly kZero;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

std::string XPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BiPoly& c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (i > 0) os << "*x^" << i;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace treeimm
