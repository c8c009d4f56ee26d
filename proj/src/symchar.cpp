#include "treeimm/symchar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace treeimm {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::n() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

bool Partition::is_hook() const {
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] != 1) return false;
    return !parts.empty();
}

bool Partition::is_two_column() const {
    for (int p : parts)
        if (p > 2) return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad partition: " + s);
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("empty partition");
    return Partition(parts);
}

std::vector<Partition> partitions(int n) {
    if (n < 1) throw std::invalid_argument("partitions: n >= 1");
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending lexicographic generation
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

namespace {

using MNKey = std::pair<std::vector<int>, std::vector<int>>;
std::map<MNKey, Int> mn_cache;
std::mutex mn_mutex;

// Murnaghan-Nakayama via beta-numbers: remove a rim hook of the first
// cycle length; sign is (-1)^{#beta strictly between b-s and b}.
Int mn_recurse(std::vector<int> lambda, std::vector<int> type) {
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    while (!type.empty() && type.back() == 0) type.pop_back();
    if (lambda.empty()) return type.empty() ? Int(1) : Int(0);
    if (type.empty()) return Int(0);

    MNKey key{lambda, type};
    {
        std::lock_guard<std::mutex> lock(mn_mutex);
        auto it = mn_cache.find(key);
        if (it != mn_cache.end()) return it->second;
    }

    int l = static_cast<int>(lambda.size());
    std::vector<int> beta(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) beta[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i)] + (l - 1 - i);

    int s = type.front();
    std::vector<int> rest(type.begin() + 1, type.end());
    Int total = 0;
    for (int i = 0; i < l; ++i) {
        int b = beta[static_cast<size_t>(i)];
        int nb = b - s;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int height = 0;
        for (int x : beta)
            if (x > nb && x < b) ++height;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(i)] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        int nl = static_cast<int>(nbeta.size());
        std::vector<int> nlambda(static_cast<size_t>(nl));
        for (int j = 0; j < nl; ++j) nlambda[static_cast<size_t>(j)] = nbeta[static_cast<size_t>(j)] - (nl - 1 - j);
        Int sub = mn_recurse(nlambda, rest);
        if (height % 2)
            total -= sub;
        else
            total += sub;
    }

    std::lock_guard<std::mutex> lock(mn_mutex);
    mn_cache.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int chi_at_type(const Partition& lambda, const std::vector<int>& cycle_type) {
    int sum = 0;
    for (int c : cycle_type) {
        if (c < 1) throw std::invalid_argument("cycle lengths must be positive");
        sum += c;
    }
    if (sum != lambda.n()) throw std::invalid_argument("cycle type size mismatch");
    std::vector<int> type = cycle_type;
    std::sort(type.rbegin(), type.rend());
    return mn_recurse(lambda.parts, type);
}

Int chi(const Partition& lambda, int j) {
    int n = lambda.n();
    if (j < 0 || 2 * j > n) throw std::invalid_argument("chi: j out of range");
    std::vector<int> type(static_cast<size_t>(j), 2);
    type.insert(type.end(), static_cast<size_t>(n - 2 * j), 1);
    return chi_at_type(lambda, type);
}

Int chi_dimension(const Partition& lambda) { return chi(lambda, 0); }

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int alpha_weight(const Partition& lambda, int i) {
    int n = lambda.n();
    if (i < 0 || 2 * i > n) throw std::invalid_argument("alpha: i out of range");
    Int total = 0;
    for (int j = 0; j <= i; ++j) total += binomial(i, j) * chi(lambda, j);
    return total;
}

Rational alpha(const Partition& lambda, int i) {
    Int w = alpha_weight(lambda, i);
    Rational a(w);
    Rational pow2(1);
    mpz_ui_pow_ui(pow2.get_num_mpz_t(), 2, static_cast<unsigned long>(i));
    a /= pow2;
    a.canonicalize();
    if (a < 0)
        throw std::domain_error("alpha_{" + lambda.to_string() + "," + std::to_string(i) +
                                "} negative: character sum inconsistency");
    return a;
}

}  // namespace treeimm
