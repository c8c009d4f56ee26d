#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "treeimm/symchar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

using namespace treeimm;

namespace {

// Independent character oracle for n <= 5: permutation characters of the
// tabloid actions (induced trivial modules), then Gram-Schmidt against the
// class-function inner product.  Relies only on counting fixed tabloids.
struct SmallGroupOracle {
    int n;
    std::vector<std::vector<int>> perms;           // all of S_n as image vectors
    std::vector<Partition> lams;                   // descending lex
    std::map<std::vector<int>, int> type_index;    // sorted cycle type -> class id
    std::vector<std::vector<int>> class_members;   // perm indices per class
    std::vector<std::vector<Rational>> chi_table;  // [lambda][class]

    explicit SmallGroupOracle(int n_) : n(n_) {
        std::vector<int> p(static_cast<size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        lams = partitions(n);
        for (size_t i = 0; i < lams.size(); ++i) {
            std::vector<int> key = lams[i].parts;
            std::sort(key.begin(), key.end());
            type_index[key] = static_cast<int>(i);
        }
        class_members.resize(lams.size());
        for (size_t pi = 0; pi < perms.size(); ++pi) {
            std::vector<int> type = cycle_type(perms[pi]);
            class_members[static_cast<size_t>(type_index.at(type))].push_back(static_cast<int>(pi));
        }
        build_table();
    }

    static std::vector<int> cycle_type(const std::vector<int>& perm) {
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
        std::sort(type.begin(), type.end());
        return type;
    }

    // A tabloid of shape lambda is exactly an assignment of 0..n-1 to row
    // indices with the prescribed row sizes (rows stay distinguishable).
    std::vector<std::vector<int>> tabloids(const Partition& lam) const {
        std::vector<std::vector<int>> out;
        std::vector<int> assign(static_cast<size_t>(n), -1);
        std::vector<int> remaining = lam.parts;
        auto rec = [&](auto&& self, int v) -> void {
            if (v == n) {
                out.push_back(assign);
                return;
            }
            for (size_t row = 0; row < remaining.size(); ++row) {
                if (remaining[row] == 0) continue;
                remaining[row]--;
                assign[static_cast<size_t>(v)] = static_cast<int>(row);
                self(self, v + 1);
                remaining[row]++;
            }
        };
        rec(rec, 0);
        return out;
    }

    // permutation character of the tabloid action: fixed points of each perm
    std::vector<Rational> tabloid_character(const Partition& lam) const {
        auto tabs = tabloids(lam);
        std::vector<Rational> val(lams.size(), Rational(0));
        for (size_t ci = 0; ci < class_members.size(); ++ci) {
            const auto& perm = perms[static_cast<size_t>(class_members[ci][0])];
            long fixed = 0;
            for (const auto& tab : tabs) {
                std::vector<int> image(tab.size());
                for (size_t v = 0; v < tab.size(); ++v)
                    image[static_cast<size_t>(perm[v])] = tab[v];
                if (image == tab) ++fixed;
            }
            val[ci] = Rational(fixed);
        }
        return val;
    }

    Rational inner(const std::vector<Rational>& f, const std::vector<Rational>& g) const {
        Rational total(0);
        long order = static_cast<long>(perms.size());
        for (size_t ci = 0; ci < class_members.size(); ++ci)
            total += Rational(static_cast<long>(class_members[ci].size())) * f[ci] * g[ci];
        total /= Rational(order);
        total.canonicalize();
        return total;
    }

    void build_table() {
        // process shapes in descending dominance-compatible (lex) order;
        // xi_lambda = chi_lambda + sum_{mu > lambda} K_{mu lambda} chi_mu
        chi_table.assign(lams.size(), {});
        for (size_t li = 0; li < lams.size(); ++li) {
            std::vector<Rational> xi = tabloid_character(lams[li]);
            for (size_t mj = 0; mj < li; ++mj) {
                Rational c = inner(xi, chi_table[mj]);
                for (size_t ci = 0; ci < xi.size(); ++ci) xi[ci] -= c * chi_table[mj][ci];
            }
            CHECK(inner(xi, xi) == Rational(1));
            chi_table[li] = xi;
        }
    }

    Rational chi_value(const Partition& lam, std::vector<int> type) const {
        std::sort(type.begin(), type.end());
        size_t li = 0;
        while (!(lams[li] == lam)) ++li;
        return chi_table[li][static_cast<size_t>(type_index.at(type))];
    }
};

}  // namespace

TEST_CASE("partition generation") {
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(1).size() == 1);
    CHECK(partitions(8).size() == 22);
    CHECK(partitions(10).size() == 42);
    auto p4 = partitions(4);
    CHECK(p4.front().parts == std::vector<int>{4});
    CHECK(p4.back().parts == std::vector<int>{1, 1, 1, 1});
    CHECK(Partition::parse("2,1,1").parts == std::vector<int>{2, 1, 1});
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
}

TEST_CASE("sign and trivial characters") {
    for (int n = 2; n <= 8; ++n) {
        Partition sign(std::vector<int>(static_cast<size_t>(n), 1));
        Partition triv({n});
        for (int j = 0; 2 * j <= n; ++j) {
            CHECK(chi(sign, j) == (j % 2 ? Int(-1) : Int(1)));
            CHECK(chi(triv, j) == 1);
        }
    }
}

TEST_CASE("chi on (2,1)") {
    Partition lam({2, 1});
    CHECK(chi(lam, 0) == 2);
    CHECK(chi(lam, 1) == 0);
}

TEST_CASE("hook length dimensions") {
    // f^lambda from chi(.,0) against the hook length formula
    for (int n = 2; n <= 8; ++n) {
        for (const auto& lam : partitions(n)) {
            Int hooks = 1;
            for (int i = 0; i < lam.length(); ++i)
                for (int j = 0; j < lam.parts[static_cast<size_t>(i)]; ++j) {
                    int arm = lam.parts[static_cast<size_t>(i)] - j - 1;
                    int leg = 0;
                    for (int ii = i + 1; ii < lam.length(); ++ii)
                        if (lam.parts[static_cast<size_t>(ii)] > j) ++leg;
                    hooks *= Int(arm + leg + 1);
                }
            Int fact = 1;
            for (int v = 2; v <= n; ++v) fact *= v;
            CHECK(chi_dimension(lam) * hooks == fact);
        }
    }
}

TEST_CASE("column orthogonality spot check") {
    for (int n = 2; n <= 8; ++n)
        for (int j = 1; 2 * j <= n; ++j) {
            Int total = 0;
            for (const auto& lam : partitions(n)) total += chi(lam, 0) * chi(lam, j);
            CHECK(total == 0);
        }
}

TEST_CASE("murnaghan-nakayama agrees with the tabloid oracle") {
    for (int n = 2; n <= 5; ++n) {
        SmallGroupOracle oracle(n);
        for (const auto& lam : partitions(n))
            for (const auto& mu : partitions(n)) {
                std::vector<int> type = mu.parts;
                CHECK(Rational(chi_at_type(lam, type)) == oracle.chi_value(lam, type));
            }
    }
}

TEST_CASE("alpha hook formula and nonnegativity") {
    for (int n = 2; n <= 10; ++n) {
        for (const auto& lam : partitions(n))
            for (int i = 0; 2 * i <= n; ++i) CHECK(alpha(lam, i) >= 0);
        for (int k = 1; k <= n; ++k) {
            std::vector<int> parts{k};
            parts.insert(parts.end(), static_cast<size_t>(n - k), 1);
            Partition hook(parts);
            for (int i = 0; 2 * i <= n; ++i)
                CHECK(alpha(hook, i) == Rational(binomial(n - i - 1, k - i - 1)));
        }
    }
}

TEST_CASE("alpha fixed values") {
    // n=4, lambda=(2,1,1): alpha = (3,1,0)
    Partition lam({2, 1, 1});
    CHECK(alpha(lam, 0) == 3);
    CHECK(alpha(lam, 1) == 1);
    CHECK(alpha(lam, 2) == 0);
    // lambda = 1^n: alpha_0 = 1, others 0
    Partition sign({1, 1, 1, 1, 1});
    CHECK(alpha(sign, 0) == 1);
    CHECK(alpha(sign, 1) == 0);
    CHECK(alpha(sign, 2) == 0);
    // lambda = (2,2): chi values (2,0,2) give alpha = (2,1,1)
    Partition sq({2, 2});
    CHECK(chi(sq, 0) == 2);
    CHECK(chi(sq, 1) == 0);
    CHECK(chi(sq, 2) == 2);
    CHECK(alpha(sq, 0) == 2);
    CHECK(alpha(sq, 1) == 1);
    CHECK(alpha(sq, 2) == 1);
}

TEST_CASE("chi argument validation") {
    Partition lam({2, 1});
    CHECK_THROWS_AS(chi(lam, 2), std::invalid_argument);
    CHECK_THROWS_AS(chi_at_type(lam, {2, 2}), std::invalid_argument);
}
