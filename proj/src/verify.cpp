#include "treeimm/verify.hpp"

#include "treeimm/gts.hpp"
#include "treeimm/immanantal.hpp"
#include "treeimm/moments.hpp"
#include "treeimm/orientmatch.hpp"
#include "treeimm/polymatrix.hpp"

#include "json.hpp"

#include <atomic>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace treeimm {

void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& fn) {
    unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::thread::hardware_concurrency();
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(count));
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

namespace {

struct SweepState {
    int n = 0;
    HasseDiagram poset;
    std::vector<CoverWitness> witnesses;
    std::vector<LabeledCoverPair> pairs;
    std::vector<OrientTables> lower_tabs, upper_tabs;  // aligned with pairs
    std::vector<OrientTables> rep_tabs;                // aligned with poset nodes
    std::vector<std::vector<BiPoly>> ed_char;          // per node, c^{ED}_{1^n,r}
    std::vector<Partition> lams;
};

std::vector<BiPoly> ed_char_coeffs(const Tree& t) {
    int n = t.n();
    PolyMatrix ed = exp_distance(t);
    std::vector<BiPoly> out(static_cast<size_t>(n) + 1);
    for (VertexSet b = 0;; ++b) {
        int r = __builtin_popcount(b);
        std::vector<int> verts;
        for (int v = 1; v <= n; ++v)
            if (in_set(b, v)) verts.push_back(v);
        out[static_cast<size_t>(r)] += det(principal_minor(ed, verts));
        if (b == full_set(n)) break;
    }
    return out;
}

SweepState build_state(int n, bool need_pairs, bool need_tabs, bool need_ed, int max_n) {
    SweepState st;
    st.n = n;
    st.poset = build_poset(n, std::max(n, max_n));
    st.lams = partitions(n);
    if (need_pairs) {
        st.witnesses = cover_pairs(st.poset);
        for (const auto& w : st.witnesses) {
            LabeledCoverPair pair = label_cover_pair(st.poset.reps[static_cast<size_t>(w.lower)], w.move);
            if (need_tabs) {
                st.lower_tabs.push_back(compute_orient_tables(pair.t1));
                st.upper_tabs.push_back(compute_orient_tables(pair.t2));
            }
            st.pairs.push_back(std::move(pair));
        }
    }
    if (need_tabs)
        for (const auto& rep : st.poset.reps) st.rep_tabs.push_back(compute_orient_tables(rep));
    if (need_ed)
        for (const auto& rep : st.poset.reps) st.ed_char.push_back(ed_char_coeffs(rep));
    return st;
}

using ItemFn = std::function<VerifyItem()>;

void add_main_items(const SweepState& st, const VerifyOptions& opts, std::vector<ItemFn>& items) {
    for (size_t p = 0; p < st.pairs.size(); ++p) {
        const auto& w = st.witnesses[p];
        std::string lo = st.poset.nodes[static_cast<size_t>(w.lower)];
        std::string hi = st.poset.nodes[static_cast<size_t>(w.upper)];
        for (const auto& lam : st.lams) {
            if (opts.lambda_filter && !(lam == *opts.lambda_filter)) continue;
            for (int r = 0; r <= st.n; ++r) {
                if (opts.r_filter && r != *opts.r_filter) continue;
                items.push_back([&st, p, lam, r, lo, hi]() {
                    VerifyItem it;
                    it.kind = "coeff_monotonicity";
                    it.pair_lower = lo;
                    it.pair_upper = hi;
                    it.lambda = lam.to_string();
                    it.r = r;
                    auto v = monotonicity_check(st.lower_tabs[p], st.upper_tabs[p], lam, r);
                    it.ok = v.ok;
                    it.detail = v.difference.to_string();
                    return it;
                });
            }
        }
    }
}

void add_identity_items(const SweepState& st, const VerifyOptions& opts, std::vector<ItemFn>& items) {
    int n = st.n;
    for (size_t ti = 0; ti < st.poset.reps.size(); ++ti) {
        const Tree& t = st.poset.reps[ti];
        std::string code = st.poset.nodes[ti];

        items.push_back([&t, code, n]() {
            VerifyItem it;
            it.kind = "m_a_identity";
            it.detail = code;
            it.ok = true;
            for (VertexSet b = 0;; ++b) {
                int r = __builtin_popcount(b);
                for (int j = 0; 2 * j <= r; ++j)
                    if (!check_m_a_identity(t, b, j)) it.ok = false;
                if (b == full_set(n)) break;
            }
            return it;
        });

        items.push_back([&t, code, n]() {
            VerifyItem it;
            it.kind = "minor_determinants";
            it.detail = code;
            it.ok = true;
            PolyMatrix lap = qt_laplacian(t, ArcWeighting::canonical(t));
            for (VertexSet b = 0;; ++b) {
                std::vector<int> verts;
                for (int v = 1; v <= n; ++v)
                    if (in_set(b, v)) verts.push_back(v);
                if (det(principal_minor(lap, verts)) != a_poly(t, b, 0)) it.ok = false;
                if (b == full_set(n)) break;
            }
            return it;
        });

        items.push_back([&t, code, n]() {
            VerifyItem it;
            it.kind = "det_inverse";
            it.detail = code;
            ArcWeighting w = ArcWeighting::canonical(t);
            PolyMatrix lap = qt_laplacian(t, w);
            PolyMatrix ed = qt_exp_distance(t, w);
            BiPoly one_minus_u = BiPoly::one() - BiPoly::qt_power(1);
            bool ok = det(lap) == one_minus_u;
            ok = ok && det(ed) == one_minus_u.pow(static_cast<unsigned>(n - 1));
            ok = ok && matmul(ed, lap) == PolyMatrix::scaled_identity(n, one_minus_u);
            it.ok = ok;
            return it;
        });

        std::vector<Rational> sig_points;
        for (const char* q0 : {"2", "3/2", "-2", "1/2", "-1/2"}) sig_points.push_back(parse_rational(q0));
        if (opts.extra_q0 && *opts.extra_q0 != 1 && *opts.extra_q0 != -1)
            sig_points.push_back(*opts.extra_q0);
        for (const Rational& q : sig_points) {
            items.push_back([&t, code, n, q]() {
                VerifyItem it;
                it.kind = "sturm_signature";
                it.detail = code + std::string(" q0=") + rational_to_string(q);
                Signature expected;
                if (q > 1 || q < -1)
                    expected = {n - 1, 1, 0};
                else
                    expected = {n, 0, 0};
                it.ok = signature_at(t, q) == expected;
                return it;
            });
        }

        for (const auto& lam : st.lams) {
            if (opts.lambda_filter && !(lam == *opts.lambda_filter)) continue;
            items.push_back([&st, ti, &t, lam, code, n]() {
                VerifyItem it;
                it.kind = "route_agreement";
                it.lambda = lam.to_string();
                it.detail = code;
                it.ok = true;
                bool minors = n <= 6 || (n == 7 && (lam.is_hook() && (lam.length() == 1 ||
                                                                      lam.parts[0] == 1)));
                PolyMatrix lap = qt_laplacian(t, ArcWeighting::canonical(t));
                for (int r = 0; r <= n; ++r) {
                    BiPoly via_m = coeff_via_matchings(st.rep_tabs[ti], lam, r);
                    BiPoly via_o = coeff_via_orientations(st.rep_tabs[ti], lam, r);
                    if (via_m != via_o) it.ok = false;
                    if (minors && coeff_via_minors(lap, lam, r) != via_o) it.ok = false;
                }
                if (!minors) it.detail += " (combinatorial routes only)";
                return it;
            });

            if (n <= 6) {
                items.push_back([&t, lam, code]() {
                    VerifyItem it;
                    it.kind = "qt_unit_specialization";
                    it.lambda = lam.to_string();
                    it.detail = code;
                    it.ok = qt_unit_specialization(t, lam);
                    return it;
                });
            }
        }
    }

    items.push_back([n]() {
        VerifyItem it;
        it.kind = "alpha_nonneg";
        it.ok = true;
        try {
            for (const auto& lam : partitions(n))
                for (int i = 0; 2 * i <= n; ++i) {
                    Rational a = alpha(lam, i);
                    if (a.get_den() != 1)
                        it.detail += " non-integer alpha at " + lam.to_string() + "," + std::to_string(i);
                }
        } catch (const std::domain_error& e) {
            it.ok = false;
            it.detail = e.what();
        }
        return it;
    });

    items.push_back([n]() {
        VerifyItem it;
        it.kind = "alpha_hook_formula";
        it.ok = true;
        for (int k = 1; k <= n; ++k) {
            std::vector<int> parts{k};
            parts.insert(parts.end(), static_cast<size_t>(n - k), 1);
            Partition lam(parts);
            for (int i = 0; 2 * i <= n; ++i)
                if (alpha(lam, i) != Rational(binomial(n - i - 1, k - i - 1))) it.ok = false;
        }
        return it;
    });

    // star <= any tree <= path, coefficientwise at q = t = 1
    if (n >= 2) {
        int star_idx = st.poset.index_of(canonical_code(star_tree(n)));
        int path_idx = st.poset.index_of(canonical_code(path_tree(n)));
        for (const auto& lam : st.lams) {
            if (opts.lambda_filter && !(lam == *opts.lambda_filter)) continue;
            items.push_back([&st, lam, star_idx, path_idx, n]() {
                VerifyItem it;
                it.kind = "star_path_sandwich";
                it.lambda = lam.to_string();
                it.ok = true;
                Rational one(1);
                for (int r = 0; r <= n; ++r) {
                    Rational lo = coeff_via_orientations(st.rep_tabs[static_cast<size_t>(star_idx)], lam, r)
                                      .eval(one, one);
                    Rational hi = coeff_via_orientations(st.rep_tabs[static_cast<size_t>(path_idx)], lam, r)
                                      .eval(one, one);
                    for (const auto& tab : st.rep_tabs) {
                        Rational mid = coeff_via_orientations(tab, lam, r).eval(one, one);
                        if (mid < lo || hi < mid) it.ok = false;
                    }
                }
                return it;
            });
        }
    }
}

void add_injection_items(const SweepState& st, const VerifyOptions& opts, std::vector<ItemFn>& items) {
    for (size_t p = 0; p < st.pairs.size(); ++p) {
        const auto& w = st.witnesses[p];
        std::string lo = st.poset.nodes[static_cast<size_t>(w.lower)];
        std::string hi = st.poset.nodes[static_cast<size_t>(w.upper)];
        for (int r = 0; r <= st.n; ++r) {
            if (opts.r_filter && r != *opts.r_filter) continue;
            for (int i = 0; 2 * i <= r; ++i) {
                items.push_back([&st, p, r, i, lo, hi]() {
                    VerifyItem it;
                    it.kind = "injection";
                    it.pair_lower = lo;
                    it.pair_upper = hi;
                    it.r = r;
                    InjectionReport rep = verify_injection(st.pairs[p], r, i);
                    it.ok = rep.ok();
                    it.unverifiable = rep.unverifiable;
                    std::ostringstream os;
                    os << "i=" << i << " mapped=" << rep.mapped << " collisions=" << rep.collisions
                       << " aw_mismatches=" << rep.aw_mismatches
                       << " bidir_mismatches=" << rep.bidir_mismatches
                       << " unverifiable=" << rep.unverifiable
                       << " aggregate=" << (rep.aggregate_ok ? "ok" : "FAIL");
                    it.detail = os.str();
                    return it;
                });
            }
        }
    }
}

void add_moment_items(const SweepState& st, const VerifyOptions& opts, std::vector<ItemFn>& items) {
    int n = st.n;
    for (size_t ti = 0; ti < st.poset.reps.size(); ++ti) {
        const Tree& t = st.poset.reps[ti];
        std::string code = st.poset.nodes[ti];
        items.push_back([&t, code, n]() {
            VerifyItem it;
            it.kind = "moment_routes";
            it.detail = code;
            it.ok = true;
            try {
                for (int i = 1; i <= n; ++i) {
                    BiPoly m1 = moment(t, i, MomentRoute::Definition);
                    BiPoly m2 = moment(t, i, MomentRoute::Alternate);
                    BiPoly m3 = moment(t, i, MomentRoute::Orientation);
                    if (m1 != m2 || m1 != m3) it.ok = false;
                }
            } catch (const std::logic_error& e) {
                it.ok = false;
                it.detail += std::string(" ") + e.what();
            }
            return it;
        });
        if (n >= 2)
            items.push_back([&t, code]() {
                VerifyItem it;
                it.kind = "moment_theorem";
                it.detail = code;
                it.ok = moment_theorem_check(t);
                return it;
            });
        items.push_back([&t, code, n]() {
            VerifyItem it;
            it.kind = "moment_classical_u1";
            it.detail = code;
            it.ok = true;
            Rational one(1);
            for (int i = 1; i <= n; ++i)
                if (moment(t, i).eval(one, one) != Rational(classical_moment(t, i))) it.ok = false;
            return it;
        });
    }
    for (size_t p = 0; p < st.pairs.size(); ++p) {
        const auto& w = st.witnesses[p];
        std::string lo = st.poset.nodes[static_cast<size_t>(w.lower)];
        std::string hi = st.poset.nodes[static_cast<size_t>(w.upper)];
        items.push_back([&st, p, lo, hi]() {
            VerifyItem it;
            it.kind = "moment_sum_monotone";
            it.pair_lower = lo;
            it.pair_upper = hi;
            it.ok = moment_monotonicity(st.pairs[p], MomentMode::Sum);
            return it;
        });
        std::vector<Rational> points;
        for (const char* q0 : {"1/2", "1", "2"}) points.push_back(parse_rational(q0));
        if (opts.extra_q0) points.push_back(*opts.extra_q0);
        for (const Rational& q0 : points) {
            items.push_back([&st, p, lo, hi, q0]() {
                VerifyItem it;
                it.kind = "moment_min_monotone";
                it.pair_lower = lo;
                it.pair_upper = hi;
                it.detail = "q0=" + rational_to_string(q0);
                it.ok = moment_monotonicity(st.pairs[p], MomentMode::MinAtQ, q0);
                return it;
            });
        }
    }
    items.push_back([&st]() {
        VerifyItem it;
        it.kind = "max_moment_counterexample_search";
        it.ok = true;  // informational: violations only show up at larger sizes
        Rational one(1);
        int found = 0;
        for (const auto& pair : st.pairs) {
            auto max_at = [&](const Tree& t) {
                Rational best;
                for (int i = 1; i <= t.n(); ++i) {
                    Rational v = moment(t, i).eval(one, one);
                    if (i == 1 || v > best) best = v;
                }
                return best;
            };
            if (max_at(pair.t2) > max_at(pair.t1)) ++found;
        }
        it.detail = found ? "counterexample pairs at u=1: " + std::to_string(found)
                          : "no max-moment violation among these cover pairs";
        return it;
    });
}

void add_ed_items(const SweepState& st, const VerifyOptions& opts, std::vector<ItemFn>& items) {
    int n = st.n;
    for (size_t ti = 0; ti < st.poset.reps.size(); ++ti) {
        const Tree& t = st.poset.reps[ti];
        std::string code = st.poset.nodes[ti];
        items.push_back([&t, code, n]() {
            VerifyItem it;
            it.kind = "ed_det_inverse";
            it.detail = code;
            PolyMatrix ed = exp_distance(t);
            BiPoly one_minus_q2 = BiPoly::one() - BiPoly::monomial(2, 0);
            bool ok = det(ed) == one_minus_q2.pow(static_cast<unsigned>(n - 1));
            ok = ok && matmul(ed, q_laplacian(t)) == PolyMatrix::scaled_identity(n, one_minus_q2);
            it.ok = ok;
            return it;
        });
        for (int r = 0; r <= n; ++r) {
            if (opts.r_filter && r != *opts.r_filter) continue;
            items.push_back([&t, code, r]() {
                VerifyItem it;
                it.kind = "ed_coefficient_relation";
                it.detail = code;
                it.r = r;
                it.ok = ed_coefficient_relation(t, r);
                return it;
            });
        }
        if (n >= 2 && n <= 6) {
            for (int k = 0; 2 * k <= n; ++k) {
                items.push_back([&t, code, k]() {
                    VerifyItem it;
                    it.kind = "two_column_identity";
                    it.detail = code + " k=" + std::to_string(k);
                    it.ok = two_column_identity(t, k);
                    return it;
                });
            }
        }
    }

    std::vector<Rational> points;
    for (const char* q0 : {"1/2", "2"}) points.push_back(parse_rational(q0));
    if (opts.extra_q0 && *opts.extra_q0 != 1 && *opts.extra_q0 != -1)
        points.push_back(*opts.extra_q0);
    for (size_t p = 0; p < st.pairs.size(); ++p) {
        const auto& w = st.witnesses[p];
        std::string lo = st.poset.nodes[static_cast<size_t>(w.lower)];
        std::string hi = st.poset.nodes[static_cast<size_t>(w.upper)];
        for (const Rational& q : points) {
            items.push_back([&st, &w, lo, hi, q, n]() {
                VerifyItem it;
                it.kind = "ed_charpoly_pointwise";
                it.pair_lower = lo;
                it.pair_upper = hi;
                it.detail = "q0=" + rational_to_string(q);
                it.ok = true;
                for (int r = 0; r <= n; ++r) {
                    Rational a = st.ed_char[static_cast<size_t>(w.upper)][static_cast<size_t>(r)].eval(q, q);
                    Rational b = st.ed_char[static_cast<size_t>(w.lower)][static_cast<size_t>(r)].eval(q, q);
                    if (abs(a) > abs(b)) it.ok = false;
                }
                return it;
            });
            if (n >= 2 && n <= 6) {
                items.push_back([&st, &w, lo, hi, q, n]() {
                    VerifyItem it;
                    it.kind = "ed_immanant_pointwise";
                    it.pair_lower = lo;
                    it.pair_upper = hi;
                    it.detail = "two-column q0=" + rational_to_string(q);
                    it.ok = true;
                    PolyMatrix ed_lo = exp_distance(st.poset.reps[static_cast<size_t>(w.lower)]);
                    PolyMatrix ed_hi = exp_distance(st.poset.reps[static_cast<size_t>(w.upper)]);
                    for (int k = 0; 2 * k <= n; ++k) {
                        std::vector<int> parts(static_cast<size_t>(k), 2);
                        parts.insert(parts.end(), static_cast<size_t>(n - 2 * k), 1);
                        Partition lam(parts);
                        Rational a = immanant_bruteforce(ed_hi, lam).eval(q, q);
                        Rational b = immanant_bruteforce(ed_lo, lam).eval(q, q);
                        if (abs(a) > abs(b)) it.ok = false;
                    }
                    return it;
                });
            }
        }
    }

    // Merris-Watkins on random invertible rational matrices, sizes 4 and 5,
    // with a non-two-column negative control.
    items.push_back([]() {
        VerifyItem it;
        it.kind = "merris_watkins";
        it.ok = true;
        std::mt19937 rng(20240811);
        std::uniform_int_distribution<int> num(-9, 9);
        std::uniform_int_distribution<int> den(1, 4);
        int negative_failures = 0;
        for (int size : {4, 5}) {
            auto two_cols = [&]() {
                std::vector<Partition> out;
                for (int k = 0; 2 * k <= size; ++k) {
                    std::vector<int> parts(static_cast<size_t>(k), 2);
                    parts.insert(parts.end(), static_cast<size_t>(size - 2 * k), 1);
                    out.push_back(Partition(parts));
                }
                return out;
            }();
            for (int trial = 0; trial < 10; ++trial) {
                RatMatrix a(size);
                do {
                    for (int i = 1; i <= size; ++i)
                        for (int j = 1; j <= size; ++j) {
                            a.at(i, j) = Rational(num(rng), den(rng));
                            a.at(i, j).canonicalize();
                        }
                } while (a.determinant() == 0);
                for (const auto& lam : two_cols)
                    if (!merris_watkins_check(a, lam)) it.ok = false;
                if (size == 4 && !merris_watkins_check(a, Partition({3, 1}))) ++negative_failures;
            }
        }
        if (negative_failures == 0) {
            it.ok = false;
            it.detail = "negative control (3,1) unexpectedly satisfied the identity everywhere";
        } else {
            it.detail = "negative control (3,1) failed on " + std::to_string(negative_failures) +
                        "/10 matrices as expected";
        }
        return it;
    });
}

}  // namespace

VerifyReport run_verify(const std::string& suite, int n, const VerifyOptions& opts) {
    if (n < 1) throw std::invalid_argument("verify: n >= 1");
    if (n > opts.max_n && !opts.max_n_override)
        throw std::invalid_argument("verify: n exceeds max-n guard (use the override flag)");
    bool s_main = suite == "main" || suite == "all";
    bool s_ident = suite == "identities" || suite == "all";
    bool s_inj = suite == "injections" || suite == "all";
    bool s_mom = suite == "moments" || suite == "all";
    bool s_ed = suite == "ed" || suite == "all";
    if (!s_main && !s_ident && !s_inj && !s_mom && !s_ed)
        throw std::invalid_argument("verify: unknown suite " + suite);

    bool need_pairs = s_main || s_inj || s_mom || s_ed;
    bool need_tabs = s_main || s_ident;
    bool need_ed = s_ed;
    SweepState st = build_state(n, need_pairs, need_tabs, need_ed, opts.max_n);

    std::vector<ItemFn> fns;
    if (s_main) add_main_items(st, opts, fns);
    if (s_ident) add_identity_items(st, opts, fns);
    if (s_inj) add_injection_items(st, opts, fns);
    if (s_mom) add_moment_items(st, opts, fns);
    if (s_ed) add_ed_items(st, opts, fns);

    std::vector<VerifyItem> results(fns.size());
    parallel_for(fns.size(), opts.jobs, [&](size_t i) { results[i] = fns[i](); });

    VerifyReport rep;
    rep.suite = suite;
    rep.n = n;
    rep.items = std::move(results);
    for (const auto& it : rep.items) {
        ++rep.summary.total;
        if (it.ok)
            ++rep.summary.ok;
        else
            ++rep.summary.failed;
        rep.summary.unverifiable += it.unverifiable;
    }
    return rep;
}

std::string report_to_json(const VerifyReport& rep) {
    nlohmann::json j;
    j["suite"] = rep.suite;
    j["n"] = rep.n;
    j["items"] = nlohmann::json::array();
    for (const auto& it : rep.items) {
        nlohmann::json ji;
        ji["kind"] = it.kind;
        if (!it.pair_lower.empty()) ji["pair"] = {it.pair_lower, it.pair_upper};
        if (!it.lambda.empty()) ji["lambda"] = it.lambda;
        if (it.r >= 0) ji["r"] = it.r;
        ji["ok"] = it.ok;
        if (it.unverifiable > 0) ji["unverifiable"] = it.unverifiable;
        ji["detail"] = it.detail;
        j["items"].push_back(std::move(ji));
    }
    j["summary"] = {{"total", rep.summary.total},
                    {"ok", rep.summary.ok},
                    {"failed", rep.summary.failed},
                    {"unverifiable", rep.summary.unverifiable}};
    return j.dump(2);
}

std::string report_to_text(const VerifyReport& rep) {
    std::ostringstream os;
    for (const auto& it : rep.items) {
        os << (it.ok ? "[ ok ] " : "[FAIL] ") << it.kind;
        if (!it.pair_lower.empty()) os << " pair=" << it.pair_lower << "<" << it.pair_upper;
        if (!it.lambda.empty()) os << " lambda=" << it.lambda;
        if (it.r >= 0) os << " r=" << it.r;
        if (!it.detail.empty()) os << " : " << it.detail;
        os << "\n";
    }
    os << "suite=" << rep.suite << " n=" << rep.n << " total=" << rep.summary.total
       << " ok=" << rep.summary.ok << " failed=" << rep.summary.failed
       << " unverifiable=" << rep.summary.unverifiable << "\n";
    return os.str();
}

}  // namespace treeimm
