#include "treeimm/orientmatch.hpp"

#include "treeimm/symchar.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace treeimm {

std::vector<std::pair<int, int>> bidir_edges(const Tree& t, const BOrientation& o) {
    std::vector<std::pair<int, int>> out;
    for (int v = 1; v <= t.n(); ++v) {
        if (!in_set(o.b, v)) continue;
        int w = o.target[static_cast<size_t>(v)];
        if (w > v && in_set(o.b, w) && o.target[static_cast<size_t>(w)] == v) out.emplace_back(v, w);
    }
    return out;  // ascending since v ascends
}

int away_anchor(const Tree& t, const BOrientation& o) {
    int n = t.n();
    if (o.b != full_set(n)) {
        for (int v = 1; v <= n; ++v)
            if (!in_set(o.b, v)) return v;
        throw std::logic_error("unreachable");
    }
    auto bd = bidir_edges(t, o);
    if (bd.empty()) throw std::logic_error("full orientation without bidirected edge");
    return bd.front().first;
}

int away_statistic(const Tree& t, const BOrientation& o) {
    auto bd = bidir_edges(t, o);
    int m = away_anchor(t, o);
    VertexSet on_bidir = 0;
    for (auto [u, v] : bd) {
        on_bidir = with_vertex(on_bidir, u);
        on_bidir = with_vertex(on_bidir, v);
    }
    int aw = 2 * static_cast<int>(bd.size());
    for (int v = 1; v <= t.n(); ++v) {
        if (!in_set(o.b, v) || in_set(on_bidir, v)) continue;
        if (o.target[static_cast<size_t>(v)] != t.next_on_path(v, m)) aw += 2;
    }
    return aw;
}

void for_each_orientation(const Tree& t, VertexSet b,
                          const std::function<void(const BOrientation&)>& fn) {
    int n = t.n();
    std::vector<int> verts;
    for (int v = 1; v <= n; ++v)
        if (in_set(b, v)) verts.push_back(v);
    BOrientation o;
    o.b = b;
    o.target.assign(static_cast<size_t>(n) + 1, 0);
    if (verts.empty()) {
        fn(o);
        return;
    }
    for (int v : verts)
        if (t.degree(v) == 0) return;  // isolated vertex: no orientations
    std::vector<size_t> choice(verts.size(), 0);
    for (size_t i = 0; i < verts.size(); ++i)
        o.target[static_cast<size_t>(verts[i])] = t.neighbors(verts[i])[0];
    while (true) {
        fn(o);
        size_t pos = verts.size();
        while (pos > 0) {
            --pos;
            const auto& nb = t.neighbors(verts[pos]);
            if (choice[pos] + 1 < nb.size()) {
                ++choice[pos];
                o.target[static_cast<size_t>(verts[pos])] = nb[choice[pos]];
                for (size_t j = pos + 1; j < verts.size(); ++j) {
                    choice[j] = 0;
                    o.target[static_cast<size_t>(verts[j])] = t.neighbors(verts[j])[0];
                }
                break;
            }
            if (pos == 0) return;
        }
    }
}

BiPoly m_poly(const Tree& t, VertexSet b, int j) {
    if (j < 0) throw std::invalid_argument("m_poly: j >= 0");
    std::vector<std::pair<int, int>> f_edges;
    for (auto [u, v] : t.edges())
        if (in_set(b, u) && in_set(b, v)) f_edges.emplace_back(u, v);
    BiPoly total;
    auto rec = [&](auto&& self, size_t idx, VertexSet matched, int chosen) -> void {
        if (chosen == j) {
            BiPoly wt = BiPoly::qt_power(j);
            for (int v = 1; v <= t.n(); ++v)
                if (in_set(b, v) && !in_set(matched, v))
                    wt *= BiPoly::one() + BiPoly::qt_power(1, t.degree(v) - 1);
            total += wt;
            return;
        }
        if (idx >= f_edges.size()) return;
        // remaining edges can still reach j?
        if (chosen + static_cast<int>(f_edges.size() - idx) < j) return;
        self(self, idx + 1, matched, chosen);
        auto [u, v] = f_edges[idx];
        if (!in_set(matched, u) && !in_set(matched, v))
            self(self, idx + 1, with_vertex(with_vertex(matched, u), v), chosen + 1);
    };
    rec(rec, 0, 0, 0);
    return total;
}

BiPoly m_r(const Tree& t, int r, int j) {
    int n = t.n();
    if (r < 0 || r > n) throw std::invalid_argument("m_r: r out of range");
    BiPoly total;
    for (VertexSet b = 0; b <= full_set(n); ++b) {
        if (__builtin_popcount(b) != r) continue;
        total += m_poly(t, b, j);
        if (b == full_set(n)) break;
    }
    return total;
}

BiPoly a_poly(const Tree& t, VertexSet b, int i) {
    int n = t.n();
    if (b == full_set(n) && i == 0)
        return BiPoly::one() - BiPoly::qt_power(1);  // defined constant
    BiPoly total;
    for_each_orientation(t, b, [&](const BOrientation& o) {
        if (static_cast<int>(bidir_edges(t, o).size()) != i) return;
        total += BiPoly::qt_power(away_statistic(t, o) / 2);
    });
    return total;
}

BiPoly a_r(const Tree& t, int r, int i) {
    int n = t.n();
    if (r < 0 || r > n) throw std::invalid_argument("a_r: r out of range");
    BiPoly total;
    for (VertexSet b = 0; b <= full_set(n); ++b) {
        if (__builtin_popcount(b) == r) total += a_poly(t, b, i);
        if (b == full_set(n)) break;
    }
    return total;
}

bool check_m_a_identity(const Tree& t, VertexSet b, int j) {
    int r = __builtin_popcount(b);
    BiPoly lhs = m_poly(t, b, j);
    BiPoly rhs;
    for (int i = j; 2 * i <= r; ++i) rhs += BiPoly(binomial(i, j)) * a_poly(t, b, i);
    return lhs == rhs;
}

OrientTables compute_orient_tables(const Tree& t) {
    int n = t.n();
    OrientTables tab;
    tab.n = n;
    tab.a.assign(static_cast<size_t>(n) + 1, {});
    tab.m.assign(static_cast<size_t>(n) + 1, {});
    for (int r = 0; r <= n; ++r) {
        tab.a[static_cast<size_t>(r)].assign(static_cast<size_t>(r / 2) + 1, BiPoly{});
        tab.m[static_cast<size_t>(r)].assign(static_cast<size_t>(r / 2) + 1, BiPoly{});
    }
    VertexSet full = full_set(n);
    for (VertexSet b = 0;; ++b) {
        int r = __builtin_popcount(b);
        for_each_orientation(t, b, [&](const BOrientation& o) {
            int i = static_cast<int>(bidir_edges(t, o).size());
            if (b == full && i == 0) return;  // a full orientation always has a bidirected edge
            tab.a[static_cast<size_t>(r)][static_cast<size_t>(i)] +=
                BiPoly::qt_power(away_statistic(t, o) / 2);
        });
        for (int j = 0; 2 * j <= r; ++j)
            tab.m[static_cast<size_t>(r)][static_cast<size_t>(j)] += m_poly(t, b, j);
        if (b == full) break;
    }
    tab.a[static_cast<size_t>(n)][0] = BiPoly::one() - BiPoly::qt_power(1);
    return tab;
}

namespace {

enum class Region { Path, X, Y };

struct InjContext {
    const LabeledCoverPair& pair;
    int n;
    int k;

    Region region(int v) const {
        if (pair.on_path(v)) return Region::Path;
        return pair.in_x(v) ? Region::X : Region::Y;
    }

    // Edge correspondence T2 -> T1: the attachment edges {1,w} (w a Y-root)
    // become {k,w}; all other edges coincide.
    int corr_target(int v, int tgt) const {
        if (tgt == 1 && region(v) == Region::Y && pair.t2.adjacent(v, 1)) return pair.k;
        return tgt;
    }

    bool away2(const BOrientation& o, int v, int m) const {
        return o.target[static_cast<size_t>(v)] != pair.t2.next_on_path(v, m);
    }
};

BOrientation make_image(const InjContext& ctx, VertexSet b) {
    BOrientation img;
    img.b = b;
    img.target.assign(static_cast<size_t>(ctx.n) + 1, 0);
    return img;
}

void copy_into(const InjContext& ctx, const BOrientation& o, BOrientation& img, VertexSet skip = 0) {
    for (int v = 1; v <= ctx.n; ++v) {
        if (!in_set(o.b, v) || in_set(skip, v)) continue;
        int tgt = ctx.corr_target(v, o.target[static_cast<size_t>(v)]);
        if (!ctx.pair.t1.adjacent(v, tgt))
            throw std::logic_error("injection: copied target not an edge of T1");
        img.target[static_cast<size_t>(v)] = tgt;
    }
}

GammaImage copy_map(const InjContext& ctx, const BOrientation& o, const char* rule) {
    GammaImage g;
    g.rule = rule;
    g.image = make_image(ctx, o.b);
    copy_into(ctx, o, g.image);
    return g;
}

// B -> B' = (B - {1}) + {k} when O(1) lies in Y: mirror the oriented
// path prefix below m and hand vertex 1's Y-target to vertex k.
GammaImage endpoint_swap_map(const InjContext& ctx, const BOrientation& o) {
    GammaImage g;
    g.rule = "endpoint_swap";
    int m = away_anchor(ctx.pair.t2, o);  // min omitted vertex, 2 <= m <= k
    VertexSet b_img = with_vertex(without_vertex(o.b, 1), ctx.k);
    g.image = make_image(ctx, b_img);

    VertexSet prefix = 0;
    for (int s = 2; s < m; ++s) prefix = with_vertex(prefix, s);
    copy_into(ctx, o, g.image, with_vertex(prefix, 1));

    g.image.target[static_cast<size_t>(ctx.k)] = o.target[1];
    // status of m-l maps to vertex 1+l, toward-m becomes toward-1
    for (int l = 1; l <= m - 2; ++l) {
        int src = m - l, dst = 1 + l;
        bool away = ctx.away2(o, src, m);
        g.image.target[static_cast<size_t>(dst)] = away ? dst + 1 : dst - 1;
    }
    return g;
}

// m in Y: reverse the toward/away pattern of the whole path.
GammaImage path_reverse_map(const InjContext& ctx, const BOrientation& o, int m) {
    GammaImage g;
    g.rule = "path_reverse";
    int k = ctx.k;
    g.image = make_image(ctx, o.b);
    VertexSet path_mask = 0;
    for (int j = 1; j <= k; ++j) path_mask = with_vertex(path_mask, j);
    copy_into(ctx, o, g.image, path_mask);

    int o1 = o.target[1];
    for (int j = 1; j <= k; ++j) {
        bool away = ctx.away2(o, k + 1 - j, m);  // reversed pattern
        int tgt;
        if (j == 1) {
            if (away) throw std::logic_error("path_reverse: leaf status must be toward");
            tgt = 2;
        } else if (j == k) {
            tgt = (ctx.region(o1) == Region::Y) ? o1 : k - 1;
        } else {
            tgt = away ? j - 1 : j + 1;  // toward m lies above j in T1
        }
        g.image.target[static_cast<size_t>(j)] = tgt;
    }
    return g;
}

// First edge without an arrow on the 1 -> m path of T2; returns its index
// (edge between path[idx] and path[idx+1]).
size_t first_arrowless_edge(const BOrientation& o, const std::vector<int>& path) {
    for (size_t idx = 0; idx + 1 < path.size(); ++idx) {
        int u = path[idx], v = path[idx + 1];
        bool arrow = o.target[static_cast<size_t>(u)] == v ||
                     (in_set(o.b, v) && o.target[static_cast<size_t>(v)] == u);
        if (!arrow) return idx;
    }
    throw std::logic_error("injection: no arrow-free edge on anchor path");
}

// The two anchor-chain cases share the shape: a block of away-oriented
// vertices plus the path pattern transplanted onto a walk of T1.
GammaImage x_anchor_walk_map(const InjContext& ctx, const BOrientation& o, int m) {
    GammaImage g;
    g.rule = "x_anchor_walk";
    int k = ctx.k;
    auto path = ctx.pair.t2.path_between(1, m);  // identical in T1 (X side)
    size_t l = first_arrowless_edge(o, path);
    int y_far = path[l + 1];

    // walk: x_l, ..., x_1, 1, 2, ..., k
    std::vector<int> w;
    for (size_t idx = l; idx >= 1; --idx) w.push_back(path[idx]);
    for (int j = 1; j <= k; ++j) w.push_back(j);
    size_t len = w.size();  // l + k

    VertexSet mask = 0;
    for (int v : w) {
        if (!in_set(o.b, v)) throw std::logic_error("x_anchor_walk: walk vertex outside B");
        mask = with_vertex(mask, v);
    }
    g.image = make_image(ctx, o.b);
    copy_into(ctx, o, g.image, mask);

    for (size_t p = 0; p < len; ++p) {
        bool away = (p + 2 <= static_cast<size_t>(k)) ? ctx.away2(o, static_cast<int>(p) + 2, m) : true;
        int tgt;
        if (!away)
            tgt = (p == 0) ? y_far : w[p - 1];
        else
            tgt = (p + 1 == len) ? o.target[1] : w[p + 1];
        g.image.target[static_cast<size_t>(w[p])] = tgt;
    }
    return g;
}

GammaImage y_anchor_walk_map(const InjContext& ctx, const BOrientation& o, int m) {
    GammaImage g;
    g.rule = "y_anchor_walk";
    int k = ctx.k;
    auto path = ctx.pair.t2.path_between(1, m);  // 1, Y-root, ..., m
    size_t l = first_arrowless_edge(o, path);
    int y_far = path[l + 1];

    // walk in T1: 1, 2, ..., k, p_1, ..., p_l  (Y hangs at k in T1)
    std::vector<int> w;
    for (int j = 1; j <= k; ++j) w.push_back(j);
    for (size_t idx = 1; idx <= l; ++idx) w.push_back(path[idx]);
    size_t len = w.size();

    VertexSet mask = 0;
    for (int v : w) {
        if (!in_set(o.b, v)) throw std::logic_error("y_anchor_walk: walk vertex outside B");
        mask = with_vertex(mask, v);
    }
    g.image = make_image(ctx, o.b);
    copy_into(ctx, o, g.image, mask);

    for (size_t p = 0; p < len; ++p) {
        bool away;
        if (p <= l)
            away = true;
        else
            away = ctx.away2(o, k + 1 - static_cast<int>(p - l), m);  // reversed tail
        int tgt;
        if (!away)
            tgt = (p + 1 == len) ? y_far : w[p + 1];
        else
            tgt = (p == 0) ? o.target[1] : w[p - 1];
        g.image.target[static_cast<size_t>(w[p])] = tgt;
    }
    return g;
}

// m interior to the path with O(1) in Y: the path membership pattern
// reflects (outer blocks) and shifts (middle block).
GammaImage path_reflect_map(const InjContext& ctx, const BOrientation& o, int m) {
    GammaImage g;
    g.rule = "path_reflect";
    int k = ctx.k;
    int l = 0;
    for (int v = 1; v <= k; ++v)
        if (!in_set(o.b, v)) l = v;
    int m_img = k + 1 - l;
    int l_img = k + 1 - m;

    VertexSet b_img = 0;
    VertexSet path_mask = 0;
    for (int v = 1; v <= k; ++v) path_mask = with_vertex(path_mask, v);
    b_img = o.b & ~path_mask;  // X and Y membership unchanged
    for (int p = 1; p < m_img; ++p) b_img = with_vertex(b_img, p);
    for (int p = l_img + 1; p <= k; ++p) b_img = with_vertex(b_img, p);
    for (int s = m + 1; s < l; ++s)
        if (in_set(o.b, s)) b_img = with_vertex(b_img, (m_img - m) + s);

    g.image = make_image(ctx, b_img);
    copy_into(ctx, o, g.image, path_mask);

    auto realize = [&](int pos, bool away) {
        int tgt;
        if (pos == 1) {
            if (away) throw std::logic_error("path_reflect: position 1 must be toward");
            tgt = 2;
        } else if (pos == k) {
            if (!away) throw std::logic_error("path_reflect: position k must be away");
            tgt = o.target[1];
        } else {
            bool below = pos < m_img;  // toward m' is up when below it
            tgt = away == below ? pos - 1 : pos + 1;
        }
        g.image.target[static_cast<size_t>(pos)] = tgt;
    };
    for (int s = 1; s < m; ++s) realize(k + 1 - s, ctx.away2(o, s, m));
    for (int s = l + 1; s <= k; ++s) realize(k + 1 - s, ctx.away2(o, s, m));
    for (int s = m + 1; s < l; ++s)
        if (in_set(o.b, s)) realize((m_img - m) + s, ctx.away2(o, s, m));
    return g;
}

}  // namespace

GammaImage inj_gamma(const LabeledCoverPair& pair, const BOrientation& o) {
    InjContext ctx{pair, pair.t1.n(), pair.k};
    int n = ctx.n, k = ctx.k;
    bool in1 = in_set(o.b, 1), ink = in_set(o.b, k);

    if (!in1 && !ink) return copy_map(ctx, o, "phi");
    if (!in1 && ink) return copy_map(ctx, o, "nu");
    if (in1 && !ink) {
        if (ctx.region(o.target[1]) == Region::Y) return endpoint_swap_map(ctx, o);
        return copy_map(ctx, o, "mu");
    }

    // both 1 and k oriented
    bool bfull = (o.b == full_set(n));
    int m = away_anchor(pair.t2, o);
    Region rm = ctx.region(m);
    Region r1 = ctx.region(o.target[1]);

    if (r1 == Region::Y && rm == Region::Path) {
        if (bfull) {
            // With every vertex oriented there is no omitted path vertex
            // to reflect around, and the anchor depends on the orientation
            // itself; the image is under-determined.  Report, don't guess.
            GammaImage g;
            g.unverifiable = true;
            g.rule = "path_reflect_gap";
            return g;
        }
        return path_reflect_map(ctx, o, m);
    }
    if (rm == Region::Y) {
        if (r1 == Region::X) return y_anchor_walk_map(ctx, o, m);
        return path_reverse_map(ctx, o, m);
    }
    if (rm == Region::X && r1 == Region::Y) return x_anchor_walk_map(ctx, o, m);
    return copy_map(ctx, o, "copy");
}

InjectionReport verify_injection(const LabeledCoverPair& pair, int r, int i) {
    const Tree& t1 = pair.t1;
    const Tree& t2 = pair.t2;
    int n = t2.n();
    InjectionReport rep;
    std::set<BOrientation> images;
    VertexSet full = full_set(n);
    for (VertexSet b = 0;; ++b) {
        if (__builtin_popcount(b) == r) {
            for_each_orientation(t2, b, [&](const BOrientation& o) {
                if (static_cast<int>(bidir_edges(t2, o).size()) != i) return;
                GammaImage g = inj_gamma(pair, o);
                if (g.unverifiable) {
                    ++rep.unverifiable;
                    return;
                }
                ++rep.mapped;
                for (int v = 1; v <= n; ++v)
                    if (in_set(g.image.b, v) && !t1.adjacent(v, g.image.target[static_cast<size_t>(v)]))
                        throw std::logic_error("injection image is not a valid orientation");
                if (static_cast<int>(bidir_edges(t1, g.image).size()) != i)
                    ++rep.bidir_mismatches;
                else if (away_statistic(t1, g.image) != away_statistic(t2, o))
                    ++rep.aw_mismatches;
                if (!images.insert(g.image).second) ++rep.collisions;
            });
        }
        if (b == full) break;
    }
    BiPoly diff = a_r(t1, r, i) - a_r(t2, r, i);
    rep.aggregate_ok = diff.is_nonneg() && diff.is_qt_poly();
    return rep;
}

}  // namespace treeimm
