#include "treeimm/gts.hpp"

#include "json.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace treeimm {

GtsMove make_gts_move(const Tree& t, int x, int y) {
    if (x == y) throw std::invalid_argument("gts move: x != y required");
    GtsMove m;
    m.x = x;
    m.y = y;
    m.path = t.path_between(x, y);
    for (size_t i = 1; i + 1 < m.path.size(); ++i)
        if (t.degree(m.path[i]) != 2)
            throw std::invalid_argument("gts move: interior path vertex of degree != 2");
    m.z = m.path[m.path.size() - 2];
    return m;
}

bool is_proper(const Tree& t, const GtsMove& m) {
    return t.degree(m.x) >= 2 && t.degree(m.y) >= 2;
}

Tree apply_gts(const Tree& t, const GtsMove& m) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : t.edges()) {
        if (u == m.y || v == m.y) {
            int other = (u == m.y) ? v : u;
            if (other != m.z) {
                edges.emplace_back(m.x, other);
                continue;
            }
        }
        edges.emplace_back(u, v);
    }
    return Tree::from_edges(t.n(), edges);
}

std::vector<GtsMove> proper_moves(const Tree& t) {
    std::vector<GtsMove> out;
    int n = t.n();
    for (int x = 1; x <= n; ++x) {
        if (t.degree(x) < 2) continue;
        for (int y = 1; y <= n; ++y) {
            if (y == x || t.degree(y) < 2) continue;
            auto path = t.path_between(x, y);
            bool ok = true;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (t.degree(path[i]) != 2) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            GtsMove m;
            m.x = x;
            m.y = y;
            m.path = std::move(path);
            m.z = m.path[m.path.size() - 2];
            out.push_back(std::move(m));
        }
    }
    return out;
}

LabeledCoverPair label_cover_pair(const Tree& t1, const GtsMove& m) {
    if (!is_proper(t1, m)) throw std::invalid_argument("label_cover_pair: move is not proper");
    int n = t1.n();
    int k = static_cast<int>(m.path.size());

    std::vector<int> perm(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < k; ++i) perm[static_cast<size_t>(m.path[static_cast<size_t>(i)])] = i + 1;

    // X hangs at x away from the path, Y hangs at y; label each in BFS
    // order (increasing distance from the new vertex 1, ties by old label).
    auto bfs_label = [&](int root, int avoid, int first_label) {
        int label = first_label;
        std::deque<int> queue{root};
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        seen[static_cast<size_t>(root)] = 1;
        seen[static_cast<size_t>(avoid)] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : t1.neighbors(v))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    perm[static_cast<size_t>(w)] = label++;
                    queue.push_back(w);
                }
        }
        return label - first_label;
    };
    int x_size = bfs_label(m.x, m.path[1], k + 1);
    int y_size = bfs_label(m.y, m.z, k + 1 + x_size);
    if (k + x_size + y_size != n) throw std::logic_error("label_cover_pair: label count mismatch");

    LabeledCoverPair pair;
    pair.t1 = relabel(t1, perm);
    pair.k = k;
    pair.x_size = x_size;
    pair.y_size = y_size;
    GtsMove relabeled = make_gts_move(pair.t1, 1, k);
    pair.t2 = apply_gts(pair.t1, relabeled);
    return pair;
}

int HasseDiagram::index_of(const CanonicalCode& c) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), c);
    if (it == nodes.end() || *it != c) return -1;
    return static_cast<int>(it - nodes.begin());
}

HasseDiagram build_poset(int n, int max_n) {
    if (n < 1 || n > max_n) throw std::invalid_argument("build_poset: n out of range");
    HasseDiagram h;
    h.n = n;
    h.reps = all_trees(n, max_n);
    for (const auto& t : h.reps) h.nodes.push_back(canonical_code(t));

    int m = static_cast<int>(h.nodes.size());
    std::vector<std::vector<char>> direct(static_cast<size_t>(m),
                                          std::vector<char>(static_cast<size_t>(m), 0));
    for (int i = 0; i < m; ++i) {
        for (const auto& mv : proper_moves(h.reps[static_cast<size_t>(i)])) {
            Tree image = apply_gts(h.reps[static_cast<size_t>(i)], mv);
            int j = h.index_of(canonical_code(image));
            if (j < 0) throw std::logic_error("build_poset: image not enumerated");
            if (j != i) direct[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
        }
    }

    // Strict reachability closure; the relation is acyclic since a proper
    // shift always adds a leaf.
    h.reachable = direct;
    for (int mid = 0; mid < m; ++mid)
        for (int i = 0; i < m; ++i)
            if (h.reachable[static_cast<size_t>(i)][static_cast<size_t>(mid)])
                for (int j = 0; j < m; ++j)
                    if (h.reachable[static_cast<size_t>(mid)][static_cast<size_t>(j)])
                        h.reachable[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
    for (int i = 0; i < m; ++i)
        if (h.reachable[static_cast<size_t>(i)][static_cast<size_t>(i)])
            throw std::logic_error("build_poset: cycle in GTS relation");

    // Transitive reduction: keep (i,j) iff no strictly intermediate node.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (!h.reachable[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
            bool has_mid = false;
            for (int mid = 0; mid < m && !has_mid; ++mid)
                if (mid != i && mid != j && h.reachable[static_cast<size_t>(i)][static_cast<size_t>(mid)] &&
                    h.reachable[static_cast<size_t>(mid)][static_cast<size_t>(j)])
                    has_mid = true;
            if (!has_mid) h.covers.emplace_back(i, j);
        }
    std::sort(h.covers.begin(), h.covers.end());
    return h;
}

std::vector<CoverWitness> cover_pairs(const HasseDiagram& h) {
    std::vector<CoverWitness> out;
    for (auto [lo, hi] : h.covers) {
        const Tree& t1 = h.reps[static_cast<size_t>(lo)];
        const CanonicalCode& target = h.nodes[static_cast<size_t>(hi)];
        std::optional<GtsMove> witness;
        for (const auto& mv : proper_moves(t1)) {
            if (canonical_code(apply_gts(t1, mv)) != target) continue;
            if (!witness || std::make_pair(mv.x, mv.y) < std::make_pair(witness->x, witness->y))
                witness = mv;
        }
        if (!witness) throw std::logic_error("cover_pairs: no witnessing move");
        out.push_back({lo, hi, *witness});
    }
    return out;
}

namespace {

std::string degree_sequence(const Tree& t) {
    std::vector<int> deg;
    for (int v = 1; v <= t.n(); ++v) deg.push_back(t.degree(v));
    std::sort(deg.rbegin(), deg.rend());
    std::ostringstream os;
    for (size_t i = 0; i < deg.size(); ++i) {
        if (i) os << ",";
        os << deg[i];
    }
    return os.str();
}

}  // namespace

std::string poset_to_dot(const HasseDiagram& h) {
    std::ostringstream os;
    os << "digraph gts" << h.n << " {\n";
    os << "  rankdir=BT;\n";
    for (size_t i = 0; i < h.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << h.nodes[i] << "\\ndeg " << degree_sequence(h.reps[i])
           << "\"];\n";
    for (auto [lo, hi] : h.covers) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

std::string poset_to_json(const HasseDiagram& h) {
    nlohmann::json j;
    j["n"] = h.n;
    j["nodes"] = h.nodes;
    j["covers"] = nlohmann::json::array();
    for (auto [lo, hi] : h.covers) j["covers"].push_back({lo, hi});
    return j.dump(2);
}

}  // namespace treeimm
