#include "treeimm/tree.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace treeimm {

namespace {

// Adjacency-list form used by the enumeration hot path; 1-indexed.
using AdjList = std::vector<std::vector<int>>;

std::string ahu_code_adj(const AdjList& adj, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int w : adj[static_cast<size_t>(v)])
        if (w != parent) child_codes.push_back(ahu_code_adj(adj, w, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

std::vector<int> centers_adj(const AdjList& adj, int n) {
    if (n == 1) return {1};
    std::vector<int> deg(static_cast<size_t>(n) + 1);
    std::vector<int> current;
    for (int v = 1; v <= n; ++v) {
        deg[static_cast<size_t>(v)] = static_cast<int>(adj[static_cast<size_t>(v)].size());
        if (deg[static_cast<size_t>(v)] == 1) current.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next_layer;
        remaining -= static_cast<int>(current.size());
        for (int v : current)
            for (int w : adj[static_cast<size_t>(v)])
                if (--deg[static_cast<size_t>(w)] == 1) next_layer.push_back(w);
        current = std::move(next_layer);
    }
    return current;
}

CanonicalCode canonical_code_adj(const AdjList& adj, int n) {
    CanonicalCode best;
    for (int c : centers_adj(adj, n)) {
        std::string code = ahu_code_adj(adj, c, 0);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

AdjList pruefer_to_adj(const std::vector<int>& seq, int n) {
    AdjList adj(static_cast<size_t>(n) + 1);
    if (n == 1) return adj;
    std::vector<int> deg(static_cast<size_t>(n) + 1, 1);
    for (int v : seq) ++deg[static_cast<size_t>(v)];
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) leaves.insert(v);
    auto add_edge = [&adj](int u, int v) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    };
    for (int v : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        add_edge(leaf, v);
        if (--deg[static_cast<size_t>(v)] == 1) leaves.insert(v);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    add_edge(a, b);
    return adj;
}

// Canonical codes of all trees decoded from Pruefer sequences whose first
// symbol lies in [lo, hi].
void collect_codes(int n, int lo, int hi, std::set<CanonicalCode>* out) {
    int len = n - 2;
    if (len <= 0) {
        out->insert(canonical_code_adj(pruefer_to_adj({}, n), n));
        return;
    }
    std::vector<int> seq(static_cast<size_t>(len), 1);
    for (int first = lo; first <= hi; ++first) {
        seq[0] = first;
        std::fill(seq.begin() + 1, seq.end(), 1);
        while (true) {
            out->insert(canonical_code_adj(pruefer_to_adj(seq, n), n));
            int pos = len - 1;
            bool done = false;
            while (seq[static_cast<size_t>(pos)] == n) {
                seq[static_cast<size_t>(pos)] = 1;
                if (--pos < 1) {
                    done = true;
                    break;
                }
            }
            if (done) break;
            ++seq[static_cast<size_t>(pos)];
        }
    }
}

}  // namespace

Tree Tree::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("tree needs n >= 1");
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("tree needs exactly n-1 edges");
    Tree t;
    t.n_ = n;
    t.adj_.assign(static_cast<size_t>(n) + 1, {});
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) throw std::invalid_argument("vertex out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        t.adj_[static_cast<size_t>(u)].push_back(v);
        t.adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (int v = 1; v <= n; ++v) {
        auto& nb = t.adj_[static_cast<size_t>(v)];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("duplicate edge");
    }

    t.dist_.assign(static_cast<size_t>(n) + 1, std::vector<int>(static_cast<size_t>(n) + 1, -1));
    t.next_.assign(static_cast<size_t>(n) + 1, std::vector<int>(static_cast<size_t>(n) + 1, 0));
    for (int src = 1; src <= n; ++src) {
        auto& d = t.dist_[static_cast<size_t>(src)];
        d[static_cast<size_t>(src)] = 0;
        std::deque<int> queue{src};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : t.adj_[static_cast<size_t>(v)])
                if (d[static_cast<size_t>(w)] < 0) {
                    d[static_cast<size_t>(w)] = d[static_cast<size_t>(v)] + 1;
                    // first step from w toward src is its BFS parent
                    t.next_[static_cast<size_t>(w)][static_cast<size_t>(src)] = v;
                    queue.push_back(w);
                }
        }
        if (std::count(d.begin() + 1, d.end(), -1) > 0)
            throw std::invalid_argument("graph not connected");
    }
    return t;
}

void Tree::check_vertex(int v) const {
    if (v < 1 || v > n_) throw std::invalid_argument("invalid vertex id");
}

const std::vector<int>& Tree::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

bool Tree::adjacent(int u, int v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Tree::leaf_count() const {
    if (n_ == 1) return 1;
    int c = 0;
    for (int v = 1; v <= n_; ++v)
        if (degree(v) == 1) ++c;
    return c;
}

std::vector<std::pair<int, int>> Tree::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 1; v <= n_; ++v)
        for (int w : adj_[static_cast<size_t>(v)])
            if (v < w) out.emplace_back(v, w);
    return out;
}

int Tree::next_on_path(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("next_on_path needs u != v");
    return next_[static_cast<size_t>(u)][static_cast<size_t>(v)];
}

std::vector<int> Tree::path_between(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    std::vector<int> path{u};
    int cur = u;
    while (cur != v) {
        cur = next_on_path(cur, v);
        path.push_back(cur);
    }
    return path;
}

CanonicalCode canonical_code(const Tree& t) {
    AdjList adj(static_cast<size_t>(t.n()) + 1);
    for (int v = 1; v <= t.n(); ++v) adj[static_cast<size_t>(v)] = t.neighbors(v);
    return canonical_code_adj(adj, t.n());
}

bool is_isomorphic(const Tree& a, const Tree& b) {
    if (a.n() != b.n()) return false;
    return canonical_code(a) == canonical_code(b);
}

Tree tree_from_code(const CanonicalCode& code) {
    // Parse nested parentheses into a rooted tree, then label in BFS order.
    struct Node {
        std::vector<int> children;
    };
    std::vector<Node> nodes;
    std::vector<int> stack;
    for (char ch : code) {
        if (ch == '(') {
            nodes.push_back({});
            int id = static_cast<int>(nodes.size()) - 1;
            if (!stack.empty()) nodes[static_cast<size_t>(stack.back())].children.push_back(id);
            stack.push_back(id);
        } else if (ch == ')') {
            if (stack.empty()) throw std::invalid_argument("unbalanced code");
            stack.pop_back();
        } else {
            throw std::invalid_argument("bad code character");
        }
    }
    if (!stack.empty() || nodes.empty()) throw std::invalid_argument("unbalanced code");
    int n = static_cast<int>(nodes.size());
    std::vector<int> label(static_cast<size_t>(n), 0);
    std::deque<int> queue{0};
    int next_label = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        label[static_cast<size_t>(v)] = ++next_label;
        for (int c : nodes[static_cast<size_t>(v)].children) queue.push_back(c);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int c : nodes[static_cast<size_t>(v)].children)
            edges.emplace_back(label[static_cast<size_t>(v)], label[static_cast<size_t>(c)]);
    return Tree::from_edges(n, edges);
}

Tree relabel(const Tree& t, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != t.n() + 1) throw std::invalid_argument("perm size mismatch");
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : t.edges())
        edges.emplace_back(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return Tree::from_edges(t.n(), edges);
}

Tree tree_from_pruefer(const std::vector<int>& seq, int n) {
    if (static_cast<int>(seq.size()) != std::max(0, n - 2))
        throw std::invalid_argument("pruefer length mismatch");
    AdjList adj = pruefer_to_adj(seq, n);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n; ++v)
        for (int w : adj[static_cast<size_t>(v)])
            if (v < w) edges.emplace_back(v, w);
    return Tree::from_edges(n, edges);
}

std::vector<Tree> all_trees(int n, int max_n) {
    if (n < 1 || n > max_n) throw std::invalid_argument("all_trees: n out of range");
    std::set<CanonicalCode> codes;
    if (n >= 9) {
        // n^{n-2} sequences; partition the first symbol across threads.
        unsigned jobs = std::min<unsigned>(std::max(2u, std::thread::hardware_concurrency()),
                                           static_cast<unsigned>(n));
        std::vector<std::set<CanonicalCode>> parts(jobs);
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            int lo = 1 + static_cast<int>(j) * n / static_cast<int>(jobs);
            int hi = static_cast<int>(j + 1) * n / static_cast<int>(jobs);
            pool.emplace_back(collect_codes, n, lo, hi, &parts[j]);
        }
        for (auto& th : pool) th.join();
        for (auto& p : parts) codes.merge(p);
    } else {
        collect_codes(n, 1, n, &codes);
    }
    std::vector<Tree> out;
    out.reserve(codes.size());
    for (const auto& c : codes) out.push_back(tree_from_code(c));
    return out;
}

Tree parse_tree(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw std::invalid_argument("tree file: missing vertex count");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("tree file: missing edge");
        edges.emplace_back(u, v);
    }
    return Tree::from_edges(n, edges);
}

Tree parse_tree_string(const std::string& s) {
    std::istringstream in(s);
    return parse_tree(in);
}

std::string format_tree(const Tree& t) {
    std::ostringstream os;
    os << t.n() << "\n";
    for (auto [u, v] : t.edges()) os << u << " " << v << "\n";
    return os.str();
}

Tree path_tree(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return Tree::from_edges(n, edges);
}

Tree star_tree(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
    return Tree::from_edges(n, edges);
}

}  // namespace treeimm
