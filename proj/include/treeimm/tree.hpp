#pragma once

/*
 * Labeled trees on vertices 1..n, canonical forms for unlabeled
 * isomorphism, and exhaustive enumeration of isomorphism classes.
 *
 * Trees are deeply immutable after construction (distance and next-step
 * tables are built eagerly), so values can be shared freely across threads.
 */

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace treeimm {

class Tree {
public:
    Tree() = default;  // empty placeholder; every query throws until assigned

    // Validates: n >= 1, exactly n-1 edges, connected, no self-loops.
    static Tree from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    const std::vector<int>& neighbors(int v) const;
    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int leaf_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

    // All-pairs distances; dist[u][v] for 1 <= u,v <= n (row/col 0 unused).
    const std::vector<std::vector<int>>& distances() const { return dist_; }
    // next_on_path(u, v): second vertex on the unique u->v path; requires u != v.
    int next_on_path(int u, int v) const;
    std::vector<int> path_between(int u, int v) const;  // endpoints inclusive

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;   // 1-indexed, neighbor lists sorted
    std::vector<std::vector<int>> dist_;
    std::vector<std::vector<int>> next_;  // next_[u][v]: first step from u toward v
    void check_vertex(int v) const;
};

using CanonicalCode = std::string;

// Center-rooted canonical encoding; equal codes iff isomorphic.
CanonicalCode canonical_code(const Tree& t);
bool is_isomorphic(const Tree& a, const Tree& b);
// Rebuild the canonical representative tree of a code (BFS labeling from root).
Tree tree_from_code(const CanonicalCode& code);

// perm[old] = new label; perm is 1-indexed with perm[0] ignored.
Tree relabel(const Tree& t, const std::vector<int>& perm);

// One representative per isomorphism class, sorted by canonical code.
// Enumerates all n^(n-2) Pruefer sequences and dedupes by canonical code.
std::vector<Tree> all_trees(int n, int max_n = 10);

Tree tree_from_pruefer(const std::vector<int>& seq, int n);

// Text format: line 1 = n, then n-1 lines "u v".
Tree parse_tree(std::istream& in);
Tree parse_tree_string(const std::string& s);
std::string format_tree(const Tree& t);

Tree path_tree(int n);
Tree star_tree(int n);  // center = vertex 1

}  // namespace treeimm
