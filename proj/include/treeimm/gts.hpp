#pragma once

/*
 * The generalized tree shift: the move itself, the GTS_n poset with its
 * Hasse diagram, and the path/X/Y labeling convention used by the
 * verification modules on cover pairs.
 */

#include "treeimm/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace treeimm {

struct GtsMove {
    int x = 0, y = 0;
    std::vector<int> path;  // x .. y inclusive
    int z = 0;              // neighbor of y on the path
};

// Validates the move: x != y and every interior vertex of the x..y path
// has degree 2.  Throws std::invalid_argument otherwise.
GtsMove make_gts_move(const Tree& t, int x, int y);

// Neither endpoint is a leaf; exactly these moves change the tree.
bool is_proper(const Tree& t, const GtsMove& m);

// Move all neighbors of y except z to x.
Tree apply_gts(const Tree& t, const GtsMove& m);

std::vector<GtsMove> proper_moves(const Tree& t);

// Cover pair relabeled by the convention: path vertices 1..k in order
// (1 = x side), X gets k+1..k+|X| by BFS distance from vertex 1, Y gets
// the top labels.  t2 is the shifted image on the same labels; vertex k
// is a leaf of t2 hanging at k-1.
struct LabeledCoverPair {
    Tree t1;  // lower tree
    Tree t2;  // upper tree (image of the proper move)
    int k = 0;
    int x_size = 0, y_size = 0;
    bool in_x(int v) const { return v > k && v <= k + x_size; }
    bool in_y(int v) const { return v > k + x_size; }
    bool on_path(int v) const { return v >= 1 && v <= k; }
};

LabeledCoverPair label_cover_pair(const Tree& t1, const GtsMove& m);

struct HasseDiagram {
    int n = 0;
    std::vector<CanonicalCode> nodes;             // sorted
    std::vector<Tree> reps;                       // canonical representatives
    std::vector<std::pair<int, int>> covers;      // (lower, upper) indices
    std::vector<std::vector<char>> reachable;     // strict order closure

    int index_of(const CanonicalCode& c) const;
};

HasseDiagram build_poset(int n, int max_n = 10);

struct CoverWitness {
    int lower = 0, upper = 0;
    GtsMove move;  // on reps[lower]; lexicographically least (x, y)
};

std::vector<CoverWitness> cover_pairs(const HasseDiagram& h);

std::string poset_to_dot(const HasseDiagram& h);
std::string poset_to_json(const HasseDiagram& h);

}  // namespace treeimm
