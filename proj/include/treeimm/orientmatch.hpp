#pragma once

/*
 * B-matchings, B-vertex orientations, the away statistic, the generating
 * polynomials m_{B,j} / a_{B,i} and their r-aggregates, plus the cover-pair
 * injection maps run as executable checks.
 *
 * Vertex subsets are bitmasks with bit v-1 standing for vertex v.
 */

#include "treeimm/bipoly.hpp"
#include "treeimm/gts.hpp"
#include "treeimm/tree.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace treeimm {

using VertexSet = uint32_t;

inline bool in_set(VertexSet s, int v) { return (s >> (v - 1)) & 1u; }
inline VertexSet with_vertex(VertexSet s, int v) { return s | (1u << (v - 1)); }
inline VertexSet without_vertex(VertexSet s, int v) { return s & ~(1u << (v - 1)); }
inline VertexSet full_set(int n) { return (n == 32) ? ~0u : ((1u << n) - 1u); }

// A B-vertex orientation: target[v] is the chosen neighbor for v in B,
// 0 for vertices outside B.
struct BOrientation {
    VertexSet b = 0;
    std::vector<int> target;  // size n+1, index 0 unused

    bool operator==(const BOrientation& o) const { return b == o.b && target == o.target; }
    bool operator<(const BOrientation& o) const {
        if (b != o.b) return b < o.b;
        return target < o.target;
    }
};

// Bidirected arcs of O as sorted vertex pairs, ascending.
std::vector<std::pair<int, int>> bidir_edges(const Tree& t, const BOrientation& o);

// Reference vertex for the away statistic: min([n]-B), or for B = [n] the
// smaller endpoint of the lexicographically least bidirected edge.
int away_anchor(const Tree& t, const BOrientation& o);

// Aw = 2*#bidir + 2*#{free v oriented away from the anchor}.
int away_statistic(const Tree& t, const BOrientation& o);

// Visit every B-orientation over the subset b (deterministic odometer order).
void for_each_orientation(const Tree& t, VertexSet b,
                          const std::function<void(const BOrientation&)>& fn);

BiPoly m_poly(const Tree& t, VertexSet b, int j);
BiPoly m_r(const Tree& t, int r, int j);
// a_{B,i}; the B = [n], i = 0 case is the defined constant 1 - qt.
BiPoly a_poly(const Tree& t, VertexSet b, int i);
BiPoly a_r(const Tree& t, int r, int i);

// m_{B,j} = sum_{i>=j} C(i,j) a_{B,i}  (the pinning oracle for the B = [n]
// away convention).
bool check_m_a_identity(const Tree& t, VertexSet b, int j);

// Per-tree tables a_{r,i} and m_{r,j}, computed in one sweep.
struct OrientTables {
    int n = 0;
    std::vector<std::vector<BiPoly>> a;  // a[r][i], 0 <= i <= r/2
    std::vector<std::vector<BiPoly>> m;  // m[r][j]
};
OrientTables compute_orient_tables(const Tree& t);

// Image of one T2-orientation under the cover-pair injection.
struct GammaImage {
    bool unverifiable = false;
    const char* rule = "";  // which mapping case produced the image
    BOrientation image;     // orientation of T1 over the (possibly new) set
};

GammaImage inj_gamma(const LabeledCoverPair& pair, const BOrientation& o);

struct InjectionReport {
    long mapped = 0;
    long collisions = 0;
    long aw_mismatches = 0;
    long bidir_mismatches = 0;
    long unverifiable = 0;
    bool aggregate_ok = false;  // a_{r,i}^{T1} - a_{r,i}^{T2} coefficientwise >= 0
    bool ok() const { return collisions == 0 && aw_mismatches == 0 && bidir_mismatches == 0 && aggregate_ok; }
};

InjectionReport verify_injection(const LabeledCoverPair& pair, int r, int i);

}  // namespace treeimm
