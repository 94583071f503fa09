// Truncated simplicial and semisimplicial sets as explicit simplex tables,
// with the standard constructors: simplices, nerves, products, coproducts,
// quotient collapse, and Eilenberg-Zilber normalization.
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sstk/delta.hpp"

namespace sstk {

// table[n][id][i]; face tables are populated for n >= 1, degeneracy tables
// for n < trunc_dim.
using StructureTable = std::vector<std::vector<std::vector<int>>>;

struct SemisimplicialSet {
    int trunc_dim = 0;
    std::vector<int> counts;
    StructureTable faces;

    int size(int n) const { return counts[static_cast<size_t>(n)]; }
    int face(int n, int id, int i) const {
        return faces[static_cast<size_t>(n)][static_cast<size_t>(id)][static_cast<size_t>(i)];
    }
    /// X(f) for injective f; semisimplicial sets carry no degeneracies.
    int apply(const PosetMap& f, int id) const;
    int vertex(int n, int id, int pos) const;
    void validate() const;
};

struct SimplicialSet {
    int trunc_dim = 0;
    std::vector<int> counts;
    StructureTable faces;
    StructureTable degens;

    int size(int n) const { return counts[static_cast<size_t>(n)]; }
    int face(int n, int id, int i) const {
        return faces[static_cast<size_t>(n)][static_cast<size_t>(id)][static_cast<size_t>(i)];
    }
    int degen(int n, int id, int i) const {
        return degens[static_cast<size_t>(n)][static_cast<size_t>(id)][static_cast<size_t>(i)];
    }
    /// X(f) : X_n -> X_m for an arbitrary monotone f : [m] -> [n], computed
    /// through the epi-mono factorization of f.
    int apply(const PosetMap& f, int id) const;
    int vertex(int n, int id, int pos) const;

    /// flag[n][id] is true iff the simplex is not in the image of any s_i.
    std::vector<std::vector<char>> nondegenerate_flags() const;
    bool is_degenerate(int n, int id) const;
    /// Eilenberg-Zilber: the unique (y nondegenerate, s surjective) with
    /// id = s*(y). Throws integrity_error on a broken presheaf.
    std::pair<std::pair<int, int>, PosetMap> normalize(int n, int id) const;

    void validate() const;
    /// Brute-force check that every simplex has exactly one (y, s)
    /// presentation. Quadratic; meant for tests and small inputs.
    void validate_eilenberg_zilber() const;
};

/// Delta^k truncated at D; the n-simplices are the monotone maps [n] -> [k]
/// in lexicographic order.
SimplicialSet standard_simplex(int k, int D);

/// ID of a monotone map [n] -> [k] within standard_simplex(k, D).
int standard_simplex_index(int k, const PosetMap& u);
PosetMap standard_simplex_map(int k, int n, int id);

struct FiniteCategory {
    int num_objects = 0;
    std::vector<int> mor_src, mor_tgt;
    std::vector<int> identities;         // per object
    std::vector<std::vector<int>> comp;  // comp[g][f] = g . f, -1 when not composable

    int num_morphisms() const { return static_cast<int>(mor_src.size()); }
    bool composable(int g, int f) const {
        return mor_tgt[static_cast<size_t>(f)] == mor_src[static_cast<size_t>(g)];
    }
    int compose_mor(int g, int f) const;
    bool is_identity_mor(int f) const {
        return identities[static_cast<size_t>(mor_src[static_cast<size_t>(f)])] == f;
    }
    void validate() const;

    static FiniteCategory discrete(int n);
    static FiniteCategory poset_chain(int k);  // the linear order [k]
    static FiniteCategory walking_isomorphism();
};

/// Nerve of a finite category, truncated at D: n-simplices are chains of n
/// composable morphisms.
SimplicialSet nerve(const FiniteCategory& C, int D);

SimplicialSet disjoint_union(const SimplicialSet& X, const SimplicialSet& Y);
SimplicialSet product(const SimplicialSet& X, const SimplicialSet& Y);

/// A subcomplex as per-dimension sorted ID lists.
using SimplexSelection = std::vector<std::vector<int>>;

/// Closure of the selection under faces and degeneracies.
SimplexSelection subcomplex_closure(const SimplicialSet& X, const SimplexSelection& seed);

struct CollapseResult {
    SimplicialSet quotient;
    std::vector<std::vector<int>> map;  // map[n][old_id] = new_id
};

/// Pushout collapsing each listed subcomplex to a point. Selections must be
/// closed under faces and degeneracies and pairwise disjoint.
CollapseResult collapse(const SimplicialSet& X, const std::vector<SimplexSelection>& subs);

/// A dimension-wise assignment of simplex IDs.
struct SSetMap {
    std::vector<std::vector<int>> at;
    int operator()(int n, int id) const {
        return at[static_cast<size_t>(n)][static_cast<size_t>(id)];
    }
};

/// Empty result means the assignment commutes with faces (and degeneracies
/// when both sides carry them).
std::vector<std::string> simplicial_map_violations(const SimplicialSet& X,
                                                   const SimplicialSet& Y, const SSetMap& f);
std::vector<std::string> semisimplicial_map_violations(const SemisimplicialSet& X,
                                                       const SemisimplicialSet& Y,
                                                       const SSetMap& f);

// --- generated simplicial sets -------------------------------------------
//
// A simplicial set presented by its nondegenerate simplices. Faces of
// nondegenerate simplices are recorded as Eilenberg-Zilber pairs, since a
// face of a nondegenerate simplex may be degenerate.

struct EzPair {
    int base = 0;  // nondegenerate simplex ID in dimension surj.target_size()-1
    PosetMap surj;
    friend bool operator==(const EzPair&, const EzPair&) = default;
};

struct NondegCore {
    int trunc_dim = 0;
    std::vector<int> counts;                       // nondegenerate counts per dimension
    std::vector<std::vector<std::vector<EzPair>>> faces;  // faces[n][y][i], n >= 1
};

struct GeneratedSSet {
    SimplicialSet sset;
    std::vector<std::vector<EzPair>> pairs;  // per dimension, per simplex ID
    int pair_id(int dim, const EzPair& p) const;

    // lookup keyed by (base-dim, base, surj values)
    std::vector<std::map<std::tuple<int, int, std::vector<int>>, int>> index;
};

/// Freely generate the truncated simplicial set with the given nondegenerate
/// simplices: n-simplices are pairs (y, s : [n] ->> [m]) with y
/// nondegenerate of dimension m. Validates the result.
GeneratedSSet generate_from_core(const NondegCore& core);

/// X(g) applied to the pair (y, s) entirely within the core data.
EzPair core_apply(const NondegCore& core, const EzPair& p, const PosetMap& g);

}  // namespace sstk
