// The restriction / free-degeneracy adjunction between semisimplicial and
// simplicial sets: restriction, the plus construction whose N-simplices are
// pairs (base, surjection), the unit and counit, and the triangle identities.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "sstk/sset.hpp"

namespace sstk {

/// Forget the degeneracy tables; faces are preserved bit-for-bit.
SemisimplicialSet restrict_sset(const SimplicialSet& X);

/// The free simplicial set on a semisimplicial set. N-simplices are pairs
/// (S, s) with S an N'-simplex of the input and s : [N] ->> [N'], IDs
/// ordered by (N', S, lexicographic s). A structure map g acts through the
/// epi-mono factorization of s . g.
struct PlusSet {
    GeneratedSSet gen;
    const SimplicialSet& sset() const { return gen.sset; }
    const EzPair& pair(int dim, int id) const {
        return gen.pairs[static_cast<size_t>(dim)][static_cast<size_t>(id)];
    }
    int id_of(int dim, int base, const PosetMap& surj) const {
        return gen.pair_id(dim, EzPair{base, surj});
    }
};

PlusSet plus(const SemisimplicialSet& X);

/// counit : plus(restrict(X)) -> X, (S, s) |-> s*(S).
SSetMap counit(const SimplicialSet& X, const PlusSet& PRX);

/// unit : X -> restrict(plus(X)), S |-> (S, id).
SSetMap unit(const SemisimplicialSet& X, const PlusSet& PX);

/// Image of a semisimplicial map under plus: (S, s) |-> (h(S), s).
SSetMap plus_map(const SSetMap& h, const PlusSet& PX, const PlusSet& PZ);

struct TriangleReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks both triangle identities simplex-by-simplex up to the truncation:
/// the counit of plus(X) after plus(unit), and restrict(counit) after the
/// unit of restrict(Y).
TriangleReport check_triangle_identities(const SemisimplicialSet& X, const SimplicialSet& Y);

/// Seeded generator of valid semisimplicial sets for randomized checks;
/// at most max_per_dim simplices in each positive dimension.
SemisimplicialSet random_semisimplicial(int trunc_dim, int max_per_dim, unsigned seed);

}  // namespace sstk
