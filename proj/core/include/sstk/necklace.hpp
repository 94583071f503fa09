// Necklaces over a simplicial set: the bounded comma category of bi-pointed
// necklace maps, its full subcategories of nondegenerate-bead and
// single-surjective-bead objects, fiber checks for finality, the comparison
// of the single-bead category with a product of truncated injective simplex
// categories, the localization pushout, and the mapping-space probe.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sstk/adjunction.hpp"
#include "sstk/homotopy.hpp"
#include "sstk/sset.hpp"

namespace sstk {

/// Bead dimensions, all >= 1; the empty sequence is the point necklace.
struct Necklace {
    std::vector<int> beads;
    int total_dim() const {
        int t = 0;
        for (int m : beads) t += m;
        return t;
    }
    friend bool operator==(const Necklace&, const Necklace&) = default;
    friend auto operator<=>(const Necklace&, const Necklace&) = default;
};

/// The wedge of standard simplices as a simplicial set, with canonical
/// (bead, poset map) representatives per simplex. Simplices constant at a
/// join are owned by the later bead.
struct NecklaceRealization {
    Necklace neck;
    SimplicialSet sset;
    std::vector<std::vector<std::pair<int, PosetMap>>> reps;  // per dim, per ID
    std::vector<std::map<std::pair<int, std::vector<int>>, int>> index;

    int num_beads() const { return std::max<int>(1, static_cast<int>(neck.beads.size())); }
    int bead_dim(int j) const { return neck.beads.empty() ? 0 : neck.beads[static_cast<size_t>(j)]; }
    int init_vertex() const { return 0; }
    int final_vertex() const { return neck.total_dim(); }
    int simplex_of(int bead, const PosetMap& u) const;  // canonicalizes
    int top_simplex(int bead) const;
    int first_vertex(int dim, int id) const;
    int last_vertex(int dim, int id) const;
};

NecklaceRealization realize_necklace(const Necklace& neck, int trunc_dim);

/// A necklace mapped over X with endpoints at fixed vertices: bead j lands
/// on a simplex of matching dimension, consecutive images share endpoints.
struct NeckObject {
    Necklace neck;
    std::vector<int> bead_images;  // simplex IDs in X; empty for the point necklace
    friend bool operator==(const NeckObject&, const NeckObject&) = default;
    friend auto operator<=>(const NeckObject&, const NeckObject&) = default;
};

/// A morphism is determined by where the beads of the source go; the point
/// necklace instead records the image vertex.
struct NeckMorphism {
    int src = 0, tgt = 0;
    std::vector<int> bead_images;  // simplex IDs in the target realization
    int point_image = -1;
    friend bool operator==(const NeckMorphism&, const NeckMorphism&) = default;
    friend auto operator<=>(const NeckMorphism&, const NeckMorphism&) = default;
};

struct CommaBounds {
    int max_total_dim = 3;
    int max_beads = 3;
};

struct CommaCategory {
    FiniteCategory cat;
    std::vector<NeckObject> objects;
    std::vector<NeckMorphism> morphisms;
    std::vector<int> realization_of;              // object -> realization index
    std::vector<NecklaceRealization> realizations;  // one per necklace shape used
    int x = 0, y = 0;
    CommaBounds bounds;
};

/// All necklace maps into X with endpoints (x, y) and total dimension within
/// the bounds; morphisms are bi-pointed simplicial maps over X.
CommaCategory comma_category(const SimplicialSet& X, int x, int y, const CommaBounds& bounds);

struct Subcategory {
    FiniteCategory cat;
    std::vector<int> object_in_big;    // inclusion on objects
    std::vector<int> morphism_in_big;  // inclusion on morphisms
};

/// Full subcategory of objects whose beads all land on nondegenerate
/// simplices of X.
Subcategory full_subcategory_N(const CommaCategory& C, const SimplicialSet& X);
/// Further restriction to single-bead objects whose image hits every vertex
/// ID between x and y inclusive.
Subcategory full_subcategory_F(const CommaCategory& C, const SimplicialSet& X);

/// Full subcategory of a previously extracted subcategory, by kept objects.
Subcategory full_subcategory_of(const FiniteCategory& big, const std::vector<int>& keep);

enum class Extremal { initial, terminal };

struct FiberReport {
    int big_object = 0;
    int fiber_objects = 0;
    bool has_extremal = false;
    int witness = -1;  // fiber object index
};

struct FinalityReport {
    Extremal mode = Extremal::initial;
    bool pass = true;
    std::vector<FiberReport> fibers;
};

/// For each object T of `big`, builds the comma fiber of the inclusion
/// (objects: arrows T -> a with a in the subcategory) and reports whether it
/// has an initial resp. terminal object.
FinalityReport check_finality(const Subcategory& small, const FiniteCategory& big,
                              Extremal mode);

struct FIsoReport {
    bool pass = false;
    int k = 0, max_m = 0;
    long long objects_single_bead = 0, objects_product = 0;
    long long morphisms_single_bead = 0, morphisms_product = 0;
    bool object_bijection = false, morphism_bijection = false, functorial = false;
    std::string detail;
};

/// Constructs the single-bead category over the plus construction of the
/// k-simplex (objects: surjections [m] ->> [k], m <= max_m; morphisms:
/// injections g with f . g = f') and checks that fiberwise preimage sizes
/// give an isomorphism onto the (1+k)-fold product of truncated injective
/// simplex categories.
FIsoReport f_iso_check(int k, int max_m);

struct Localization {
    int k = 0;
    SimplicialSet P;
    std::vector<std::vector<int>> quotient_map;  // from plus(restrict(Delta^k))
    PlusSet plus_of_simplex;
};

/// The pushout collapsing each of the k+1 vertex components of
/// plus(Delta^k_inj) to a point; class vertices come out as 0..k.
Localization localization_pushout(int k, int trunc_dim);

struct MappingSpaceProbe {
    int k = 0, x = 0, y = 0, bound = 0, max_deg = 0;
    long long comma_objects = 0, comma_morphisms = 0;
    long long n_objects = 0, n_morphisms = 0;
    long long f_objects = 0, f_morphisms = 0;
    FinalityReport finality_N;  // N into the full comma category, initial objects
    FinalityReport finality_F;  // F into N, terminal objects
    ContractibilityReport probe;  // on the nerve of F
    bool pass = false;
    std::string verdict;
};

/// Builds the reduction chain F -> N -> (Nec over P) at the given bounds and
/// runs the contractibility probe on the nerve of F. The verdict is the
/// probe's; the finality reports are attached as evidence.
MappingSpaceProbe mapping_space_probe(int k, int x, int y, int bound, int max_deg,
                                      int budget = 10000);

}  // namespace sstk
