// Horn enumeration, filler search, bounded quasi-category checking, and the
// finite witness for the unfillable inner 3-horn of the plus construction.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sstk/sset.hpp"

namespace sstk {

struct HornInstance {
    int dim = 0;
    int missing_face = 0;
    std::vector<int> faces;  // size dim+1; faces[missing_face] = -1

    friend bool operator==(const HornInstance&, const HornInstance&) = default;
};

bool horn_compatible(const SimplicialSet& X, const HornInstance& h);

/// Every compatible horn of dimension n, each exactly once, streamed in
/// deterministic order (missing face, then lexicographic face tuples).
void enumerate_horns(const SimplicialSet& X, int n, bool inner_only,
                     const std::function<void(const HornInstance&)>& sink);
std::vector<HornInstance> enumerate_horns(const SimplicialSet& X, int n, bool inner_only);

/// First n-simplex matching the horn on all present faces; empty if none in
/// the truncation. Throws input_error on an incompatible horn.
std::optional<int> find_filler(const SimplicialSet& X, const HornInstance& h);
std::vector<int> find_all_fillers(const SimplicialSet& X, const HornInstance& h);

struct QuasiReportEntry {
    HornInstance horn;
    std::optional<int> filler;
};

struct QuasiReport {
    int max_dim = 0;
    long long horns_checked = 0;
    std::vector<QuasiReportEntry> unfilled;
    std::string caveat;  // truncation caveat, always attached
    bool quasi_up_to_max_dim() const { return unfilled.empty(); }
};

/// All unfilled inner horns of dimension <= max_dim. Requires
/// max_dim < X.trunc_dim.
QuasiReport quasicheck(const SimplicialSet& X, int max_dim);

/// The finite simplicial set C with two parallel composites: vertices
/// x0, x1, x2, edges f01, f12 and distinct parallel edges f02 != f03, and
/// 2-simplices T012, T013 sharing every boundary edge except d1. Its plus
/// construction carries the unfillable inner 3-horn.
struct CounterexampleData {
    GeneratedSSet gen;
    int x0, x1, x2;
    int f01, f12, f02, f03;
    int T012, T013;
};

CounterexampleData counterexample_core(int trunc_dim = 4);
SimplicialSet counterexample_input(int trunc_dim = 4);

}  // namespace sstk
