// Algebraic invariants: normalized chain complexes, exact integer homology
// via Smith normal form, edge-path fundamental group presentations with a
// bounded triviality certifier, and the degree-bounded contractibility probe.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "sstk/sset.hpp"

namespace sstk {

using Int = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<Int>>;  // row-major

struct ChainComplex {
    int top = 0;
    std::vector<int> ranks;          // nondegenerate simplex counts, degrees 0..top
    std::vector<Matrix> boundaries;  // boundaries[n] is ranks[n-1] x ranks[n], n >= 1
    std::vector<std::vector<int>> basis;  // basis[n][dense index] = simplex ID
};

/// Degree-n rank = nondegenerate n-simplices; boundary is the alternating
/// face sum with degenerate faces dropped.
ChainComplex normalized_chains(const SimplicialSet& X);

/// d^2 = 0 in every degree; throws integrity_error otherwise.
void check_boundary_squares_to_zero(const ChainComplex& C);

struct SmithResult {
    Matrix D;  // U * A * V = D, diagonal with d_i | d_{i+1}, entries >= 0
    Matrix U, V;
    int rank = 0;
    std::vector<Int> diag;  // the nonzero diagonal entries
};

SmithResult smith_normal_form(const Matrix& A);

Matrix matmul(const Matrix& A, const Matrix& B);

struct AbelianGroup {
    int betti = 0;
    std::vector<Int> torsion;  // invariant factors > 1
    bool trivial() const { return betti == 0 && torsion.empty(); }
};

/// H_k over the integers for 0 <= k <= max_deg; requires max_deg < C.top.
std::vector<AbelianGroup> homology(const ChainComplex& C, int max_deg);

bool is_connected(const SimplicialSet& X);

struct GroupPresentation {
    int num_generators = 0;
    // letters are +-(g+1); a relator spells a word equal to the identity
    std::vector<std::vector<int>> relators;
    std::vector<int> generator_edges;  // originating nondegenerate edge IDs, if any
};

/// Edge-path presentation relative to a spanning tree of the 1-skeleton.
/// Throws input_error when X is not connected.
GroupPresentation pi1_presentation(const SimplicialSet& X, int basepoint);

enum class Triviality { trivial, nontrivial, unknown };

struct TrivialityResult {
    Triviality verdict = Triviality::unknown;
    std::string method;
};

/// Tietze simplification (with the idempotent rule x*x = x => x = 1 as a
/// dedicated step), then an abelianization obstruction, then coset
/// enumeration bounded by `budget` table rows.
TrivialityResult is_trivial_group(const GroupPresentation& P, int budget = 10000);

struct ContractibilityReport {
    int max_deg = 0;
    bool connected = false;
    std::vector<AbelianGroup> groups;  // H_0..H_max_deg
    bool reduced_homology_trivial = false;
    Triviality pi1 = Triviality::unknown;
    bool pass = false;
    std::string verdict;
};

/// Necessary-but-not-sufficient evidence for contractibility: connectivity,
/// vanishing reduced homology through max_deg, and budgeted pi_1 triviality.
ContractibilityReport contractibility_probe(const SimplicialSet& X, int max_deg,
                                            int budget = 10000);

}  // namespace sstk
