// Combinatorics of the simplex category: monotone maps between finite
// linear orders [m] = {0,...,m}, their composition, unique epi-mono
// factorization, and exhaustive enumeration.
#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sstk {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct compose_error : error {
    using error::error;
};
struct truncation_error : error {
    using error::error;
};
struct integrity_error : error {
    using error::error;
};
struct closure_error : error {
    using error::error;
};
struct input_error : error {
    using error::error;
};

/// A monotone map [m] -> [n], stored as the value sequence (f(0),...,f(m)).
/// source_size() is m+1 and target_size() is n+1.
struct PosetMap {
    int target = 0;  // n+1
    std::vector<int> values;

    PosetMap() = default;
    PosetMap(int target_size, std::vector<int> vals)
        : target(target_size), values(std::move(vals)) {}

    int source_size() const { return static_cast<int>(values.size()); }
    int target_size() const { return target; }
    int operator()(int i) const { return values[static_cast<size_t>(i)]; }

    bool well_formed() const;
    bool is_identity() const;
    bool is_surjective() const;
    bool is_injective() const;

    static PosetMap identity(int size);
    /// coface d_i : [n-1] -> [n], the monotone injection missing i.
    static PosetMap coface(int n, int i);
    /// codegeneracy s_i : [n+1] -> [n], the monotone surjection repeating i.
    static PosetMap codegeneracy(int n, int i);
    static PosetMap constant(int source_size, int target_size, int value);

    friend bool operator==(const PosetMap&, const PosetMap&) = default;
    friend auto operator<=>(const PosetMap& a, const PosetMap& b) {
        if (auto c = a.target <=> b.target; c != 0) return c;
        return a.values <=> b.values;
    }
};

std::string to_string(const PosetMap& f);

/// g after f. Throws compose_error on a size mismatch.
PosetMap compose(const PosetMap& g, const PosetMap& f);

struct EpiMonoFactorization {
    PosetMap epi;   // [m] ->> [k], surjective onto the linearly ordered image
    PosetMap mono;  // [k] -> [n], strictly increasing
};

/// The unique factorization f = mono . epi.
EpiMonoFactorization epi_mono_factorize(const PosetMap& f);

enum class MapKind { all, epi, mono };

/// All monotone maps [m] -> [n] of the requested kind, in lexicographic
/// order of value sequences.
std::vector<PosetMap> enumerate_maps(int m, int n, MapKind kind);

/// Values of [n] missed by an injective map, ascending.
std::vector<int> missing_values(const PosetMap& mono);
/// Positions i with f(i) = f(i+1) for a surjective map, ascending.
std::vector<int> duplicated_positions(const PosetMap& epi);

/// Exact binomial coefficient; arguments stay desk-scale.
std::int64_t binomial(int n, int k);

}  // namespace sstk
