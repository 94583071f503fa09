#include "sstk/delta.hpp"

#include <algorithm>

namespace sstk {

bool PosetMap::well_formed() const {
    if (target <= 0) return false;
    for (size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0 || values[i] >= target) return false;
        if (i > 0 && values[i] < values[i - 1]) return false;
    }
    return true;
}

bool PosetMap::is_identity() const {
    if (source_size() != target) return false;
    for (int i = 0; i < source_size(); ++i)
        if (values[static_cast<size_t>(i)] != i) return false;
    return true;
}

bool PosetMap::is_surjective() const {
    int next = 0;
    for (int v : values) {
        if (v == next) ++next;
        else if (v > next) return false;
    }
    return next == target;
}

bool PosetMap::is_injective() const {
    for (size_t i = 1; i < values.size(); ++i)
        if (values[i] <= values[i - 1]) return false;
    return true;
}

PosetMap PosetMap::identity(int size) {
    std::vector<int> v(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) v[static_cast<size_t>(i)] = i;
    return PosetMap(size, std::move(v));
}

PosetMap PosetMap::coface(int n, int i) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(n));
    for (int j = 0; j <= n; ++j)
        if (j != i) v.push_back(j);
    return PosetMap(n + 1, std::move(v));
}

PosetMap PosetMap::codegeneracy(int n, int i) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(n) + 2);
    for (int j = 0; j <= n + 1; ++j) v.push_back(j <= i ? j : j - 1);
    return PosetMap(n + 1, std::move(v));
}

PosetMap PosetMap::constant(int source_size, int target_size, int value) {
    return PosetMap(target_size, std::vector<int>(static_cast<size_t>(source_size), value));
}

std::string to_string(const PosetMap& f) {
    std::string s = "(";
    for (size_t i = 0; i < f.values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f.values[i]);
    }
    s += "):[" + std::to_string(f.source_size() - 1) + "]->[" +
         std::to_string(f.target_size() - 1) + "]";
    return s;
}

PosetMap compose(const PosetMap& g, const PosetMap& f) {
    if (f.target_size() != g.source_size())
        throw compose_error("compose: target of " + to_string(f) +
                            " does not match source of " + to_string(g));
    std::vector<int> v;
    v.reserve(f.values.size());
    for (int x : f.values) v.push_back(g.values[static_cast<size_t>(x)]);
    return PosetMap(g.target_size(), std::move(v));
}

EpiMonoFactorization epi_mono_factorize(const PosetMap& f) {
    std::vector<int> image;  // sorted distinct values
    for (int v : f.values)
        if (image.empty() || image.back() != v) image.push_back(v);
    std::vector<int> epi_vals;
    epi_vals.reserve(f.values.size());
    for (int v : f.values) {
        auto it = std::lower_bound(image.begin(), image.end(), v);
        epi_vals.push_back(static_cast<int>(it - image.begin()));
    }
    int k = static_cast<int>(image.size());
    return EpiMonoFactorization{PosetMap(k, std::move(epi_vals)),
                                PosetMap(f.target_size(), std::move(image))};
}

namespace {

void enumerate_rec(int m, int n, MapKind kind, std::vector<int>& prefix,
                   std::vector<PosetMap>& out) {
    if (static_cast<int>(prefix.size()) == m + 1) {
        PosetMap f(n + 1, prefix);
        if (kind == MapKind::epi && !f.is_surjective()) return;
        if (kind == MapKind::mono && !f.is_injective()) return;
        out.push_back(std::move(f));
        return;
    }
    int lo = prefix.empty() ? 0 : prefix.back();
    for (int v = lo; v <= n; ++v) {
        prefix.push_back(v);
        enumerate_rec(m, n, kind, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<PosetMap> enumerate_maps(int m, int n, MapKind kind) {
    if (m < 0 || n < 0) throw input_error("enumerate_maps: negative size");
    std::vector<PosetMap> out;
    std::vector<int> prefix;
    enumerate_rec(m, n, kind, prefix, out);
    return out;
}

std::vector<int> missing_values(const PosetMap& mono) {
    std::vector<int> out;
    size_t j = 0;
    for (int v = 0; v < mono.target_size(); ++v) {
        if (j < mono.values.size() && mono.values[j] == v) ++j;
        else out.push_back(v);
    }
    return out;
}

std::vector<int> duplicated_positions(const PosetMap& epi) {
    std::vector<int> out;
    for (size_t i = 0; i + 1 < epi.values.size(); ++i)
        if (epi.values[i] == epi.values[i + 1]) out.push_back(static_cast<int>(i));
    return out;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace sstk
