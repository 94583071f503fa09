#include "sstk/sset.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace sstk {

namespace {

void check_dim(int n, int D, const char* who) {
    if (n < 0 || n > D)
        throw truncation_error(std::string(who) + ": dimension " + std::to_string(n) +
                               " outside truncation " + std::to_string(D));
}

// Apply the face operators for an injective map: largest missed value first.
template <typename FaceFn>
int apply_mono(const PosetMap& mono, int id, FaceFn face_at) {
    auto miss = missing_values(mono);
    int dim = mono.target_size() - 1;
    for (auto it = miss.rbegin(); it != miss.rend(); ++it) {
        id = face_at(dim, id, *it);
        --dim;
    }
    return id;
}

}  // namespace

int SemisimplicialSet::apply(const PosetMap& f, int id) const {
    check_dim(f.target_size() - 1, trunc_dim, "SemisimplicialSet::apply");
    check_dim(f.source_size() - 1, trunc_dim, "SemisimplicialSet::apply");
    if (!f.is_injective())
        throw input_error("SemisimplicialSet::apply: map is not injective");
    return apply_mono(f, id, [this](int n, int s, int i) { return face(n, s, i); });
}

int SemisimplicialSet::vertex(int n, int id, int pos) const {
    return apply(PosetMap::constant(1, n + 1, pos), id);
}

int SimplicialSet::apply(const PosetMap& f, int id) const {
    check_dim(f.target_size() - 1, trunc_dim, "SimplicialSet::apply");
    check_dim(f.source_size() - 1, trunc_dim, "SimplicialSet::apply");
    auto [epi, mono] = epi_mono_factorize(f);
    id = apply_mono(mono, id, [this](int n, int s, int i) { return face(n, s, i); });
    int dim = mono.source_size() - 1;
    for (int b : duplicated_positions(epi)) {
        id = degen(dim, id, b);
        ++dim;
    }
    return id;
}

int SimplicialSet::vertex(int n, int id, int pos) const {
    return apply(PosetMap::constant(1, n + 1, pos), id);
}

std::vector<std::vector<char>> SimplicialSet::nondegenerate_flags() const {
    std::vector<std::vector<char>> flag(static_cast<size_t>(trunc_dim) + 1);
    for (int n = 0; n <= trunc_dim; ++n)
        flag[static_cast<size_t>(n)].assign(static_cast<size_t>(size(n)), 1);
    for (int n = 0; n < trunc_dim; ++n)
        for (int s = 0; s < size(n); ++s)
            for (int i = 0; i <= n; ++i)
                flag[static_cast<size_t>(n) + 1][static_cast<size_t>(degen(n, s, i))] = 0;
    return flag;
}

bool SimplicialSet::is_degenerate(int n, int id) const {
    if (n == 0) return false;
    for (int s = 0; s < size(n - 1); ++s)
        for (int i = 0; i <= n - 1; ++i)
            if (degen(n - 1, s, i) == id) return true;
    return false;
}

std::pair<std::pair<int, int>, PosetMap> SimplicialSet::normalize(int n, int id) const {
    int cur_dim = n;
    int cur = id;
    PosetMap s = PosetMap::identity(n + 1);
    for (;;) {
        if (cur_dim == 0) break;
        bool found = false;
        for (int t = 0; t < size(cur_dim - 1) && !found; ++t) {
            for (int i = 0; i <= cur_dim - 1; ++i) {
                if (degen(cur_dim - 1, t, i) == cur) {
                    // cur = s_i(t): the presentation picks up sigma_i on the left.
                    s = compose(PosetMap::codegeneracy(cur_dim - 1, i), s);
                    found = true;
                    cur = t;
                    --cur_dim;
                    break;
                }
            }
        }
        if (!found) break;
    }
    std::pair<std::pair<int, int>, PosetMap> out{{cur_dim, cur}, s};
    if (apply(out.second, out.first.second) != id)
        throw integrity_error("normalize: presentation does not reproduce the simplex");
    return out;
}

void SemisimplicialSet::validate() const {
    if (static_cast<int>(counts.size()) != trunc_dim + 1)
        throw integrity_error("semisimplicial set: counts size mismatch");
    for (int n = 1; n <= trunc_dim; ++n) {
        if (static_cast<int>(faces[static_cast<size_t>(n)].size()) != size(n))
            throw integrity_error("semisimplicial set: face table size mismatch");
        for (int s = 0; s < size(n); ++s) {
            if (static_cast<int>(faces[static_cast<size_t>(n)][static_cast<size_t>(s)].size()) !=
                n + 1)
                throw integrity_error("semisimplicial set: face arity mismatch");
            for (int i = 0; i <= n; ++i) {
                int f = face(n, s, i);
                if (f < 0 || f >= size(n - 1))
                    throw integrity_error("semisimplicial set: face reference out of range");
            }
        }
    }
    for (int n = 2; n <= trunc_dim; ++n)
        for (int s = 0; s < size(n); ++s)
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i)
                    if (face(n - 1, face(n, s, j), i) != face(n - 1, face(n, s, i), j - 1))
                        throw integrity_error(
                            "semisimplicial identity d_i d_j = d_{j-1} d_i fails at dim " +
                            std::to_string(n));
}

void SimplicialSet::validate() const {
    SemisimplicialSet under{trunc_dim, counts, faces};
    under.validate();
    for (int n = 0; n < trunc_dim; ++n) {
        if (static_cast<int>(degens[static_cast<size_t>(n)].size()) != size(n))
            throw integrity_error("simplicial set: degeneracy table size mismatch");
        for (int s = 0; s < size(n); ++s)
            for (int i = 0; i <= n; ++i) {
                int d = degen(n, s, i);
                if (d < 0 || d >= size(n + 1))
                    throw integrity_error("simplicial set: degeneracy reference out of range");
            }
    }
    // s_i s_j = s_{j+1} s_i for i <= j
    for (int n = 0; n + 2 <= trunc_dim; ++n)
        for (int s = 0; s < size(n); ++s)
            for (int j = 0; j <= n; ++j)
                for (int i = 0; i <= j; ++i)
                    if (degen(n + 1, degen(n, s, j), i) != degen(n + 1, degen(n, s, i), j + 1))
                        throw integrity_error("simplicial identity s_i s_j fails at dim " +
                                              std::to_string(n));
    // d_i s_j relations
    for (int n = 0; n + 1 <= trunc_dim; ++n)
        for (int s = 0; s < size(n); ++s)
            for (int j = 0; j <= n; ++j) {
                int sj = degen(n, s, j);
                for (int i = 0; i <= n + 1; ++i) {
                    int got = face(n + 1, sj, i);
                    int want;
                    if (i == j || i == j + 1) want = s;
                    else if (i < j) want = degen(n - 1, face(n, s, i), j - 1);
                    else want = degen(n - 1, face(n, s, i - 1), j);
                    if (got != want)
                        throw integrity_error("simplicial identity d_i s_j fails at dim " +
                                              std::to_string(n));
                }
            }
}

void SimplicialSet::validate_eilenberg_zilber() const {
    auto flags = nondegenerate_flags();
    for (int n = 0; n <= trunc_dim; ++n)
        for (int s = 0; s < size(n); ++s) {
            int presentations = 0;
            for (int m = 0; m <= n; ++m)
                for (const auto& surj : enumerate_maps(n, m, MapKind::epi))
                    for (int y = 0; y < size(m); ++y)
                        if (flags[static_cast<size_t>(m)][static_cast<size_t>(y)] &&
                            apply(surj, y) == s)
                            ++presentations;
            if (presentations != 1)
                throw integrity_error("Eilenberg-Zilber uniqueness fails: simplex (" +
                                      std::to_string(n) + "," + std::to_string(s) + ") has " +
                                      std::to_string(presentations) + " presentations");
        }
}

// --- standard simplex ------------------------------------------------------

SimplicialSet standard_simplex(int k, int D) {
    if (k < 0 || D < 0) throw input_error("standard_simplex: negative argument");
    SimplicialSet X;
    X.trunc_dim = D;
    X.counts.resize(static_cast<size_t>(D) + 1);
    X.faces.resize(static_cast<size_t>(D) + 1);
    X.degens.resize(static_cast<size_t>(D) + 1);
    std::vector<std::vector<PosetMap>> maps(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n) {
        maps[static_cast<size_t>(n)] = enumerate_maps(n, k, MapKind::all);
        X.counts[static_cast<size_t>(n)] = static_cast<int>(maps[static_cast<size_t>(n)].size());
    }
    auto lookup = [&](int n, const PosetMap& u) {
        const auto& v = maps[static_cast<size_t>(n)];
        auto it = std::lower_bound(v.begin(), v.end(), u,
                                   [](const PosetMap& a, const PosetMap& b) {
                                       return a.values < b.values;
                                   });
        return static_cast<int>(it - v.begin());
    };
    for (int n = 1; n <= D; ++n) {
        auto& tab = X.faces[static_cast<size_t>(n)];
        tab.resize(maps[static_cast<size_t>(n)].size());
        for (size_t s = 0; s < maps[static_cast<size_t>(n)].size(); ++s) {
            tab[s].resize(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i)
                tab[s][static_cast<size_t>(i)] = lookup(
                    n - 1, compose(maps[static_cast<size_t>(n)][s], PosetMap::coface(n, i)));
        }
    }
    for (int n = 0; n < D; ++n) {
        auto& tab = X.degens[static_cast<size_t>(n)];
        tab.resize(maps[static_cast<size_t>(n)].size());
        for (size_t s = 0; s < maps[static_cast<size_t>(n)].size(); ++s) {
            tab[s].resize(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i)
                tab[s][static_cast<size_t>(i)] = lookup(
                    n + 1, compose(maps[static_cast<size_t>(n)][s], PosetMap::codegeneracy(n, i)));
        }
    }
    return X;
}

int standard_simplex_index(int k, const PosetMap& u) {
    auto maps = enumerate_maps(u.source_size() - 1, k, MapKind::all);
    auto it = std::lower_bound(maps.begin(), maps.end(), u,
                               [](const PosetMap& a, const PosetMap& b) {
                                   return a.values < b.values;
                               });
    if (it == maps.end() || !(*it == u))
        throw input_error("standard_simplex_index: map not found");
    return static_cast<int>(it - maps.begin());
}

PosetMap standard_simplex_map(int k, int n, int id) {
    auto maps = enumerate_maps(n, k, MapKind::all);
    return maps[static_cast<size_t>(id)];
}

// --- finite categories ------------------------------------------------------

int FiniteCategory::compose_mor(int g, int f) const {
    if (!composable(g, f)) throw compose_error("FiniteCategory: morphisms not composable");
    int r = comp[static_cast<size_t>(g)][static_cast<size_t>(f)];
    if (r < 0) throw integrity_error("FiniteCategory: missing composite");
    return r;
}

void FiniteCategory::validate() const {
    int M = num_morphisms();
    if (static_cast<int>(identities.size()) != num_objects)
        throw integrity_error("category: identity table size mismatch");
    for (int x = 0; x < num_objects; ++x) {
        int e = identities[static_cast<size_t>(x)];
        if (mor_src[static_cast<size_t>(e)] != x || mor_tgt[static_cast<size_t>(e)] != x)
            throw integrity_error("category: identity endpoints wrong");
    }
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f) {
            int r = comp[static_cast<size_t>(g)][static_cast<size_t>(f)];
            if (composable(g, f)) {
                if (r < 0) throw integrity_error("category: composable pair without composite");
                if (mor_src[static_cast<size_t>(r)] != mor_src[static_cast<size_t>(f)] ||
                    mor_tgt[static_cast<size_t>(r)] != mor_tgt[static_cast<size_t>(g)])
                    throw integrity_error("category: composite endpoints wrong");
            } else if (r >= 0) {
                throw integrity_error("category: composite of non-composable pair");
            }
        }
    for (int f = 0; f < M; ++f) {
        if (compose_mor(identities[static_cast<size_t>(mor_tgt[static_cast<size_t>(f)])], f) != f)
            throw integrity_error("category: left unit law fails");
        if (compose_mor(f, identities[static_cast<size_t>(mor_src[static_cast<size_t>(f)])]) != f)
            throw integrity_error("category: right unit law fails");
    }
    for (int h = 0; h < M; ++h)
        for (int g = 0; g < M; ++g)
            for (int f = 0; f < M; ++f)
                if (composable(g, f) && composable(h, g))
                    if (compose_mor(h, compose_mor(g, f)) != compose_mor(compose_mor(h, g), f))
                        throw integrity_error("category: associativity fails");
}

FiniteCategory FiniteCategory::discrete(int n) {
    FiniteCategory C;
    C.num_objects = n;
    for (int x = 0; x < n; ++x) {
        C.mor_src.push_back(x);
        C.mor_tgt.push_back(x);
        C.identities.push_back(x);
    }
    C.comp.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (int x = 0; x < n; ++x) C.comp[static_cast<size_t>(x)][static_cast<size_t>(x)] = x;
    return C;
}

FiniteCategory FiniteCategory::poset_chain(int k) {
    FiniteCategory C;
    C.num_objects = k + 1;
    std::vector<std::vector<int>> id_of(static_cast<size_t>(k) + 1,
                                        std::vector<int>(static_cast<size_t>(k) + 1, -1));
    for (int a = 0; a <= k; ++a)
        for (int b = a; b <= k; ++b) {
            id_of[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                static_cast<int>(C.mor_src.size());
            C.mor_src.push_back(a);
            C.mor_tgt.push_back(b);
        }
    for (int a = 0; a <= k; ++a)
        C.identities.push_back(id_of[static_cast<size_t>(a)][static_cast<size_t>(a)]);
    int M = C.num_morphisms();
    C.comp.assign(static_cast<size_t>(M), std::vector<int>(static_cast<size_t>(M), -1));
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f)
            if (C.composable(g, f))
                C.comp[static_cast<size_t>(g)][static_cast<size_t>(f)] =
                    id_of[static_cast<size_t>(C.mor_src[static_cast<size_t>(f)])]
                         [static_cast<size_t>(C.mor_tgt[static_cast<size_t>(g)])];
    return C;
}

FiniteCategory FiniteCategory::walking_isomorphism() {
    // objects 0, 1; morphisms id0, id1, f : 0 -> 1, g : 1 -> 0 with fg = id1, gf = id0
    FiniteCategory C;
    C.num_objects = 2;
    C.mor_src = {0, 1, 0, 1};
    C.mor_tgt = {0, 1, 1, 0};
    C.identities = {0, 1};
    C.comp.assign(4, std::vector<int>(4, -1));
    auto set = [&](int g, int f, int r) { C.comp[static_cast<size_t>(g)][static_cast<size_t>(f)] = r; };
    set(0, 0, 0);
    set(1, 1, 1);
    set(2, 0, 2);  // f . id0
    set(1, 2, 2);  // id1 . f
    set(3, 1, 3);
    set(0, 3, 3);
    set(3, 2, 0);  // g . f = id0
    set(2, 3, 1);  // f . g = id1
    return C;
}

// --- nerve -------------------------------------------------------------------

namespace {

void chains_rec(const FiniteCategory& C, int n, std::vector<int>& chain,
                std::vector<std::vector<int>>& out) {
    if (static_cast<int>(chain.size()) == n) {
        out.push_back(chain);
        return;
    }
    for (int f = 0; f < C.num_morphisms(); ++f) {
        if (!chain.empty() && C.mor_src[static_cast<size_t>(f)] !=
                                  C.mor_tgt[static_cast<size_t>(chain.back())])
            continue;
        chain.push_back(f);
        chains_rec(C, n, chain, out);
        chain.pop_back();
    }
}

}  // namespace

SimplicialSet nerve(const FiniteCategory& C, int D) {
    C.validate();
    SimplicialSet X;
    X.trunc_dim = D;
    X.counts.resize(static_cast<size_t>(D) + 1);
    X.faces.resize(static_cast<size_t>(D) + 1);
    X.degens.resize(static_cast<size_t>(D) + 1);

    // chains[n]: for n = 0 the objects, else composable morphism chains
    std::vector<std::vector<std::vector<int>>> chains(static_cast<size_t>(D) + 1);
    std::vector<std::map<std::vector<int>, int>> index(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n) {
        if (n == 0) {
            for (int x = 0; x < C.num_objects; ++x)
                chains[0].push_back({x});
        } else {
            std::vector<int> chain;
            chains_rec(C, n, chain, chains[static_cast<size_t>(n)]);
        }
        X.counts[static_cast<size_t>(n)] = static_cast<int>(chains[static_cast<size_t>(n)].size());
        for (size_t i = 0; i < chains[static_cast<size_t>(n)].size(); ++i)
            index[static_cast<size_t>(n)][chains[static_cast<size_t>(n)][i]] =
                static_cast<int>(i);
    }
    auto chain_object = [&](const std::vector<int>& chain, int n, int pos) {
        // object at vertex pos of an n-chain
        if (n == 0) return chain[0];
        if (pos == 0) return C.mor_src[static_cast<size_t>(chain[0])];
        return C.mor_tgt[static_cast<size_t>(chain[static_cast<size_t>(pos) - 1])];
    };
    for (int n = 1; n <= D; ++n) {
        auto& tab = X.faces[static_cast<size_t>(n)];
        tab.resize(chains[static_cast<size_t>(n)].size());
        for (size_t s = 0; s < chains[static_cast<size_t>(n)].size(); ++s) {
            const auto& ch = chains[static_cast<size_t>(n)][s];
            tab[s].resize(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i) {
                std::vector<int> fc;
                if (n == 1) {
                    fc = {chain_object(ch, n, 1 - i)};  // d_0 keeps target, d_1 keeps source
                } else if (i == 0) {
                    fc.assign(ch.begin() + 1, ch.end());
                } else if (i == n) {
                    fc.assign(ch.begin(), ch.end() - 1);
                } else {
                    fc.assign(ch.begin(), ch.end());
                    int composite = C.compose_mor(fc[static_cast<size_t>(i)],
                                                  fc[static_cast<size_t>(i) - 1]);
                    fc[static_cast<size_t>(i) - 1] = composite;
                    fc.erase(fc.begin() + i);
                }
                tab[s][static_cast<size_t>(i)] = index[static_cast<size_t>(n) - 1].at(fc);
            }
        }
    }
    for (int n = 0; n < D; ++n) {
        auto& tab = X.degens[static_cast<size_t>(n)];
        tab.resize(chains[static_cast<size_t>(n)].size());
        for (size_t s = 0; s < chains[static_cast<size_t>(n)].size(); ++s) {
            const auto& ch = chains[static_cast<size_t>(n)][s];
            tab[s].resize(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i) {
                std::vector<int> dc;
                int obj = chain_object(ch, n, i);
                if (n == 0) {
                    dc = {C.identities[static_cast<size_t>(obj)]};
                } else {
                    dc.assign(ch.begin(), ch.end());
                    dc.insert(dc.begin() + i, C.identities[static_cast<size_t>(obj)]);
                }
                tab[s][static_cast<size_t>(i)] = index[static_cast<size_t>(n) + 1].at(dc);
            }
        }
    }
    return X;
}

// --- coproduct and product ---------------------------------------------------

SimplicialSet disjoint_union(const SimplicialSet& X, const SimplicialSet& Y) {
    if (X.trunc_dim != Y.trunc_dim)
        throw input_error("disjoint_union: truncation mismatch");
    SimplicialSet Z;
    Z.trunc_dim = X.trunc_dim;
    int D = Z.trunc_dim;
    Z.counts.resize(static_cast<size_t>(D) + 1);
    Z.faces.resize(static_cast<size_t>(D) + 1);
    Z.degens.resize(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n)
        Z.counts[static_cast<size_t>(n)] = X.size(n) + Y.size(n);
    for (int n = 1; n <= D; ++n) {
        auto& tab = Z.faces[static_cast<size_t>(n)];
        tab.resize(static_cast<size_t>(Z.size(n)));
        for (int s = 0; s < X.size(n); ++s)
            tab[static_cast<size_t>(s)] = X.faces[static_cast<size_t>(n)][static_cast<size_t>(s)];
        for (int s = 0; s < Y.size(n); ++s) {
            auto row = Y.faces[static_cast<size_t>(n)][static_cast<size_t>(s)];
            for (int& v : row) v += X.size(n - 1);
            tab[static_cast<size_t>(X.size(n) + s)] = std::move(row);
        }
    }
    for (int n = 0; n < D; ++n) {
        auto& tab = Z.degens[static_cast<size_t>(n)];
        tab.resize(static_cast<size_t>(Z.size(n)));
        for (int s = 0; s < X.size(n); ++s)
            tab[static_cast<size_t>(s)] = X.degens[static_cast<size_t>(n)][static_cast<size_t>(s)];
        for (int s = 0; s < Y.size(n); ++s) {
            auto row = Y.degens[static_cast<size_t>(n)][static_cast<size_t>(s)];
            for (int& v : row) v += X.size(n + 1);
            tab[static_cast<size_t>(X.size(n) + s)] = std::move(row);
        }
    }
    return Z;
}

SimplicialSet product(const SimplicialSet& X, const SimplicialSet& Y) {
    if (X.trunc_dim != Y.trunc_dim) throw input_error("product: truncation mismatch");
    SimplicialSet Z;
    int D = X.trunc_dim;
    Z.trunc_dim = D;
    Z.counts.resize(static_cast<size_t>(D) + 1);
    Z.faces.resize(static_cast<size_t>(D) + 1);
    Z.degens.resize(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n) Z.counts[static_cast<size_t>(n)] = X.size(n) * Y.size(n);
    auto pid = [&](int n, int x, int y) { return x * Y.size(n) + y; };
    for (int n = 1; n <= D; ++n) {
        auto& tab = Z.faces[static_cast<size_t>(n)];
        tab.resize(static_cast<size_t>(Z.size(n)));
        for (int x = 0; x < X.size(n); ++x)
            for (int y = 0; y < Y.size(n); ++y) {
                auto& row = tab[static_cast<size_t>(pid(n, x, y))];
                row.resize(static_cast<size_t>(n) + 1);
                for (int i = 0; i <= n; ++i)
                    row[static_cast<size_t>(i)] = pid(n - 1, X.face(n, x, i), Y.face(n, y, i));
            }
    }
    for (int n = 0; n < D; ++n) {
        auto& tab = Z.degens[static_cast<size_t>(n)];
        tab.resize(static_cast<size_t>(Z.size(n)));
        for (int x = 0; x < X.size(n); ++x)
            for (int y = 0; y < Y.size(n); ++y) {
                auto& row = tab[static_cast<size_t>(pid(n, x, y))];
                row.resize(static_cast<size_t>(n) + 1);
                for (int i = 0; i <= n; ++i)
                    row[static_cast<size_t>(i)] = pid(n + 1, X.degen(n, x, i), Y.degen(n, y, i));
            }
    }
    return Z;
}

// --- collapse ----------------------------------------------------------------

SimplexSelection subcomplex_closure(const SimplicialSet& X, const SimplexSelection& seed) {
    std::vector<std::vector<char>> in(static_cast<size_t>(X.trunc_dim) + 1);
    for (int n = 0; n <= X.trunc_dim; ++n)
        in[static_cast<size_t>(n)].assign(static_cast<size_t>(X.size(n)), 0);
    for (size_t n = 0; n < seed.size(); ++n)
        for (int id : seed[n]) in[n][static_cast<size_t>(id)] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int n = 0; n <= X.trunc_dim; ++n)
            for (int s = 0; s < X.size(n); ++s) {
                if (!in[static_cast<size_t>(n)][static_cast<size_t>(s)]) continue;
                if (n >= 1)
                    for (int i = 0; i <= n; ++i) {
                        auto& c = in[static_cast<size_t>(n) - 1][static_cast<size_t>(X.face(n, s, i))];
                        if (!c) c = 1, changed = true;
                    }
                if (n < X.trunc_dim)
                    for (int i = 0; i <= n; ++i) {
                        auto& c = in[static_cast<size_t>(n) + 1][static_cast<size_t>(X.degen(n, s, i))];
                        if (!c) c = 1, changed = true;
                    }
            }
    }
    SimplexSelection out(static_cast<size_t>(X.trunc_dim) + 1);
    for (int n = 0; n <= X.trunc_dim; ++n)
        for (int s = 0; s < X.size(n); ++s)
            if (in[static_cast<size_t>(n)][static_cast<size_t>(s)]) out[static_cast<size_t>(n)].push_back(s);
    return out;
}

CollapseResult collapse(const SimplicialSet& X, const std::vector<SimplexSelection>& subs) {
    int D = X.trunc_dim;
    int K = static_cast<int>(subs.size());
    // membership[n][id] = subcomplex index or -1
    std::vector<std::vector<int>> member(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n)
        member[static_cast<size_t>(n)].assign(static_cast<size_t>(X.size(n)), -1);
    for (int j = 0; j < K; ++j) {
        const auto& sel = subs[static_cast<size_t>(j)];
        if (static_cast<int>(sel.size()) != D + 1)
            throw closure_error("collapse: selection must list every dimension");
        for (int n = 0; n <= D; ++n)
            for (int id : sel[static_cast<size_t>(n)]) {
                if (id < 0 || id >= X.size(n))
                    throw closure_error("collapse: selection out of range");
                if (member[static_cast<size_t>(n)][static_cast<size_t>(id)] != -1)
                    throw closure_error("collapse: subcomplexes are not pairwise disjoint");
                member[static_cast<size_t>(n)][static_cast<size_t>(id)] = j;
            }
    }
    // closure check
    for (int n = 0; n <= D; ++n)
        for (int s = 0; s < X.size(n); ++s) {
            int j = member[static_cast<size_t>(n)][static_cast<size_t>(s)];
            if (j < 0) continue;
            if (n >= 1)
                for (int i = 0; i <= n; ++i)
                    if (member[static_cast<size_t>(n) - 1][static_cast<size_t>(X.face(n, s, i))] != j)
                        throw closure_error("collapse: selection not closed under faces");
            if (n < D)
                for (int i = 0; i <= n; ++i)
                    if (member[static_cast<size_t>(n) + 1][static_cast<size_t>(X.degen(n, s, i))] != j)
                        throw closure_error("collapse: selection not closed under degeneracies");
        }
    // which subcomplexes are nonempty (then they meet every dimension)
    std::vector<char> nonempty(static_cast<size_t>(K), 0);
    for (int j = 0; j < K; ++j)
        for (int n = 0; n <= D && !nonempty[static_cast<size_t>(j)]; ++n)
            if (!subs[static_cast<size_t>(j)][static_cast<size_t>(n)].empty())
                nonempty[static_cast<size_t>(j)] = 1;
    for (int j = 0; j < K; ++j)
        if (nonempty[static_cast<size_t>(j)] && subs[static_cast<size_t>(j)][0].empty())
            throw closure_error("collapse: nonempty subcomplex with no vertex");

    CollapseResult R;
    R.quotient.trunc_dim = D;
    R.quotient.counts.resize(static_cast<size_t>(D) + 1);
    R.quotient.faces.resize(static_cast<size_t>(D) + 1);
    R.quotient.degens.resize(static_cast<size_t>(D) + 1);
    R.map.resize(static_cast<size_t>(D) + 1);
    // class id per subcomplex per dimension
    std::vector<std::vector<int>> class_id(static_cast<size_t>(D) + 1,
                                           std::vector<int>(static_cast<size_t>(K), -1));
    for (int n = 0; n <= D; ++n) {
        auto& q = R.map[static_cast<size_t>(n)];
        q.assign(static_cast<size_t>(X.size(n)), -1);
        int next = 0;
        for (int s = 0; s < X.size(n); ++s)
            if (member[static_cast<size_t>(n)][static_cast<size_t>(s)] < 0) q[static_cast<size_t>(s)] = next++;
        for (int j = 0; j < K; ++j)
            if (nonempty[static_cast<size_t>(j)]) class_id[static_cast<size_t>(n)][static_cast<size_t>(j)] = next++;
        for (int s = 0; s < X.size(n); ++s) {
            int j = member[static_cast<size_t>(n)][static_cast<size_t>(s)];
            if (j >= 0) q[static_cast<size_t>(s)] = class_id[static_cast<size_t>(n)][static_cast<size_t>(j)];
        }
        R.quotient.counts[static_cast<size_t>(n)] = next;
    }
    for (int n = 1; n <= D; ++n) {
        auto& tab = R.quotient.faces[static_cast<size_t>(n)];
        tab.assign(static_cast<size_t>(R.quotient.size(n)), {});
        for (int s = 0; s < X.size(n); ++s) {
            auto& row = tab[static_cast<size_t>(R.map[static_cast<size_t>(n)][static_cast<size_t>(s)])];
            row.resize(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i)
                row[static_cast<size_t>(i)] =
                    R.map[static_cast<size_t>(n) - 1][static_cast<size_t>(X.face(n, s, i))];
        }
    }
    for (int n = 0; n < D; ++n) {
        auto& tab = R.quotient.degens[static_cast<size_t>(n)];
        tab.assign(static_cast<size_t>(R.quotient.size(n)), {});
        for (int s = 0; s < X.size(n); ++s) {
            auto& row = tab[static_cast<size_t>(R.map[static_cast<size_t>(n)][static_cast<size_t>(s)])];
            row.resize(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i)
                row[static_cast<size_t>(i)] =
                    R.map[static_cast<size_t>(n) + 1][static_cast<size_t>(X.degen(n, s, i))];
        }
    }
    R.quotient.validate();
    return R;
}

// --- simplicial map checks ----------------------------------------------------

std::vector<std::string> simplicial_map_violations(const SimplicialSet& X,
                                                   const SimplicialSet& Y, const SSetMap& f) {
    std::vector<std::string> out;
    for (int n = 1; n <= X.trunc_dim; ++n)
        for (int s = 0; s < X.size(n); ++s)
            for (int i = 0; i <= n; ++i)
                if (f(n - 1, X.face(n, s, i)) != Y.face(n, f(n, s), i))
                    out.push_back("face mismatch at dim " + std::to_string(n) + " simplex " +
                                  std::to_string(s) + " d" + std::to_string(i));
    for (int n = 0; n < X.trunc_dim; ++n)
        for (int s = 0; s < X.size(n); ++s)
            for (int i = 0; i <= n; ++i)
                if (f(n + 1, X.degen(n, s, i)) != Y.degen(n, f(n, s), i))
                    out.push_back("degeneracy mismatch at dim " + std::to_string(n) + " simplex " +
                                  std::to_string(s) + " s" + std::to_string(i));
    return out;
}

std::vector<std::string> semisimplicial_map_violations(const SemisimplicialSet& X,
                                                       const SemisimplicialSet& Y,
                                                       const SSetMap& f) {
    std::vector<std::string> out;
    for (int n = 1; n <= X.trunc_dim; ++n)
        for (int s = 0; s < X.size(n); ++s)
            for (int i = 0; i <= n; ++i)
                if (f(n - 1, X.face(n, s, i)) != Y.face(n, f(n, s), i))
                    out.push_back("face mismatch at dim " + std::to_string(n) + " simplex " +
                                  std::to_string(s) + " d" + std::to_string(i));
    return out;
}

// --- generated simplicial sets -------------------------------------------------

namespace {

EzPair core_apply_mono(const NondegCore& core, int dim, int base, const PosetMap& mono);

EzPair core_apply_pair(const NondegCore& core, const EzPair& p, const PosetMap& g) {
    PosetMap f = compose(p.surj, g);
    auto [epi, mono] = epi_mono_factorize(f);
    EzPair q = core_apply_mono(core, p.surj.target_size() - 1, p.base, mono);
    return EzPair{q.base, compose(q.surj, epi)};
}

EzPair core_apply_mono(const NondegCore& core, int dim, int base, const PosetMap& mono) {
    if (mono.is_identity()) return EzPair{base, PosetMap::identity(dim + 1)};
    int a = missing_values(mono).back();
    const EzPair& face = core.faces[static_cast<size_t>(dim)][static_cast<size_t>(base)]
                                   [static_cast<size_t>(a)];
    // squeeze the codomain past a
    std::vector<int> vals;
    vals.reserve(mono.values.size());
    for (int v : mono.values) vals.push_back(v > a ? v - 1 : v);
    PosetMap squeezed(dim, std::move(vals));
    return core_apply_pair(core, face, squeezed);
}

}  // namespace

EzPair core_apply(const NondegCore& core, const EzPair& p, const PosetMap& g) {
    return core_apply_pair(core, p, g);
}

int GeneratedSSet::pair_id(int dim, const EzPair& p) const {
    auto key = std::make_tuple(p.surj.target_size() - 1, p.base, p.surj.values);
    auto it = index[static_cast<size_t>(dim)].find(key);
    if (it == index[static_cast<size_t>(dim)].end())
        throw integrity_error("GeneratedSSet: unknown pair");
    return it->second;
}

GeneratedSSet generate_from_core(const NondegCore& core) {
    int D = core.trunc_dim;
    int top = static_cast<int>(core.counts.size()) - 1;
    GeneratedSSet G;
    G.sset.trunc_dim = D;
    G.sset.counts.resize(static_cast<size_t>(D) + 1);
    G.sset.faces.resize(static_cast<size_t>(D) + 1);
    G.sset.degens.resize(static_cast<size_t>(D) + 1);
    G.pairs.resize(static_cast<size_t>(D) + 1);
    G.index.resize(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n) {
        for (int m = 0; m <= std::min(n, top); ++m)
            for (int y = 0; y < core.counts[static_cast<size_t>(m)]; ++y)
                for (auto& s : enumerate_maps(n, m, MapKind::epi)) {
                    int id = static_cast<int>(G.pairs[static_cast<size_t>(n)].size());
                    G.index[static_cast<size_t>(n)][std::make_tuple(m, y, s.values)] = id;
                    G.pairs[static_cast<size_t>(n)].push_back(EzPair{y, s});
                }
        G.sset.counts[static_cast<size_t>(n)] = static_cast<int>(G.pairs[static_cast<size_t>(n)].size());
    }
    for (int n = 1; n <= D; ++n) {
        auto& tab = G.sset.faces[static_cast<size_t>(n)];
        tab.resize(static_cast<size_t>(G.sset.size(n)));
        for (int s = 0; s < G.sset.size(n); ++s) {
            tab[static_cast<size_t>(s)].resize(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i) {
                EzPair q = core_apply_pair(core, G.pairs[static_cast<size_t>(n)][static_cast<size_t>(s)],
                                           PosetMap::coface(n, i));
                tab[static_cast<size_t>(s)][static_cast<size_t>(i)] = G.pair_id(n - 1, q);
            }
        }
    }
    for (int n = 0; n < D; ++n) {
        auto& tab = G.sset.degens[static_cast<size_t>(n)];
        tab.resize(static_cast<size_t>(G.sset.size(n)));
        for (int s = 0; s < G.sset.size(n); ++s) {
            tab[static_cast<size_t>(s)].resize(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i) {
                const EzPair& p = G.pairs[static_cast<size_t>(n)][static_cast<size_t>(s)];
                EzPair q{p.base, compose(p.surj, PosetMap::codegeneracy(n, i))};
                tab[static_cast<size_t>(s)][static_cast<size_t>(i)] = G.pair_id(n + 1, q);
            }
        }
    }
    G.sset.validate();
    return G;
}

}  // namespace sstk
