#include "sstk/adjunction.hpp"

#include <algorithm>

namespace sstk {

SemisimplicialSet restrict_sset(const SimplicialSet& X) {
    return SemisimplicialSet{X.trunc_dim, X.counts, X.faces};
}

PlusSet plus(const SemisimplicialSet& X) {
    X.validate();
    NondegCore core;
    core.trunc_dim = X.trunc_dim;
    core.counts = X.counts;
    core.faces.resize(static_cast<size_t>(X.trunc_dim) + 1);
    for (int n = 1; n <= X.trunc_dim; ++n) {
        auto& tab = core.faces[static_cast<size_t>(n)];
        tab.resize(static_cast<size_t>(X.size(n)));
        for (int s = 0; s < X.size(n); ++s) {
            tab[static_cast<size_t>(s)].reserve(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i)
                tab[static_cast<size_t>(s)].push_back(
                    EzPair{X.face(n, s, i), PosetMap::identity(n)});
        }
    }
    return PlusSet{generate_from_core(core)};
}

SSetMap counit(const SimplicialSet& X, const PlusSet& PRX) {
    SSetMap eps;
    eps.at.resize(static_cast<size_t>(X.trunc_dim) + 1);
    for (int n = 0; n <= X.trunc_dim; ++n) {
        eps.at[static_cast<size_t>(n)].resize(static_cast<size_t>(PRX.sset().size(n)));
        for (int id = 0; id < PRX.sset().size(n); ++id) {
            const EzPair& p = PRX.pair(n, id);
            eps.at[static_cast<size_t>(n)][static_cast<size_t>(id)] = X.apply(p.surj, p.base);
        }
    }
    return eps;
}

SSetMap unit(const SemisimplicialSet& X, const PlusSet& PX) {
    SSetMap eta;
    eta.at.resize(static_cast<size_t>(X.trunc_dim) + 1);
    for (int n = 0; n <= X.trunc_dim; ++n) {
        eta.at[static_cast<size_t>(n)].resize(static_cast<size_t>(X.size(n)));
        for (int id = 0; id < X.size(n); ++id)
            eta.at[static_cast<size_t>(n)][static_cast<size_t>(id)] =
                PX.id_of(n, id, PosetMap::identity(n + 1));
    }
    return eta;
}

SSetMap plus_map(const SSetMap& h, const PlusSet& PX, const PlusSet& PZ) {
    SSetMap out;
    int D = PX.sset().trunc_dim;
    out.at.resize(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n) {
        out.at[static_cast<size_t>(n)].resize(static_cast<size_t>(PX.sset().size(n)));
        for (int id = 0; id < PX.sset().size(n); ++id) {
            const EzPair& p = PX.pair(n, id);
            int m = p.surj.target_size() - 1;
            out.at[static_cast<size_t>(n)][static_cast<size_t>(id)] =
                PZ.id_of(n, h(m, p.base), p.surj);
        }
    }
    return out;
}

TriangleReport check_triangle_identities(const SemisimplicialSet& X, const SimplicialSet& Y) {
    TriangleReport rep;
    // epsilon_{plus X} . plus(unit_X) = id on plus(X): the composite sends
    // (S, s) to s*((S, id)) computed inside plus(X).
    {
        PlusSet PX = plus(X);
        for (int n = 0; n <= X.trunc_dim; ++n)
            for (int id = 0; id < PX.sset().size(n); ++id) {
                const EzPair& p = PX.pair(n, id);
                int m = p.surj.target_size() - 1;
                int unit_of_base = PX.id_of(m, p.base, PosetMap::identity(m + 1));
                int got = PX.sset().apply(p.surj, unit_of_base);
                if (got != id) {
                    rep.ok = false;
                    rep.violations.push_back("counit(plus) . plus(unit) misses simplex (" +
                                             std::to_string(n) + "," + std::to_string(id) + ")");
                }
            }
    }
    // restrict(epsilon_Y) . unit_{restrict Y} = id on restrict(Y)
    {
        SemisimplicialSet RY = restrict_sset(Y);
        PlusSet PRY = plus(RY);
        SSetMap eps = counit(Y, PRY);
        SSetMap eta = unit(RY, PRY);
        for (int n = 0; n <= Y.trunc_dim; ++n)
            for (int id = 0; id < Y.size(n); ++id)
                if (eps(n, eta(n, id)) != id) {
                    rep.ok = false;
                    rep.violations.push_back("restrict(counit) . unit misses simplex (" +
                                             std::to_string(n) + "," + std::to_string(id) + ")");
                }
    }
    return rep;
}

SemisimplicialSet random_semisimplicial(int trunc_dim, int max_per_dim, unsigned seed) {
    std::mt19937 rng(seed);
    SemisimplicialSet X;
    X.trunc_dim = trunc_dim;
    X.counts.assign(static_cast<size_t>(trunc_dim) + 1, 0);
    X.faces.resize(static_cast<size_t>(trunc_dim) + 1);
    X.counts[0] = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, max_per_dim)));
    for (int n = 1; n <= trunc_dim; ++n) {
        // all boundary tuples (f_0..f_n) satisfying d_i f_j = d_{j-1} f_i
        std::vector<std::vector<int>> tuples;
        std::vector<int> cur(static_cast<size_t>(n) + 1, 0);
        const size_t kCap = 20000;
        auto compatible = [&](int j, int cand) {
            for (int i = 0; i < j; ++i) {
                if (n >= 2 &&
                    X.face(n - 1, cand, i) != X.face(n - 1, cur[static_cast<size_t>(i)], j - 1))
                    return false;
            }
            return true;
        };
        auto rec = [&](auto&& self, int j) -> void {
            if (tuples.size() >= kCap) return;
            if (j > n) {
                tuples.push_back(cur);
                return;
            }
            for (int c = 0; c < X.size(n - 1); ++c) {
                if (!compatible(j, c)) continue;
                cur[static_cast<size_t>(j)] = c;
                self(self, j + 1);
            }
        };
        rec(rec, 0);
        if (tuples.empty()) break;
        int want = static_cast<int>(rng() % static_cast<unsigned>(max_per_dim + 1));
        if (n == 1 && want == 0) want = std::min(1, max_per_dim);
        X.counts[static_cast<size_t>(n)] = want;
        auto& tab = X.faces[static_cast<size_t>(n)];
        for (int s = 0; s < want; ++s)
            tab.push_back(tuples[rng() % tuples.size()]);
        if (want == 0) break;
    }
    // trim truncation so empty top dimensions are still well-formed tables
    for (int n = 1; n <= trunc_dim; ++n)
        X.faces[static_cast<size_t>(n)].resize(static_cast<size_t>(X.counts[static_cast<size_t>(n)]));
    X.validate();
    return X;
}

}  // namespace sstk
