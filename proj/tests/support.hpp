// Shared fixtures and independent oracles for the test suites. Everything
// here recomputes expectations by brute force, independent of the library
// code paths it checks.
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "sstk/adjunction.hpp"
#include "sstk/horn.hpp"
#include "sstk/necklace.hpp"
#include "sstk/sset.hpp"

namespace sstk::testing {

/// Boundary of the 2-simplex: three vertices, three edges, no 2-cells.
inline SimplicialSet boundary_of_triangle(int trunc_dim = 3) {
    NondegCore core;
    core.trunc_dim = trunc_dim;
    core.counts = {3, 3};
    core.faces.resize(2);
    auto edge = [](int tgt, int src) {
        return std::vector<EzPair>{EzPair{tgt, PosetMap::identity(1)},
                                   EzPair{src, PosetMap::identity(1)}};
    };
    core.faces[1].push_back(edge(1, 0));  // 01
    core.faces[1].push_back(edge(2, 0));  // 02
    core.faces[1].push_back(edge(2, 1));  // 12
    return generate_from_core(core).sset;
}

/// Brute-force Eilenberg-Zilber presentations of a simplex: every pair
/// (nondegenerate y, surjection s) with s*(y) equal to it.
inline std::vector<std::pair<std::pair<int, int>, PosetMap>> ez_presentations_bruteforce(
    const SimplicialSet& X, int n, int id) {
    auto flags = X.nondegenerate_flags();
    std::vector<std::pair<std::pair<int, int>, PosetMap>> out;
    for (int m = 0; m <= n; ++m)
        for (const auto& s : enumerate_maps(n, m, MapKind::epi))
            for (int y = 0; y < X.size(m); ++y)
                if (flags[static_cast<size_t>(m)][static_cast<size_t>(y)] && X.apply(s, y) == id)
                    out.push_back({{m, y}, s});
    return out;
}

/// All bi-pointed simplicial maps between two necklace realizations lying
/// over X, enumerated as raw natural transformations: images are assigned to
/// nondegenerate simplices dimension by dimension with face and degeneracy
/// compatibility enforced, then extended to degenerate simplices.
/// src_images / tgt_images give the X-simplex under each realization simplex.
inline long long count_maps_bruteforce(const NecklaceRealization& T,
                                       const NecklaceRealization& U,
                                       const std::vector<std::vector<int>>& T_over,
                                       const std::vector<std::vector<int>>& U_over) {
    int D = T.sset.trunc_dim;
    auto flags = T.sset.nondegenerate_flags();
    // list nondegenerate simplices in dimension order
    std::vector<std::pair<int, int>> nd;
    for (int n = 0; n <= D; ++n)
        for (int s = 0; s < T.sset.size(n); ++s)
            if (flags[static_cast<size_t>(n)][static_cast<size_t>(s)]) nd.push_back({n, s});
    // full image table, filled as we go
    std::vector<std::vector<int>> img(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n)
        img[static_cast<size_t>(n)].assign(static_cast<size_t>(T.sset.size(n)), -1);
    long long count = 0;
    auto propagate = [&](int upto) {
        // extend to degenerate simplices determined by assigned nondegenerate ones
        for (int n = 0; n <= D; ++n)
            for (int s = 0; s < T.sset.size(n); ++s) {
                if (flags[static_cast<size_t>(n)][static_cast<size_t>(s)]) continue;
                auto [ys, surj] = T.sset.normalize(n, s);
                auto [m, y] = ys;
                if (m <= upto && img[static_cast<size_t>(m)][static_cast<size_t>(y)] >= 0)
                    img[static_cast<size_t>(n)][static_cast<size_t>(s)] =
                        U.sset.apply(surj, img[static_cast<size_t>(m)][static_cast<size_t>(y)]);
            }
    };
    auto rec = [&](auto&& self, size_t pos) -> void {
        if (pos == nd.size()) {
            ++count;
            return;
        }
        auto [n, s] = nd[pos];
        for (int cand = 0; cand < U.sset.size(n); ++cand) {
            // over X
            if (U_over[static_cast<size_t>(n)][static_cast<size_t>(cand)] !=
                T_over[static_cast<size_t>(n)][static_cast<size_t>(s)])
                continue;
            // faces must match already-assigned images
            bool ok = true;
            for (int i = 0; i <= n && ok && n >= 1; ++i) {
                int tf = T.sset.face(n, s, i);
                int want = img[static_cast<size_t>(n) - 1][static_cast<size_t>(tf)];
                if (want >= 0 && U.sset.face(n, cand, i) != want) ok = false;
            }
            // bi-pointed on vertices
            if (ok && n == 0) {
                if (s == T.init_vertex() && cand != U.init_vertex()) ok = false;
                if (s == T.final_vertex() && cand != U.final_vertex()) ok = false;
            }
            if (!ok) continue;
            img[static_cast<size_t>(n)][static_cast<size_t>(s)] = cand;
            propagate(n);
            self(self, pos + 1);
            img[static_cast<size_t>(n)][static_cast<size_t>(s)] = -1;
            // clear propagated degenerate images
            for (int dn = 0; dn <= D; ++dn)
                for (int ds = 0; ds < T.sset.size(dn); ++ds)
                    if (!flags[static_cast<size_t>(dn)][static_cast<size_t>(ds)]) {
                        auto [ys, surj] = T.sset.normalize(dn, ds);
                        if (ys.first == n && ys.second == s)
                            img[static_cast<size_t>(dn)][static_cast<size_t>(ds)] = -1;
                    }
        }
    };
    rec(rec, 0);
    return count;
}

/// X-image table of every realization simplex of a necklace object.
inline std::vector<std::vector<int>> over_table(const SimplicialSet& X, const NeckObject& obj,
                                                int x, const NecklaceRealization& real) {
    int D = real.sset.trunc_dim;
    std::vector<std::vector<int>> out(static_cast<size_t>(D) + 1);
    for (int n = 0; n <= D; ++n) {
        out[static_cast<size_t>(n)].resize(static_cast<size_t>(real.sset.size(n)));
        for (int s = 0; s < real.sset.size(n); ++s) {
            const auto& [bead, u] = real.reps[static_cast<size_t>(n)][static_cast<size_t>(s)];
            int base = obj.neck.beads.empty() ? x : obj.bead_images[static_cast<size_t>(bead)];
            out[static_cast<size_t>(n)][static_cast<size_t>(s)] = X.apply(u, base);
        }
    }
    return out;
}

/// The truncated injective simplex category: objects [0]..[max_m], all
/// injective monotone maps.
inline FiniteCategory truncated_inj_category(int max_m) {
    FiniteCategory C;
    C.num_objects = max_m + 1;
    std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> index;
    std::vector<PosetMap> maps;
    for (int a = 0; a <= max_m; ++a)
        for (int b = 0; b <= max_m; ++b)
            for (auto& g : enumerate_maps(a, b, MapKind::mono)) {
                index[{{a, b}, g.values}] = static_cast<int>(maps.size());
                C.mor_src.push_back(a);
                C.mor_tgt.push_back(b);
                maps.push_back(g);
            }
    for (int a = 0; a <= max_m; ++a)
        C.identities.push_back(index.at({{a, a}, PosetMap::identity(a + 1).values}));
    int M = C.num_morphisms();
    C.comp.assign(static_cast<size_t>(M), std::vector<int>(static_cast<size_t>(M), -1));
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f)
            if (C.composable(g, f)) {
                PosetMap h = compose(maps[static_cast<size_t>(g)], maps[static_cast<size_t>(f)]);
                C.comp[static_cast<size_t>(g)][static_cast<size_t>(f)] = index.at(
                    {{C.mor_src[static_cast<size_t>(f)], C.mor_tgt[static_cast<size_t>(g)]},
                     h.values});
            }
    return C;
}

}  // namespace sstk::testing
