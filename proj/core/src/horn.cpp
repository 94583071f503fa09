#include "sstk/horn.hpp"

namespace sstk {

bool horn_compatible(const SimplicialSet& X, const HornInstance& h) {
    int n = h.dim;
    if (n < 1 || n > X.trunc_dim) return false;
    if (static_cast<int>(h.faces.size()) != n + 1) return false;
    for (int j = 0; j <= n; ++j) {
        if (j == h.missing_face) continue;
        if (h.faces[static_cast<size_t>(j)] < 0 ||
            h.faces[static_cast<size_t>(j)] >= X.size(n - 1))
            return false;
    }
    if (n < 2) return true;
    for (int k = 1; k <= n; ++k)
        for (int j = 0; j < k; ++j) {
            if (j == h.missing_face || k == h.missing_face) continue;
            if (X.face(n - 1, h.faces[static_cast<size_t>(k)], j) !=
                X.face(n - 1, h.faces[static_cast<size_t>(j)], k - 1))
                return false;
        }
    return true;
}

void enumerate_horns(const SimplicialSet& X, int n, bool inner_only,
                     const std::function<void(const HornInstance&)>& sink) {
    if (n < 1 || n > X.trunc_dim)
        throw input_error("enumerate_horns: dimension out of range");
    for (int missing = inner_only ? 1 : 0; missing <= (inner_only ? n - 1 : n); ++missing) {
        HornInstance h;
        h.dim = n;
        h.missing_face = missing;
        h.faces.assign(static_cast<size_t>(n) + 1, -1);
        auto rec = [&](auto&& self, int j) -> void {
            if (j > n) {
                sink(h);
                return;
            }
            if (j == missing) {
                self(self, j + 1);
                return;
            }
            for (int c = 0; c < X.size(n - 1); ++c) {
                bool ok = true;
                for (int i = 0; i < j && ok; ++i) {
                    if (i == missing) continue;
                    if (n >= 2 && X.face(n - 1, c, i) !=
                                      X.face(n - 1, h.faces[static_cast<size_t>(i)], j - 1))
                        ok = false;
                }
                if (!ok) continue;
                h.faces[static_cast<size_t>(j)] = c;
                self(self, j + 1);
                h.faces[static_cast<size_t>(j)] = -1;
            }
        };
        rec(rec, 0);
    }
}

std::vector<HornInstance> enumerate_horns(const SimplicialSet& X, int n, bool inner_only) {
    std::vector<HornInstance> out;
    enumerate_horns(X, n, inner_only, [&](const HornInstance& h) { out.push_back(h); });
    return out;
}

std::vector<int> find_all_fillers(const SimplicialSet& X, const HornInstance& h) {
    if (!horn_compatible(X, h)) throw input_error("find_filler: incompatible horn");
    std::vector<int> out;
    int n = h.dim;
    for (int s = 0; s < X.size(n); ++s) {
        bool match = true;
        for (int i = 0; i <= n && match; ++i) {
            if (i == h.missing_face) continue;
            if (X.face(n, s, i) != h.faces[static_cast<size_t>(i)]) match = false;
        }
        if (match) out.push_back(s);
    }
    return out;
}

std::optional<int> find_filler(const SimplicialSet& X, const HornInstance& h) {
    auto all = find_all_fillers(X, h);
    if (all.empty()) return std::nullopt;
    return all.front();
}

QuasiReport quasicheck(const SimplicialSet& X, int max_dim) {
    if (max_dim >= X.trunc_dim)
        throw input_error("quasicheck: max_dim must be below the truncation");
    QuasiReport rep;
    rep.max_dim = max_dim;
    rep.caveat = "horns checked up to dimension " + std::to_string(max_dim) +
                 " within truncation " + std::to_string(X.trunc_dim) +
                 "; no statement about higher dimensions";
    for (int n = 2; n <= max_dim; ++n) {
        enumerate_horns(X, n, true, [&](const HornInstance& h) {
            ++rep.horns_checked;
            auto fillers = find_all_fillers(X, h);
            if (fillers.empty()) rep.unfilled.push_back({h, std::nullopt});
        });
    }
    return rep;
}

CounterexampleData counterexample_core(int trunc_dim) {
    NondegCore core;
    core.trunc_dim = trunc_dim;
    core.counts = {3, 4, 2};
    core.faces.resize(3);
    auto edge = [&](int tgt, int src) {
        return std::vector<EzPair>{EzPair{tgt, PosetMap::identity(1)},
                                   EzPair{src, PosetMap::identity(1)}};
    };
    CounterexampleData D;
    D.x0 = 0;
    D.x1 = 1;
    D.x2 = 2;
    D.f01 = 0;
    D.f12 = 1;
    D.f02 = 2;
    D.f03 = 3;
    core.faces[1].push_back(edge(D.x1, D.x0));  // f01
    core.faces[1].push_back(edge(D.x2, D.x1));  // f12
    core.faces[1].push_back(edge(D.x2, D.x0));  // f02
    core.faces[1].push_back(edge(D.x2, D.x0));  // f03, parallel to f02
    auto tri = [&](int d0, int d1, int d2) {
        return std::vector<EzPair>{EzPair{d0, PosetMap::identity(2)},
                                   EzPair{d1, PosetMap::identity(2)},
                                   EzPair{d2, PosetMap::identity(2)}};
    };
    D.T012 = 0;
    D.T013 = 1;
    core.faces[2].push_back(tri(D.f12, D.f02, D.f01));  // T012
    core.faces[2].push_back(tri(D.f12, D.f03, D.f01));  // T013 (f13 = f12)
    D.gen = generate_from_core(core);
    return D;
}

SimplicialSet counterexample_input(int trunc_dim) {
    return counterexample_core(trunc_dim).gen.sset;
}

}  // namespace sstk
