#include "sstk/necklace.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace sstk {

namespace {

// Later beads own the constant simplices at joins.
std::pair<int, PosetMap> canonical_rep(const Necklace& neck, int bead, PosetMap u) {
    int a = static_cast<int>(neck.beads.size()) - 1;
    if (!neck.beads.empty() && bead < a) {
        int m = neck.beads[static_cast<size_t>(bead)];
        bool const_at_top = true;
        for (int v : u.values)
            if (v != m) const_at_top = false;
        if (const_at_top)
            return {bead + 1, PosetMap::constant(u.source_size(),
                                                 neck.beads[static_cast<size_t>(bead) + 1] + 1, 0)};
    }
    return {bead, std::move(u)};
}

}  // namespace

int NecklaceRealization::simplex_of(int bead, const PosetMap& u) const {
    auto [b, cu] = canonical_rep(neck, bead, u);
    int n = cu.source_size() - 1;
    auto it = index[static_cast<size_t>(n)].find({b, cu.values});
    if (it == index[static_cast<size_t>(n)].end())
        throw integrity_error("necklace realization: unknown simplex");
    return it->second;
}

int NecklaceRealization::top_simplex(int bead) const {
    int m = bead_dim(bead);
    return simplex_of(bead, PosetMap::identity(m + 1));
}

int NecklaceRealization::first_vertex(int dim, int id) const {
    const auto& [bead, u] = reps[static_cast<size_t>(dim)][static_cast<size_t>(id)];
    return simplex_of(bead, PosetMap::constant(1, bead_dim(bead) + 1, u.values.front()));
}

int NecklaceRealization::last_vertex(int dim, int id) const {
    const auto& [bead, u] = reps[static_cast<size_t>(dim)][static_cast<size_t>(id)];
    return simplex_of(bead, PosetMap::constant(1, bead_dim(bead) + 1, u.values.back()));
}

NecklaceRealization realize_necklace(const Necklace& neck, int trunc_dim) {
    NecklaceRealization R;
    R.neck = neck;
    if (neck.beads.empty()) {
        R.sset = standard_simplex(0, trunc_dim);
        R.reps.resize(static_cast<size_t>(trunc_dim) + 1);
        R.index.resize(static_cast<size_t>(trunc_dim) + 1);
        for (int n = 0; n <= trunc_dim; ++n) {
            PosetMap u = PosetMap::constant(n + 1, 1, 0);
            R.reps[static_cast<size_t>(n)].push_back({0, u});
            R.index[static_cast<size_t>(n)][{0, u.values}] = 0;
        }
        return R;
    }
    for (int m : neck.beads)
        if (m < 1) throw input_error("realize_necklace: bead dimensions must be positive");
    int nb = static_cast<int>(neck.beads.size());
    R.reps.resize(static_cast<size_t>(trunc_dim) + 1);
    R.index.resize(static_cast<size_t>(trunc_dim) + 1);
    R.sset.trunc_dim = trunc_dim;
    R.sset.counts.resize(static_cast<size_t>(trunc_dim) + 1);
    R.sset.faces.resize(static_cast<size_t>(trunc_dim) + 1);
    R.sset.degens.resize(static_cast<size_t>(trunc_dim) + 1);
    for (int n = 0; n <= trunc_dim; ++n) {
        for (int b = 0; b < nb; ++b)
            for (auto& u : enumerate_maps(n, neck.beads[static_cast<size_t>(b)], MapKind::all)) {
                auto [cb, cu] = canonical_rep(neck, b, u);
                if (cb != b) continue;  // owned by the next bead
                int id = static_cast<int>(R.reps[static_cast<size_t>(n)].size());
                R.index[static_cast<size_t>(n)][{b, cu.values}] = id;
                R.reps[static_cast<size_t>(n)].push_back({b, cu});
            }
        R.sset.counts[static_cast<size_t>(n)] =
            static_cast<int>(R.reps[static_cast<size_t>(n)].size());
    }
    for (int n = 1; n <= trunc_dim; ++n) {
        auto& tab = R.sset.faces[static_cast<size_t>(n)];
        tab.resize(R.reps[static_cast<size_t>(n)].size());
        for (size_t s = 0; s < R.reps[static_cast<size_t>(n)].size(); ++s) {
            const auto& [b, u] = R.reps[static_cast<size_t>(n)][s];
            tab[s].resize(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i)
                tab[s][static_cast<size_t>(i)] =
                    R.simplex_of(b, compose(u, PosetMap::coface(n, i)));
        }
    }
    for (int n = 0; n < trunc_dim; ++n) {
        auto& tab = R.sset.degens[static_cast<size_t>(n)];
        tab.resize(R.reps[static_cast<size_t>(n)].size());
        for (size_t s = 0; s < R.reps[static_cast<size_t>(n)].size(); ++s) {
            const auto& [b, u] = R.reps[static_cast<size_t>(n)][s];
            tab[s].resize(static_cast<size_t>(n) + 1);
            for (int i = 0; i <= n; ++i)
                tab[s][static_cast<size_t>(i)] =
                    R.simplex_of(b, compose(u, PosetMap::codegeneracy(n, i)));
        }
    }
    R.sset.validate();
    return R;
}

namespace {

int x_first_vertex(const SimplicialSet& X, int dim, int id) {
    return X.apply(PosetMap::constant(1, dim + 1, 0), id);
}
int x_last_vertex(const SimplicialSet& X, int dim, int id) {
    return X.apply(PosetMap::constant(1, dim + 1, dim), id);
}

// X-image of a realization simplex of an object.
int object_image(const SimplicialSet& X, const NeckObject& obj, int x,
                 const NecklaceRealization& real, int dim, int id) {
    const auto& [bead, u] = real.reps[static_cast<size_t>(dim)][static_cast<size_t>(id)];
    int base = obj.neck.beads.empty() ? x : obj.bead_images[static_cast<size_t>(bead)];
    return X.apply(u, base);
}

void compositions_rec(int remaining, int max_beads, std::vector<int>& cur,
                      std::vector<Necklace>& out) {
    if (remaining == 0) {
        if (!cur.empty()) out.push_back(Necklace{cur});
        return;
    }
    if (static_cast<int>(cur.size()) >= max_beads) return;
    for (int m = 1; m <= remaining; ++m) {
        cur.push_back(m);
        compositions_rec(remaining - m, max_beads, cur, out);
        cur.pop_back();
    }
}

}  // namespace

CommaCategory comma_category(const SimplicialSet& X, int x, int y, const CommaBounds& bounds) {
    if (x < 0 || x >= X.size(0) || y < 0 || y >= X.size(0))
        throw input_error("comma_category: endpoint vertex out of range");
    if (bounds.max_total_dim > X.trunc_dim)
        throw truncation_error("comma_category: bound exceeds the truncation of X");
    CommaCategory C;
    C.x = x;
    C.y = y;
    C.bounds = bounds;

    // necklace shapes in deterministic order: by total dimension, then lex
    std::vector<Necklace> shapes;
    if (x == y) shapes.push_back(Necklace{});
    for (int total = 1; total <= bounds.max_total_dim; ++total) {
        std::vector<int> cur;
        compositions_rec(total, bounds.max_beads, cur, shapes);
    }
    std::map<std::vector<int>, int> real_of_shape;
    for (const auto& shape : shapes) {
        if (!real_of_shape.count(shape.beads)) {
            real_of_shape[shape.beads] = static_cast<int>(C.realizations.size());
            C.realizations.push_back(realize_necklace(shape, bounds.max_total_dim));
        }
        // enumerate bead images
        if (shape.beads.empty()) {
            C.objects.push_back(NeckObject{shape, {}});
            C.realization_of.push_back(real_of_shape[shape.beads]);
            continue;
        }
        int nb = static_cast<int>(shape.beads.size());
        std::vector<int> images(static_cast<size_t>(nb));
        auto rec = [&](auto&& self, int j, int from_vertex) -> void {
            if (j == nb) {
                C.objects.push_back(NeckObject{shape, images});
                C.realization_of.push_back(real_of_shape[shape.beads]);
                return;
            }
            int m = shape.beads[static_cast<size_t>(j)];
            for (int s = 0; s < X.size(m); ++s) {
                if (x_first_vertex(X, m, s) != from_vertex) continue;
                int lv = x_last_vertex(X, m, s);
                if (j == nb - 1 && lv != y) continue;
                images[static_cast<size_t>(j)] = s;
                self(self, j + 1, lv);
            }
        };
        rec(rec, 0, x);
    }

    // morphisms
    int nobj = static_cast<int>(C.objects.size());
    std::map<std::tuple<int, int, std::vector<int>, int>, int> mor_index;
    for (int a = 0; a < nobj; ++a) {
        const NeckObject& A = C.objects[static_cast<size_t>(a)];
        for (int b = 0; b < nobj; ++b) {
            const NeckObject& B = C.objects[static_cast<size_t>(b)];
            const NecklaceRealization& BR =
                C.realizations[static_cast<size_t>(C.realization_of[static_cast<size_t>(b)])];
            if (A.neck.beads.empty()) {
                // the point maps bi-pointedly only to a point
                if (B.neck.beads.empty()) {
                    NeckMorphism m{a, b, {}, 0};
                    mor_index[{a, b, {}, 0}] = static_cast<int>(C.morphisms.size());
                    C.morphisms.push_back(std::move(m));
                }
                continue;
            }
            int nb = static_cast<int>(A.neck.beads.size());
            std::vector<int> tau(static_cast<size_t>(nb));
            auto rec = [&](auto&& self, int j, int from_vertex) -> void {
                if (j == nb) {
                    NeckMorphism m{a, b, tau, -1};
                    mor_index[{a, b, tau, -1}] = static_cast<int>(C.morphisms.size());
                    C.morphisms.push_back(std::move(m));
                    return;
                }
                int mj = A.neck.beads[static_cast<size_t>(j)];
                for (int t = 0; t < BR.sset.size(mj); ++t) {
                    if (BR.first_vertex(mj, t) != from_vertex) continue;
                    if (object_image(X, B, C.x, BR, mj, t) !=
                        A.bead_images[static_cast<size_t>(j)])
                        continue;
                    int lv = BR.last_vertex(mj, t);
                    if (j == nb - 1 && lv != BR.final_vertex()) continue;
                    tau[static_cast<size_t>(j)] = t;
                    self(self, j + 1, lv);
                }
            };
            rec(rec, 0, BR.init_vertex());
        }
    }

    // assemble the finite category
    int nmor = static_cast<int>(C.morphisms.size());
    C.cat.num_objects = nobj;
    C.cat.mor_src.resize(static_cast<size_t>(nmor));
    C.cat.mor_tgt.resize(static_cast<size_t>(nmor));
    for (int m = 0; m < nmor; ++m) {
        C.cat.mor_src[static_cast<size_t>(m)] = C.morphisms[static_cast<size_t>(m)].src;
        C.cat.mor_tgt[static_cast<size_t>(m)] = C.morphisms[static_cast<size_t>(m)].tgt;
    }
    C.cat.identities.resize(static_cast<size_t>(nobj));
    for (int a = 0; a < nobj; ++a) {
        const NeckObject& A = C.objects[static_cast<size_t>(a)];
        const NecklaceRealization& AR =
            C.realizations[static_cast<size_t>(C.realization_of[static_cast<size_t>(a)])];
        if (A.neck.beads.empty()) {
            C.cat.identities[static_cast<size_t>(a)] = mor_index.at({a, a, {}, 0});
        } else {
            std::vector<int> tops;
            for (int j = 0; j < static_cast<int>(A.neck.beads.size()); ++j)
                tops.push_back(AR.top_simplex(j));
            C.cat.identities[static_cast<size_t>(a)] = mor_index.at({a, a, tops, -1});
        }
    }
    // morphism application: image of a simplex of the source realization
    auto apply_mor = [&](const NeckMorphism& g, int dim, int id) {
        const NecklaceRealization& SR =
            C.realizations[static_cast<size_t>(C.realization_of[static_cast<size_t>(g.src)])];
        const NecklaceRealization& TR =
            C.realizations[static_cast<size_t>(C.realization_of[static_cast<size_t>(g.tgt)])];
        const auto& [bead, u] = SR.reps[static_cast<size_t>(dim)][static_cast<size_t>(id)];
        int top_image = C.objects[static_cast<size_t>(g.src)].neck.beads.empty()
                            ? g.point_image
                            : g.bead_images[static_cast<size_t>(bead)];
        return TR.sset.apply(u, top_image);
    };
    C.cat.comp.assign(static_cast<size_t>(nmor), std::vector<int>(static_cast<size_t>(nmor), -1));
    for (int g = 0; g < nmor; ++g)
        for (int f = 0; f < nmor; ++f) {
            if (!C.cat.composable(g, f)) continue;
            const NeckMorphism& F = C.morphisms[static_cast<size_t>(f)];
            const NeckMorphism& G = C.morphisms[static_cast<size_t>(g)];
            NeckMorphism H;
            H.src = F.src;
            H.tgt = G.tgt;
            if (C.objects[static_cast<size_t>(F.src)].neck.beads.empty()) {
                H.bead_images = {};
                H.point_image = apply_mor(G, 0, F.point_image);
            } else {
                const NeckObject& A = C.objects[static_cast<size_t>(F.src)];
                H.point_image = -1;
                for (size_t j = 0; j < A.neck.beads.size(); ++j)
                    H.bead_images.push_back(apply_mor(G, A.neck.beads[j], F.bead_images[j]));
            }
            auto it = mor_index.find({H.src, H.tgt, H.bead_images, H.point_image});
            if (it == mor_index.end())
                throw integrity_error("comma_category: composite morphism not found");
            C.cat.comp[static_cast<size_t>(g)][static_cast<size_t>(f)] = it->second;
        }
    return C;
}

Subcategory full_subcategory_of(const FiniteCategory& big, const std::vector<int>& keep) {
    Subcategory S;
    S.object_in_big = keep;
    std::vector<int> obj_small(static_cast<size_t>(big.num_objects), -1);
    for (size_t i = 0; i < keep.size(); ++i) obj_small[static_cast<size_t>(keep[i])] = static_cast<int>(i);
    S.cat.num_objects = static_cast<int>(keep.size());
    std::vector<int> mor_small(static_cast<size_t>(big.num_morphisms()), -1);
    for (int m = 0; m < big.num_morphisms(); ++m) {
        int s = obj_small[static_cast<size_t>(big.mor_src[static_cast<size_t>(m)])];
        int t = obj_small[static_cast<size_t>(big.mor_tgt[static_cast<size_t>(m)])];
        if (s < 0 || t < 0) continue;
        mor_small[static_cast<size_t>(m)] = static_cast<int>(S.morphism_in_big.size());
        S.morphism_in_big.push_back(m);
        S.cat.mor_src.push_back(s);
        S.cat.mor_tgt.push_back(t);
    }
    S.cat.identities.resize(keep.size());
    for (size_t i = 0; i < keep.size(); ++i)
        S.cat.identities[i] = mor_small[static_cast<size_t>(
            big.identities[static_cast<size_t>(keep[i])])];
    int M = S.cat.num_morphisms();
    S.cat.comp.assign(static_cast<size_t>(M), std::vector<int>(static_cast<size_t>(M), -1));
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f)
            if (S.cat.composable(g, f)) {
                int big_comp = big.comp[static_cast<size_t>(S.morphism_in_big[static_cast<size_t>(g)])]
                                       [static_cast<size_t>(S.morphism_in_big[static_cast<size_t>(f)])];
                S.cat.comp[static_cast<size_t>(g)][static_cast<size_t>(f)] =
                    mor_small[static_cast<size_t>(big_comp)];
            }
    return S;
}

Subcategory full_subcategory_N(const CommaCategory& C, const SimplicialSet& X) {
    auto flags = X.nondegenerate_flags();
    std::vector<int> keep;
    for (size_t a = 0; a < C.objects.size(); ++a) {
        const NeckObject& O = C.objects[a];
        bool ok = true;
        for (size_t j = 0; j < O.neck.beads.size(); ++j)
            if (!flags[static_cast<size_t>(O.neck.beads[j])]
                      [static_cast<size_t>(O.bead_images[j])])
                ok = false;
        if (ok) keep.push_back(static_cast<int>(a));
    }
    return full_subcategory_of(C.cat, keep);
}

Subcategory full_subcategory_F(const CommaCategory& C, const SimplicialSet& X) {
    auto flags = X.nondegenerate_flags();
    int lo = std::min(C.x, C.y), hi = std::max(C.x, C.y);
    std::vector<int> keep;
    for (size_t a = 0; a < C.objects.size(); ++a) {
        const NeckObject& O = C.objects[a];
        if (O.neck.beads.empty()) {
            keep.push_back(static_cast<int>(a));
            continue;
        }
        if (O.neck.beads.size() != 1) continue;
        int m = O.neck.beads[0];
        int img = O.bead_images[0];
        if (!flags[static_cast<size_t>(m)][static_cast<size_t>(img)]) continue;
        std::vector<char> hit(static_cast<size_t>(hi - lo + 1), 0);
        for (int p = 0; p <= m; ++p) {
            int v = X.apply(PosetMap::constant(1, m + 1, p), img);
            if (v >= lo && v <= hi) hit[static_cast<size_t>(v - lo)] = 1;
        }
        bool all = true;
        for (char h : hit)
            if (!h) all = false;
        if (all) keep.push_back(static_cast<int>(a));
    }
    return full_subcategory_of(C.cat, keep);
}

FinalityReport check_finality(const Subcategory& small, const FiniteCategory& big,
                              Extremal mode) {
    FinalityReport rep;
    rep.mode = mode;
    for (int T = 0; T < big.num_objects; ++T) {
        // fiber objects: arrows T -> iota(a)
        std::vector<std::pair<int, int>> fib;  // (small object, big morphism)
        for (int h = 0; h < big.num_morphisms(); ++h) {
            if (big.mor_src[static_cast<size_t>(h)] != T) continue;
            for (size_t a = 0; a < small.object_in_big.size(); ++a)
                if (big.mor_tgt[static_cast<size_t>(h)] == small.object_in_big[a])
                    fib.push_back({static_cast<int>(a), h});
        }
        auto hom_count = [&](int o1, int o2) {
            const auto& [a1, h1] = fib[static_cast<size_t>(o1)];
            const auto& [a2, h2] = fib[static_cast<size_t>(o2)];
            int cnt = 0;
            for (int phi = 0; phi < small.cat.num_morphisms(); ++phi) {
                if (small.cat.mor_src[static_cast<size_t>(phi)] != a1 ||
                    small.cat.mor_tgt[static_cast<size_t>(phi)] != a2)
                    continue;
                int big_phi = small.morphism_in_big[static_cast<size_t>(phi)];
                if (big.comp[static_cast<size_t>(big_phi)][static_cast<size_t>(h1)] == h2) ++cnt;
            }
            return cnt;
        };
        FiberReport fr;
        fr.big_object = T;
        fr.fiber_objects = static_cast<int>(fib.size());
        for (int cand = 0; cand < static_cast<int>(fib.size()) && !fr.has_extremal; ++cand) {
            bool ok = true;
            for (int o = 0; o < static_cast<int>(fib.size()) && ok; ++o) {
                int c = (mode == Extremal::initial) ? hom_count(cand, o) : hom_count(o, cand);
                if (c != 1) ok = false;
            }
            if (ok) {
                fr.has_extremal = true;
                fr.witness = cand;
            }
        }
        if (fib.empty()) fr.has_extremal = false;
        if (!fr.has_extremal) rep.pass = false;
        rep.fibers.push_back(fr);
    }
    return rep;
}

// --- the single-bead category against the product of injective simplex
// categories -------------------------------------------------------------

namespace {

struct BuiltCategory {
    FiniteCategory cat;
    std::vector<std::vector<int>> obj_data;  // opaque per-object key
    std::vector<std::vector<int>> mor_data;  // opaque per-morphism key
    std::map<std::vector<int>, int> obj_index;
    std::map<std::vector<int>, int> mor_index;
};

// objects: surjections [m] ->> [k], m <= max_m; morphisms: injections g with
// f . g = f'.
BuiltCategory build_single_bead(int k, int max_m) {
    BuiltCategory B;
    std::vector<PosetMap> objs;
    for (int m = k; m <= max_m; ++m)
        for (auto& f : enumerate_maps(m, k, MapKind::epi)) objs.push_back(f);
    B.cat.num_objects = static_cast<int>(objs.size());
    for (size_t i = 0; i < objs.size(); ++i) {
        std::vector<int> key{objs[i].source_size()};
        key.insert(key.end(), objs[i].values.begin(), objs[i].values.end());
        B.obj_data.push_back(key);
        B.obj_index[key] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> endpoints;
    std::vector<PosetMap> mors;
    for (int a = 0; a < B.cat.num_objects; ++a)
        for (int b = 0; b < B.cat.num_objects; ++b) {
            const PosetMap& fa = objs[static_cast<size_t>(a)];
            const PosetMap& fb = objs[static_cast<size_t>(b)];
            for (auto& g : enumerate_maps(fa.source_size() - 1, fb.source_size() - 1,
                                          MapKind::mono))
                if (compose(fb, g) == fa) {
                    std::vector<int> key{a, b};
                    key.insert(key.end(), g.values.begin(), g.values.end());
                    B.mor_index[key] = static_cast<int>(mors.size());
                    B.mor_data.push_back(key);
                    mors.push_back(g);
                    endpoints.push_back({a, b});
                    B.cat.mor_src.push_back(a);
                    B.cat.mor_tgt.push_back(b);
                }
        }
    B.cat.identities.resize(static_cast<size_t>(B.cat.num_objects));
    for (int a = 0; a < B.cat.num_objects; ++a) {
        PosetMap id = PosetMap::identity(objs[static_cast<size_t>(a)].source_size());
        std::vector<int> key{a, a};
        key.insert(key.end(), id.values.begin(), id.values.end());
        B.cat.identities[static_cast<size_t>(a)] = B.mor_index.at(key);
    }
    int M = B.cat.num_morphisms();
    B.cat.comp.assign(static_cast<size_t>(M), std::vector<int>(static_cast<size_t>(M), -1));
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f)
            if (B.cat.composable(g, f)) {
                PosetMap comp_map = compose(mors[static_cast<size_t>(g)], mors[static_cast<size_t>(f)]);
                std::vector<int> key{endpoints[static_cast<size_t>(f)].first,
                                     endpoints[static_cast<size_t>(g)].second};
                key.insert(key.end(), comp_map.values.begin(), comp_map.values.end());
                B.cat.comp[static_cast<size_t>(g)][static_cast<size_t>(f)] = B.mor_index.at(key);
            }
    return B;
}

// objects: tuples (m_0..m_k') with sum + count - 1 <= max_m; morphisms:
// tuples of injections.
BuiltCategory build_product_inj(int factors, int max_m) {
    BuiltCategory B;
    int budget = max_m - (factors - 1);  // k + sum(m_i) <= max_m
    std::vector<std::vector<int>> objs;
    std::vector<int> cur(static_cast<size_t>(factors), 0);
    auto rec_obj = [&](auto&& self, int pos, int left) -> void {
        if (pos == factors) {
            objs.push_back(cur);
            return;
        }
        for (int m = 0; m <= left; ++m) {
            cur[static_cast<size_t>(pos)] = m;
            self(self, pos + 1, left - m);
        }
    };
    rec_obj(rec_obj, 0, budget);
    B.cat.num_objects = static_cast<int>(objs.size());
    for (size_t i = 0; i < objs.size(); ++i) {
        B.obj_data.push_back(objs[i]);
        B.obj_index[objs[i]] = static_cast<int>(i);
    }
    for (int a = 0; a < B.cat.num_objects; ++a)
        for (int b = 0; b < B.cat.num_objects; ++b) {
            std::vector<std::vector<PosetMap>> comps(static_cast<size_t>(factors));
            bool any_empty = false;
            for (int i = 0; i < factors; ++i) {
                comps[static_cast<size_t>(i)] =
                    enumerate_maps(objs[static_cast<size_t>(a)][static_cast<size_t>(i)],
                                   objs[static_cast<size_t>(b)][static_cast<size_t>(i)],
                                   MapKind::mono);
                if (comps[static_cast<size_t>(i)].empty()) any_empty = true;
            }
            if (any_empty) continue;
            std::vector<int> pick(static_cast<size_t>(factors), 0);
            auto rec_mor = [&](auto&& self, int pos) -> void {
                if (pos == factors) {
                    std::vector<int> key{a, b};
                    for (int i = 0; i < factors; ++i) {
                        const auto& g = comps[static_cast<size_t>(i)]
                                             [static_cast<size_t>(pick[static_cast<size_t>(i)])];
                        key.push_back(-1);  // separator keeps components parseable
                        key.insert(key.end(), g.values.begin(), g.values.end());
                    }
                    B.mor_index[key] = static_cast<int>(B.mor_data.size());
                    B.mor_data.push_back(key);
                    B.cat.mor_src.push_back(a);
                    B.cat.mor_tgt.push_back(b);
                    return;
                }
                for (size_t c = 0; c < comps[static_cast<size_t>(pos)].size(); ++c) {
                    pick[static_cast<size_t>(pos)] = static_cast<int>(c);
                    self(self, pos + 1);
                }
            };
            rec_mor(rec_mor, 0);
        }
    auto mor_key = [&](int a, int b, const std::vector<PosetMap>& gs) {
        std::vector<int> key{a, b};
        for (const auto& g : gs) {
            key.push_back(-1);
            key.insert(key.end(), g.values.begin(), g.values.end());
        }
        return key;
    };
    B.cat.identities.resize(static_cast<size_t>(B.cat.num_objects));
    for (int a = 0; a < B.cat.num_objects; ++a) {
        std::vector<PosetMap> ids;
        for (int i = 0; i < factors; ++i)
            ids.push_back(PosetMap::identity(objs[static_cast<size_t>(a)][static_cast<size_t>(i)] + 1));
        B.cat.identities[static_cast<size_t>(a)] = B.mor_index.at(mor_key(a, a, ids));
    }
    // decode morphism components from the stored keys for composition
    auto decode = [&](int m) {
        const auto& key = B.mor_data[static_cast<size_t>(m)];
        int a = key[0], b = key[1];
        std::vector<PosetMap> gs;
        size_t p = 2;
        for (int i = 0; i < factors; ++i) {
            ++p;  // separator
            int len = objs[static_cast<size_t>(a)][static_cast<size_t>(i)] + 1;
            std::vector<int> vals(key.begin() + static_cast<long>(p),
                                  key.begin() + static_cast<long>(p) + len);
            gs.emplace_back(objs[static_cast<size_t>(b)][static_cast<size_t>(i)] + 1,
                            std::move(vals));
            p += static_cast<size_t>(len);
        }
        return gs;
    };
    int M = B.cat.num_morphisms();
    B.cat.comp.assign(static_cast<size_t>(M), std::vector<int>(static_cast<size_t>(M), -1));
    for (int g = 0; g < M; ++g)
        for (int f = 0; f < M; ++f)
            if (B.cat.composable(g, f)) {
                auto gs = decode(g);
                auto fs = decode(f);
                std::vector<PosetMap> hs;
                for (int i = 0; i < factors; ++i)
                    hs.push_back(compose(gs[static_cast<size_t>(i)], fs[static_cast<size_t>(i)]));
                B.cat.comp[static_cast<size_t>(g)][static_cast<size_t>(f)] = B.mor_index.at(
                    mor_key(B.cat.mor_src[static_cast<size_t>(f)],
                            B.cat.mor_tgt[static_cast<size_t>(g)], hs));
            }
    return B;
}

}  // namespace

FIsoReport f_iso_check(int k, int max_m) {
    if (k < 0 || max_m < k) throw input_error("f_iso_check: need max_m >= k >= 0");
    FIsoReport rep;
    rep.k = k;
    rep.max_m = max_m;
    BuiltCategory SB = build_single_bead(k, max_m);
    BuiltCategory PC = build_product_inj(k + 1, max_m);
    rep.objects_single_bead = SB.cat.num_objects;
    rep.objects_product = PC.cat.num_objects;
    rep.morphisms_single_bead = SB.cat.num_morphisms();
    rep.morphisms_product = PC.cat.num_morphisms();

    // the fiber functor on objects: f |-> (|f^{-1}(0)|-1, ..., |f^{-1}(k)|-1)
    std::vector<int> obj_map(static_cast<size_t>(SB.cat.num_objects));
    std::vector<char> obj_hit(static_cast<size_t>(PC.cat.num_objects), 0);
    bool obj_ok = (SB.cat.num_objects == PC.cat.num_objects);
    for (int a = 0; a < SB.cat.num_objects && obj_ok; ++a) {
        const auto& key = SB.obj_data[static_cast<size_t>(a)];
        std::vector<int> fibers(static_cast<size_t>(k) + 1, -1);
        for (size_t p = 1; p < key.size(); ++p) ++fibers[static_cast<size_t>(key[p])];
        auto it = PC.obj_index.find(fibers);
        if (it == PC.obj_index.end() || obj_hit[static_cast<size_t>(it->second)]) {
            obj_ok = false;
            break;
        }
        obj_hit[static_cast<size_t>(it->second)] = 1;
        obj_map[static_cast<size_t>(a)] = it->second;
    }
    rep.object_bijection = obj_ok;

    // on morphisms: restrict g to each fiber interval
    bool mor_ok = obj_ok && (SB.cat.num_morphisms() == PC.cat.num_morphisms());
    std::vector<int> mor_map(static_cast<size_t>(SB.cat.num_morphisms()), -1);
    std::vector<char> mor_hit(static_cast<size_t>(PC.cat.num_morphisms()), 0);
    for (int m = 0; m < SB.cat.num_morphisms() && mor_ok; ++m) {
        const auto& key = SB.mor_data[static_cast<size_t>(m)];
        int a = key[0], b = key[1];
        const auto& fa = SB.obj_data[static_cast<size_t>(a)];
        const auto& fb = SB.obj_data[static_cast<size_t>(b)];
        // fiber starts in source and target
        std::vector<int> start_a(static_cast<size_t>(k) + 2, 0), start_b(start_a);
        for (size_t p = 1; p < fa.size(); ++p) ++start_a[static_cast<size_t>(fa[p]) + 1];
        for (size_t p = 1; p < fb.size(); ++p) ++start_b[static_cast<size_t>(fb[p]) + 1];
        for (int i = 0; i <= k; ++i) {
            start_a[static_cast<size_t>(i) + 1] += start_a[static_cast<size_t>(i)];
            start_b[static_cast<size_t>(i) + 1] += start_b[static_cast<size_t>(i)];
        }
        std::vector<int> pkey{obj_map[static_cast<size_t>(a)], obj_map[static_cast<size_t>(b)]};
        for (int i = 0; i <= k; ++i) {
            pkey.push_back(-1);
            for (int p = start_a[static_cast<size_t>(i)]; p < start_a[static_cast<size_t>(i) + 1];
                 ++p)
                pkey.push_back(key[static_cast<size_t>(p) + 2] - start_b[static_cast<size_t>(i)]);
        }
        auto it = PC.mor_index.find(pkey);
        if (it == PC.mor_index.end() || mor_hit[static_cast<size_t>(it->second)]) {
            mor_ok = false;
            break;
        }
        mor_hit[static_cast<size_t>(it->second)] = 1;
        mor_map[static_cast<size_t>(m)] = it->second;
    }
    rep.morphism_bijection = mor_ok;

    bool functorial = mor_ok;
    for (int a = 0; a < SB.cat.num_objects && functorial; ++a)
        if (mor_map[static_cast<size_t>(SB.cat.identities[static_cast<size_t>(a)])] !=
            PC.cat.identities[static_cast<size_t>(obj_map[static_cast<size_t>(a)])])
            functorial = false;
    for (int g = 0; g < SB.cat.num_morphisms() && functorial; ++g)
        for (int f = 0; f < SB.cat.num_morphisms() && functorial; ++f)
            if (SB.cat.composable(g, f)) {
                int sb = SB.cat.comp[static_cast<size_t>(g)][static_cast<size_t>(f)];
                int pc = PC.cat.comp[static_cast<size_t>(mor_map[static_cast<size_t>(g)])]
                                    [static_cast<size_t>(mor_map[static_cast<size_t>(f)])];
                if (mor_map[static_cast<size_t>(sb)] != pc) functorial = false;
            }
    rep.functorial = functorial;
    rep.pass = rep.object_bijection && rep.morphism_bijection && rep.functorial;
    rep.detail = rep.pass ? "fiberwise comparison is an isomorphism of categories"
                          : "fiberwise comparison failed";
    return rep;
}

Localization localization_pushout(int k, int trunc_dim) {
    if (k < 0 || trunc_dim < 0) throw input_error("localization_pushout: negative argument");
    SimplicialSet simplex = standard_simplex(k, trunc_dim);
    PlusSet PX = plus(restrict_sset(simplex));
    // the i-th vertex component: pairs whose base is the constant-i simplex
    std::vector<std::vector<int>> const_id(static_cast<size_t>(trunc_dim) + 1,
                                           std::vector<int>(static_cast<size_t>(k) + 1));
    for (int m = 0; m <= trunc_dim; ++m)
        for (int i = 0; i <= k; ++i)
            const_id[static_cast<size_t>(m)][static_cast<size_t>(i)] =
                standard_simplex_index(k, PosetMap::constant(m + 1, k + 1, i));
    std::vector<SimplexSelection> subs(static_cast<size_t>(k) + 1,
                                       SimplexSelection(static_cast<size_t>(trunc_dim) + 1));
    for (int n = 0; n <= trunc_dim; ++n)
        for (int id = 0; id < PX.sset().size(n); ++id) {
            const EzPair& p = PX.pair(n, id);
            int m = p.surj.target_size() - 1;
            for (int i = 0; i <= k; ++i)
                if (p.base == const_id[static_cast<size_t>(m)][static_cast<size_t>(i)])
                    subs[static_cast<size_t>(i)][static_cast<size_t>(n)].push_back(id);
        }
    CollapseResult R = collapse(PX.sset(), subs);
    return Localization{k, std::move(R.quotient), std::move(R.map), std::move(PX)};
}

MappingSpaceProbe mapping_space_probe(int k, int x, int y, int bound, int max_deg, int budget) {
    if (x > y) throw input_error("mapping_space_probe: need x <= y");
    if (x < 0 || y > k) throw input_error("mapping_space_probe: endpoints outside [k]");
    if (bound < 1) throw input_error("mapping_space_probe: bound must be >= 1");
    MappingSpaceProbe rep;
    rep.k = k;
    rep.x = x;
    rep.y = y;
    rep.bound = bound;
    rep.max_deg = max_deg;
    Localization loc = localization_pushout(k, bound);
    CommaCategory comma = comma_category(loc.P, x, y, CommaBounds{bound, bound});
    rep.comma_objects = static_cast<long long>(comma.objects.size());
    rep.comma_morphisms = static_cast<long long>(comma.morphisms.size());
    Subcategory N = full_subcategory_N(comma, loc.P);
    rep.n_objects = N.cat.num_objects;
    rep.n_morphisms = N.cat.num_morphisms();
    rep.finality_N = check_finality(N, comma.cat, Extremal::initial);
    // F as a full subcategory of N
    Subcategory F_in_comma = full_subcategory_F(comma, loc.P);
    std::vector<int> f_in_n;
    for (int fo : F_in_comma.object_in_big) {
        for (size_t i = 0; i < N.object_in_big.size(); ++i)
            if (N.object_in_big[i] == fo) f_in_n.push_back(static_cast<int>(i));
    }
    Subcategory F = full_subcategory_of(N.cat, f_in_n);
    rep.f_objects = F.cat.num_objects;
    rep.f_morphisms = F.cat.num_morphisms();
    rep.finality_F = check_finality(F, N.cat, Extremal::terminal);
    SimplicialSet NF = nerve(F.cat, max_deg + 1);
    rep.probe = contractibility_probe(NF, max_deg, budget);
    rep.pass = rep.probe.pass;
    rep.verdict = rep.probe.verdict + " [nerve of the single-bead category, total dim <= " +
                  std::to_string(bound) + "]";
    return rep;
}

}  // namespace sstk
