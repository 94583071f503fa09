#include "doctest.h"
#include "support.hpp"

using namespace sstk;

TEST_CASE("restrict keeps faces bit-for-bit") {
    SimplicialSet pt = standard_simplex(0, 3);
    SemisimplicialSet R = restrict_sset(pt);
    for (int n = 0; n <= 3; ++n) CHECK(R.size(n) == 1);
    SimplicialSet N = nerve(FiniteCategory::poset_chain(1), 3);
    SemisimplicialSet RN = restrict_sset(N);
    CHECK(RN.size(1) == 3);
    CHECK(RN.faces == N.faces);
    RN.validate();
}

TEST_CASE("plus of the point: 2^N simplices, one nondegenerate per dimension") {
    PlusSet P = plus(restrict_sset(standard_simplex(0, 6)));
    auto flags = P.sset().nondegenerate_flags();
    for (int n = 0; n <= 6; ++n) {
        CHECK(P.sset().size(n) == (1 << n));
        int nd = 0;
        for (char f : flags[static_cast<size_t>(n)]) nd += f;
        CHECK(nd == 1);
    }
    P.sset().validate_eilenberg_zilber();
}

TEST_CASE("plus cardinalities match the binomial sum for k <= 3, N <= 5") {
    for (int k = 0; k <= 3; ++k) {
        PlusSet P = plus(restrict_sset(standard_simplex(k, 5)));
        for (int N = 0; N <= 5; ++N) {
            std::int64_t expect = 0;
            for (int m = 0; m <= N; ++m)
                expect += binomial(N, m) * binomial(m + k + 1, k);
            CHECK(P.sset().size(N) == expect);
        }
    }
}

TEST_CASE("plus of the interval: 12 two-simplices and the factorization face chase") {
    SimplicialSet d1 = standard_simplex(1, 4);
    PlusSet P = plus(restrict_sset(d1));
    CHECK(P.sset().size(2) == 12);

    int edge01 = standard_simplex_index(1, PosetMap(2, {0, 1}));
    int vertex0 = standard_simplex_index(1, PosetMap(2, {0}));
    // (01-edge, s : [2] ->> [1] = (0,0,1))
    int id = P.id_of(2, edge01, PosetMap(2, {0, 0, 1}));
    int d0 = P.sset().face(2, id, 0);
    CHECK(P.pair(1, d0) == EzPair{edge01, PosetMap::identity(2)});
    int d2 = P.sset().face(2, id, 2);
    CHECK(P.pair(1, d2) == EzPair{vertex0, PosetMap(1, {0, 0})});
}

TEST_CASE("nondegenerate simplices of plus(X) biject with X") {
    SemisimplicialSet X = random_semisimplicial(4, 4, 7);
    PlusSet P = plus(X);
    auto flags = P.sset().nondegenerate_flags();
    for (int n = 0; n <= 4; ++n) {
        int nd = 0;
        for (char f : flags[static_cast<size_t>(n)]) nd += f;
        CHECK(nd == X.size(n));
        // and they are exactly the identity-surjection pairs, the unit image
        for (int id = 0; id < P.sset().size(n); ++id)
            CHECK((P.pair(n, id).surj.is_identity()) ==
                  static_cast<bool>(flags[static_cast<size_t>(n)][static_cast<size_t>(id)]));
    }
}

TEST_CASE("counit: identity pairs, degenerate images, surjectivity, naturality") {
    SimplicialSet d1 = standard_simplex(1, 4);
    PlusSet P = plus(restrict_sset(d1));
    SSetMap eps = counit(d1, P);
    // (S, id) |-> S
    for (int n = 0; n <= 4; ++n)
        for (int S = 0; S < d1.size(n); ++S)
            CHECK(eps(n, P.id_of(n, S, PosetMap::identity(n + 1))) == S);
    // (01-edge, (0,0,1)) |-> the degenerate 001 simplex
    int edge01 = standard_simplex_index(1, PosetMap(2, {0, 1}));
    CHECK(eps(2, P.id_of(2, edge01, PosetMap(2, {0, 0, 1}))) ==
          standard_simplex_index(1, PosetMap(2, {0, 0, 1})));
    // a valid simplicial map
    CHECK(simplicial_map_violations(P.sset(), d1, eps).empty());
    // surjective in every dimension
    for (int n = 0; n <= 4; ++n) {
        std::vector<char> hit(static_cast<size_t>(d1.size(n)), 0);
        for (int id = 0; id < P.sset().size(n); ++id) hit[static_cast<size_t>(eps(n, id))] = 1;
        for (char h : hit) CHECK(h == 1);
    }
}

TEST_CASE("unit: injective semisimplicial map hitting the nondegenerate simplices") {
    for (unsigned seed = 0; seed < 10; ++seed) {
        SemisimplicialSet X = random_semisimplicial(4, 5, seed);
        PlusSet P = plus(X);
        SSetMap eta = unit(X, P);
        CHECK(semisimplicial_map_violations(X, restrict_sset(P.sset()), eta).empty());
        auto flags = P.sset().nondegenerate_flags();
        for (int n = 0; n <= 4; ++n) {
            std::vector<char> seen(static_cast<size_t>(P.sset().size(n)), 0);
            for (int id = 0; id < X.size(n); ++id) {
                int v = eta(n, id);
                CHECK(!seen[static_cast<size_t>(v)]);  // monomorphism
                seen[static_cast<size_t>(v)] = 1;
                CHECK(flags[static_cast<size_t>(n)][static_cast<size_t>(v)] == 1);
            }
            // image is exactly the nondegenerate part
            int nd = 0;
            for (char f : flags[static_cast<size_t>(n)]) nd += f;
            CHECK(nd == X.size(n));
        }
    }
}

TEST_CASE("triangle identities hold for simplices, nerves, and random inputs") {
    for (int k = 0; k <= 3; ++k) {
        TriangleReport r = check_triangle_identities(restrict_sset(standard_simplex(k, 4)),
                                                     standard_simplex(k, 4));
        CHECK(r.ok);
    }
    SimplicialSet N2 = nerve(FiniteCategory::poset_chain(2), 4);
    CHECK(check_triangle_identities(restrict_sset(N2), N2).ok);
    for (unsigned seed = 0; seed < 10; ++seed) {
        SemisimplicialSet X = random_semisimplicial(4, 5, seed + 100);
        SimplicialSet Y = plus(X).sset();
        CHECK(check_triangle_identities(X, Y).ok);
    }
}

TEST_CASE("plus structure maps are functorial") {
    PlusSet P = plus(restrict_sset(standard_simplex(2, 4)));
    const SimplicialSet& X = P.sset();
    // exhaustive through dimension 3, seeded sample at dimension 4
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (const auto& f : enumerate_maps(a, b, MapKind::all))
                    for (const auto& g : enumerate_maps(b, c, MapKind::all))
                        for (int s = 0; s < X.size(c); ++s)
                            CHECK(X.apply(compose(g, f), s) == X.apply(f, X.apply(g, s)));
    std::mt19937 rng(0);
    auto maps4 = enumerate_maps(4, 4, MapKind::all);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto& f = maps4[rng() % maps4.size()];
        const auto& g = maps4[rng() % maps4.size()];
        int s = static_cast<int>(rng() % static_cast<unsigned>(X.size(4)));
        CHECK(X.apply(compose(g, f), s) == X.apply(f, X.apply(g, s)));
    }
}

TEST_CASE("random semisimplicial sets are valid and reproducible") {
    for (unsigned seed = 0; seed < 20; ++seed) {
        SemisimplicialSet X = random_semisimplicial(4, 5, seed);
        X.validate();
        SemisimplicialSet Y = random_semisimplicial(4, 5, seed);
        CHECK(X.counts == Y.counts);
        CHECK(X.faces == Y.faces);
    }
}
