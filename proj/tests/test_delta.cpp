#include "doctest.h"
#include "sstk/delta.hpp"

using namespace sstk;

TEST_CASE("compose: identities and simplicial identity s0 d1 = id") {
    PosetMap id2 = PosetMap::identity(3);
    CHECK(compose(id2, id2) == id2);
    PosetMap s0 = PosetMap::codegeneracy(0, 0);  // [1] ->> [0]
    PosetMap d1 = PosetMap::coface(1, 1);        // [0] -> [1]
    CHECK(compose(s0, d1) == PosetMap::identity(1));
}

TEST_CASE("compose agrees with pointwise evaluation on all [2]->[3], [3]->[1]") {
    for (const auto& f : enumerate_maps(2, 3, MapKind::all))
        for (const auto& g : enumerate_maps(3, 1, MapKind::all)) {
            PosetMap h = compose(g, f);
            for (int i = 0; i <= 2; ++i) CHECK(h(i) == g(f(i)));
        }
}

TEST_CASE("compose rejects size mismatches") {
    PosetMap f = PosetMap::coface(2, 0);  // [1] -> [2]
    CHECK_THROWS_AS(compose(f, f), compose_error);
}

TEST_CASE("epi-mono factorization: forced examples") {
    PosetMap id2 = PosetMap::identity(3);
    auto [e, m] = epi_mono_factorize(id2);
    CHECK(e == id2);
    CHECK(m == id2);

    PosetMap f(3, {0, 0, 1});  // [2] -> [2]
    auto fac = epi_mono_factorize(f);
    CHECK(fac.epi == PosetMap(2, {0, 0, 1}));
    CHECK(fac.mono == PosetMap(3, {0, 1}));
    CHECK(compose(fac.mono, fac.epi) == f);
}

TEST_CASE("factorization uniqueness for every map with source and target at most [5]") {
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n)
            for (const auto& f : enumerate_maps(m, n, MapKind::all)) {
                int found = 0;
                for (int k = 0; k <= std::min(m, n); ++k)
                    for (const auto& e : enumerate_maps(m, k, MapKind::epi))
                        for (const auto& mo : enumerate_maps(k, n, MapKind::mono))
                            if (compose(mo, e) == f) ++found;
                CHECK(found == 1);
                auto fac = epi_mono_factorize(f);
                CHECK(compose(fac.mono, fac.epi) == f);
                CHECK(fac.epi.is_surjective());
                CHECK(fac.mono.is_injective());
            }
}

TEST_CASE("the factorization square composes: factor g.f through the image of f") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (const auto& f : enumerate_maps(a, b, MapKind::all))
                    for (const auto& g : enumerate_maps(b, c, MapKind::all)) {
                        auto ff = epi_mono_factorize(f);
                        auto gg = epi_mono_factorize(compose(g, ff.mono));
                        auto direct = epi_mono_factorize(compose(g, f));
                        CHECK(direct.epi == compose(gg.epi, ff.epi));
                        CHECK(direct.mono == gg.mono);
                    }
}

TEST_CASE("enumeration counts match the closed-form binomials for m, n <= 6") {
    CHECK(enumerate_maps(1, 0, MapKind::epi).size() == 1);
    CHECK(enumerate_maps(1, 0, MapKind::epi)[0] == PosetMap(1, {0, 0}));
    CHECK(enumerate_maps(2, 1, MapKind::epi).size() == 2);
    // the multiset count C(m+n+1, n) at (2, 1): four maps, also the number
    // of 2-simplices of the interval
    CHECK(enumerate_maps(2, 1, MapKind::all).size() == 4);
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            CHECK(static_cast<std::int64_t>(enumerate_maps(m, n, MapKind::all).size()) ==
                  binomial(m + n + 1, n));
            CHECK(static_cast<std::int64_t>(enumerate_maps(m, n, MapKind::epi).size()) ==
                  binomial(m, n));
            CHECK(static_cast<std::int64_t>(enumerate_maps(m, n, MapKind::mono).size()) ==
                  binomial(n + 1, m + 1));
        }
}

TEST_CASE("enumeration is lexicographically sorted and well-formed") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            auto maps = enumerate_maps(m, n, MapKind::all);
            for (size_t i = 0; i < maps.size(); ++i) {
                CHECK(maps[i].well_formed());
                if (i > 0) CHECK(maps[i - 1].values < maps[i].values);
            }
        }
}

TEST_CASE("coface and codegeneracy satisfy the cosimplicial identities") {
    // d_j d_i = d_i d_{j-1} for i < j as maps [n-1] -> [n+1]
    for (int n = 1; n <= 4; ++n)
        for (int j = 1; j <= n + 1; ++j)
            for (int i = 0; i < j; ++i)
                CHECK(compose(PosetMap::coface(n + 1, j), PosetMap::coface(n, i)) ==
                      compose(PosetMap::coface(n + 1, i), PosetMap::coface(n, j - 1)));
    // s_j s_i = s_i s_{j+1} for i <= j as maps [n+2] -> [n]
    for (int n = 0; n <= 3; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                CHECK(compose(PosetMap::codegeneracy(n, j), PosetMap::codegeneracy(n + 1, i)) ==
                      compose(PosetMap::codegeneracy(n, i), PosetMap::codegeneracy(n + 1, j + 1)));
}

TEST_CASE("missing values and duplicated positions decompose maps") {
    PosetMap mono(6, {1, 3, 4});
    CHECK(missing_values(mono) == std::vector<int>{0, 2, 5});
    PosetMap epi(3, {0, 0, 1, 2, 2});
    CHECK(duplicated_positions(epi) == std::vector<int>{0, 3});
}
