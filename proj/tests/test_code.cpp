#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lcdkit/code.hpp"
#include "lcdkit/io.hpp"
#include "oracles.hpp"

using namespace lcdkit;

namespace {

LinearCode code(Field f, size_t k, size_t n, std::vector<uint32_t> rows,
                Variant v = Variant::euclidean) {
    return LinearCode::make(f, MatrixFq::from_encoded(f, k, n, rows), v);
}

// binary [7,4] Hamming code
LinearCode hamming74() {
    Field f2 = make_field(2, 1);
    return code(f2, 4, 7,
                {1, 0, 0, 0, 0, 1, 1,
                 0, 1, 0, 0, 1, 0, 1,
                 0, 0, 1, 0, 1, 1, 0,
                 0, 0, 0, 1, 1, 1, 1});
}

}  // namespace

TEST_CASE("construction") {
    Field f5 = make_field(5, 1);
    LinearCode c = code(f5, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(c.n() == 3);
    CHECK(c.k() == 3);

    // dependent rows are dropped under the reduce policy, rejected otherwise
    MatrixFq g = MatrixFq::from_encoded(f5, 2, 2, {1, 2, 2, 4});
    CHECK_THROWS_AS(LinearCode::make(f5, g, Variant::euclidean), Error);
    LinearCode reduced =
        LinearCode::make(f5, g, Variant::euclidean, LinearCode::RankPolicy::reduce);
    CHECK(reduced.k() == 1);
    CHECK(reduced.generator() == MatrixFq::from_encoded(f5, 1, 2, {1, 2}));

    CHECK_THROWS_AS(LinearCode::make(f5, MatrixFq(f5, 2, 3), Variant::euclidean,
                                     LinearCode::RankPolicy::reduce),
                    Error);  // zero code
    CHECK_THROWS_AS(code(f5, 1, 2, {1, 2}, Variant::hermitian), Error);  // order not square

    // full-rank generators are kept verbatim
    LinearCode kept = code(f5, 1, 2, {2, 2});
    CHECK(kept.generator() == MatrixFq::from_encoded(f5, 1, 2, {2, 2}));
}

TEST_CASE("standard form") {
    Field f5 = make_field(5, 1);
    LinearCode sys = code(f5, 2, 4, {1, 0, 2, 3, 0, 1, 4, 1});
    const auto& sf1 = standard_form(sys);
    CHECK(sf1.sigma.is_identity());
    CHECK(sf1.G_std == sys.generator());
    CHECK(sf1.P == MatrixFq::from_encoded(f5, 2, 2, {2, 3, 4, 1}));

    LinearCode full = code(f5, 2, 2, {0, 1, 1, 0});
    CHECK(standard_form(full).sigma.is_identity());
    CHECK(standard_form(full).G_std == MatrixFq::identity(f5, 2));

    Field f2 = make_field(2, 1);
    LinearCode shifted = code(f2, 1, 3, {0, 1, 1});
    const auto& sf2 = standard_form(shifted);
    CHECK(sf2.sigma.images() == std::vector<uint32_t>{1, 0, 2});
    CHECK(sf2.G_std == MatrixFq::from_encoded(f2, 1, 3, {1, 0, 1}));
    CHECK(sf2.P == MatrixFq::from_encoded(f2, 1, 2, {0, 1}));

    // the witness spans the permuted row space
    CHECK(same_row_space(sf2.G_std, permute_columns(shifted.generator(), sf2.sigma)));
}

TEST_CASE("dual codes") {
    Field f5 = make_field(5, 1);
    CHECK_FALSE(dual(code(f5, 2, 2, {1, 0, 0, 1})).has_value());

    Field f2 = make_field(2, 1);
    LinearCode rep = code(f2, 1, 2, {1, 1});
    auto d = dual(rep);
    REQUIRE(d.has_value());
    CHECK(same_code(*d, rep));  // self-dual

    auto d5 = dual(code(f5, 1, 2, {1, 2}));
    REQUIRE(d5.has_value());
    CHECK(same_row_space(d5->generator(), MatrixFq::from_encoded(f5, 1, 2, {2, 4})));

    SplitMix64 g(3);
    for (Field f : {make_field(5, 1), make_field(2, 2), make_field(3, 2)}) {
        for (int trial = 0; trial < 25; ++trial) {
            size_t n = 2 + g.below(7);
            size_t k = 1 + g.below(n);
            for (Variant v : {Variant::euclidean, Variant::hermitian}) {
                if (v == Variant::hermitian && f.m() % 2 != 0) continue;
                LinearCode c = random_code(f, v, n, k, g.next());
                if (k == n) continue;
                auto dc = dual(c);
                REQUIRE(dc.has_value());
                CHECK(dc->k() == n - k);
                if (dc->k() < n) {
                    auto ddc = dual(*dc);
                    REQUIRE(ddc.has_value());
                    CHECK(same_code(*ddc, LinearCode::make(f, row_basis(c.generator()), v)));
                }
                // duality pairing vanishes
                MatrixFq h = v == Variant::euclidean ? dc->generator()
                                                     : conjugated(dc->generator());
                CHECK(c.generator() * transpose(h) == MatrixFq(f, k, dc->k()));
            }
        }
    }
}

TEST_CASE("hull and lcd predicate") {
    Field f5 = make_field(5, 1);
    LinearCode lcd = code(f5, 2, 2, {1, 0, 0, 1});
    CHECK(hull_basis(lcd).rows() == 0);
    CHECK(hull_dimension(lcd) == 0);
    CHECK(is_lcd(lcd).lcd);

    LinearCode so = code(f5, 1, 2, {1, 2});
    CHECK(same_row_space(hull_basis(so), so.generator()));
    CHECK(hull_dimension(so) == 1);
    CHECK_FALSE(is_lcd(so).lcd);
    CHECK(is_lcd(so).det_gram == f5.zero());

    CHECK(is_lcd(code(f5, 1, 2, {2, 2})).lcd);
    CHECK(is_lcd(code(f5, 1, 2, {2, 2})).det_gram == f5.element(3));

    Field f9 = make_field(3, 2, std::vector<uint32_t>{1, 0, 1});
    LinearCode hso = code(f9, 1, 2, {1, 4}, Variant::hermitian);
    CHECK(same_row_space(hull_basis(hso), hso.generator()));
    CHECK(hull_dimension(hso) == 1);

    SplitMix64 g(5);
    for (Field f : {make_field(5, 1), make_field(2, 2), make_field(3, 2), make_field(2, 3)}) {
        for (int trial = 0; trial < 30; ++trial) {
            size_t n = 2 + g.below(6);
            size_t k = 1 + g.below(n);
            for (Variant v : {Variant::euclidean, Variant::hermitian}) {
                if (v == Variant::hermitian && f.m() % 2 != 0) continue;
                LinearCode c = random_code(f, v, n, k, g.next());
                MatrixFq hb = hull_basis(c);
                CHECK(hb.rows() == hull_dimension(c));
                CHECK(hull_dimension(c) == k - rank(gram(c)));
                CHECK(same_row_space(hb, oracles::hull_by_intersection(c)));
                CHECK(is_lcd(c).lcd == (hull_dimension(c) == 0));
            }
        }
    }
}

TEST_CASE("monomial transforms") {
    Field f5 = make_field(5, 1);
    LinearCode c = code(f5, 1, 2, {1, 2});
    LinearCode same = apply_transform(c, MonomialTransform::identity(f5, 2));
    CHECK(same.generator() == c.generator());

    MonomialTransform scale{{f5.element(2), f5.one()}, Permutation::identity(2)};
    CHECK(apply_transform(c, scale).generator() == MatrixFq::from_encoded(f5, 1, 2, {2, 2}));

    MonomialTransform zero{{f5.zero(), f5.one()}, Permutation::identity(2)};
    CHECK_THROWS_AS(apply_transform(c, zero), Error);
    bool dropped = false;
    LinearCode degenerate = apply_transform(c, zero, ZeroPolicy::allow, &dropped);
    CHECK_FALSE(dropped);  // (0, 2) still has rank 1
    CHECK(degenerate.generator() == MatrixFq::from_encoded(f5, 1, 2, {0, 2}));

    LinearCode two = code(f5, 2, 2, {1, 0, 0, 1});
    MonomialTransform kill{{f5.zero(), f5.one()}, Permutation::identity(2)};
    CHECK_THROWS_AS(apply_transform(two, kill, ZeroPolicy::allow), Error);  // RankDropped
    dropped = false;
    LinearCode shrunk = apply_transform(two, kill, ZeroPolicy::allow, &dropped);
    CHECK(dropped);
    CHECK(shrunk.k() == 1);

    // equivalences preserve n, k and d; permutations preserve the hull too
    SplitMix64 g(9);
    for (int trial = 0; trial < 40; ++trial) {
        Field f = trial % 2 == 0 ? f5 : make_field(2, 2);
        size_t n = 2 + g.below(6), k = 1 + g.below(std::min<size_t>(n, 4));
        LinearCode r = random_code(f, Variant::euclidean, n, k, g.next());
        std::vector<Fq> a;
        std::vector<uint32_t> images(n);
        for (size_t i = 0; i < n; ++i) {
            a.push_back(f.element(1 + uint32_t(g.below(f.q() - 1))));
            images[i] = uint32_t(i);
        }
        for (size_t i = 0; i < n; ++i) std::swap(images[i], images[i + g.below(n - i)]);
        MonomialTransform t{a, Permutation(images)};
        LinearCode rt = apply_transform(r, t);
        CHECK(rt.n() == n);
        CHECK(rt.k() == k);
        CHECK(min_distance(rt) == min_distance(r));

        MonomialTransform perm_only{std::vector<Fq>(n, f.one()), Permutation(images)};
        CHECK(hull_dimension(apply_transform(r, perm_only)) == hull_dimension(r));
    }
}

TEST_CASE("minimum distance") {
    Field f3 = make_field(3, 1);
    CHECK(min_distance(code(f3, 1, 6, {1, 1, 1, 1, 1, 1})) == 6);
    CHECK(min_distance(hamming74()) == 3);
    Field f5 = make_field(5, 1);
    CHECK(min_distance(code(f5, 1, 3, {1, 2, 1})) == 3);

    CHECK_THROWS_AS(min_distance(hamming74(), 3), Error);  // needs 15 classes
    try {
        min_distance(code(f5, 3, 5, {1, 0, 0, 1, 1, 0, 1, 0, 2, 2, 0, 0, 1, 3, 4}), 5);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BudgetExceeded);
        CHECK(std::string(e.what()).find("31") != std::string::npos);  // (5^3-1)/4
    }

    CHECK(projective_class_count(2, 3) == 7);
    CHECK(projective_class_count(5, 3) == 31);
    CHECK(projective_class_count(9, 6) == 66430);

    SplitMix64 g(21);
    for (int trial = 0; trial < 60; ++trial) {
        Field f = std::vector<Field>{f3, f5, make_field(2, 2), make_field(2, 1)}[g.below(4)];
        size_t k = 1 + g.below(3);
        size_t n = k + g.below(7 - k);
        LinearCode c = random_code(f, Variant::euclidean, n, k, g.next());
        CHECK(min_distance(c) == oracles::min_distance_full_enumeration(c));
    }
}

TEST_CASE("mds predicate") {
    Field f5 = make_field(5, 1);
    CHECK(is_mds(code(f5, 2, 2, {1, 0, 0, 1})));
    CHECK(is_mds(code(f5, 1, 2, {1, 2})));
    CHECK_FALSE(is_mds(hamming74()));
}
