#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lcdkit/construct.hpp"
#include "lcdkit/io.hpp"
#include "oracles.hpp"

using namespace lcdkit;

namespace {

LinearCode code(Field f, size_t k, size_t n, std::vector<uint32_t> rows,
                Variant v = Variant::euclidean) {
    return LinearCode::make(f, MatrixFq::from_encoded(f, k, n, rows), v);
}

}  // namespace

TEST_CASE("minimal deletion search") {
    Field f5 = make_field(5, 1);
    auto cert = find_minimal_deletion(MatrixFq::from_encoded(f5, 1, 1, {3}));
    CHECK(cert.J.empty());
    CHECK(cert.t() == -1);
    CHECK(cert.det_minor == f5.element(3));

    cert = find_minimal_deletion(MatrixFq::from_encoded(f5, 1, 1, {0}));
    CHECK(cert.J == std::vector<size_t>{0});
    CHECK(cert.t() == 0);
    CHECK(cert.det_minor == f5.one());  // empty determinant
    CHECK(cert.proof == MinorCertificate::Proof::exhaustive);

    cert = find_minimal_deletion(MatrixFq(f5, 2, 2));
    CHECK(cert.J == std::vector<size_t>{0, 1});
    CHECK(cert.t() == 1);
    CHECK(cert.det_minor == f5.one());
    CHECK(cert.proof == MinorCertificate::Proof::rank_shortcut);

    CHECK_THROWS_AS(find_minimal_deletion(MatrixFq(f5, 2, 3)), Error);

    // tiny budget aborts: diag(1,0,0) reaches its certificate on the third minor
    MatrixFq diag100 = MatrixFq::from_encoded(f5, 3, 3, {1, 0, 0, 0, 0, 0, 0, 0, 0});
    try {
        find_minimal_deletion(diag100, 2);
        FAIL("expected SearchBudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SearchBudgetExceeded);
    }
    CHECK(find_minimal_deletion(diag100).J == std::vector<size_t>{1, 2});

    // against the shortcut-free oracle
    SplitMix64 g(31);
    std::vector<Field> fields = {make_field(2, 1), make_field(3, 1), make_field(2, 2),
                                 make_field(5, 1), make_field(3, 2), make_field(2, 3)};
    for (int trial = 0; trial < 150; ++trial) {
        Field f = fields[g.below(fields.size())];
        size_t k = 1 + g.below(5);
        MatrixFq a(f, k, k + g.below(4));
        for (size_t r = 0; r < a.rows(); ++r)
            for (size_t c = 0; c < a.cols(); ++c) a.raw_set(r, c, uint32_t(g.below(f.q())));
        MatrixFq m = gram_euclidean(a);
        auto got = find_minimal_deletion(m);
        auto want = oracles::find_minimal_deletion_naive(m);
        CHECK(got.J == want.J);
        CHECK(got.det_minor == want.det_minor);
    }
}

TEST_CASE("euclidean scaling choice") {
    Field f5 = make_field(5, 1);
    auto a = choose_scaling_euclidean(f5, 3, 2, {});
    CHECK(a == std::vector<Fq>{f5.one(), f5.one(), f5.one()});

    a = choose_scaling_euclidean(f5, 2, 1, {0});
    CHECK(a[0] == f5.element(2));  // first element outside {1, 4}
    CHECK(a[1] == f5.one());

    Field f4 = make_field(2, 2);
    a = choose_scaling_euclidean(f4, 2, 2, {1});
    CHECK(a[1] == f4.element(2));  // -1 = 1 here, first candidate is x

    Field f3 = make_field(3, 1);
    try {
        choose_scaling_euclidean(f3, 2, 1, {0});
        FAIL("expected FieldTooSmall");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::FieldTooSmall);
    }
    a = choose_scaling_euclidean(f3, 2, 1, {0}, true);
    CHECK(a[0] == f3.zero());
    CHECK_THROWS_AS(choose_scaling_euclidean(f5, 2, 1, {5}), Error);
}

TEST_CASE("hermitian scaling choice") {
    Field f9 = make_field(3, 2, std::vector<uint32_t>{1, 0, 1});
    auto a = choose_scaling_hermitian(f9, 2, 1, {});
    CHECK(a == std::vector<Fq>{f9.one(), f9.one()});

    a = choose_scaling_hermitian(f9, 2, 1, {0});
    CHECK(a[0] == f9.element(4));  // 1 + x, the first element of norm != 1
    CHECK(norm(a[0]) != f9.one());
    CHECK(a[1] == f9.one());

    Field f4 = make_field(2, 2);
    try {
        choose_scaling_hermitian(f4, 2, 1, {0});
        FAIL("expected FieldTooSmall");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::FieldTooSmall);
    }
    a = choose_scaling_hermitian(f4, 2, 1, {0}, true);
    CHECK(a[0] == f4.zero());

    CHECK_THROWS_AS(choose_scaling_hermitian(make_field(5, 1), 2, 1, {0}), Error);
}

TEST_CASE("lcdify examples") {
    Field f5 = make_field(5, 1);

    LinearCode already = code(f5, 2, 3, {1, 0, 1, 0, 1, 2});
    REQUIRE(is_lcd(already).lcd);
    LcdifyResult r0 = lcdify(already);
    CHECK(r0.cert.J.empty());
    CHECK(r0.code.generator() == standard_form(already).G_std);
    CHECK(r0.transform.all_nonzero());

    LinearCode so = code(f5, 1, 2, {1, 2});
    LcdifyResult r = lcdify(so);
    CHECK(r.code.generator() == MatrixFq::from_encoded(f5, 1, 2, {2, 2}));
    CHECK(r.cert.J == std::vector<size_t>{0});
    CHECK(r.cert.det_minor == f5.one());
    CHECK(r.det_gram_after == f5.element(3));
    CHECK(r.transform.sigma.is_identity());
    CHECK(r.transform.scale == std::vector<Fq>{f5.element(2), f5.one()});
    CHECK(min_distance(r.code) == min_distance(so));

    Field f9 = make_field(3, 2, std::vector<uint32_t>{1, 0, 1});
    LinearCode hso = code(f9, 1, 2, {1, 4}, Variant::hermitian);
    LcdifyResult rh = lcdify(hso);
    CHECK(rh.code.generator() == MatrixFq::from_encoded(f9, 1, 2, {4, 4}));
    CHECK(det(gram_hermitian(rh.code.generator())) == f9.one());
    CHECK(is_lcd(rh.code).lcd);
}

TEST_CASE("lcdify randomized invariants") {
    SplitMix64 g(47);
    struct Setup {
        Field f;
        Variant v;
    };
    std::vector<Setup> setups = {
        {make_field(2, 2), Variant::euclidean},  {make_field(5, 1), Variant::euclidean},
        {make_field(7, 1), Variant::euclidean},  {make_field(2, 3), Variant::euclidean},
        {make_field(3, 2), Variant::euclidean},  {make_field(3, 2), Variant::hermitian},
        {make_field(2, 4), Variant::hermitian},  {make_field(5, 2), Variant::hermitian},
    };
    for (int trial = 0; trial < 120; ++trial) {
        const Setup& s = setups[g.below(setups.size())];
        size_t n = 2 + g.below(8);
        size_t k = 1 + g.below(std::min<size_t>(n, 5));
        LinearCode c = random_code(s.f, s.v, n, k, g.next());
        LcdifyResult r = lcdify(c);
        CHECK(is_lcd(r.code).lcd);
        CHECK(r.code.n() == n);
        CHECK(r.code.k() == k);
        CHECK(min_distance(r.code) == min_distance(c));
        CHECK(r.cert.J.size() >= hull_dimension(c));  // |J| = t+1 >= h

        // applying the stored transform to the rref basis reproduces the output
        LinearCode canon = LinearCode::make(s.f, row_basis(c.generator()), s.v);
        CHECK(apply_transform(canon, r.transform).generator() == r.code.generator());

        // scaling-only route from the standard form
        MonomialTransform scale_only{std::vector<Fq>(), Permutation::identity(n)};
        for (size_t i = 0; i < n; ++i)
            scale_only.scale.push_back(r.transform.scale[r.standard.sigma[i]]);
        LinearCode std_code = LinearCode::make(s.f, r.standard.G_std, s.v);
        CHECK(apply_transform(std_code, scale_only).generator() == r.code.generator());

        // the two determinant routes agree
        MatrixFq m = s.v == Variant::euclidean ? gram_euclidean(r.standard.G_std)
                                               : gram_hermitian(r.standard.G_std);
        std::vector<Fq> u;
        Fq prod = s.f.one();
        for (size_t j : r.cert.J) {
            Fq aj = scale_only.scale[j];
            Fq uj = s.v == Variant::euclidean ? aj * aj - s.f.one() : norm(aj) - s.f.one();
            prod = prod * uj;
        }
        std::vector<Fq> word(k, s.f.zero());
        for (size_t j : r.cert.J)
            word[j] = s.v == Variant::euclidean
                          ? scale_only.scale[j] * scale_only.scale[j] - s.f.one()
                          : norm(scale_only.scale[j]) - s.f.one();
        CHECK(det(diag_add(m, word)) == prod * r.cert.det_minor);
        CHECK(det(diag_add(m, word)) == r.det_gram_after);
    }
}

TEST_CASE("lcdify over tiny fields") {
    Field f2 = make_field(2, 1);
    LinearCode selfdual = code(f2, 1, 2, {1, 1});
    CHECK_THROWS_AS(lcdify(selfdual), Error);
    LcdifyResult r = lcdify(selfdual, true);
    CHECK(is_lcd(r.code).lcd);
    CHECK(r.code.k() == 1);
    CHECK_FALSE(r.transform.all_nonzero());

    Field f3 = make_field(3, 1);
    LinearCode so3 = code(f3, 1, 3, {1, 1, 1});
    CHECK_THROWS_AS(lcdify(so3), Error);
    LcdifyResult r3 = lcdify(so3, true);
    CHECK(is_lcd(r3.code).lcd);
    CHECK(r3.code.k() == 1);

    // already-LCD codes over tiny fields need no scaling at all
    LinearCode ok2 = code(f2, 1, 3, {1, 1, 1});
    CHECK(lcdify(ok2).cert.J.empty());
}

TEST_CASE("hull complement subcode") {
    Field f5 = make_field(5, 1);
    LinearCode so = code(f5, 1, 2, {1, 2});
    CHECK_FALSE(hull_complement_subcode(so).has_value());  // hull is everything

    LinearCode mixed = code(f5, 3, 4, {1, 0, 2, 0, 0, 1, 0, 2, 0, 0, 1, 1});
    CHECK(hull_dimension(mixed) == 1);
    auto sub = hull_complement_subcode(mixed);
    REQUIRE(sub.has_value());
    CHECK(sub->k() == 2);
    CHECK(is_lcd(*sub).lcd);

    CHECK_THROWS_AS(hull_complement_subcode(code(f5, 1, 2, {2, 2})), Error);  // AlreadyLCD

    SplitMix64 g(53);
    int found = 0;
    while (found < 40) {
        Field f = std::vector<Field>{f5, make_field(2, 2), make_field(3, 1)}[g.below(3)];
        size_t n = 3 + g.below(6), k = 2 + g.below(std::min<size_t>(n - 1, 4));
        LinearCode c = random_code(f, Variant::euclidean, n, k, g.next());
        size_t h = hull_dimension(c);
        if (h == 0 || h == k) continue;
        auto s = hull_complement_subcode(c);
        REQUIRE(s.has_value());
        CHECK(s->k() == k - h);
        CHECK(is_lcd(*s).lcd);
        ++found;
    }
}

TEST_CASE("extension construction") {
    Field f5 = make_field(5, 1);
    ExtensionResult e = extend_to_lcd(code(f5, 1, 2, {1, 2}));
    CHECK(e.code.generator() == MatrixFq::from_encoded(f5, 1, 3, {1, 2, 1}));
    CHECK(e.map.h == 1);
    CHECK(is_lcd(e.code).lcd);
    CHECK(min_distance(e.code) == 3);

    Field f2 = make_field(2, 1);
    ExtensionResult e2 = extend_to_lcd(code(f2, 1, 2, {1, 1}));
    CHECK(e2.code.generator() == MatrixFq::from_encoded(f2, 1, 3, {1, 1, 1}));
    CHECK(is_lcd(e2.code).lcd);
    CHECK(min_distance(e2.code) == 3);

    LinearCode lcd = code(f5, 1, 2, {2, 2});
    ExtensionResult e3 = extend_to_lcd(lcd);
    CHECK(e3.map.h == 0);
    CHECK(e3.code.generator() == lcd.generator());

    SplitMix64 g(59);
    int found = 0;
    while (found < 60) {
        bool herm = g.below(2) == 1;
        Field f = herm ? std::vector<Field>{make_field(3, 2), make_field(2, 4)}[g.below(2)]
                       : std::vector<Field>{f2, make_field(3, 1), f5, make_field(2, 2)}[g.below(4)];
        Variant v = herm ? Variant::hermitian : Variant::euclidean;
        size_t n = 2 + g.below(7), k = 1 + g.below(std::min<size_t>(n, 4));
        LinearCode c = random_code(f, v, n, k, g.next());
        size_t h = hull_dimension(c);
        if (h == 0) continue;
        ExtensionResult ext = extend_to_lcd(c);
        CHECK(ext.code.n() == n + h);
        CHECK(ext.code.k() == k);
        CHECK(is_lcd(ext.code).lcd);
        CHECK(min_distance(ext.code) >= min_distance(c));

        // the Gram splits into the identity block and the complement's Gram
        MatrixFq m = gram(ext.code);
        for (size_t i = 0; i < h; ++i)
            for (size_t j = 0; j < k; ++j) {
                uint32_t want = i == j ? 1 : 0;
                CHECK(m.raw(i, j) == want);
                CHECK(m.raw(j, i) == want);
            }
        ++found;
    }
}

TEST_CASE("deficient extensions") {
    Field f5 = make_field(5, 1);
    // two orthogonal self-orthogonal rows: the hull is the whole code, h = 2
    LinearCode c = code(f5, 2, 4, {1, 2, 0, 0, 0, 0, 1, 2});
    REQUIRE(hull_dimension(c) == 2);

    CHECK(extension_is_deficient(c, MatrixFq(f5, 2, 0)));  // nothing appended

    MatrixFq collinear = MatrixFq::from_encoded(f5, 2, 1, {1, 2});
    CHECK(extension_is_deficient(c, collinear));
    MatrixFq gl = hstack(hull_first_basis(c), collinear);
    CHECK(det(gram_euclidean(gl)) == f5.zero());

    ExtensionResult e = extend_to_lcd(c);
    CHECK_FALSE(extension_is_deficient(c, e.map.appended_block));

    // values outside the hull's image violate the splitting hypothesis
    LinearCode mixed = code(f5, 2, 4, {1, 2, 0, 0, 0, 0, 1, 1});
    REQUIRE(hull_dimension(mixed) == 1);
    MatrixFq bad(f5, 2, 1);
    bad.raw_set(1, 0, 1);  // hull row maps to 0, complement row to 1
    try {
        extension_is_deficient(mixed, bad);
        FAIL("expected DecompositionViolated");
    } catch (const Error& e2) {
        CHECK(e2.code() == Errc::DecompositionViolated);
    }
}
