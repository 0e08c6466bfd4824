#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "satcr/frobenius.hpp"
#include "satcr/groups.hpp"

using namespace satcr;
using namespace satcr::frob;
using gf::El;
using gf::FieldPtr;
using gf::Mat;

namespace {

struct Rng {
    uint64_t s;
    uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return next() % n; }
};

Mat rand_invertible(Rng& rng, const FieldPtr& f, int n) {
    for (;;) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = El::at_index(f, rng.below(f->size()));
        if (m.rank() == n) return m;
    }
}

Errc thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a satcr::Error");
    return Errc::BadInput;
}

std::set<std::string> encodings(const std::vector<Mat>& ms) {
    std::set<std::string> out;
    for (const Mat& m : ms) out.insert(m.encode());
    return out;
}

} // namespace

TEST_CASE("endomorphisms are multiplicative") {
    Rng rng{2026};
    auto f9 = gf::make_field(3, 2);
    auto f4 = gf::make_field(2, 2);

    Endo sq = standard_endo(1);
    CHECK(apply(sq, Mat::identity(f9, 3)) == Mat::identity(f9, 3));
    Mat zi = Mat::identity(f9, 2).scaled(El::gen(f9));
    CHECK(apply(sq, zi) == Mat::identity(f9, 2).scaled(El::gen(f9).pow(3)));

    Endo cj = conj_endo(rand_invertible(rng, f9, 3));
    Endo tw = transpose_inverse_conj(grp::antidiag_ones(f9, 3));
    Endo cp = composite({tw, sq});
    for (const Endo& e : {sq, cj, tw, cp}) {
        for (int it = 0; it < 10; ++it) {
            Mat g = rand_invertible(rng, f9, 3), h = rand_invertible(rng, f9, 3);
            CHECK(apply(e, g * h) == apply(e, g) * apply(e, h));
        }
    }

    // blockwise maps are multiplicative on block-diagonal input
    Endo bm = block_map({1, 0}, {standard_endo(1), standard_endo(0)});
    for (int it = 0; it < 10; ++it) {
        Mat g = Mat::block_diag({rand_invertible(rng, f4, 2), rand_invertible(rng, f4, 2)});
        Mat h = Mat::block_diag({rand_invertible(rng, f4, 2), rand_invertible(rng, f4, 2)});
        CHECK(apply(bm, g * h) == apply(bm, g) * apply(bm, h));
    }
    // swap after twisting the first block: (g1, g2) -> (g2, g1^sigma)
    Mat g1 = rand_invertible(rng, f4, 2), g2 = rand_invertible(rng, f4, 2);
    CHECK(apply(bm, Mat::block_diag({g1, g2})) ==
          Mat::block_diag({g2, apply(standard_endo(1), g1)}));
    CHECK(thrown_code([&] { apply(bm, rand_invertible(rng, f4, 4)); }) == Errc::BadInput);

    // unitary twist squared is the standard q^2 Frobenius
    Endo unitary = composite({transpose_inverse_conj(grp::antidiag_ones(f4, 3)), standard_endo(1)});
    for (int it = 0; it < 10; ++it) {
        Mat g = rand_invertible(rng, f4, 3);
        CHECK(apply(unitary, apply(unitary, g)) == apply(standard_endo(2), g));
    }

    CHECK(uniform_frob_exp(unitary) == 1u);
    CHECK(uniform_frob_exp(composite({unitary, unitary})) == 2u);
    CHECK(uniform_frob_exp(bm) == std::nullopt);
    CHECK(uniform_frob_exp(block_map({0, 1}, {standard_endo(2), standard_endo(2)})) == 2u);
    CHECK(thrown_code([&] { block_map({0, 0}, {standard_endo(1), standard_endo(1)}); }) ==
          Errc::BadInput);
}

TEST_CASE("fixed points of the standard frobenius on sl2") {
    auto f3 = gf::make_field(3, 1);
    auto f9 = gf::make_field(3, 2);
    rep::MatGroup big = grp::sl_group(f9, 2);
    FixedPointGroup fp = fixed_points(big, standard_endo(1));
    CHECK(fp.group.element_set->size() == grp::sl_order(3, 2)); // 24

    // the fixed set is exactly SL2(3) embedded entrywise
    rep::MatGroup small = grp::sl_group(f3, 2);
    std::vector<Mat> embedded;
    for (const Mat& m : rep::ensure_elements(small)) embedded.push_back(sat::embed_matrix(m, f9));
    CHECK(encodings(embedded) == encodings(*fp.group.element_set));

    // exponent k is the identity on GF(p^k)
    FixedPointGroup all = fixed_points(big, standard_endo(2));
    CHECK(all.group.element_set->size() == grp::sl_order(9, 2)); // 720
}

TEST_CASE("unitary twist cuts out the special unitary group") {
    auto f4 = gf::make_field(2, 2);
    Mat j = grp::antidiag_ones(f4, 3);
    Endo sigma = composite({transpose_inverse_conj(j), standard_endo(1)});

    rep::MatGroup sl3 = grp::sl_group(f4, 3);
    FixedPointGroup su = fixed_points(sl3, sigma);
    CHECK(su.group.element_set->size() == grp::su3_order(2)); // 216

    // independent description: g preserves the hermitian form with gram j
    std::vector<Mat> form_preservers;
    for (const Mat& g : *sl3.element_set) {
        Mat conj = g;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) conj.at(a, b) = conj.at(a, b).frobenius_power(1);
        if (conj.transpose() * j * g == j) form_preservers.push_back(g);
    }
    CHECK(encodings(form_preservers) == encodings(*su.group.element_set));
}

TEST_CASE("product group twists") {
    auto f4 = gf::make_field(2, 2);
    auto f2 = gf::make_field(2, 1);
    rep::MatGroup pair = grp::product_group(grp::sl_group(f4, 2), grp::sl_group(f4, 2));
    CHECK(rep::ensure_elements(pair).size() == 3600);

    rep::MatGroup sl2_2 = grp::sl_group(f2, 2);
    std::set<std::string> small; // SL2(2) embedded in GF(4)
    for (const Mat& m : rep::ensure_elements(sl2_2)) small.insert(sat::embed_matrix(m, f4).encode());

    // swap composed with twisting one factor: diagonal subfield copy
    Endo swap_tw = block_map({1, 0}, {standard_endo(1), standard_endo(0)});
    FixedPointGroup diag = fixed_points(pair, swap_tw);
    CHECK(diag.group.element_set->size() == grp::sl_order(2, 2)); // 6
    for (const Mat& m : *diag.group.element_set) {
        Mat a = m.submatrix(0, 0, 2, 2), b = m.submatrix(2, 2, 2, 2);
        CHECK(a == b);
        CHECK(small.count(a.encode()));
    }
    // its square is the plain Frobenius on both factors
    Endo square = composite({swap_tw, swap_tw});
    FixedPointGroup both = fixed_points(pair, square);
    CHECK(both.group.element_set->size() == 36);

    // independent powers on the two factors
    Endo mixed = block_map({0, 1}, {standard_endo(1), standard_endo(2)});
    FixedPointGroup fp = fixed_points(pair, mixed);
    CHECK(fp.group.element_set->size() == grp::sl_order(2, 2) * grp::sl_order(4, 2)); // 6 * 60
    for (const Mat& m : *fp.group.element_set) CHECK(small.count(m.submatrix(0, 0, 2, 2).encode()));
}

TEST_CASE("frobenius and t-powers commute with a scalar twist") {
    auto f25 = gf::make_field(5, 2);
    auto f9 = gf::make_field(3, 2);

    // (1 1; 0 1)^t maps to (1 t^5; 0 1) either way
    El t = El::gen(f25);
    sat::Unipotent u = sat::make_unipotent(grp::transvection(f25, 2, 0, 1, El::one(f25)));
    Mat lhs = apply(standard_endo(1), sat::t_power(u, t).u);
    CHECK(lhs == grp::transvection(f25, 2, 0, 1, t.pow(5)));
    CHECK(lhs == sat::t_power(u, t.frobenius_power(1)).u);

    CHECK(check_frobsat(standard_endo(1), f25, 2, 20));
    CHECK(check_frobsat(standard_endo(1), f9, 3, 20));
    CHECK(check_frobsat(composite({transpose_inverse_conj(grp::antidiag_ones(f9, 3)),
                                   standard_endo(1)}),
                        f9, 3, 20));
    CHECK(check_frobsat(block_map({1, 0}, {standard_endo(1), standard_endo(1)}), f25, 4, 20));
    CHECK(thrown_code([&] {
              check_frobsat(block_map({0, 1}, {standard_endo(1), standard_endo(2)}), f25, 4, 5);
          }) == Errc::BadInput);
    CHECK(thrown_code([&] { check_frobsat(standard_endo(1), f25, 6, 5); }) == Errc::BadInput);
}

TEST_CASE("saturation closures are stable under frobenius maps") {
    auto f2 = gf::make_field(2, 1);
    auto f4 = gf::make_field(2, 2);

    rep::MatGroup start = grp::sl_group(f2, 2);
    CHECK(sigma_stability_of_closure(start, standard_endo(1), f4));

    rep::MatGroup ad = grp::ad_sl2_char2_group(f4);
    CHECK(sigma_stability_of_closure(ad, standard_endo(1), f4));
    // conjugation by an element of the closure is inner, hence stable
    CHECK(sigma_stability_of_closure(ad, conj_endo(ad.gens[0]), f4));
}

TEST_CASE("fixed subgroups of inner twists inherit saturation") {
    auto f9 = gf::make_field(3, 2);
    rep::MatGroup big = grp::sl_group(f9, 2);
    rep::ensure_elements(big);
    CHECK(sat::is_f_saturated(big, f9));

    // centralizer of a unipotent: +-(1 t; 0 1), saturated
    FixedPointGroup cu = fixed_points(big, conj_endo(grp::transvection(f9, 2, 0, 1, El::one(f9))));
    CHECK(cu.group.element_set->size() == 18);
    CHECK(sat::is_f_saturated(cu.group, f9));

    // centralizer of a regular semisimple element: the diagonal torus
    Mat d(f9, 2, 2);
    d.at(0, 0) = El::gen(f9);
    d.at(1, 1) = El::gen(f9).inverse();
    FixedPointGroup ct = fixed_points(big, conj_endo(d));
    CHECK(ct.group.element_set->size() == 8);
    CHECK(sat::is_f_saturated(ct.group, f9));

    // a frobenius (not an automorphism of the ambient variety) does not
    FixedPointGroup frob = fixed_points(big, standard_endo(1));
    CHECK(!sat::is_f_saturated(frob.group, f9));
}

TEST_CASE("saturating fixed points and refixing recovers them") {
    auto f9 = gf::make_field(3, 2);
    Endo sigma = standard_endo(1);
    rep::MatGroup big = grp::sl_group(f9, 2);
    FixedPointGroup fp = fixed_points(big, sigma);

    rep::MatGroup closed = sat::f_saturated_closure(fp.group, f9);
    CHECK(closed.element_set->size() == grp::sl_order(9, 2)); // back to all of SL2(9)
    FixedPointGroup again = fixed_points(closed, sigma);
    CHECK(encodings(*again.group.element_set) == encodings(*fp.group.element_set));
}

TEST_CASE("unit transvections reach every extension transvection") {
    CHECK(nori_closure_check(gf::make_field(3, 1), gf::make_field(3, 2)));
    CHECK(nori_closure_check(gf::make_field(2, 1), gf::make_field(2, 2)));
    CHECK(thrown_code([&] {
              nori_closure_check(gf::make_field(2, 2), gf::make_field(2, 2));
          }) == Errc::FieldMismatch);
}
