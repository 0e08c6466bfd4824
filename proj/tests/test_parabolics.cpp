#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <vector>

#include "satcr/groups.hpp"
#include "satcr/parabolics.hpp"
#include "satcr/satur.hpp"

using namespace satcr;
using namespace satcr::par;
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

El rand_el(Rng& rng, const FieldPtr& f) { return El::at_index(f, rng.below(f->size())); }

Mat rand_invertible(Rng& rng, const FieldPtr& f, int n) {
    for (;;) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = rand_el(rng, f);
        if (m.rank() == n) return m;
    }
}

// invertible with zero entries below the 2+1 block split
Mat rand_block_upper(Rng& rng, const FieldPtr& f, int n, int split) {
    for (;;) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i < split || j >= split) m.at(i, j) = rand_el(rng, f);
        if (m.rank() == n) return m;
    }
}

bool is_upper_triangular(const Mat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

rep::Submodule span_rows(const FieldPtr& f, const std::vector<std::vector<long long>>& rows) {
    return rep::Submodule{gf::row_basis(Mat::from_rows(f, rows))};
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

} // namespace

TEST_CASE("parabolic membership follows the weight signs") {
    Rng rng{20260814};
    auto f5 = gf::make_field(5, 1);
    auto f4 = gf::make_field(2, 2);

    Cocharacter triv = trivial_cocharacter(f5, 3);
    for (int it = 0; it < 10; ++it) CHECK(in_p_lambda(rand_invertible(rng, f5, 3), triv));

    Cocharacter borel = make_cocharacter({1, 0}, Mat::identity(f5, 2));
    CHECK(in_p_lambda(grp::transvection(f5, 2, 0, 1, El::one(f5)), borel));
    CHECK(!in_p_lambda(grp::transvection(f5, 2, 1, 0, El::one(f5)), borel));

    Cocharacter p21 = make_cocharacter({1, 1, 0}, Mat::identity(f4, 3));
    for (int it = 0; it < 10; ++it) {
        Mat g = rand_block_upper(rng, f4, 3, 2);
        CHECK(in_p_lambda(g, p21));
    }
    CHECK(!in_p_lambda(grp::transvection(f4, 3, 2, 0, El::gen(f4)), p21));
    CHECK(!in_p_lambda(grp::transvection(f4, 3, 2, 1, El::gen(f4)), p21));

    // membership is read through the basis-change column frame
    Mat c = rand_invertible(rng, f4, 3);
    Cocharacter moved = make_cocharacter({1, 1, 0}, c);
    Mat inside = c * rand_block_upper(rng, f4, 3, 2) * c.inverse();
    CHECK(in_p_lambda(inside, moved));
    CHECK(!in_p_lambda(c * grp::transvection(f4, 3, 2, 0, El::gen(f4)) * c.inverse(), moved));
}

TEST_CASE("the limit map projects onto the levi") {
    Rng rng{7};
    auto f4 = gf::make_field(2, 2);
    Cocharacter p21 = make_cocharacter({1, 1, 0}, Mat::identity(f4, 3));

    for (int it = 0; it < 10; ++it) {
        Mat g = rand_block_upper(rng, f4, 3, 2);
        Mat lim = c_lambda(g, p21);
        Mat expect = g;
        expect.at(0, 2) = El::zero(f4);
        expect.at(1, 2) = El::zero(f4);
        CHECK(lim == expect);
        CHECK(c_lambda(lim, p21) == lim); // idempotent, fixes the block diagonal
        Mat h = rand_block_upper(rng, f4, 3, 2);
        CHECK(c_lambda(g * h, p21) == c_lambda(g, p21) * c_lambda(h, p21));
    }

    // the unipotent radical is the kernel
    Mat u = Mat::identity(f4, 3);
    u.at(0, 2) = El::gen(f4);
    u.at(1, 2) = El::one(f4);
    CHECK(c_lambda(u, p21) == Mat::identity(f4, 3));

    CHECK(thrown_code([&] { c_lambda(grp::transvection(f4, 3, 2, 0, El::one(f4)), p21); }) ==
          Errc::NotInParabolic);

    // conjugating the frame conjugates the limit
    Mat c = rand_invertible(rng, f4, 3);
    Cocharacter moved = make_cocharacter({1, 1, 0}, c);
    Mat g = rand_block_upper(rng, f4, 3, 2);
    CHECK(c_lambda(c * g * c.inverse(), moved) == c * c_lambda(g, p21) * c.inverse());
}

TEST_CASE("flags induce adapted cocharacters") {
    auto f2 = gf::make_field(2, 1);
    auto f4 = gf::make_field(2, 2);

    Cocharacter none = flag_to_cocharacter({}, f4, 3);
    CHECK(none.exponents == std::vector<int>{0, 0, 0});
    CHECK(none.basis == Mat::identity(f4, 3));

    Cocharacter line = flag_to_cocharacter({span_rows(f2, {{1, 0}})}, f2, 2);
    CHECK(line.exponents == std::vector<int>{1, 0});
    CHECK(line.basis == Mat::identity(f2, 2));

    // uniserial module of a regular unipotent: the full flag drops out
    Mat j = Mat::identity(f2, 3);
    j.at(0, 1) = El::one(f2);
    j.at(1, 2) = El::one(f2);
    rep::MatGroup jordan = rep::make_group(f2, 3, {j});
    std::vector<rep::Submodule> chain = composition_chain(jordan);
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].basis == Mat::from_rows(f2, {{1, 0, 0}}));
    CHECK(chain[1].basis == Mat::from_rows(f2, {{1, 0, 0}, {0, 1, 0}}));
    Cocharacter full = flag_to_cocharacter(chain, f2, 3);
    CHECK(full.exponents == std::vector<int>{2, 1, 0});
    CHECK(full.basis == Mat::identity(f2, 3));

    // the stabilizer of the standard full flag is the upper triangulars
    Rng rng{11};
    Cocharacter flag3 =
        flag_to_cocharacter({span_rows(f4, {{1, 0, 0}}), span_rows(f4, {{1, 0, 0}, {0, 1, 0}})},
                            f4, 3);
    int uppers = 0;
    for (int it = 0; it < 40; ++it) {
        Mat g = it % 2 ? rand_invertible(rng, f4, 3)
                       : rand_block_upper(rng, f4, 3, 1); // not necessarily triangular
        if (it % 3 == 0) g = grp::transvection(f4, 3, 0, 1, rand_el(rng, f4));
        bool upper = is_upper_triangular(g);
        uppers += upper;
        CHECK(in_p_lambda(g, flag3) == upper);
    }
    CHECK(uppers > 0);

    CHECK(thrown_code([&] {
              flag_to_cocharacter({span_rows(f2, {{1, 0, 0}}), span_rows(f2, {{0, 1, 0}, {0, 0, 1}})},
                                  f2, 3);
          }) == Errc::BadInput);
    CHECK(thrown_code([&] {
              flag_to_cocharacter({span_rows(f2, {{1, 0, 0}, {0, 1, 0}}), span_rows(f2, {{1, 0, 0}})},
                                  f2, 3);
          }) == Errc::BadInput);
}

TEST_CASE("semisimplification through a composition series") {
    auto f2 = gf::make_field(2, 1);
    auto f3 = gf::make_field(3, 1);
    auto f4 = gf::make_field(2, 2);

    // irreducible input is returned unchanged with the trivial cocharacter
    rep::MatGroup nat = grp::sl_group(f4, 2);
    Semisimplification same = semisimplify(nat);
    CHECK(same.lambda.exponents == std::vector<int>{0, 0});
    REQUIRE(same.group.gens.size() == nat.gens.size());
    for (size_t i = 0; i < nat.gens.size(); ++i) CHECK(same.group.gens[i] == nat.gens[i]);

    // a unipotent cyclic group dies
    rep::MatGroup uni = rep::make_group(f2, 2, {grp::transvection(f2, 2, 0, 1, El::one(f2))});
    Semisimplification dead = semisimplify(uni);
    CHECK(dead.lambda.exponents == std::vector<int>{1, 0});
    CHECK(rep::ensure_elements(dead.group).size() == 1);

    // the adjoint image of SL2 over GF(4): scalars split off as a block
    rep::MatGroup ad = grp::ad_sl2_char2_group(f4);
    CHECK(!rep::is_semisimple(ad).semisimple);
    Semisimplification ss = semisimplify(ad);
    CHECK(rep::is_semisimple(ss.group).semisimple);
    REQUIRE(ss.group.gens.size() == ad.gens.size());
    for (size_t i = 0; i < ad.gens.size(); ++i) {
        Mat expect = ad.gens[i];
        expect.at(2, 0) = El::zero(f4);
        expect.at(2, 1) = El::zero(f4);
        CHECK(ss.group.gens[i] == expect);
    }
    CHECK(rep::ensure_elements(ss.group).size() == 60);

    // permutation module of S3 over GF(3) is not semisimple; its projection is
    Mat swap01 = Mat::from_rows(f3, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    Mat cyc = Mat::from_rows(f3, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
    rep::MatGroup s3 = rep::make_group(f3, 3, {swap01, cyc});
    CHECK(!rep::is_semisimple(s3).semisimple);
    Semisimplification pss = semisimplify(s3);
    CHECK(rep::is_semisimple(pss.group).semisimple);
    CHECK(pss.lambda.exponents != std::vector<int>{0, 0, 0});
}

TEST_CASE("t-powers pass through the limit map") {
    Rng rng{31};
    auto f4 = gf::make_field(2, 2);
    auto f9 = gf::make_field(3, 2);

    for (const FieldPtr& f : {f4, f9}) {
        Cocharacter p21 = make_cocharacter({1, 1, 0}, Mat::identity(f, 3));
        for (int it = 0; it < 10; ++it) {
            Mat m = Mat::identity(f, 3);
            m.at(0, 1) = rand_el(rng, f);
            m.at(0, 2) = rand_el(rng, f);
            sat::Unipotent u = sat::make_unipotent(m);
            REQUIRE(in_p_lambda(m, p21));
            El t = rand_el(rng, f);
            CHECK(c_lambda(sat::t_power(u, t).u, p21) ==
                  sat::t_power(sat::make_unipotent(c_lambda(m, p21)), t).u);
        }
    }

    // the worked 3x3 example: limits keep the top block of the twisted action
    El z = El::gen(f4);
    Cocharacter lscal = make_cocharacter({0, 0, 1}, Mat::identity(f4, 3));
    Mat u = grp::ad_sl2_char2(grp::transvection(f4, 2, 0, 1, z));
    REQUIRE(in_p_lambda(u, lscal));
    Mat levi = c_lambda(u, lscal);
    Mat expect = Mat::identity(f4, 3);
    expect.at(0, 1) = z * z;
    CHECK(levi == expect);
    for (const El& t : gf::all_elements(f4))
        CHECK(c_lambda(sat::t_power(sat::make_unipotent(u), t).u, lscal) ==
              sat::t_power(sat::make_unipotent(levi), t).u);
}

TEST_CASE("saturation commutes with the limit projection") {
    auto f2 = gf::make_field(2, 1);
    auto f4 = gf::make_field(2, 2);

    rep::MatGroup nat = grp::sl_group(f4, 2);
    CHECK(check_semisat_commutation(nat, trivial_cocharacter(f4, 2), f4));

    rep::MatGroup uni = rep::make_group(f4, 2, {grp::transvection(f4, 2, 0, 1, El::one(f4))});
    CHECK(check_semisat_commutation(uni, make_cocharacter({1, 0}, Mat::identity(f4, 2)), f4));

    rep::MatGroup ad = grp::ad_sl2_char2_group(f4);
    CHECK(check_semisat_commutation(ad, make_cocharacter({0, 0, 1}, Mat::identity(f4, 3)), f4));

    // prime-field group saturated over an extension
    rep::MatGroup uni2 = rep::make_group(f2, 2, {grp::transvection(f2, 2, 0, 1, El::one(f2))});
    CHECK(check_semisat_commutation(uni2, make_cocharacter({1, 0}, Mat::identity(f2, 2)), f4));
}
