#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "satcr/cliutil.hpp"
#include "satcr/groups.hpp"

using namespace satcr;
using cli::json;

namespace {

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

TEST_CASE("field specs parse as p:k") {
    auto f4 = cli::parse_field_spec("2:2");
    CHECK(f4->p() == 2);
    CHECK(f4->k() == 2);
    CHECK(cli::parse_field_spec("7:1")->size() == 7);
    CHECK(cli::parse_field_spec("3:4")->size() == 81);

    CHECK(thrown_code([] { cli::parse_field_spec("x"); }) == Errc::ParseError);
    CHECK(thrown_code([] { cli::parse_field_spec("2:two"); }) == Errc::ParseError);
    CHECK(thrown_code([] { cli::parse_field_spec("4:1"); }) == Errc::NonPrime);
    CHECK(thrown_code([] { cli::parse_field_spec("2:0"); }) == Errc::BadInput);
}

TEST_CASE("endomorphism specs parse to the right maps") {
    auto f4 = gf::make_field(2, 2);

    auto std2 = cli::parse_endo_spec("standard:e=2", f4, 2);
    CHECK(std2.kind == frob::Endo::Kind::Standard);
    CHECK(std2.frob_exp == 2);

    // unitary twist over GF(4): entrywise squaring composed with the
    // antidiagonal transpose-inverse twist
    auto tw = cli::parse_endo_spec("tw_unitary:q=2", f4, 3);
    CHECK(frob::uniform_frob_exp(tw) == uint32_t(1));
    auto manual = frob::composite(
        {frob::transpose_inverse_conj(grp::antidiag_ones(f4, 3)), frob::standard_endo(1)});
    auto g = grp::transvection(f4, 3, 0, 1, gf::El::gen(f4));
    CHECK(frob::apply(tw, g) == frob::apply(manual, g));

    CHECK(cli::parse_endo_spec("tw_unitary:q=4", f4, 2).parts[1].frob_exp == 2);

    CHECK(thrown_code([&] { cli::parse_endo_spec("tw_unitary:q=3", f4, 2); }) == Errc::BadInput);
    CHECK(thrown_code([&] { cli::parse_endo_spec("tw_unitary:q=0", f4, 2); }) == Errc::BadInput);
    CHECK(thrown_code([&] { cli::parse_endo_spec("standard:q=1", f4, 2); }) == Errc::ParseError);
    CHECK(thrown_code([&] { cli::parse_endo_spec("bogus:e=1", f4, 2); }) == Errc::ParseError);
}

TEST_CASE("matrix files round-trip and load as groups") {
    auto f4 = gf::make_field(2, 2);
    std::vector<gf::Mat> ms = grp::sln_gens(f4, 2);

    std::stringstream ss;
    gf::write_matrices(ss, ms);
    auto back = gf::read_matrices(ss);
    REQUIRE(back.size() == ms.size());
    for (size_t i = 0; i < ms.size(); ++i) CHECK(back[i] == ms[i]);

    const char* path = "/tmp/satcr_test_cli_io_group.mat";
    {
        std::ofstream out(path);
        gf::write_matrices(out, ms);
    }
    auto g = cli::load_group(path);
    CHECK(g.dim == 2);
    CHECK(g.field == f4);
    CHECK(g.gens.size() == ms.size());
    std::remove(path);

    CHECK(thrown_code([] { cli::load_group("/tmp/satcr_no_such_file.mat"); }) == Errc::BadInput);
}

TEST_CASE("the embedded demo group is the eight-dimensional cube module") {
    auto g = cli::demo_group("ex4_4");
    CHECK(g.dim == 8);
    CHECK(g.field->p() == 3);
    CHECK(g.field->k() == 2);
    CHECK(!g.gens.empty());
    // each generator is a Kronecker cube, so has determinant-one blocks and
    // fixes e1 (x) e1 (x) e1 up to the cube of the (0,0) entry of the factor
    CHECK(thrown_code([] { cli::demo_group("nope"); }) == Errc::UnknownType);
}

TEST_CASE("the enumeration cap comes from the environment when set") {
    unsetenv("SATCR_CAP");
    CHECK(cli::default_cap() == size_t(1) << 20);
    setenv("SATCR_CAP", "12345", 1);
    CHECK(cli::default_cap() == 12345);
    setenv("SATCR_CAP", "abc", 1);
    CHECK(thrown_code([] { cli::default_cap(); }) == Errc::ParseError);
    setenv("SATCR_CAP", "0", 1);
    CHECK(thrown_code([] { cli::default_cap(); }) == Errc::BadInput);
    unsetenv("SATCR_CAP");
}

TEST_CASE("json emission is ordered and deterministic") {
    auto f9 = gf::make_field(3, 2);
    json a = cli::field_json(f9);
    CHECK(a.dump() == "{\"p\":3,\"k\":2}"); // insertion order, not alphabetical

    auto m = grp::transvection(f9, 2, 0, 1, gf::El::gen(f9));
    json r1 = cli::mat_json(m);
    json r2 = cli::mat_json(m);
    CHECK(r1.dump(2) == r2.dump(2));
    CHECK(r1[0][1] == "0:1");

    json ms = cli::mats_json({m, m.inverse()});
    CHECK(ms.size() == 2);
    CHECK(ms[1][0][1] == "0:2");
}
