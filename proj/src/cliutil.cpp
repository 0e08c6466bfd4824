#include "satcr/cliutil.hpp"

#include <cstdlib>
#include <fstream>

#include "satcr/error.hpp"
#include "satcr/groups.hpp"

namespace satcr::cli {

namespace {

uint64_t parse_uint(const std::string& s, const std::string& what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        fail(Errc::ParseError, what + ": expected an unsigned integer, got '" + s + "'");
    return std::stoull(s);
}

} // namespace

gf::FieldPtr parse_field_spec(const std::string& s) {
    size_t colon = s.find(':');
    if (colon == std::string::npos)
        fail(Errc::ParseError, "field spec must look like p:k, got '" + s + "'");
    uint64_t p = parse_uint(s.substr(0, colon), "field characteristic");
    uint64_t k = parse_uint(s.substr(colon + 1), "field degree");
    return gf::make_field(uint32_t(p), uint32_t(k));
}

frob::Endo parse_endo_spec(const std::string& s, const gf::FieldPtr& f, int n) {
    size_t colon = s.find(':');
    std::string name = s.substr(0, colon == std::string::npos ? s.size() : colon);
    std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
    if (name == "standard") {
        if (arg.rfind("e=", 0) != 0)
            fail(Errc::ParseError, "standard endo wants e=<exponent>, got '" + arg + "'");
        return frob::standard_endo(uint32_t(parse_uint(arg.substr(2), "frobenius exponent")));
    }
    if (name == "tw_unitary") {
        if (arg.rfind("q=", 0) != 0)
            fail(Errc::ParseError, "tw_unitary endo wants q=<power of p>, got '" + arg + "'");
        uint64_t q = parse_uint(arg.substr(2), "twist size");
        uint32_t e = 0;
        for (uint64_t pw = 1; pw < q; ++e) {
            pw *= f->p();
            if (pw == q) {
                ++e;
                break;
            }
            if (pw > q) break;
        }
        uint64_t check = 1;
        for (uint32_t i = 0; i < e; ++i) check *= f->p();
        if (e == 0 || check != q)
            fail(Errc::BadInput, "tw_unitary: q = " + std::to_string(q) +
                                     " is not a positive power of p = " + std::to_string(f->p()));
        return frob::composite(
            {frob::transpose_inverse_conj(grp::antidiag_ones(f, n)), frob::standard_endo(e)});
    }
    fail(Errc::ParseError, "unknown endomorphism '" + name + "' (try standard:e=1, tw_unitary:q=2)");
}

rep::MatGroup load_group(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::BadInput, "cannot open '" + path + "'");
    std::vector<gf::Mat> ms = gf::read_matrices(in);
    if (ms.empty()) fail(Errc::BadInput, "no matrices in '" + path + "'");
    gf::FieldPtr f = ms[0].field();
    int n = ms[0].rows();
    return rep::make_group(f, n, std::move(ms));
}

rep::MatGroup demo_group(const std::string& name) {
    if (name == "ex4_4") {
        auto f9 = gf::make_field(3, 2);
        std::vector<gf::Mat> gens;
        for (const gf::Mat& g : grp::sln_gens(f9, 2))
            gens.push_back(gf::Mat::kronecker(gf::Mat::kronecker(g, g), g));
        return rep::make_group(f9, 8, std::move(gens));
    }
    fail(Errc::UnknownType, "unknown demo '" + name + "'");
}

size_t default_cap() {
    const char* env = std::getenv("SATCR_CAP");
    if (!env || !*env) return size_t(1) << 20;
    uint64_t v = parse_uint(env, "SATCR_CAP");
    if (v == 0) fail(Errc::BadInput, "SATCR_CAP must be positive");
    return size_t(v);
}

json field_json(const gf::FieldPtr& f) {
    json j;
    j["p"] = f->p();
    j["k"] = f->k();
    return j;
}

json mat_json(const gf::Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

json mats_json(const std::vector<gf::Mat>& ms) {
    json arr = json::array();
    for (const gf::Mat& m : ms) arr.push_back(mat_json(m));
    return arr;
}

} // namespace satcr::cli
