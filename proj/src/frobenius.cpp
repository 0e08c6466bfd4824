#include "satcr/frobenius.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "satcr/groups.hpp"

namespace satcr::frob {

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

gf::Mat entrywise_frob(const gf::Mat& g, uint32_t i) {
    gf::Mat r = g;
    for (int a = 0; a < r.rows(); ++a)
        for (int b = 0; b < r.cols(); ++b) r.at(a, b) = r.at(a, b).frobenius_power(i);
    return r;
}

void check_conj_shape(const Endo& e, const gf::Mat& g) {
    if (g.rows() != g.cols() || g.rows() != e.mat.rows())
        fail(Errc::ShapeMismatch, "endomorphism and matrix dimensions differ");
}

} // namespace

Endo standard_endo(uint32_t frob_exp) {
    Endo e;
    e.kind = Endo::Kind::Standard;
    e.frob_exp = frob_exp;
    return e;
}

Endo conj_endo(const gf::Mat& a) {
    if (a.rows() != a.cols()) fail(Errc::ShapeMismatch, "conj_endo: need a square matrix");
    Endo e;
    e.kind = Endo::Kind::Conj;
    e.mat = a;
    e.mat_inv = a.inverse();
    return e;
}

Endo transpose_inverse_conj(const gf::Mat& a) {
    Endo e = conj_endo(a);
    e.kind = Endo::Kind::TransposeInverseConj;
    return e;
}

Endo block_map(std::vector<int> perm, std::vector<Endo> parts) {
    if (parts.empty() || perm.size() != parts.size())
        fail(Errc::BadInput, "block_map: need one permutation slot per part");
    std::vector<char> seen(perm.size(), 0);
    for (int i : perm) {
        if (i < 0 || size_t(i) >= perm.size() || seen[size_t(i)])
            fail(Errc::BadInput, "block_map: not a permutation");
        seen[size_t(i)] = 1;
    }
    Endo e;
    e.kind = Endo::Kind::BlockMap;
    e.parts = std::move(parts);
    e.perm = std::move(perm);
    return e;
}

Endo composite(std::vector<Endo> steps) {
    if (steps.empty()) fail(Errc::BadInput, "composite: no steps");
    Endo e;
    e.kind = Endo::Kind::Composite;
    e.parts = std::move(steps);
    return e;
}

gf::Mat apply(const Endo& e, const gf::Mat& g) {
    switch (e.kind) {
    case Endo::Kind::Standard:
        return entrywise_frob(g, e.frob_exp);
    case Endo::Kind::Conj:
        check_conj_shape(e, g);
        return e.mat * g * e.mat_inv;
    case Endo::Kind::TransposeInverseConj:
        check_conj_shape(e, g);
        return e.mat * g.transpose().inverse() * e.mat_inv;
    case Endo::Kind::BlockMap: {
        int r = int(e.parts.size());
        if (g.rows() != g.cols() || g.rows() % r)
            fail(Errc::ShapeMismatch, "block map: dimension not divisible into blocks");
        int b = g.rows() / r;
        for (int i = 0; i < g.rows(); ++i)
            for (int j = 0; j < g.cols(); ++j)
                if (i / b != j / b && !g.at(i, j).is_zero())
                    fail(Errc::BadInput, "block map: matrix is not block-diagonal");
        std::vector<gf::Mat> out;
        out.reserve(size_t(r));
        for (int i = 0; i < r; ++i) {
            int src = e.perm[size_t(i)];
            out.push_back(apply(e.parts[size_t(src)], g.submatrix(src * b, src * b, b, b)));
        }
        return gf::Mat::block_diag(out);
    }
    case Endo::Kind::Composite: {
        gf::Mat cur = g;
        for (const Endo& s : e.parts) cur = apply(s, cur);
        return cur;
    }
    }
    fail(Errc::BadInput, "apply: unknown endomorphism kind");
}

std::optional<uint32_t> uniform_frob_exp(const Endo& e) {
    switch (e.kind) {
    case Endo::Kind::Standard:
        return e.frob_exp;
    case Endo::Kind::Conj:
    case Endo::Kind::TransposeInverseConj:
        return 0u;
    case Endo::Kind::Composite: {
        uint32_t total = 0;
        for (const Endo& s : e.parts) {
            auto u = uniform_frob_exp(s);
            if (!u) return std::nullopt;
            total += *u;
        }
        return total;
    }
    case Endo::Kind::BlockMap: {
        std::optional<uint32_t> common;
        for (const Endo& s : e.parts) {
            auto u = uniform_frob_exp(s);
            if (!u) return std::nullopt;
            if (!common)
                common = u;
            else if (*common != *u)
                return std::nullopt;
        }
        return common;
    }
    }
    return std::nullopt;
}

FixedPointGroup fixed_points(rep::MatGroup& g, const Endo& e, size_t cap) {
    const std::vector<gf::Mat>& els = rep::ensure_elements(g, cap);
    std::vector<gf::Mat> fixed;
    for (const gf::Mat& m : els)
        if (apply(e, m) == m) fixed.push_back(m);
    std::sort(fixed.begin(), fixed.end(),
              [](const gf::Mat& a, const gf::Mat& b) { return a.encode() < b.encode(); });
    std::set<std::string> member;
    for (const gf::Mat& m : fixed) member.insert(m.encode());
    for (const gf::Mat& a : fixed)
        for (const gf::Mat& b : fixed)
            if (!member.count((a * b).encode()))
                fail(Errc::BadInput, "fixed_points: fixed set not closed under products");
    rep::MatGroup out;
    out.field = g.field;
    out.dim = g.dim;
    out.gens = fixed;
    out.element_set = fixed;
    return FixedPointGroup{std::move(out), e};
}

bool check_frobsat(const Endo& e, const gf::FieldPtr& f, int n, int samples, uint64_t seed) {
    auto qexp = uniform_frob_exp(e);
    if (!qexp) fail(Errc::BadInput, "check_frobsat: endomorphism has no uniform field twist");
    if (n > int(f->p())) fail(Errc::BadInput, "check_frobsat: need n <= p");
    int blocks = e.kind == Endo::Kind::BlockMap ? int(e.parts.size()) : 1;
    if (n % blocks) fail(Errc::ShapeMismatch, "check_frobsat: dimension not divisible into blocks");
    int b = n / blocks;
    Rng rng{seed};
    for (int it = 0; it < samples; ++it) {
        gf::Mat u = gf::Mat::identity(f, n);
        for (int m = 0; m < blocks; ++m)
            for (int i = 0; i < b; ++i)
                for (int j = i + 1; j < b; ++j)
                    u.at(m * b + i, m * b + j) = gf::El::at_index(f, rng.below(f->size()));
        sat::Unipotent uu = sat::make_unipotent(u);
        gf::El t = gf::El::at_index(f, rng.below(f->size()));
        gf::Mat lhs = apply(e, sat::t_power(uu, t).u);
        gf::Mat rhs = sat::t_power(sat::make_unipotent(apply(e, u)), t.frobenius_power(*qexp)).u;
        if (lhs != rhs) return false;
    }
    return true;
}

bool sigma_stability_of_closure(const rep::MatGroup& g, const Endo& e,
                                const gf::FieldPtr& t_field, size_t cap) {
    rep::MatGroup closed = sat::f_saturated_closure(g, t_field, cap);
    std::set<std::string> member;
    for (const gf::Mat& m : *closed.element_set) member.insert(m.encode());
    for (const gf::Mat& m : *closed.element_set)
        if (!member.count(apply(e, m).encode())) return false;
    return true;
}

bool nori_closure_check(const gf::FieldPtr& base, const gf::FieldPtr& ext, size_t cap) {
    if (base->k() != 1 || ext->p() != base->p())
        fail(Errc::FieldMismatch, "nori_closure_check: base must be prime inside ext");
    rep::MatGroup start = grp::sl_group(base, 2);
    rep::MatGroup closed = sat::f_saturated_closure(start, ext, cap);
    std::set<std::string> member;
    for (const gf::Mat& m : *closed.element_set) member.insert(m.encode());
    gf::El one = gf::El::one(base);
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 0}}) {
        sat::Unipotent unit =
            sat::make_unipotent(sat::embed_matrix(grp::transvection(base, 2, i, j, one), ext));
        for (const gf::El& t : gf::all_elements(ext)) {
            gf::Mat want = grp::transvection(ext, 2, i, j, t);
            if (sat::t_power(unit, t).u != want) return false;
            if (!member.count(want.encode())) return false;
        }
    }
    return true;
}

} // namespace satcr::frob
