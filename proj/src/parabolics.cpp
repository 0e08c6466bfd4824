#include "satcr/parabolics.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "satcr/satur.hpp"

namespace satcr::par {

namespace {

gf::Mat vstack(const gf::Mat& a, const gf::Mat& b) {
    gf::Mat r(a.field(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

void check_dims(const gf::Mat& g, const Cocharacter& l, const char* who) {
    if (g.field() != l.basis.field()) fail(Errc::FieldMismatch, std::string(who) + ": field differs");
    if (g.rows() != l.dim() || g.cols() != l.dim())
        fail(Errc::ShapeMismatch, std::string(who) + ": matrix does not match the cocharacter");
}

} // namespace

Cocharacter make_cocharacter(std::vector<int> exponents, const gf::Mat& basis) {
    if (basis.rows() != basis.cols() || size_t(basis.rows()) != exponents.size())
        fail(Errc::ShapeMismatch, "make_cocharacter: basis must be square with one column per exponent");
    gf::Mat inv = basis.inverse(); // throws Singular on degenerate input
    return Cocharacter{std::move(exponents), basis, std::move(inv)};
}

Cocharacter trivial_cocharacter(const gf::FieldPtr& f, int n) {
    return make_cocharacter(std::vector<int>(size_t(n), 0), gf::Mat::identity(f, n));
}

bool in_p_lambda(const gf::Mat& g, const Cocharacter& l) {
    check_dims(g, l, "in_p_lambda");
    gf::Mat m = l.basis_inv * g * l.basis;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (l.exponents[size_t(i)] < l.exponents[size_t(j)] && !m.at(i, j).is_zero())
                return false;
    return true;
}

gf::Mat c_lambda(const gf::Mat& g, const Cocharacter& l) {
    check_dims(g, l, "c_lambda");
    gf::Mat m = l.basis_inv * g * l.basis;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (l.exponents[size_t(i)] < l.exponents[size_t(j)] && !m.at(i, j).is_zero())
                fail(Errc::NotInParabolic, "c_lambda: negative-weight entry is nonzero");
            if (l.exponents[size_t(i)] > l.exponents[size_t(j)]) m.at(i, j) = gf::El::zero(g.field());
        }
    return l.basis * m * l.basis_inv;
}

Cocharacter flag_to_cocharacter(const std::vector<rep::Submodule>& chain, const gf::FieldPtr& f,
                                int n) {
    // validate: strictly increasing, nested, right ambient dimension
    for (size_t i = 0; i < chain.size(); ++i) {
        const gf::Mat& b = chain[i].basis;
        if (b.cols() != n || b.field() != f) fail(Errc::BadInput, "flag: wrong ambient space");
        if (b.rows() == 0 || b.rows() > n) fail(Errc::BadInput, "flag: empty or overfull layer");
        if (i > 0) {
            if (chain[i - 1].dim() >= chain[i].dim())
                fail(Errc::BadInput, "flag: chain is not strictly increasing");
            if (!gf::coords_in_row_basis(gf::row_basis(b), chain[i - 1].basis))
                fail(Errc::BadInput, "flag: chain is not nested");
        }
    }

    gf::Mat adapted(f, 0, n);
    std::vector<int> layer_sizes;
    auto absorb = [&](const gf::Mat& rows) {
        int added = 0;
        for (int r = 0; r < rows.rows(); ++r) {
            gf::Mat cand = vstack(adapted, rows.row(r));
            if (cand.rank() > adapted.rows()) {
                adapted = std::move(cand);
                ++added;
            }
        }
        return added;
    };
    for (const rep::Submodule& w : chain) layer_sizes.push_back(absorb(w.basis));
    int top = absorb(gf::Mat::identity(f, n));
    if (top > 0) layer_sizes.push_back(top);

    std::vector<int> exponents;
    for (size_t layer = 0; layer < layer_sizes.size(); ++layer)
        for (int c = 0; c < layer_sizes[layer]; ++c)
            exponents.push_back(int(layer_sizes.size() - 1 - layer));
    return make_cocharacter(std::move(exponents), adapted.transpose());
}

namespace {

void chain_rec(const rep::MatGroup& g, uint64_t seed, std::vector<gf::Mat>& out) {
    auto w = rep::find_proper_submodule(g, seed);
    if (!w) return; // irreducible layer
    std::vector<gf::Mat> below;
    chain_rec(rep::restrict_action(g, *w), seed, below);
    for (const gf::Mat& b : below) out.push_back(gf::row_basis(b * w->basis));
    out.push_back(w->basis);

    auto ech = w->basis.rref();
    std::vector<bool> is_pivot(size_t(g.dim), false);
    for (int c : ech.pivots) is_pivot[size_t(c)] = true;
    std::vector<int> np;
    for (int j = 0; j < g.dim; ++j)
        if (!is_pivot[size_t(j)]) np.push_back(j);
    std::vector<gf::Mat> above;
    chain_rec(rep::quotient_action(g, *w), seed, above);
    for (const gf::Mat& u : above) {
        gf::Mat lift(g.field, u.rows(), g.dim);
        for (int r = 0; r < u.rows(); ++r)
            for (int c = 0; c < u.cols(); ++c) lift.at(r, np[size_t(c)]) = u.at(r, c);
        out.push_back(gf::row_basis(vstack(w->basis, lift)));
    }
}

} // namespace

std::vector<rep::Submodule> composition_chain(const rep::MatGroup& g, uint64_t seed) {
    std::vector<gf::Mat> bases;
    chain_rec(g, seed, bases);
    std::vector<rep::Submodule> out;
    out.reserve(bases.size());
    for (gf::Mat& b : bases) out.push_back(rep::Submodule{std::move(b)});
    return out;
}

Semisimplification semisimplify(const rep::MatGroup& g, uint64_t seed) {
    if (rep::is_semisimple(g, seed).semisimple)
        return Semisimplification{g, trivial_cocharacter(g.field, g.dim)};
    Cocharacter l = flag_to_cocharacter(composition_chain(g, seed), g.field, g.dim);
    std::vector<gf::Mat> imgs;
    imgs.reserve(g.gens.size());
    for (const gf::Mat& gen : g.gens) imgs.push_back(c_lambda(gen, l));
    rep::MatGroup out = rep::make_group(g.field, g.dim, std::move(imgs));
    if (!rep::is_semisimple(out, seed).semisimple)
        fail(Errc::BadInput, "semisimplify: projected module is not semisimple");
    return Semisimplification{std::move(out), std::move(l)};
}

bool check_semisat_commutation(const rep::MatGroup& g, const Cocharacter& l,
                               const gf::FieldPtr& t_field, size_t cap) {
    rep::MatGroup closed = sat::f_saturated_closure(g, t_field, cap);
    Cocharacter leff = l;
    if (closed.field != g.field)
        leff = make_cocharacter(l.exponents, sat::embed_matrix(l.basis, closed.field));

    std::set<std::string> lhs;
    for (const gf::Mat& m : *closed.element_set) lhs.insert(c_lambda(m, leff).encode());

    std::vector<gf::Mat> imgs;
    for (const gf::Mat& gen : g.gens) imgs.push_back(c_lambda(gen, l));
    rep::MatGroup quot = rep::make_group(g.field, g.dim, std::move(imgs));
    rep::MatGroup closed_quot = sat::f_saturated_closure(quot, t_field, cap);

    std::set<std::string> rhs;
    for (const gf::Mat& m : *closed_quot.element_set) rhs.insert(m.encode());
    return lhs == rhs;
}

} // namespace satcr::par
