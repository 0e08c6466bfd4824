#include "satcr/satur.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace satcr::sat {

namespace {

// least d >= 1 with m^d = 0, or -1 if m is not nilpotent
int nilpotency_degree(const gf::Mat& m) {
    int n = m.rows();
    gf::Mat pw = m;
    for (int d = 1; d <= n; ++d) {
        if (pw.is_zero()) return d;
        pw = pw * m;
    }
    return -1;
}

void check_square(const gf::Mat& m, const char* who) {
    if (m.rows() != m.cols()) fail(Errc::ShapeMismatch, std::string(who) + ": need a square matrix");
}

} // namespace

Unipotent make_unipotent(const gf::Mat& u) {
    check_square(u, "make_unipotent");
    gf::Mat eps = u - gf::Mat::identity(u.field(), u.rows());
    int d = nilpotency_degree(eps);
    if (d < 0) fail(Errc::NotUnipotent, "make_unipotent: (u - 1)^n != 0");
    if (d > int(u.field()->p())) fail(Errc::OrderTooLarge, "make_unipotent: (u - 1)^p != 0");
    return Unipotent{u, std::move(eps), d};
}

Nilpotent make_nilpotent(const gf::Mat& x) {
    check_square(x, "make_nilpotent");
    int d = nilpotency_degree(x);
    if (d < 0) fail(Errc::BadInput, "make_nilpotent: x^n != 0");
    if (d > int(x.field()->p()))
        fail(Errc::CharTooSmall, "make_nilpotent: x^p != 0, series would divide by p");
    return Nilpotent{x, d};
}

Nilpotent u_log(const Unipotent& u) {
    const gf::FieldPtr& f = u.u.field();
    gf::Mat sum(f, u.u.rows(), u.u.cols());
    gf::Mat pw = u.eps;
    for (int i = 1; i < u.degree; ++i) {
        gf::El coef = gf::El::of_int(f, i % 2 ? 1 : -1) / gf::El::of_int(f, i);
        sum = sum + pw.scaled(coef);
        pw = pw * u.eps;
    }
    return make_nilpotent(sum);
}

Unipotent u_exp(const Nilpotent& x) {
    const gf::FieldPtr& f = x.x.field();
    gf::Mat sum = gf::Mat::identity(f, x.x.rows());
    gf::Mat pw = x.x;
    gf::El coef = gf::El::one(f);
    for (int i = 1; i < x.degree; ++i) {
        coef = coef / gf::El::of_int(f, i);
        sum = sum + pw.scaled(coef);
        pw = pw * x.x;
    }
    return make_unipotent(sum);
}

Unipotent t_power(const Unipotent& u, const gf::El& t) {
    const gf::FieldPtr& f = u.u.field();
    if (t.field() != f) fail(Errc::FieldMismatch, "t_power: scalar from a different field");
    // binomial route: sum_i t(t-1)...(t-i+1)/i! eps^i
    gf::Mat sum = gf::Mat::identity(f, u.u.rows());
    gf::Mat pw = u.eps;
    gf::El binom = gf::El::one(f);
    for (int i = 1; i < u.degree; ++i) {
        binom = binom * (t - gf::El::of_int(f, i - 1)) / gf::El::of_int(f, i);
        sum = sum + pw.scaled(binom);
        pw = pw * u.eps;
    }
    // exponential route: exp(t log u); the two must coincide
    Unipotent via_exp = u_exp(make_nilpotent(u_log(u).x.scaled(t)));
    if (sum != via_exp.u) fail(Errc::BadInput, "t_power: binomial and exp routes disagree");
    return make_unipotent(sum);
}

Nilpotent bch(const Nilpotent& x, const Nilpotent& y) {
    if (x.x.field() != y.x.field()) fail(Errc::FieldMismatch, "bch: fields differ");
    if (x.x.rows() != y.x.rows()) fail(Errc::ShapeMismatch, "bch: shapes differ");
    gf::Mat prod = u_exp(x).u * u_exp(y).u;
    gf::Mat eps = prod - gf::Mat::identity(prod.field(), prod.rows());
    int d = nilpotency_degree(eps);
    if (d < 0) fail(Errc::BadInput, "bch: exp(x) exp(y) not unipotent");
    if (d > int(prod.field()->p()))
        fail(Errc::CharTooSmall, "bch: log of the product needs a term with denominator p");
    return u_log(Unipotent{std::move(prod), std::move(eps), d});
}

bool product_log_additivity(const std::vector<Unipotent>& factors) {
    if (factors.empty()) fail(Errc::BadInput, "product_log_additivity: no factors");
    const gf::FieldPtr& f = factors[0].u.field();
    int n = factors[0].u.rows();
    for (const Unipotent& a : factors) {
        if (a.u.field() != f) fail(Errc::FieldMismatch, "product_log_additivity: fields differ");
        if (a.u.rows() != n) fail(Errc::ShapeMismatch, "product_log_additivity: shapes differ");
    }
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j)
            if (factors[i].u * factors[j].u != factors[j].u * factors[i].u)
                fail(Errc::BadInput, "product_log_additivity: factors do not commute");
    gf::Mat prod = factors[0].u;
    gf::Mat sum = u_log(factors[0]).x;
    for (size_t i = 1; i < factors.size(); ++i) {
        prod = prod * factors[i].u;
        sum = sum + u_log(factors[i]).x;
    }
    return u_log(make_unipotent(prod)).x == sum;
}

gf::Mat embed_matrix(const gf::Mat& m, const gf::FieldPtr& ext) {
    if (m.field() == ext) return m;
    if (m.field()->k() != 1 || m.field()->p() != ext->p())
        fail(Errc::FieldMismatch, "embed_matrix: only prime fields embed into extensions");
    gf::Mat r(ext, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.at(i, j) = gf::El::of_int(ext, m.at(i, j).coeffs()[0]);
    return r;
}

namespace {

struct Ambient {
    gf::FieldPtr field;          // field the closure lives over
    std::vector<gf::El> scalars; // the t-range, elements of `field`
};

Ambient resolve_scalars(const rep::MatGroup& g, const gf::FieldPtr& t_field) {
    if (t_field == g.field) return {g.field, gf::all_elements(g.field)};
    if (t_field->p() == g.field->p()) {
        if (g.field->k() == 1) return {t_field, gf::all_elements(t_field)};
        if (g.field->k() % t_field->k() == 0)
            return {g.field, gf::subfield_elements(g.field, t_field->k())};
    }
    fail(Errc::FieldMismatch,
         "t-field must be the matrix field, a subfield of it, or an extension of a prime matrix field");
}

std::vector<gf::Mat> embedded_gens(const rep::MatGroup& g, const gf::FieldPtr& amb) {
    std::vector<gf::Mat> gens;
    gens.reserve(g.gens.size());
    for (const gf::Mat& m : g.gens) gens.push_back(embed_matrix(m, amb));
    return gens;
}

bool order_p_unipotent(const gf::Mat& m) {
    gf::Mat eps = m - gf::Mat::identity(m.field(), m.rows());
    return eps.pow(m.field()->p()).is_zero();
}

std::vector<gf::Mat> sorted_by_encoding(const std::vector<gf::Mat>& els) {
    std::vector<gf::Mat> out = els;
    std::sort(out.begin(), out.end(),
              [](const gf::Mat& a, const gf::Mat& b) { return a.encode() < b.encode(); });
    return out;
}

} // namespace

rep::MatGroup f_saturated_closure(const rep::MatGroup& g, const gf::FieldPtr& t_field, size_t cap) {
    Ambient amb = resolve_scalars(g, t_field);
    std::vector<gf::Mat> gens = embedded_gens(g, amb.field);
    while (true) {
        rep::MatGroup cur = rep::make_group(amb.field, g.dim, gens);
        const std::vector<gf::Mat>& els = rep::ensure_elements(cur, cap);
        std::set<std::string> member;
        for (const gf::Mat& m : els) member.insert(m.encode());
        std::vector<gf::Mat> fresh;
        for (const gf::Mat& m : sorted_by_encoding(els)) {
            if (!order_p_unipotent(m)) continue;
            Unipotent u = make_unipotent(m);
            for (const gf::El& t : amb.scalars) {
                gf::Mat v = t_power(u, t).u;
                if (member.insert(v.encode()).second) fresh.push_back(std::move(v));
            }
        }
        if (fresh.empty()) {
            cur.gens = std::move(gens);
            cur.element_set = sorted_by_encoding(els);
            return cur;
        }
        for (gf::Mat& m : fresh) gens.push_back(std::move(m));
    }
}

bool is_f_saturated(const rep::MatGroup& g, const gf::FieldPtr& t_field, size_t cap) {
    Ambient amb = resolve_scalars(g, t_field);
    rep::MatGroup cur = rep::make_group(amb.field, g.dim, embedded_gens(g, amb.field));
    const std::vector<gf::Mat>& els = rep::ensure_elements(cur, cap);
    std::set<std::string> member;
    for (const gf::Mat& m : els) member.insert(m.encode());
    for (const gf::Mat& m : els) {
        if (!order_p_unipotent(m)) continue;
        Unipotent u = make_unipotent(m);
        for (const gf::El& t : amb.scalars)
            if (!member.count(t_power(u, t).u.encode())) return false;
    }
    return true;
}

} // namespace satcr::sat
