#include "satcr/groups.hpp"

namespace satcr::grp {

gf::Mat transvection(const gf::FieldPtr& f, int n, int i, int j, const gf::El& t) {
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) fail(Errc::BadInput, "transvection: bad position");
    gf::Mat m = gf::Mat::identity(f, n);
    m.at(i, j) = t;
    return m;
}

std::vector<gf::Mat> sln_gens(const gf::FieldPtr& f, int n) {
    if (n < 2) fail(Errc::BadInput, "sln_gens: need n >= 2");
    std::vector<gf::Mat> gens;
    gf::El z = gf::El::gen(f);
    for (int i = 0; i + 1 < n; ++i) {
        gf::El t = gf::El::one(f);
        for (uint32_t m = 0; m < f->k(); ++m) {
            gens.push_back(transvection(f, n, i, i + 1, t));
            gens.push_back(transvection(f, n, i + 1, i, t));
            t = t * z;
        }
    }
    return gens;
}

rep::MatGroup sl_group(const gf::FieldPtr& f, int n) { return rep::make_group(f, n, sln_gens(f, n)); }

gf::Mat ad_sl2_char2(const gf::Mat& g) {
    const gf::FieldPtr& f = g.field();
    if (f->p() != 2) fail(Errc::BadInput, "ad_sl2_char2: characteristic must be 2");
    if (g.rows() != 2 || g.cols() != 2) fail(Errc::ShapeMismatch, "ad_sl2_char2: need 2x2");
    if (!g.det().is_one()) fail(Errc::BadInput, "ad_sl2_char2: determinant must be 1");
    gf::El a = g.at(0, 0), b = g.at(0, 1), c = g.at(1, 0), d = g.at(1, 1);
    gf::Mat m(f, 3, 3);
    m.at(0, 0) = a * a;
    m.at(0, 1) = b * b;
    m.at(1, 0) = c * c;
    m.at(1, 1) = d * d;
    m.at(2, 0) = a * c;
    m.at(2, 1) = b * d;
    m.at(2, 2) = gf::El::one(f);
    return m;
}

rep::MatGroup ad_sl2_char2_group(const gf::FieldPtr& f) {
    std::vector<gf::Mat> gens;
    for (const gf::Mat& g : sln_gens(f, 2)) gens.push_back(ad_sl2_char2(g));
    return rep::make_group(f, 3, gens);
}

rep::MatGroup sl2_torus(const gf::FieldPtr& f) {
    gf::Mat t(f, 2, 2);
    gf::El z = gf::El::gen(f);
    t.at(0, 0) = z;
    t.at(1, 1) = z.inverse();
    return rep::make_group(f, 2, {t});
}

gf::Mat antidiag_ones(const gf::FieldPtr& f, int n) {
    gf::Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = gf::El::one(f);
    return m;
}

rep::MatGroup product_group(const rep::MatGroup& a, const rep::MatGroup& b) {
    if (a.field != b.field) fail(Errc::FieldMismatch, "product_group: fields differ");
    std::vector<gf::Mat> gens;
    gf::Mat ida = gf::Mat::identity(a.field, a.dim), idb = gf::Mat::identity(b.field, b.dim);
    for (const gf::Mat& g : a.gens) gens.push_back(gf::Mat::block_diag({g, idb}));
    for (const gf::Mat& g : b.gens) gens.push_back(gf::Mat::block_diag({ida, g}));
    return rep::make_group(a.field, a.dim + b.dim, gens);
}

uint64_t sl_order(uint64_t q, int n) {
    uint64_t order = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) order *= q;
    uint64_t qi = q;
    for (int i = 2; i <= n; ++i) {
        qi *= q;
        order *= qi - 1;
    }
    return order;
}

uint64_t su3_order(uint64_t q) { return q * q * q * (q * q - 1) * (q * q * q + 1); }

} // namespace satcr::grp
