#include "satcr/modrep.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <string>

namespace satcr::rep {

using gf::El;
using gf::FieldPtr;
using gf::Mat;

namespace {

Mat vstack(const Mat& a, const Mat& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    Mat r(a.field(), a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

// ---------- polynomial arithmetic (coefficients low to high) ----------

Poly p_trim(Poly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

int p_deg(const Poly& f) { return int(f.size()) - 1; }

Poly p_add(const Poly& a, const Poly& b) {
    Poly r = a.size() >= b.size() ? a : b;
    const Poly& s = a.size() >= b.size() ? b : a;
    for (size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
    return p_trim(r);
}

Poly p_neg(const Poly& a) {
    Poly r = a;
    for (auto& c : r) c = -c;
    return r;
}

Poly p_sub(const Poly& a, const Poly& b) { return p_add(a, p_neg(b)); }

Poly p_scale(const Poly& a, const El& s) {
    if (s.is_zero()) return {};
    Poly r = a;
    for (auto& c : r) c = c * s;
    return r;
}

Poly p_mul(const Poly& a, const Poly& b, const FieldPtr& f) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, El::zero(f));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return p_trim(r);
}

// returns {quotient, remainder}
std::pair<Poly, Poly> p_divmod(Poly a, const Poly& b, const FieldPtr& f) {
    if (b.empty()) fail(Errc::DivideByZero, "polynomial division by zero");
    Poly q;
    El lead_inv = b.back().inverse();
    int db = p_deg(b);
    while (p_deg(a) >= db) {
        int shift = p_deg(a) - db;
        El c = a.back() * lead_inv;
        if (int(q.size()) < shift + 1) q.resize(size_t(shift) + 1, El::zero(f));
        q[size_t(shift)] = q[size_t(shift)] + c;
        for (int i = 0; i <= db; ++i)
            a[size_t(shift + i)] = a[size_t(shift + i)] - c * b[size_t(i)];
        a = p_trim(a);
    }
    return {p_trim(q), a};
}

Poly p_mod(const Poly& a, const Poly& b, const FieldPtr& f) { return p_divmod(a, b, f).second; }

Poly p_monic(Poly a) {
    if (a.empty()) return a;
    return p_scale(a, a.back().inverse());
}

Poly p_gcd(Poly a, Poly b, const FieldPtr& f) {
    a = p_trim(a);
    b = p_trim(b);
    while (!b.empty()) {
        Poly r = p_mod(a, b, f);
        a = b;
        b = r;
    }
    return p_monic(a);
}

Poly p_deriv(const Poly& a, const FieldPtr& f) {
    Poly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(El::of_int(f, (long long)i) * a[i]);
    return p_trim(r);
}

Poly p_pow_mod(Poly base, uint64_t e, const Poly& m, const FieldPtr& f) {
    Poly r{El::one(f)};
    base = p_mod(base, m, f);
    while (e) {
        if (e & 1) r = p_mod(p_mul(r, base, f), m, f);
        base = p_mod(p_mul(base, base, f), m, f);
        e >>= 1;
    }
    return r;
}

std::string p_key(const Poly& f) {
    std::string s;
    for (const auto& c : f) s += std::to_string(c.index()) + ",";
    return s;
}

// ---------- factorization (distinct irreducible factors) ----------

struct Rng {
    uint64_t s;
    uint64_t next() { // splitmix64: deterministic across platforms
        uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d4a2c592eebf45ull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return next() % n; }
};

Poly p_random(int deg_below, const FieldPtr& f, Rng& rng) {
    Poly r;
    for (int i = 0; i < deg_below; ++i) r.push_back(El::at_index(f, rng.below(f->size())));
    return p_trim(r);
}

void equal_degree(Poly g, int d, const FieldPtr& f, Rng& rng, std::vector<Poly>& out) {
    g = p_monic(p_trim(g));
    if (p_deg(g) <= 0) return;
    if (p_deg(g) == d) {
        out.push_back(g);
        return;
    }
    uint64_t q = f->size();
    for (int tries = 0; tries < 200; ++tries) {
        Poly a = p_random(p_deg(g), f, rng);
        if (p_deg(a) < 1) continue;
        Poly h0 = p_gcd(a, g, f);
        if (p_deg(h0) > 0 && p_deg(h0) < p_deg(g)) {
            equal_degree(h0, d, f, rng, out);
            equal_degree(p_divmod(g, h0, f).first, d, f, rng, out);
            return;
        }
        Poly c;
        if (f->p() == 2) {
            // trace map over GF(2): a + a^2 + ... + a^(2^(kd-1))
            Poly t = a;
            c = a;
            uint64_t steps = uint64_t(f->k()) * uint64_t(d) - 1;
            for (uint64_t i = 0; i < steps; ++i) {
                t = p_mod(p_mul(t, t, f), g, f);
                c = p_add(c, t);
            }
        } else {
            // a^((q^d-1)/2) = norm(a)^((q-1)/2); norm needs only q-power steps
            Poly t = a, prod = a;
            for (int i = 1; i < d; ++i) {
                t = p_pow_mod(t, q, g, f);
                prod = p_mod(p_mul(prod, t, f), g, f);
            }
            Poly b = p_pow_mod(prod, (q - 1) / 2, g, f);
            c = p_sub(b, Poly{El::one(f)});
        }
        Poly h = p_gcd(c, g, f);
        if (p_deg(h) > 0 && p_deg(h) < p_deg(g)) {
            equal_degree(h, d, f, rng, out);
            equal_degree(p_divmod(g, h, f).first, d, f, rng, out);
            return;
        }
    }
    fail(Errc::BadInput, "equal-degree splitting stalled");
}

void distinct_degree(Poly f0, const FieldPtr& f, Rng& rng, std::vector<Poly>& out) {
    Poly rem = p_monic(f0);
    uint64_t q = f->size();
    Poly x{El::zero(f), El::one(f)};
    Poly h = p_mod(x, rem, f);
    for (int d = 1; p_deg(rem) > 0; ++d) {
        if (2 * d > p_deg(rem)) {
            out.push_back(p_monic(rem));
            return;
        }
        h = p_pow_mod(h, q, rem, f);
        Poly g = p_gcd(p_sub(h, x), rem, f);
        if (p_deg(g) > 0) {
            equal_degree(g, d, f, rng, out);
            rem = p_divmod(rem, g, f).first;
            h = p_mod(h, rem, f);
        }
    }
}

void factors_distinct(const Poly& f0, const FieldPtr& f, Rng& rng,
                      std::map<std::string, Poly>& out) {
    Poly g = p_monic(p_trim(f0));
    if (p_deg(g) <= 0) return;
    Poly d = p_deriv(g, f);
    if (d.empty()) {
        // g = h(x^p); recover h by taking p-th roots of the surviving coeffs
        uint32_t p = f->p();
        Poly h;
        for (size_t i = 0; i * p < g.size(); ++i) {
            El c = g[i * p];
            h.push_back(c.frobenius_power(f->k() - 1)); // c^(q/p), the p-th root
        }
        factors_distinct(h, f, rng, out);
        return;
    }
    Poly common = p_gcd(g, d, f);
    std::vector<Poly> found;
    if (p_deg(common) == 0) {
        distinct_degree(g, f, rng, found);
    } else {
        factors_distinct(p_divmod(g, common, f).first, f, rng, out);
        factors_distinct(common, f, rng, out);
    }
    for (auto& fac : found) out.emplace(p_key(fac), fac);
}

Mat mat_vec_row(const Mat& m) {
    int n = m.rows();
    Mat r(m.field(), 1, n * m.cols());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(0, j * n + i) = m.at(i, j);
    return r;
}

Mat random_algebra_element(const MatGroup& g, Rng& rng) {
    const FieldPtr& f = g.field;
    uint64_t q = f->size();
    Mat m(f, g.dim, g.dim);
    int terms = 2 + int(rng.below(3));
    for (int t = 0; t < terms; ++t) {
        Mat w = Mat::identity(f, g.dim);
        int len = 1 + int(rng.below(8));
        for (int i = 0; i < len; ++i) w = w * g.gens[rng.below(g.gens.size())];
        m = m + w.scaled(El::at_index(f, 1 + rng.below(q - 1)));
    }
    m = m + Mat::identity(f, g.dim).scaled(El::at_index(f, rng.below(q)));
    return m;
}

} // namespace

MatGroup make_group(const FieldPtr& f, int dim, std::vector<Mat> gens) {
    for (const auto& g : gens) {
        if (g.field() != f) fail(Errc::FieldMismatch, "generator over a different field");
        if (g.rows() != dim || g.cols() != dim) fail(Errc::ShapeMismatch, "generator not dim x dim");
        if (g.rank() != dim) fail(Errc::Singular, "generator is singular");
    }
    return MatGroup{f, dim, std::move(gens), std::nullopt};
}

const std::vector<Mat>& ensure_elements(MatGroup& g, size_t cap) {
    if (g.element_set) return *g.element_set;
    std::vector<Mat> elems;
    std::set<std::string> seen;
    std::deque<Mat> queue;
    Mat id = Mat::identity(g.field, g.dim);
    seen.insert(id.encode());
    elems.push_back(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Mat m = queue.front();
        queue.pop_front();
        for (const auto& a : g.gens) {
            Mat next = m * a;
            if (seen.insert(next.encode()).second) {
                if (elems.size() >= cap) fail(Errc::CapExceeded, "group enumeration exceeds cap");
                elems.push_back(next);
                queue.push_back(next);
            }
        }
    }
    g.element_set = std::move(elems);
    return *g.element_set;
}

Submodule spin(const MatGroup& g, const Mat& seeds) {
    Mat cur = gf::row_basis(seeds);
    std::deque<Mat> work;
    for (int i = 0; i < cur.rows(); ++i) work.push_back(cur.row(i));
    while (!work.empty() && cur.rows() < g.dim) {
        Mat v = work.front();
        work.pop_front();
        for (const auto& a : g.gens) {
            Mat w = (a * v.transpose()).transpose();
            Mat stacked = vstack(cur, w);
            auto ech = stacked.rref();
            if (ech.rank > cur.rows()) {
                cur = ech.r.submatrix(0, 0, ech.rank, g.dim);
                work.push_back(w);
                if (cur.rows() == g.dim) break;
            }
        }
    }
    return Submodule{cur};
}

Poly min_poly(const Mat& m) {
    const FieldPtr& f = m.field();
    int n = m.rows();
    if (n != m.cols()) fail(Errc::ShapeMismatch, "minimal polynomial of a non-square matrix");
    Mat power = Mat::identity(f, n);
    Mat krylov = mat_vec_row(power);
    for (int k = 1; k <= n; ++k) {
        power = power * m;
        Mat target = mat_vec_row(power);
        auto sol = gf::solve(krylov.transpose(), target.transpose());
        if (sol) {
            Poly mp(size_t(k) + 1, El::zero(f));
            mp[size_t(k)] = El::one(f);
            for (int i = 0; i < k; ++i) mp[size_t(i)] = -sol->at(i, 0);
            return mp;
        }
        krylov = vstack(krylov, target);
    }
    fail(Errc::BadInput, "no annihilating polynomial found (internal)");
}

std::vector<Poly> irreducible_factors(const Poly& f, const FieldPtr& field, uint64_t seed) {
    Rng rng{seed * 0x9e3779b97f4a7c15ull + 1};
    std::map<std::string, Poly> out;
    factors_distinct(f, field, rng, out);
    std::vector<Poly> res;
    for (auto& [k, v] : out) res.push_back(v);
    std::sort(res.begin(), res.end(), [](const Poly& a, const Poly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = a.size(); i-- > 0;)
            if (a[i].index() != b[i].index()) return a[i].index() < b[i].index();
        return false;
    });
    return res;
}

Mat eval_poly(const Poly& f, const Mat& m) {
    const FieldPtr& fld = m.field();
    int n = m.rows();
    Mat r(fld, n, n);
    for (size_t i = f.size(); i-- > 0;) {
        r = r * m;
        r = r + Mat::identity(fld, n).scaled(f[i]);
    }
    return r;
}

std::optional<Submodule> find_proper_submodule(const MatGroup& g, uint64_t seed) {
    int n = g.dim;
    const FieldPtr& f = g.field;
    if (n <= 1) return std::nullopt;
    if (g.gens.empty()) {
        Mat e1(f, 1, n);
        e1.at(0, 0) = El::one(f);
        return Submodule{gf::row_basis(e1)};
    }

    Rng rng{seed * 0x2545f4914f6cdd1dull + 7};
    MatGroup dual{f, n, {}, std::nullopt};
    for (const auto& a : g.gens) dual.gens.push_back(a.transpose());

    for (int attempt = 0; attempt < 40; ++attempt) {
        Mat m = random_algebra_element(g, rng);
        Poly mp = min_poly(m);
        auto factors = irreducible_factors(mp, f, rng.next());
        for (const auto& fac : factors) {
            Mat nmat = eval_poly(fac, m);
            Mat kernel = gf::nullspace(nmat);
            if (kernel.rows() == 0) continue;
            int tried = 0;
            for (int i = 0; i < kernel.rows() && tried < 3; ++i, ++tried) {
                Submodule s = spin(g, kernel.row(i));
                if (s.dim() > 0 && s.dim() < n) return s;
            }
            if (kernel.rows() == p_deg(fac)) {
                // Norton: with nullity == deg, one spin each way decides
                Mat dkernel = gf::nullspace(nmat.transpose());
                Submodule ds = spin(dual, dkernel.row(0));
                if (ds.dim() == n) return std::nullopt; // certified irreducible
                // annihilator of the dual submodule is a proper submodule
                Mat ann = gf::nullspace(ds.basis);
                return Submodule{gf::row_basis(ann)};
            }
        }
    }

    // exhaustive fallback: spin every canonical projective seed
    uint64_t q = f->size();
    double logpts = double(n) * std::log2(double(q));
    if (n <= 12 && q <= 16 && logpts <= 20.0) {
        uint64_t total = 1;
        for (int i = 0; i < n; ++i) total *= q;
        for (uint64_t idx = 1; idx < total; ++idx) {
            // decode digits; accept only vectors whose first nonzero entry is 1
            Mat v(f, 1, n);
            uint64_t t = idx;
            int first_nz = -1;
            for (int j = 0; j < n; ++j) {
                uint64_t digit = t % q;
                t /= q;
                v.at(0, j) = El::at_index(f, digit);
                if (first_nz < 0 && digit != 0) first_nz = j;
            }
            if (!v.at(0, first_nz).is_one()) continue;
            Submodule s = spin(g, v);
            if (s.dim() > 0 && s.dim() < n) return s;
        }
        return std::nullopt; // every seed spans: irreducible by exhaustion
    }
    fail(Errc::Inconclusive, "randomized search failed and module too large to exhaust");
}

bool is_irreducible(const MatGroup& g, uint64_t seed) {
    return !find_proper_submodule(g, seed).has_value();
}

std::optional<Submodule> splits(const MatGroup& g, const Submodule& w) {
    int n = g.dim, r = w.dim();
    const FieldPtr& f = g.field;
    if (r <= 0 || r >= n) fail(Errc::BadInput, "complement needs a proper nonzero subspace");

    auto ech = w.basis.rref();
    std::vector<bool> is_pivot(size_t(n), false);
    for (int c : ech.pivots) is_pivot[size_t(c)] = true;
    Mat t(f, n, n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) t.at(i, j) = ech.r.at(i, j);
    int row = r;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[size_t(j)]) continue;
        t.at(row, j) = El::one(f);
        ++row;
    }
    Mat tt = t.transpose();
    Mat tti = tt.inverse();

    int c = n - r;
    std::vector<Mat> sys_blocks, rhs_blocks;
    for (const auto& gen : g.gens) {
        Mat gp = tti * gen * tt;
        if (!gp.submatrix(r, 0, c, r).is_zero())
            fail(Errc::NotInvariant, "subspace is not invariant");
        Mat a = gp.submatrix(0, 0, r, r);
        Mat b = gp.submatrix(0, r, r, c);
        Mat d = gp.submatrix(r, r, c, c);
        Mat block = Mat::kronecker(Mat::identity(f, c), a) -
                    Mat::kronecker(d.transpose(), Mat::identity(f, r));
        Mat rvec(f, r * c, 1);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) rvec.at(j * r + i, 0) = -b.at(i, j);
        sys_blocks.push_back(block);
        rhs_blocks.push_back(rvec);
    }
    std::optional<Mat> sol;
    if (sys_blocks.empty()) {
        sol = Mat(f, r * c, 1); // no generators: any section works, take S = 0
    } else {
        Mat stacked_sys = sys_blocks[0], stacked_rhs = rhs_blocks[0];
        for (size_t i = 1; i < sys_blocks.size(); ++i) {
            stacked_sys = vstack(stacked_sys, sys_blocks[i]);
            stacked_rhs = vstack(stacked_rhs, rhs_blocks[i]);
        }
        sol = gf::solve(stacked_sys, stacked_rhs);
    }
    if (!sol) return std::nullopt;

    // complement rows are [S^T | I] * T in the adapted coordinates
    Mat comp(f, c, n);
    for (int j = 0; j < c; ++j) {
        Mat y(f, 1, n);
        for (int i = 0; i < r; ++i) y.at(0, i) = sol->at(j * r + i, 0);
        y.at(0, r + j) = El::one(f);
        Mat x = y * t;
        for (int jj = 0; jj < n; ++jj) comp.at(j, jj) = x.at(0, jj);
    }
    Submodule result{gf::row_basis(comp)};
    if (result.dim() != c || vstack(w.basis, result.basis).rank() != n)
        fail(Errc::BadInput, "complement verification failed (internal)");
    for (const auto& gen : g.gens)
        for (int i = 0; i < result.dim(); ++i) {
            Mat img = (gen * result.basis.row(i).transpose()).transpose();
            if (!gf::coords_in_row_basis(result.basis, img))
                fail(Errc::BadInput, "complement not invariant (internal)");
        }
    return result;
}

MatGroup restrict_action(const MatGroup& g, const Submodule& w) {
    int r = w.dim();
    const FieldPtr& f = g.field;
    MatGroup out{f, r, {}, std::nullopt};
    for (const auto& gen : g.gens) {
        Mat imgs = (gen * w.basis.transpose()).transpose(); // rows: images of basis rows
        auto coords = gf::coords_in_row_basis(w.basis, imgs);
        if (!coords) fail(Errc::NotInvariant, "subspace is not invariant");
        out.gens.push_back(coords->transpose());
    }
    return out;
}

MatGroup quotient_action(const MatGroup& g, const Submodule& w) {
    int n = g.dim, r = w.dim();
    const FieldPtr& f = g.field;
    auto ech = w.basis.rref();
    std::vector<bool> is_pivot(size_t(n), false);
    for (int c : ech.pivots) is_pivot[size_t(c)] = true;
    std::vector<int> np;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[size_t(j)]) np.push_back(j);
    auto reduce_coords = [&](Mat v) { // n x 1 column -> quotient coords
        for (int tr = 0; tr < r; ++tr) {
            El c = v.at(ech.pivots[size_t(tr)], 0);
            if (c.is_zero()) continue;
            for (int j = 0; j < n; ++j) v.at(j, 0) = v.at(j, 0) - c * ech.r.at(tr, j);
        }
        Mat q(f, int(np.size()), 1);
        for (size_t i = 0; i < np.size(); ++i) q.at(int(i), 0) = v.at(np[i], 0);
        return q;
    };
    MatGroup out{f, int(np.size()), {}, std::nullopt};
    for (const auto& gen : g.gens) {
        Mat d(f, int(np.size()), int(np.size()));
        for (size_t j = 0; j < np.size(); ++j) {
            Mat q = reduce_coords(gen.col(np[j]));
            for (size_t i = 0; i < np.size(); ++i) d.at(int(i), int(j)) = q.at(int(i), 0);
        }
        out.gens.push_back(d);
    }
    return out;
}

SemisimpleReport is_semisimple(const MatGroup& g, uint64_t seed) {
    auto w = find_proper_submodule(g, seed);
    if (!w) {
        SemisimpleReport rep;
        rep.semisimple = true;
        rep.summands.push_back(Submodule{Mat::identity(g.field, g.dim)});
        return rep;
    }
    auto comp = splits(g, *w);
    if (!comp) {
        SemisimpleReport rep;
        rep.semisimple = false;
        rep.non_split = *w;
        return rep;
    }
    SemisimpleReport rep;
    rep.semisimple = true;
    for (const Submodule* part : {&*w, &*comp}) {
        auto sub = is_semisimple(restrict_action(g, *part), seed * 2 + 1);
        if (!sub.semisimple) {
            rep.semisimple = false;
            rep.summands.clear();
            rep.non_split = Submodule{gf::row_basis(sub.non_split->basis * part->basis)};
            return rep;
        }
        for (const auto& s : sub.summands)
            rep.summands.push_back(Submodule{gf::row_basis(s.basis * part->basis)});
    }
    return rep;
}

std::vector<MatGroup> composition_factors(const MatGroup& g, uint64_t seed) {
    if (g.dim == 0) return {};
    auto w = find_proper_submodule(g, seed);
    if (!w) return {g};
    auto head = composition_factors(restrict_action(g, *w), seed * 2 + 1);
    auto tail = composition_factors(quotient_action(g, *w), seed * 2 + 2);
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
}

MatGroup conjugation_module(const MatGroup& g) {
    MatGroup out{g.field, g.dim * g.dim, {}, std::nullopt};
    for (const auto& gen : g.gens)
        out.gens.push_back(Mat::kronecker(gen.inverse().transpose(), gen));
    return out;
}

Mat mat_to_vec_row(const Mat& m) { return mat_vec_row(m); }

Mat traceless_basis(const FieldPtr& f, int n) {
    Mat rows(f, n * n - 1, n * n);
    int r = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            rows.at(r, j * n + i) = El::one(f);
            ++r;
        }
    for (int i = 0; i + 1 < n; ++i) {
        rows.at(r, i * n + i) = El::one(f);
        rows.at(r, (i + 1) * n + (i + 1)) = -El::one(f);
        ++r;
    }
    return gf::row_basis(rows);
}

std::optional<Submodule> invariant_complement(const MatGroup& g, const Submodule& sub) {
    MatGroup conj = conjugation_module(g);
    for (const auto& gen : conj.gens) {
        Mat imgs = (gen * sub.basis.transpose()).transpose();
        if (!gf::coords_in_row_basis(sub.basis, imgs))
            fail(Errc::NotInvariant, "subspace not stable under conjugation");
    }
    return splits(conj, sub);
}

} // namespace satcr::rep
