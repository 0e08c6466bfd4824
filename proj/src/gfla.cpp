#include "satcr/gfla.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

namespace satcr::gf {

namespace {

constexpr uint64_t kFieldSizeCap = uint64_t(1) << 20;

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct PolyRow {
    uint32_t p, k;
    std::vector<uint32_t> c; // c0..c_{k-1}; monic leading 1 implied
};

// Smallest primitive monic polynomial per (p,k): the class of x generates the
// multiplicative group.  Generated offline by exhaustive search in counter
// order sum(c_i p^i); irreducibility of each row is re-checked in the tests.
const PolyRow kPolyTable[] = {
    {2, 1, {1}},
    {2, 2, {1, 1}},
    {2, 3, {1, 1, 0}},
    {2, 4, {1, 1, 0, 0}},
    {2, 5, {1, 0, 1, 0, 0}},
    {2, 6, {1, 1, 0, 0, 0, 0}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0}},
    {2, 8, {1, 0, 1, 1, 1, 0, 0, 0}},
    {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0}},
    {2, 10, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0}},
    {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {2, 12, {1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0}},
    {3, 1, {1}},
    {3, 2, {2, 1}},
    {3, 3, {1, 2, 0}},
    {3, 4, {2, 1, 0, 0}},
    {3, 5, {1, 2, 0, 0, 0}},
    {3, 6, {2, 1, 0, 0, 0, 0}},
    {3, 7, {1, 2, 1, 0, 0, 0, 0}},
    {3, 8, {2, 0, 0, 1, 0, 0, 0, 0}},
    {3, 9, {1, 0, 1, 2, 0, 0, 0, 0, 0}},
    {3, 10, {2, 1, 0, 1, 0, 0, 0, 0, 0, 0}},
    {3, 11, {1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {3, 12, {2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0}},
    {5, 1, {2}},
    {5, 2, {2, 1}},
    {5, 3, {2, 3, 0}},
    {5, 4, {2, 2, 1, 0}},
    {5, 5, {2, 4, 0, 0, 0}},
    {5, 6, {2, 1, 0, 0, 0, 0}},
    {5, 7, {2, 3, 0, 0, 0, 0, 0}},
    {5, 8, {3, 2, 1, 0, 0, 0, 0, 0}},
    {5, 9, {3, 2, 1, 0, 0, 0, 0, 0, 0}},
    {5, 10, {3, 1, 1, 0, 0, 0, 0, 0, 0, 0}},
    {5, 11, {2, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {5, 12, {3, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}},
    {7, 1, {2}},
    {7, 2, {3, 1}},
    {7, 3, {2, 3, 0}},
    {7, 4, {5, 3, 1, 0}},
    {7, 5, {4, 1, 0, 0, 0}},
    {7, 6, {5, 1, 3, 0, 0, 0}},
    {7, 7, {2, 6, 0, 0, 0, 0, 0}},
    {7, 8, {3, 1, 0, 0, 0, 0, 0, 0}},
    {7, 9, {2, 1, 1, 0, 0, 0, 0, 0, 0}},
    {7, 10, {5, 1, 5, 0, 0, 0, 0, 0, 0, 0}},
    {7, 11, {4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {7, 12, {3, 2, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {11, 1, {3}},
    {11, 2, {7, 1}},
    {11, 3, {4, 1, 0}},
    {11, 4, {2, 1, 0, 0}},
    {11, 5, {4, 1, 1, 0, 0}},
    {11, 6, {8, 2, 1, 0, 0, 0}},
    {11, 7, {4, 1, 0, 0, 0, 0, 0}},
    {11, 8, {6, 2, 1, 0, 0, 0, 0, 0}},
    {11, 9, {9, 2, 0, 0, 0, 0, 0, 0, 0}},
    {11, 10, {6, 1, 1, 0, 0, 0, 0, 0, 0, 0}},
    {11, 11, {3, 10, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {11, 12, {7, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
};

// --- polynomial helpers over GF(p), coefficient lists c0..cd ---

using Poly = std::vector<uint32_t>;

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
    size_t k = f.size() - 1;
    std::vector<uint64_t> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += uint64_t(a[i]) * b[j] % p;
    }
    for (size_t d = r.size(); d-- > k;) {
        uint64_t c = r[d] % p;
        if (!c) continue;
        r[d] = 0;
        // x^d == x^(d-k) * (-(f mod x^k))
        for (size_t j = 0; j < k; ++j) r[d - k + j] += c * ((p - f[j] % p) % p);
    }
    Poly out(k, 0);
    for (size_t j = 0; j < k && j < r.size(); ++j) out[j] = uint32_t(r[j] % p);
    return out;
}

Poly poly_pow_mod(Poly base, uint64_t e, const Poly& f, uint32_t p) {
    size_t k = f.size() - 1;
    Poly r(k, 0);
    r[0] = 1;
    while (e) {
        if (e & 1) r = poly_mul_mod(r, base, f, p);
        base = poly_mul_mod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    auto deg = [](const Poly& q) {
        int d = int(q.size()) - 1;
        while (d >= 0 && q[size_t(d)] == 0) --d;
        return d;
    };
    auto inv_mod_p = [p](uint32_t v) {
        uint32_t r = 1, b = v, e = p - 2;
        while (e) {
            if (e & 1) r = uint32_t(uint64_t(r) * b % p);
            b = uint32_t(uint64_t(b) * b % p);
            e >>= 1;
        }
        return r;
    };
    while (deg(b) >= 0) {
        int da = deg(a), db = deg(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        // a -= lead(a)/lead(b) * x^(da-db) * b
        uint32_t q = uint32_t(uint64_t(a[size_t(da)]) * inv_mod_p(b[size_t(db)]) % p);
        for (int j = 0; j <= db; ++j) {
            uint64_t s = a[size_t(j + da - db)] + uint64_t(p) - uint64_t(q) * b[size_t(j)] % p;
            a[size_t(j + da - db)] = uint32_t(s % p);
        }
    }
    return a;
}


// Monic f of degree k irreducible over GF(p):
// x^(p^k) == x mod f, and gcd(x^(p^(k/l)) - x, f) == 1 for prime l | k.
bool poly_irreducible(const Poly& f, uint32_t p) {
    size_t k = f.size() - 1;
    if (k == 1) return true;
    Poly x(k, 0);
    x[1] = 1;
    auto frob_iter = [&](uint32_t times) {
        Poly r = x;
        for (uint32_t i = 0; i < times; ++i) r = poly_pow_mod(r, p, f, p);
        return r;
    };
    Poly xq = frob_iter(uint32_t(k));
    if (xq != x) return false;
    for (uint32_t l = 2; l <= k; ++l) {
        if (k % l != 0 || !is_prime(l)) continue;
        Poly g = frob_iter(uint32_t(k) / l); // x^(p^(k/l))
        // g - x
        Poly diff = g;
        diff[1] = (diff[1] + p - 1) % p;
        Poly gc = poly_gcd(f, diff, p);
        // gcd must be constant
        bool constant = true;
        for (size_t i = 1; i < gc.size(); ++i)
            if (gc[i]) constant = false;
        if (!constant || gc.empty() || gc[0] == 0) return false;
    }
    return true;
}

Poly canonical_poly(uint32_t p, uint32_t k) {
    for (const auto& row : kPolyTable)
        if (row.p == p && row.k == k) {
            Poly f = row.c;
            f.push_back(1);
            return f;
        }
    // Fallback: lexicographically smallest monic irreducible, counter order
    // sum(c_i p^i).
    uint64_t limit = 1;
    for (uint32_t i = 0; i < k; ++i) limit *= p;
    for (uint64_t counter = 0; counter < limit; ++counter) {
        Poly f(k + 1, 0);
        uint64_t t = counter;
        for (uint32_t i = 0; i < k; ++i) {
            f[i] = uint32_t(t % p);
            t /= p;
        }
        f[k] = 1;
        if (k >= 1 && f[0] == 0) continue; // x | f
        if (poly_irreducible(f, p)) return f;
    }
    fail(Errc::NotIrreducible, "no irreducible polynomial found (unreachable)");
}

} // namespace

Field::Field(uint32_t p, uint32_t k, std::vector<uint32_t> poly)
    : p_(p), k_(k), poly_(std::move(poly)) {
    size_ = 1;
    for (uint32_t i = 0; i < k; ++i) size_ *= p;
    xk_.resize(k);
    for (uint32_t i = 0; i < k; ++i) xk_[i] = (p - poly_[i] % p) % p;
}

FieldPtr Field::make(uint32_t p, uint32_t k) {
    if (!is_prime(p)) fail(Errc::NonPrime, "p = " + std::to_string(p));
    if (k < 1) fail(Errc::BadInput, "k must be >= 1");
    uint64_t size = 1;
    for (uint32_t i = 0; i < k; ++i) {
        size *= p;
        if (size > kFieldSizeCap) fail(Errc::DimCap, "p^k exceeds field size cap 2^20");
    }
    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, k}];
    if (!slot) slot = FieldPtr(new Field(p, k, canonical_poly(p, k)));
    return slot;
}

FieldPtr make_field(uint32_t p, uint32_t k) { return Field::make(p, k); }

// --- El ---

El::El(FieldPtr f, std::vector<uint32_t> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    if (c_.size() != f_->k()) fail(Errc::ShapeMismatch, "coefficient count != k");
    for (auto& v : c_) v %= f_->p();
}

El El::zero(const FieldPtr& f) { return El(f, std::vector<uint32_t>(f->k(), 0)); }

El El::one(const FieldPtr& f) { return of_int(f, 1); }

El El::of_int(const FieldPtr& f, long long v) {
    std::vector<uint32_t> c(f->k(), 0);
    long long m = v % f->p();
    if (m < 0) m += f->p();
    c[0] = uint32_t(m);
    return El(f, std::move(c));
}

El El::gen(const FieldPtr& f) {
    if (f->k() == 1) {
        // class of x modulo (x + c0) is -c0
        return of_int(f, -static_cast<long long>(f->poly()[0]));
    }
    std::vector<uint32_t> c(f->k(), 0);
    c[1] = 1;
    return El(f, std::move(c));
}

El El::at_index(const FieldPtr& f, uint64_t i) {
    if (i >= f->size()) fail(Errc::BadInput, "element index out of range");
    std::vector<uint32_t> c(f->k(), 0);
    for (uint32_t j = 0; j < f->k(); ++j) {
        c[j] = uint32_t(i % f->p());
        i /= f->p();
    }
    return El(f, std::move(c));
}

uint64_t El::index() const {
    uint64_t i = 0;
    for (size_t j = c_.size(); j-- > 0;) i = i * f_->p() + c_[j];
    return i;
}

bool El::is_zero() const {
    for (auto v : c_)
        if (v) return false;
    return true;
}

bool El::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t j = 1; j < c_.size(); ++j)
        if (c_[j]) return false;
    return true;
}

namespace {
void check_same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a.get() != b.get()) fail(Errc::FieldMismatch, "operands from different fields");
}
} // namespace

El El::operator+(const El& o) const {
    check_same_field(f_, o.f_);
    std::vector<uint32_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = (c_[i] + o.c_[i]) % f_->p();
    El r;
    r.f_ = f_;
    r.c_ = std::move(c);
    return r;
}

El El::operator-(const El& o) const {
    check_same_field(f_, o.f_);
    std::vector<uint32_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = (c_[i] + f_->p() - o.c_[i]) % f_->p();
    El r;
    r.f_ = f_;
    r.c_ = std::move(c);
    return r;
}

El El::operator-() const { return zero(f_) - *this; }

El El::operator*(const El& o) const {
    check_same_field(f_, o.f_);
    uint32_t p = f_->p(), k = f_->k();
    if (k == 1) {
        El r;
        r.f_ = f_;
        r.c_ = {uint32_t(uint64_t(c_[0]) * o.c_[0] % p)};
        return r;
    }
    std::vector<uint64_t> prod(2 * k - 1, 0);
    for (uint32_t i = 0; i < k; ++i) {
        if (!c_[i]) continue;
        for (uint32_t j = 0; j < k; ++j) prod[i + j] += uint64_t(c_[i]) * o.c_[j] % p;
    }
    // reduce degrees k..2k-2 via x^k = xk_
    for (size_t d = prod.size(); d-- > k;) {
        uint64_t v = prod[d] % p;
        if (!v) continue;
        prod[d] = 0;
        for (uint32_t j = 0; j < k; ++j) prod[d - k + j] += v * f_->xk_[j];
    }
    std::vector<uint32_t> c(k);
    for (uint32_t j = 0; j < k; ++j) c[j] = uint32_t(prod[j] % p);
    El r;
    r.f_ = f_;
    r.c_ = std::move(c);
    return r;
}

El El::pow(uint64_t e) const {
    El r = one(f_);
    El b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

El El::inverse() const {
    if (is_zero()) fail(Errc::DivideByZero, "inverse of zero");
    return pow(f_->size() - 2);
}

El El::operator/(const El& o) const { return *this * o.inverse(); }

El El::frobenius_power(uint32_t i) const {
    i %= f_->k();
    if (i == 0) return *this;
    uint64_t e = 1;
    for (uint32_t j = 0; j < i; ++j) e *= f_->p();
    return pow(e);
}

bool El::operator==(const El& o) const {
    if (f_.get() != o.f_.get()) return false;
    return c_ == o.c_;
}

std::string El::str() const {
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ':';
        s += std::to_string(c_[i]);
    }
    return s;
}

std::vector<El> all_elements(const FieldPtr& f) {
    std::vector<El> out;
    out.reserve(size_t(f->size()));
    for (uint64_t i = 0; i < f->size(); ++i) out.push_back(El::at_index(f, i));
    return out;
}

std::vector<El> subfield_elements(const FieldPtr& f, uint32_t d) {
    if (d < 1 || f->k() % d != 0) fail(Errc::BadInput, "subfield degree must divide k");
    std::vector<El> out;
    for (uint64_t i = 0; i < f->size(); ++i) {
        El e = El::at_index(f, i);
        if (e.frobenius_power(d) == e) out.push_back(e);
    }
    return out;
}

// --- Mat ---

Mat::Mat(FieldPtr f, int rows, int cols) : f_(std::move(f)), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) fail(Errc::ShapeMismatch, "negative dimension");
    a_.assign(size_t(rows) * size_t(cols), El::zero(f_));
}

Mat Mat::identity(const FieldPtr& f, int n) {
    Mat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = El::one(f);
    return m;
}

Mat Mat::from_rows(const FieldPtr& f, const std::vector<std::vector<long long>>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    Mat m(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[size_t(i)].size()) != c) fail(Errc::ShapeMismatch, "ragged rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = El::of_int(f, rows[size_t(i)][size_t(j)]);
    }
    return m;
}

Mat Mat::kronecker(const Mat& a, const Mat& b) {
    check_same_field(a.f_, b.f_);
    Mat m(a.f_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int s = 0; s < b.rows_; ++s)
                for (int t = 0; t < b.cols_; ++t)
                    m.at(i * b.rows_ + s, j * b.cols_ + t) = a.at(i, j) * b.at(s, t);
        }
    return m;
}

Mat Mat::block_diag(const std::vector<Mat>& blocks) {
    if (blocks.empty()) fail(Errc::BadInput, "block_diag of nothing");
    int n = 0;
    for (const auto& b : blocks) {
        check_same_field(blocks[0].f_, b.f_);
        if (b.rows_ != b.cols_) fail(Errc::ShapeMismatch, "non-square block");
        n += b.rows_;
    }
    Mat m(blocks[0].f_, n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) m.at(off + i, off + j) = b.at(i, j);
        off += b.rows_;
    }
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    check_same_field(f_, o.f_);
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::ShapeMismatch, "add");
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    check_same_field(f_, o.f_);
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(Errc::ShapeMismatch, "sub");
    Mat m = *this;
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    check_same_field(f_, o.f_);
    if (cols_ != o.rows_) fail(Errc::ShapeMismatch, "mul");
    Mat m(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int l = 0; l < cols_; ++l) {
            const El& v = at(i, l);
            if (v.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j)
                m.at(i, j) = m.at(i, j) + v * o.at(l, j);
        }
    return m;
}

Mat Mat::scaled(const El& s) const {
    Mat m = *this;
    for (auto& v : m.a_) v = v * s;
    return m;
}

bool Mat::operator==(const Mat& o) const {
    if (f_.get() != o.f_.get() || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return a_ == o.a_;
}

Mat Mat::transpose() const {
    Mat m(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Mat Mat::pow(uint64_t e) const {
    if (rows_ != cols_) fail(Errc::ShapeMismatch, "pow of non-square");
    Mat r = identity(f_, rows_);
    Mat b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

El Mat::trace() const {
    if (rows_ != cols_) fail(Errc::ShapeMismatch, "trace of non-square");
    El t = El::zero(f_);
    for (int i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

bool Mat::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(f_, rows_);
}

std::string Mat::encode() const {
    std::string s;
    s.reserve(8 + a_.size() * f_->k() * 4);
    auto push32 = [&s](uint32_t v) {
        for (int b = 0; b < 4; ++b) s += char((v >> (8 * b)) & 0xff);
    };
    push32(uint32_t(rows_));
    push32(uint32_t(cols_));
    for (const auto& v : a_)
        for (auto c : v.coeffs()) push32(c);
    return s;
}

Mat::Echelon Mat::rref() const {
    Echelon e;
    e.r = *this;
    Mat& m = e.r;
    int lead = 0;
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
        int piv = -1;
        for (int i = lead; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != lead)
            for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(lead, j));
        El inv = m.at(lead, col).inverse();
        for (int j = col; j < cols_; ++j) m.at(lead, j) = m.at(lead, j) * inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == lead || m.at(i, col).is_zero()) continue;
            El f = m.at(i, col);
            for (int j = col; j < cols_; ++j) m.at(i, j) = m.at(i, j) - f * m.at(lead, j);
        }
        e.pivots.push_back(col);
        ++lead;
    }
    e.rank = lead;
    return e;
}

int Mat::rank() const { return rref().rank; }

Mat Mat::inverse() const {
    if (rows_ != cols_) fail(Errc::ShapeMismatch, "inverse of non-square");
    int n = rows_;
    Mat aug(f_, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = El::one(f_);
    }
    auto e = aug.rref();
    for (int i = 0; i < n; ++i)
        if (e.r.at(i, i).is_zero()) fail(Errc::Singular, "matrix not invertible");
    return e.r.submatrix(0, n, n, n);
}

El Mat::det() const {
    if (rows_ != cols_) fail(Errc::ShapeMismatch, "det of non-square");
    Mat m = *this;
    El d = El::one(f_);
    int n = rows_;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) return El::zero(f_);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            d = -d;
        }
        d = d * m.at(col, col);
        El inv = m.at(col, col).inverse();
        for (int i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            El f = m.at(i, col) * inv;
            for (int j = col; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return d;
}

Mat Mat::row(int i) const { return submatrix(i, 0, 1, cols_); }
Mat Mat::col(int j) const { return submatrix(0, j, rows_, 1); }

Mat Mat::submatrix(int r0, int c0, int r, int c) const {
    if (r0 < 0 || c0 < 0 || r0 + r > rows_ || c0 + c > cols_)
        fail(Errc::ShapeMismatch, "submatrix out of range");
    Mat m(f_, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) fail(Errc::ShapeMismatch, "solve");
    int n = a.rows(), m = a.cols(), w = b.cols();
    Mat aug(a.field(), n, m + w);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) aug.at(i, j) = a.at(i, j);
        for (int j = 0; j < w; ++j) aug.at(i, m + j) = b.at(i, j);
    }
    auto e = aug.rref();
    Mat x(a.field(), m, w);
    for (int r = 0; r < e.rank; ++r) {
        int piv = e.pivots[size_t(r)];
        if (piv >= m) return std::nullopt; // pivot in RHS block: inconsistent
        for (int j = 0; j < w; ++j) x.at(piv, j) = e.r.at(r, m + j);
    }
    return x;
}

Mat nullspace(const Mat& a) {
    auto e = a.rref();
    int n = a.cols();
    std::vector<bool> is_pivot(size_t(n), false);
    for (int c : e.pivots) is_pivot[size_t(c)] = true;
    Mat basis(a.field(), n - e.rank, n);
    int r = 0;
    for (int freec = 0; freec < n; ++freec) {
        if (is_pivot[size_t(freec)]) continue;
        basis.at(r, freec) = El::one(a.field());
        for (int pr = 0; pr < e.rank; ++pr)
            basis.at(r, e.pivots[size_t(pr)]) = -e.r.at(pr, freec);
        ++r;
    }
    return basis;
}

Mat row_basis(const Mat& a) {
    auto e = a.rref();
    return e.r.submatrix(0, 0, e.rank, a.cols());
}

std::optional<Mat> coords_in_row_basis(const Mat& basis, const Mat& v) {
    // rows of v expressed in the rows of basis: returns c with c * basis == v
    if (v.cols() != basis.cols()) fail(Errc::ShapeMismatch, "coords");
    auto sol = solve(basis.transpose(), v.transpose());
    if (!sol) return std::nullopt;
    return sol->transpose();
}

// --- IO ---

void write_matrices(std::ostream& os, const std::vector<Mat>& ms) {
    if (ms.empty()) fail(Errc::BadInput, "no matrices to write");
    const auto& f = ms[0].field();
    os << "GF " << f->p() << " " << f->k() << "\n";
    for (const auto& m : ms) {
        if (m.field().get() != f.get()) fail(Errc::FieldMismatch, "mixed fields in output");
        os << m.rows() << " " << m.cols() << "\n";
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) {
                if (j) os << ' ';
                os << m.at(i, j).str();
            }
            os << "\n";
        }
    }
}

std::vector<Mat> read_matrices(std::istream& is) {
    std::string tag;
    uint32_t p = 0, k = 0;
    if (!(is >> tag >> p >> k) || tag != "GF") fail(Errc::ParseError, "expected header 'GF p k'");
    auto f = make_field(p, k);
    std::vector<Mat> out;
    int r = 0, c = 0;
    while (is >> r >> c) {
        if (r <= 0 || c <= 0) fail(Errc::ParseError, "bad matrix shape");
        Mat m(f, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                std::string ent;
                if (!(is >> ent)) fail(Errc::ParseError, "truncated matrix entries");
                std::vector<uint32_t> coeffs;
                size_t pos = 0;
                while (pos <= ent.size()) {
                    size_t nxt = ent.find(':', pos);
                    std::string piece =
                        ent.substr(pos, nxt == std::string::npos ? std::string::npos : nxt - pos);
                    if (piece.empty()) fail(Errc::ParseError, "empty coefficient in '" + ent + "'");
                    coeffs.push_back(uint32_t(std::stoul(piece)));
                    if (nxt == std::string::npos) break;
                    pos = nxt + 1;
                }
                if (coeffs.size() != k)
                    fail(Errc::ParseError, "entry '" + ent + "' has wrong coefficient count");
                m.at(i, j) = El(f, std::move(coeffs));
            }
        out.push_back(std::move(m));
    }
    if (out.empty()) fail(Errc::ParseError, "no matrices in input");
    return out;
}

const char* errc_name_impl(Errc c) {
    switch (c) {
        case Errc::NonPrime: return "NonPrime";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::Singular: return "Singular";
        case Errc::DivideByZero: return "DivideByZero";
        case Errc::BadInput: return "BadInput";
        case Errc::UnknownType: return "UnknownType";
        case Errc::RankOutOfRange: return "RankOutOfRange";
        case Errc::DimCap: return "DimCap";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::NotUnipotent: return "NotUnipotent";
        case Errc::OrderTooLarge: return "OrderTooLarge";
        case Errc::CharTooSmall: return "CharTooSmall";
        case Errc::NotInvariant: return "NotInvariant";
        case Errc::Inconclusive: return "Inconclusive";
        case Errc::NotInParabolic: return "NotInParabolic";
        case Errc::NegativeMultiplicity: return "NegativeMultiplicity";
        case Errc::MissingModularData: return "MissingModularData";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace satcr::gf

namespace satcr {
const char* errc_name(Errc c) { return gf::errc_name_impl(c); }
} // namespace satcr
