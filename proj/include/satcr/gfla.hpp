#pragma once

// Exact linear algebra over finite fields GF(p^k).
//
// Extension fields use a polynomial basis modulo a canonical monic polynomial:
// an embedded table (smallest primitive polynomial, so the class of x generates
// the multiplicative group) covers p <= 11, k <= 12; outside the table the
// lexicographically smallest monic irreducible is computed on the fly.  Two
// calls to make_field(p, k) always return the same shared context, so field
// identity is pointer identity.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "satcr/error.hpp"

namespace satcr::gf {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Shared immutable field context.
class Field : public std::enable_shared_from_this<Field> {
  public:
    uint32_t p() const { return p_; }
    uint32_t k() const { return k_; }
    uint64_t size() const { return size_; }
    // Reduction polynomial, coefficients c0..ck (monic, ck == 1).
    const std::vector<uint32_t>& poly() const { return poly_; }

    static FieldPtr make(uint32_t p, uint32_t k);

  private:
    friend class El;
    Field(uint32_t p, uint32_t k, std::vector<uint32_t> poly);

    uint32_t p_, k_;
    uint64_t size_;
    std::vector<uint32_t> poly_;
    std::vector<uint32_t> xk_; // x^k reduced: -(c0..c_{k-1}) mod p
};

FieldPtr make_field(uint32_t p, uint32_t k);

// Field element: coefficient vector c0..c_{k-1} over the prime field.
class El {
  public:
    El() = default;
    El(FieldPtr f, std::vector<uint32_t> coeffs);

    static El zero(const FieldPtr& f);
    static El one(const FieldPtr& f);
    // Scalar from the prime subfield (reduced mod p; accepts negatives).
    static El of_int(const FieldPtr& f, long long v);
    // The class of x (a multiplicative generator for tabled fields).
    static El gen(const FieldPtr& f);
    // Element with canonical index i = sum coeff_j * p^j, 0 <= i < p^k.
    static El at_index(const FieldPtr& f, uint64_t i);

    const FieldPtr& field() const { return f_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    uint64_t index() const; // inverse of at_index

    bool is_zero() const;
    bool is_one() const;

    El operator+(const El& o) const;
    El operator-(const El& o) const;
    El operator-() const;
    El operator*(const El& o) const;
    El operator/(const El& o) const;
    bool operator==(const El& o) const;
    bool operator!=(const El& o) const { return !(*this == o); }

    El inverse() const;            // throws DivideByZero on 0
    El pow(uint64_t e) const;
    El frobenius_power(uint32_t i) const; // x -> x^(p^i)

    std::string str() const; // "c0:c1:...:c_{k-1}"

  private:
    FieldPtr f_;
    std::vector<uint32_t> c_;
};

// All field elements in canonical index order.
std::vector<El> all_elements(const FieldPtr& f);
// Elements of the subfield GF(p^d) inside GF(p^k) (d | k), i.e. fixed points of
// the d-th Frobenius power, in canonical index order.
std::vector<El> subfield_elements(const FieldPtr& f, uint32_t d);

// Dense matrix over a fixed field.  Vectors are columns; matrices act on the
// left.  Row-space bases (submodules etc.) are stored as rows in RREF.
class Mat {
  public:
    Mat() = default;
    Mat(FieldPtr f, int rows, int cols); // zero-filled

    static Mat identity(const FieldPtr& f, int n);
    static Mat from_rows(const FieldPtr& f, const std::vector<std::vector<long long>>& rows);
    static Mat kronecker(const Mat& a, const Mat& b);
    static Mat block_diag(const std::vector<Mat>& blocks);

    const FieldPtr& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    El& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const El& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat scaled(const El& s) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    Mat pow(uint64_t e) const;
    El trace() const;
    El det() const;
    bool is_zero() const;
    bool is_identity() const;

    // Canonical byte encoding (shape + entries); usable as map key and for
    // deterministic ordering.
    std::string encode() const;

    struct Echelon; // { Mat r; int rank; pivots; } - defined after the class
    Echelon rref() const;
    int rank() const;
    Mat inverse() const; // throws Singular

    Mat row(int i) const;        // 1 x cols
    Mat col(int j) const;        // rows x 1
    Mat submatrix(int r0, int c0, int r, int c) const;

  private:
    FieldPtr f_;
    int rows_ = 0, cols_ = 0;
    std::vector<El> a_;
};

struct Mat::Echelon {
    Mat r;                   // reduced row echelon form
    int rank = 0;
    std::vector<int> pivots; // pivot column per nonzero row
};

// Solve A X = B; returns std::nullopt when inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);
// Basis of the right nullspace {v : A v = 0}, returned as rows.
Mat nullspace(const Mat& a);
// Row-space basis in RREF (rows of `a` spanning, possibly dependent).
Mat row_basis(const Mat& a);
// Coordinates of the rows of v in the RREF row basis B (v = coords * B), or
// nullopt when some row falls outside the row space.
std::optional<Mat> coords_in_row_basis(const Mat& basis, const Mat& v);

// Matrix text IO.  Format: one header line "GF p k", then per matrix a line
// "rows cols" followed by rows*cols whitespace-separated entries "c0:c1:...".
void write_matrices(std::ostream& os, const std::vector<Mat>& ms);
std::vector<Mat> read_matrices(std::istream& is);

} // namespace satcr::gf
