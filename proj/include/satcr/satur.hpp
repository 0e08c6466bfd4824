#pragma once

// Truncated unipotent calculus: matrix log/exp for elements u = 1 + eps with
// eps^p = 0, t-th powers u^t for field scalars t (computed both by the
// binomial series sum_i binom(t,i) eps^i and by exp(t log u); the two routes
// are cross-checked on every call), Baker-Campbell-Hausdorff products, and a
// finite saturation closure: the smallest subgroup of GL_n containing a given
// group that is closed under u -> u^t for every order-p unipotent u and every
// scalar t drawn from a chosen field.
//
// The scalar field T may be the matrix field itself, a subfield GF(p^d) of it,
// or an extension of a prime matrix field (the matrices are then embedded).

#include <cstdint>
#include <vector>

#include "satcr/modrep.hpp"

namespace satcr::sat {

// u = 1 + eps with eps^p = 0 (so the log/exp series below stop before any
// denominator divisible by p); degree is the least d with eps^d = 0
struct Unipotent {
    gf::Mat u;
    gf::Mat eps;
    int degree = 0;
};

// x^p = 0; degree is the least d with x^d = 0
struct Nilpotent {
    gf::Mat x;
    int degree = 0;
};

// throws NotUnipotent if (u-1)^n != 0, OrderTooLarge if (u-1)^p != 0
Unipotent make_unipotent(const gf::Mat& u);
// throws BadInput if x^n != 0, CharTooSmall if x^p != 0
Nilpotent make_nilpotent(const gf::Mat& x);

// log(1+eps) = sum_{i=1}^{d-1} (-1)^{i+1} eps^i / i
Nilpotent u_log(const Unipotent& u);
// exp(x) = sum_{i=0}^{d-1} x^i / i!
Unipotent u_exp(const Nilpotent& x);

// u^t, computed as sum_i binom(t,i) eps^i with binom(t,i) evaluated in the
// field, and independently as exp(t log u); both routes must agree exactly
Unipotent t_power(const Unipotent& u, const gf::El& t);

// log(exp(x) exp(y)); throws CharTooSmall when the product's nilpotency
// degree exceeds p
Nilpotent bch(const Nilpotent& x, const Nilpotent& y);

// for pairwise commuting factors (e.g. supported on disjoint diagonal
// blocks): does log(u_1 ... u_r) equal log(u_1) + ... + log(u_r)?
// Non-commuting input is a precondition violation and throws BadInput.
bool product_log_additivity(const std::vector<Unipotent>& factors);

// entrywise embedding of a matrix over a prime field into an extension of it
gf::Mat embed_matrix(const gf::Mat& m, const gf::FieldPtr& ext);

// Closure of g under multiplication and under u -> u^t for order-p unipotent
// u and t in T.  Returns the closure with its element set enumerated (sorted
// by canonical encoding) and gens = the embedded input generators plus every
// adjoined t-power.  Throws CapExceeded if the element count passes cap, and
// FieldMismatch if T is neither g's field, a subfield of it, nor an extension
// of a prime matrix field.
rep::MatGroup f_saturated_closure(const rep::MatGroup& g, const gf::FieldPtr& t_field,
                                  size_t cap = 1 << 20);

// true iff u^t stays in g for every order-p unipotent u in g and every t in T
bool is_f_saturated(const rep::MatGroup& g, const gf::FieldPtr& t_field, size_t cap = 1 << 20);

} // namespace satcr::sat
