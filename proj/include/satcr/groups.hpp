#pragma once

// Explicit matrix groups used throughout: elementary (transvection) generator
// sets for SL_n, the conjugation action of SL_2 on trace-zero 2x2 matrices in
// characteristic 2, diagonal tori, and classical order formulas used as test
// oracles.

#include <cstdint>
#include <vector>

#include "satcr/modrep.hpp"

namespace satcr::grp {

// identity + t in position (i, j), i != j
gf::Mat transvection(const gf::FieldPtr& f, int n, int i, int j, const gf::El& t);

// x_{i,i+1}(z^m) and x_{i+1,i}(z^m) for all 0 <= m < k, z the field generator.
// Using every basis power keeps the full root subgroups inside the generated
// set, so the group is all of SL_n(F) with no small-field exceptions.
std::vector<gf::Mat> sln_gens(const gf::FieldPtr& f, int n);

rep::MatGroup sl_group(const gf::FieldPtr& f, int n);

// conjugation of g in SL_2 over a field of characteristic 2 on the trace-zero
// matrices, written in the basis (E_12, E_21, I).  For g = (a b; c d) the
// action matrix is ((a^2, b^2, 0), (c^2, d^2, 0), (ac, bd, 1)).
gf::Mat ad_sl2_char2(const gf::Mat& g);

// the whole of Ad(SL_2(F)) in GL_3(F), char 2
rep::MatGroup ad_sl2_char2_group(const gf::FieldPtr& f);

// diag(z, z^{-1}) generating the diagonal torus of SL_2(F)
rep::MatGroup sl2_torus(const gf::FieldPtr& f);

// ones on the antidiagonal (an involution; Gram matrix of the standard
// Hermitian form for unitary twists)
gf::Mat antidiag_ones(const gf::FieldPtr& f, int n);

// block-diagonal product a x b acting on the direct sum
rep::MatGroup product_group(const rep::MatGroup& a, const rep::MatGroup& b);

// |SL_n(q)| = q^{n(n-1)/2} * prod_{i=2..n} (q^i - 1)
uint64_t sl_order(uint64_t q, int n);
// |SU_3(q)| = q^3 (q^2 - 1)(q^3 + 1)
uint64_t su3_order(uint64_t q);

} // namespace satcr::grp
