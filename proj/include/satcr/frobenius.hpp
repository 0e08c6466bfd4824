#pragma once

// Steinberg-type endomorphisms of matrix groups over finite fields: entrywise
// q-th powers, conjugation, the unitary twist g -> a (g^T)^{-1} a^{-1}, maps
// acting blockwise on block-diagonal groups with an optional block
// permutation, and composites of these.  Fixed-point subgroups are computed
// by full enumeration and returned verified closed.

#include <cstdint>
#include <optional>
#include <vector>

#include "satcr/satur.hpp"

namespace satcr::frob {

struct Endo {
    enum class Kind { Standard, Conj, TransposeInverseConj, BlockMap, Composite };
    Kind kind = Kind::Standard;
    uint32_t frob_exp = 0;   // Standard: entrywise x -> x^(p^frob_exp)
    gf::Mat mat, mat_inv;    // Conj / TransposeInverseConj
    std::vector<Endo> parts; // BlockMap: one per diagonal block; Composite: steps
    std::vector<int> perm;   // BlockMap: output block i is transformed block perm[i]
};

Endo standard_endo(uint32_t frob_exp);
Endo conj_endo(const gf::Mat& a);
// g -> a (g^T)^{-1} a^{-1}
Endo transpose_inverse_conj(const gf::Mat& a);
// acts on block-diagonal matrices with parts.size() equal blocks
Endo block_map(std::vector<int> perm, std::vector<Endo> parts);
// steps applied left to right
Endo composite(std::vector<Endo> steps);

// image of one matrix; BlockMap requires a block-diagonal input
gf::Mat apply(const Endo& e, const gf::Mat& g);

// total entrywise Frobenius exponent when the endomorphism twists every
// matrix entry uniformly (BlockMap parts must agree); nullopt otherwise
std::optional<uint32_t> uniform_frob_exp(const Endo& e);

struct FixedPointGroup {
    rep::MatGroup group; // gens = elements = every fixed element
    Endo endo;
};

// enumerate g, keep the elements fixed by e, and verify the result is closed
// under multiplication; caches g's element set
FixedPointGroup fixed_points(rep::MatGroup& g, const Endo& e, size_t cap = 1 << 20);

// checks sigma(u^t) = sigma(u)^(t^q) on `samples` random order-p unipotent
// u (block-diagonal when e acts blockwise) and random scalars t, where
// q = p^uniform_frob_exp(e); throws BadInput without a uniform twist
bool check_frobsat(const Endo& e, const gf::FieldPtr& f, int n, int samples, uint64_t seed = 1);

// does apply(e, -) map f_saturated_closure(g, t_field) into itself?
bool sigma_stability_of_closure(const rep::MatGroup& g, const Endo& e,
                                const gf::FieldPtr& t_field, size_t cap = 1 << 20);

// verifies that every transvection of SL_2 over ext arises as a t-power of
// the corresponding unit transvection over base, and lies in the saturation
// closure of SL_2(base) with scalars from ext
bool nori_closure_check(const gf::FieldPtr& base, const gf::FieldPtr& ext, size_t cap = 1 << 20);

} // namespace satcr::frob
