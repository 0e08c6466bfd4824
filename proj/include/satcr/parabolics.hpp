#pragma once

// Cocharacters of GL_n and the structures they cut out: membership in the
// parabolic P_lambda (entries of negative weight vanish), the limit map
// c_lambda (entries of positive weight are zeroed, projecting onto the Levi
// block diagonal), cocharacters adapted to invariant flags, and
// semisimplification of a matrix group by applying c_lambda for a flag built
// from a composition series of the natural module.

#include <cstdint>
#include <vector>

#include "satcr/modrep.hpp"

namespace satcr::par {

// lambda(a) = C diag(a^{k_i}) C^{-1}; conjugation by lambda(a) scales the
// (i, j) entry of C^{-1} g C by a^{k_i - k_j}
struct Cocharacter {
    std::vector<int> exponents; // k_i
    gf::Mat basis;              // C
    gf::Mat basis_inv;          // cached C^{-1}
    int dim() const { return int(exponents.size()); }
};

Cocharacter make_cocharacter(std::vector<int> exponents, const gf::Mat& basis);
Cocharacter trivial_cocharacter(const gf::FieldPtr& f, int n);

// does lim_{a->0} lambda(a) g lambda(a)^{-1} exist, i.e. do all entries of
// C^{-1} g C with k_i < k_j vanish?
bool in_p_lambda(const gf::Mat& g, const Cocharacter& l);

// the limit itself: zero the entries with k_i > k_j, keep the weight-zero
// block diagonal; throws NotInParabolic when the limit does not exist
gf::Mat c_lambda(const gf::Mat& g, const Cocharacter& l);

// cocharacter adapted to a strictly increasing chain of subspaces (RREF row
// bases): basis columns run through the chain layer by layer, exponents drop
// by one per layer, so P_lambda is exactly the stabilizer of the chain
Cocharacter flag_to_cocharacter(const std::vector<rep::Submodule>& chain, const gf::FieldPtr& f,
                                int n);

// the proper nonzero submodules of a full composition series of the natural
// module, strictly increasing
std::vector<rep::Submodule> composition_chain(const rep::MatGroup& g, uint64_t seed = 1);

struct Semisimplification {
    rep::MatGroup group; // generated by the c_lambda images of g's generators
    Cocharacter lambda;  // trivial when g was already semisimple
};

// project onto the Levi of the parabolic stabilizing a composition series;
// the result's natural module is verified semisimple
Semisimplification semisimplify(const rep::MatGroup& g, uint64_t seed = 1);

// does c_lambda(closure(g)) equal closure(c_lambda(g)) elementwise, with
// both saturation closures taken over t_field?
bool check_semisat_commutation(const rep::MatGroup& g, const Cocharacter& l,
                               const gf::FieldPtr& t_field, size_t cap = 1 << 20);

} // namespace satcr::par
