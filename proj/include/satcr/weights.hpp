#pragma once

// Weight multisets of Weyl modules and tensor-square decomposition.
//
// Weights live in fundamental-weight coordinates (dominant = all coords >= 0).
// Multiplicities come from Freudenthal's recursion, run on dominant weights
// and expanded over Weyl orbits; all inner products are taken in the
// short-root-norm-2 scaling, which keeps every intermediate value an integer.
// Decomposition repeatedly strips the character of the highest remaining
// dominant weight; characters default to Weyl characters, with a small
// embedded table of modular deficits for the cases where the reduction is
// known to lose a factor (currently G2, p = 7, highest weight 2*omega_2).

#include <map>
#include <optional>
#include <vector>

#include "satcr/rootsys.hpp"

namespace satcr::lie {

struct WeightMultiset {
    RootSystem rs;
    std::map<Weight, long long> entries;
    long long total() const {
        long long t = 0;
        for (auto& [w, m] : entries) t += m;
        return t;
    }
};

// exact Weyl dimension formula value
long long weyl_dim(const RootSystem& rs, const Weight& lambda);

// smallest Weyl dimension over the fundamental weights
long long min_fundamental_dim(const RootSystem& rs);

// index of a fundamental weight achieving min_fundamental_dim (lowest index wins)
int min_fundamental_index(const RootSystem& rs);

// all weights of the Weyl module V(lambda) with multiplicities; total == weyl_dim
WeightMultiset weyl_weights(const RootSystem& rs, const Weight& lambda, long long size_cap = 100000);

// weights of V (x) V^*: all pairwise differences, dim^2 entries
WeightMultiset tensor_square_weights(const RootSystem& rs, const Weight& lambda,
                                     long long size_cap = 100000);

// one known modular character deficit: at the given prime, the irreducible
// with this highest weight misses `missing` relative to the Weyl character
struct CharacterDeficit {
    char letter;
    int rank;
    int p;
    Weight highest;
    std::map<Weight, long long> missing;
};

const std::vector<CharacterDeficit>& builtin_deficits();

struct DeficitUse {
    char letter;
    int rank;
    int p;
    Weight highest;
};

struct DecompositionResult {
    std::vector<Weight> factors; // dominant highest weights, sorted, with repetition
    std::vector<DeficitUse> deficits_used;
};

// Repeatedly select the maximal dominant weight with positive multiplicity
// (max coroot-height, then lexicographically largest unless tie_break_low)
// and subtract its character.  p = 0 means characteristic zero (no deficits).
DecompositionResult decompose_by_subtraction(const WeightMultiset& ws, int p,
                                             const std::vector<CharacterDeficit>& overrides,
                                             bool tie_break_low = false);

// dimension of the subtracted character for a factor (Weyl dim minus deficit)
long long factor_dim(const RootSystem& rs, const Weight& mu, int p,
                     const std::vector<CharacterDeficit>& overrides);

// multiplicity of the adjoint highest weight among the factors of V (x) V^*
long long adjoint_multiplicity_in_tensor_square(const RootSystem& rs, const Weight& lambda_min,
                                                int p);

// root-lattice coordinates of a fundamental-coords vector, if integral
std::optional<std::vector<long long>> weight_root_coords(const RootSystem& rs, const Weight& w);

// dominant Weyl-orbit representative
Weight dominant_rep(const RootSystem& rs, Weight w);

} // namespace satcr::lie
