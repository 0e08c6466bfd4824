#pragma once

// Integer Chevalley basis {X_beta : beta in Phi} u {H_1..H_rank} with structure
// constants N(alpha,beta) = +-(p+1) fixed by the extraspecial-pair sign
// convention: order Phi+ by (height, lex); a special pair (alpha < beta,
// alpha+beta in Phi+) is extraspecial when alpha is minimal among special
// pairs with the same sum; extraspecial signs are +, everything else follows
// from antisymmetry, N(-a,-b) = -N(a,b), and the norm-weighted Jacobi
// relations.  The Killing form is assembled blockwise over Z (Cartan block
// plus the kappa(X_beta, X_-beta) pairs) and reduced mod p on demand.

#include <cstdint>
#include <vector>

#include "satcr/gfla.hpp"
#include "satcr/rootsys.hpp"

namespace satcr::lie {

// term list over basis indices; basis order: X_{beta_0..beta_{P-1}} (positive,
// sorted), X_{-beta_0..-beta_{P-1}}, H_1..H_rank
using SparseVec = std::vector<std::pair<int, long long>>;

class ChevalleyBasis {
  public:
    explicit ChevalleyBasis(const RootSystem& rs);

    const RootSystem& root_system() const { return rs_; }
    int num_positive() const { return P_; }
    int dim() const { return 2 * P_ + rs_.rank; }

    int x_index(int pos_idx, bool negative) const { return negative ? P_ + pos_idx : pos_idx; }
    int h_index(int i) const { return 2 * P_ + i; }

    // root coords of a signed root id in [0, 2P)
    RootCoords root_of(int signed_id) const;

    // N(alpha,beta) for signed root ids; requires alpha+beta in Phi
    long long structure_constant(int sa, int sb) const;

    // bracket of two basis elements, as a sparse combination
    SparseVec bracket(int a, int b) const;
    // bracket of sparse combinations
    SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

    // dense integer matrix of ad(basis element)
    std::vector<std::vector<long long>> ad_matrix(int basis_idx) const;

  private:
    RootSystem rs_;
    int P_;
    // special-pair table keyed by (alpha idx, beta idx), alpha < beta
    std::vector<std::vector<std::pair<int, long long>>> special_; // per alpha: (beta, N)
    long long special_lookup(int ia, int ib) const;               // any order
    void build_structure_constants();
};

struct KillingGram {
    std::vector<std::vector<long long>> gram; // dim x dim over Z
};

KillingGram killing_gram(const ChevalleyBasis& cb);

// rank of the Gram matrix reduced mod p equals dim
bool killing_nondegenerate_mod(const KillingGram& kg, int p);

gf::Mat reduce_mod(const std::vector<std::vector<long long>>& m, int p);

struct ViRow {
    int p;
    bool killing_nondegenerate;
    bool very_good_and_e; // very good prime, and p does not divide e(G) (classical)
};

struct ViReport {
    std::vector<ViRow> rows;
    bool all_equal = true;
};

// Compares Killing nondegeneracy mod p against the prime-divisor criterion
// (very good, and for classical types p not dividing e) for all primes <= pmax.
ViReport check_vi_equivalence(char letter, int rank, int pmax);

} // namespace satcr::lie
