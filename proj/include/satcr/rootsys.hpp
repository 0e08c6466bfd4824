#pragma once

// Root systems of types A-G (rank <= 8) built by reflection closure from the
// Cartan matrix, plus the numeric invariants d, a, h, h~, e and good/bad prime
// predicates with the product rule.
//
// Conventions: roots carry integer coordinates over the simple roots; the
// Cartan matrix entry cartan[i][j] = <alpha_i, alpha_j^vee>; d[i] = half the
// squared length of alpha_i, normalised so short roots have d = 1.  For G2 the
// first node is the long root (so the adjoint fundamental weight is the first
// one and the 7-dimensional module sits at the second).

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "satcr/error.hpp"

namespace satcr::lie {

using RootCoords = std::vector<int>; // over simple roots
using Weight = std::vector<int>;     // over fundamental weights

struct RootSystem {
    char letter = 0; // 'A'..'G'
    int rank = 0;
    std::vector<std::vector<int>> cartan;
    std::vector<int> d; // half squared lengths of simple roots
    std::vector<RootCoords> positive_roots; // sorted by (height, lex)

    int num_positive() const { return int(positive_roots.size()); }
    int dimension() const { return 2 * num_positive() + rank; } // |Phi| + rank

    bool is_root(const RootCoords& c) const;
    std::optional<int> positive_index(const RootCoords& c) const;
    static int height(const RootCoords& c);

    // <beta, alpha_j^vee> for beta in root coords
    int pairing_with_simple_coroot(const RootCoords& beta, int j) const;
    // (beta,beta)/2 in the short-root-is-1 normalisation
    int half_norm(const RootCoords& beta) const;
    // coords of beta^vee over the simple coroots (integral)
    RootCoords coroot_coords(const RootCoords& beta) const;
    // 2(beta,gamma)/(gamma,gamma) for roots beta, gamma
    int pairing_with_coroot(const RootCoords& beta, const RootCoords& gamma) const;
    // (beta,gamma) scaled so that short roots have norm 2 (always integral)
    int inner(const RootCoords& beta, const RootCoords& gamma) const;

    RootCoords simple_reflection(const RootCoords& beta, int j) const;
    RootCoords highest_root() const;

    // fundamental coordinates of a root-lattice element
    Weight root_to_weight(const RootCoords& c) const;
    // weight reflection s_j in fundamental coordinates
    Weight reflect_weight(const Weight& w, int j) const;

  private:
    std::map<RootCoords, int> index_; // positives only
    friend RootSystem build_root_system(char, int);
};

RootSystem build_root_system(char letter, int rank);

std::set<int> bad_primes(const RootSystem& rs);
bool is_good(const RootSystem& rs, int p);
bool is_very_good(const RootSystem& rs, int p);

// h + 1 == dim/rank, an identity valid for every simple type
bool check_h_identity(const RootSystem& rs);

struct SimpleType {
    char letter;
    int rank;
};

// Parses "E8", "A1xA1", "B3xT2", "T1" (T = torus factors, contributing no
// simple components).  Case-insensitive on the letter.
std::vector<SimpleType> parse_type_list(const std::string& s);

struct GroupInvariants {
    long long d = 1;
    long long a = 1;
    long long h = 1;
    long long h_tilde = 1;
    std::optional<long long> e; // classical components only
    std::set<int> bad_primes;
    bool simply_connected = true;
};

// Tables for simple types combined with the product rule value = max(1, ...).
// B2 is reported through the C2 column (the tables index it that way).
GroupInvariants invariants(const std::vector<SimpleType>& components, bool simply_connected);

// table values for one simple factor
long long d_of_simple(SimpleType t);
long long h_of_simple(SimpleType t);
std::optional<long long> e_of_simple(SimpleType t);

} // namespace satcr::lie
