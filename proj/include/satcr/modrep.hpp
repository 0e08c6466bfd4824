#pragma once

// Module analysis for finitely generated matrix groups over finite fields:
// spinning, proper-submodule search (randomized algebra elements + Norton's
// irreducibility certificate, with an exhaustive seed fallback at small
// sizes), complement solving for a given invariant subspace, recursive
// semisimplicity testing, composition factors, and invariant complements
// under the conjugation action on the full matrix space.
//
// Vectors are columns and generators act on the left; subspace bases are
// stored as RREF rows (see gfla.hpp).  Randomized routines take an explicit
// seed; returned verdicts are certificates and do not depend on the seed.

#include <cstdint>
#include <optional>
#include <vector>

#include "satcr/gfla.hpp"

namespace satcr::rep {

struct MatGroup {
    gf::FieldPtr field;
    int dim = 0;
    std::vector<gf::Mat> gens;
    std::optional<std::vector<gf::Mat>> element_set; // filled by ensure_elements
};

// validates shapes and invertibility
MatGroup make_group(const gf::FieldPtr& f, int dim, std::vector<gf::Mat> gens);

// closure of the generators under multiplication; throws CapExceeded past cap
const std::vector<gf::Mat>& ensure_elements(MatGroup& g, size_t cap = 1 << 20);

struct Submodule {
    gf::Mat basis; // RREF rows spanning the subspace
    int dim() const { return basis.rows(); }
};

// smallest invariant subspace containing the rows of seeds
Submodule spin(const MatGroup& g, const gf::Mat& seeds);

// a proper nonzero invariant subspace, or nullopt with irreducibility
// certified (Norton test, else exhaustive seeds for dim <= 12, |F| <= 16);
// throws Inconclusive past those bounds instead of guessing
std::optional<Submodule> find_proper_submodule(const MatGroup& g, uint64_t seed = 1);

bool is_irreducible(const MatGroup& g, uint64_t seed = 1);

// invariant direct complement to w obtained from a module section of V -> V/w
std::optional<Submodule> splits(const MatGroup& g, const Submodule& w);

struct SemisimpleReport {
    bool semisimple = false;
    std::vector<Submodule> summands;     // irreducible summands when semisimple
    std::optional<Submodule> non_split;  // witness submodule otherwise
};

SemisimpleReport is_semisimple(const MatGroup& g, uint64_t seed = 1);

// action restricted to an invariant subspace, in the coordinates of its basis
MatGroup restrict_action(const MatGroup& g, const Submodule& w);
// action on V/w, in the coordinates of the non-pivot standard basis vectors
MatGroup quotient_action(const MatGroup& g, const Submodule& w);

// irreducible composition factors (dims sum to g.dim)
std::vector<MatGroup> composition_factors(const MatGroup& g, uint64_t seed = 1);

// conjugation action X -> g X g^{-1} on the n^2-dimensional matrix space
MatGroup conjugation_module(const MatGroup& g);

// 1 x n^2 row holding m in the column-stacked coordinates used above
gf::Mat mat_to_vec_row(const gf::Mat& m);

// basis of the traceless matrices inside the n^2-space, as RREF rows
gf::Mat traceless_basis(const gf::FieldPtr& f, int n);

// invariant complement of sub inside the full matrix space under conjugation
// by g; throws NotInvariant if sub is not stable
std::optional<Submodule> invariant_complement(const MatGroup& g, const Submodule& sub);

// --- polynomial helpers over a finite field (exposed for cross-checks) ---

// coefficients low-to-high, normalized; zero polynomial = empty vector
using Poly = std::vector<gf::El>;

Poly min_poly(const gf::Mat& m);

// distinct monic irreducible factors, canonically sorted
std::vector<Poly> irreducible_factors(const Poly& f, const gf::FieldPtr& field, uint64_t seed = 1);

gf::Mat eval_poly(const Poly& f, const gf::Mat& m);

} // namespace satcr::rep
