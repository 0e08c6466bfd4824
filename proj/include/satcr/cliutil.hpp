#pragma once

// Helpers shared between the command-line tool and its tests: spec-string
// parsing for fields and endomorphisms, matrix-file group loading, embedded
// demo inputs, enumeration-cap resolution, and the JSON shapes used on
// stdout.  JSON uses ordered maps so identical inputs dump byte-identically.

#include <string>
#include <vector>

#include "json.hpp"

#include "satcr/frobenius.hpp"
#include "satcr/gfla.hpp"
#include "satcr/modrep.hpp"

namespace satcr::cli {

using json = nlohmann::ordered_json;

// "p:k", e.g. "2:2" for GF(4)
gf::FieldPtr parse_field_spec(const std::string& s);

// "standard:e=E" (entrywise p^E power) or "tw_unitary:q=Q" (transpose-inverse
// conjugated by the antidiagonal, composed with the q-power map; Q must be a
// power of the field characteristic)
frob::Endo parse_endo_spec(const std::string& s, const gf::FieldPtr& f, int n);

// reads a matrix file (gfla text format); every matrix becomes a generator
rep::MatGroup load_group(const std::string& path);

// code-constructed demo inputs; currently "ex4_4", the threefold Kronecker
// product of the natural SL2(GF(9)) module with itself
rep::MatGroup demo_group(const std::string& name);

// enumeration cap: SATCR_CAP from the environment, else 1 << 20
size_t default_cap();

json field_json(const gf::FieldPtr& f);
json mat_json(const gf::Mat& m);     // rows of "c0:c1:..." entry strings
json mats_json(const std::vector<gf::Mat>& ms);

} // namespace satcr::cli
