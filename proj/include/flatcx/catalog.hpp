#pragma once

#include <string>
#include <vector>

#include "flatcx/json_io.hpp"

namespace flatcx {

// A built-in instance with the verdicts a fresh analysis must reproduce.
struct CatalogEntry {
  std::string name;
  std::string description;
  Document payload;
  // Subset of an analysis report; loading fails if it disagrees.
  Json expected;

  Json to_json() const;
};

// kt4, aff_c, abelian4, r4_nonparallel, so3
const std::vector<std::string>& catalog_names();

// Throws NotFound listing the available names.
CatalogEntry load_example(const std::string& name);

// True when every key of `fragment` is present in `report` with an equal
// value, recursing into objects.
bool matches_fragment(const Json& report, const Json& fragment);

// Fixed algebras and structures used by the catalog.
LieAlgebra kt4_algebra();    // [e1,e2] = e3 on R^4
LieAlgebra aff_c_algebra();  // [e1,e3]=e3, [e1,e4]=e4, [e2,e3]=e4, [e2,e4]=-e3
LieAlgebra so3_algebra();
LinearComplexStructure kt4_j();     // J e1 = e2, J e3 = e4
LinearComplexStructure aff_c_j();   // J e1 = e2, J e3 = e4

// Polynomial frames on R^4 whose brackets reproduce kt4 and aff_c with the
// same J; fields are ordered (e1, e3, e2, e4).
Frame kt4_frame();
Frame aff_c_frame();
// Coordinate fields d1..d_{2n}.
Frame coordinate_frame(std::size_t half_dim);
// (d1, d3, d2, -x3^2 d1 + d4)
Frame r4_nonparallel_frame();

}  // namespace flatcx
