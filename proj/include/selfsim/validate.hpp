#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selfsim/dense_poly.hpp"

namespace selfsim {

struct Violation {
  std::string code;    // machine-readable tag, e.g. "not_irreducible"
  int poly_index = -1; // index into the polynomial list, -1 if global
  std::string message;
};

/// Outcome of checking a prime and a polynomial list f_0 = x, f_1, ... against
/// the hypotheses of the Borel family, plus the extra normalization f_i(1) = 1
/// needed by the metabelian (lamplighter) family.
struct ValidationReport {
  bool valid = true;             // Borel hypotheses
  bool lamplighter_valid = true; // valid && f_i(1) = 1 for i >= 1
  std::vector<Violation> violations;
  std::vector<Violation> lamplighter_violations;
  /// How the admissible set "F_p[x] minus F_p(x-1)" was read.
  std::string interpretation;
};

ValidationReport validate_config(long long p, const std::vector<DensePoly> &polys);

/// First monic irreducible polynomial of the given degree, in the order of
/// monic_polys_of_degree, that is admissible for the lamplighter family
/// (irreducible, f != x, f != x-1, f(1) = 1) and not in `exclude`.
std::optional<DensePoly> find_lamplighter_poly(Residue p, unsigned degree,
                                               const std::vector<DensePoly> &exclude = {});

} // namespace selfsim
