#include "selfsim/validate.hpp"

#include <algorithm>

namespace selfsim {

ValidationReport validate_config(long long p, const std::vector<DensePoly> &polys) {
  ValidationReport rep;
  rep.interpretation =
      "admissible f_i: nonconstant, monic, irreducible over F_p and different from x-1 "
      "(for irreducible f this is f(1) != 0)";
  auto fail = [&](std::string code, int idx, std::string msg) {
    rep.valid = false;
    rep.violations.push_back({std::move(code), idx, std::move(msg)});
  };

  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    fail("p_not_prime", -1, "p = " + std::to_string(p) + " is not prime");
    rep.lamplighter_valid = false;
    return rep;
  }
  const auto P = static_cast<Residue>(p);
  if (polys.empty()) {
    fail("missing_f0", -1, "the polynomial list must start with f_0 = x");
  } else if (polys[0] != DensePoly::x(P)) {
    fail("bad_f0", 0, "f_0 must be x, got " + polys[0].to_string());
  }

  const DensePoly xm1 = DensePoly::x_minus_one(P);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto &f = polys[i];
    const int idx = static_cast<int>(i);
    const std::string name = "f_" + std::to_string(i) + " = " + f.to_string();
    if (f.modulus() != P && !f.is_zero()) {
      fail("wrong_field", idx, name + " is not over F_" + std::to_string(p));
      continue;
    }
    if (f.degree() < 1) {
      fail("constant", idx, name + " is constant");
      continue;
    }
    if (!f.is_monic()) fail("not_monic", idx, name + " is not monic");
    if (!is_irreducible(f)) fail("not_irreducible", idx, name + " is reducible over F_" + std::to_string(p));
    if (f == xm1) fail("is_x_minus_1", idx, name + " equals x-1");
    for (std::size_t j = 0; j < i; ++j)
      if (polys[j] == f) fail("duplicate", idx, name + " repeats f_" + std::to_string(j));
  }

  rep.lamplighter_valid = rep.valid;
  for (std::size_t i = 1; i < polys.size(); ++i) {
    Residue v = polys[i].eval(1);
    if (v != 1) {
      rep.lamplighter_valid = false;
      rep.lamplighter_violations.push_back({"f_at_one", static_cast<int>(i),
                                            "f_" + std::to_string(i) + "(1) = " + std::to_string(v) + " != 1"});
    }
  }
  return rep;
}

std::optional<DensePoly> find_lamplighter_poly(Residue p, unsigned degree, const std::vector<DensePoly> &exclude) {
  const DensePoly x = DensePoly::x(p), xm1 = DensePoly::x_minus_one(p);
  for (auto &f : monic_polys_of_degree(p, degree)) {
    if (f == x || f == xm1 || f.eval(1) != 1 || !is_irreducible(f)) continue;
    if (std::find(exclude.begin(), exclude.end(), f) != exclude.end()) continue;
    return f;
  }
  return std::nullopt;
}

} // namespace selfsim
