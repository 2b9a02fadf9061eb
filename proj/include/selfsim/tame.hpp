#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "selfsim/instances/lamplighter.hpp"

namespace selfsim {

using Rational = boost::multiprecision::cpp_rational;

/// A nonzero character Q -> R, by its values on the generators.
using Character = std::vector<Rational>;
using SigmaCSet = std::vector<Character>;

/// The complement of the invariant for the metabelian family: the unit
/// characters e_j and the character x_j -> -deg f_j.
SigmaCSet sigma_c_for_lamp(const LamplighterInstance &inst);

/// Whether 0 = sum c_i v_i for some c_i > 0, decided exactly by
/// Fourier-Motzkin elimination.
bool origin_in_open_cone(const std::vector<Character> &vs);

/// Largest m <= max_m such that no set of at most m points has the origin in
/// its open conic hull.
int tame_degree(const SigmaCSet &points, int max_m);

struct FinitenessReport {
  int tame_degree = 0;
  int fp_type = 0;
  bool finitely_presented = false;
  bool theorem_backed = false;

  nlohmann::json to_json() const;
};

/// For A ⋊ Z^n with A of finite exponent and Krull dimension 1, type FP_m
/// follows from m-tameness unconditionally.
FinitenessReport finiteness_report(const LamplighterInstance &inst);

} // namespace selfsim
