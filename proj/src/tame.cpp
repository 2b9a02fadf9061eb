#include "selfsim/tame.hpp"

#include <algorithm>
#include <stdexcept>

namespace selfsim {

namespace {

// a . lambda <= b
struct Row {
  std::vector<Rational> a;
  Rational b;
};

bool feasible(std::vector<Row> rows, std::size_t vars) {
  for (std::size_t v = 0; v < vars; ++v) {
    std::vector<Row> pos, neg, keep;
    for (auto &r : rows) {
      if (r.a[v] > 0)
        pos.push_back(std::move(r));
      else if (r.a[v] < 0)
        neg.push_back(std::move(r));
      else
        keep.push_back(std::move(r));
    }
    for (const auto &P : pos)
      for (const auto &N : neg) {
        // Combine so the coefficient of v cancels.
        Rational sp = -N.a[v], sn = P.a[v];
        Row r{std::vector<Rational>(vars), sp * P.b + sn * N.b};
        for (std::size_t k = 0; k < vars; ++k) r.a[k] = sp * P.a[k] + sn * N.a[k];
        keep.push_back(std::move(r));
      }
    rows = std::move(keep);
  }
  for (const auto &r : rows)
    if (r.b < 0) return false;
  return true;
}

} // namespace

SigmaCSet sigma_c_for_lamp(const LamplighterInstance &inst) {
  const std::size_t n = inst.rank();
  SigmaCSet out;
  for (std::size_t i = 0; i < n; ++i) {
    Character c(n, 0);
    c[i] = 1;
    out.push_back(c);
  }
  Character last(n);
  for (std::size_t j = 0; j < n; ++j) last[j] = -inst.f(j).degree();
  out.push_back(last);
  return out;
}

bool origin_in_open_cone(const std::vector<Character> &vs) {
  if (vs.empty()) throw std::invalid_argument("empty point set");
  const std::size_t k = vs.size(), dim = vs[0].size();
  // By homogeneity c_i > 0 can be replaced with c_i >= 1.
  std::vector<Row> rows;
  for (std::size_t i = 0; i < k; ++i) {
    Row r{std::vector<Rational>(k), -1};
    r.a[i] = -1;
    rows.push_back(std::move(r));
  }
  for (std::size_t d = 0; d < dim; ++d) {
    Row up{std::vector<Rational>(k), 0}, down{std::vector<Rational>(k), 0};
    for (std::size_t i = 0; i < k; ++i) {
      if (vs[i].size() != dim) throw std::invalid_argument("characters of different lengths");
      up.a[i] = vs[i][d];
      down.a[i] = -vs[i][d];
    }
    rows.push_back(std::move(up));
    rows.push_back(std::move(down));
  }
  return feasible(std::move(rows), k);
}

int tame_degree(const SigmaCSet &points, int max_m) {
  if (max_m < 1) throw std::invalid_argument("max_m must be at least 1");
  for (const auto &c : points) {
    bool zero = true;
    for (const auto &v : c) zero = zero && v == 0;
    if (zero) throw std::invalid_argument("characters must be nonzero");
  }
  const std::size_t n = points.size();
  for (int m = 1; m <= max_m; ++m) {
    if (static_cast<std::size_t>(m) > n) return max_m;
    // Every subset of size exactly m, by a selection mask.
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + m, true);
    do {
      std::vector<Character> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask[i]) sub.push_back(points[i]);
      if (origin_in_open_cone(sub)) return m - 1;
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return max_m;
}

nlohmann::json FinitenessReport::to_json() const {
  return {{"tame_degree", tame_degree},
          {"fp_type", fp_type},
          {"finitely_presented", finitely_presented},
          {"basis", theorem_backed ? "theorem" : "conjecture"}};
}

FinitenessReport finiteness_report(const LamplighterInstance &inst) {
  FinitenessReport r;
  const int n = static_cast<int>(inst.rank());
  r.tame_degree = tame_degree(sigma_c_for_lamp(inst), n + 1);
  r.fp_type = r.tame_degree;
  r.finitely_presented = r.tame_degree >= 2;
  r.theorem_backed = true;
  return r;
}

} // namespace selfsim
