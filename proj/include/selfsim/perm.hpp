#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace selfsim {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Permutation of {0, ..., m-1} acting on the right: (i)(ab) = ((i)a)b.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<Letter> image);
  static Perm identity(std::size_t m);
  /// The m-cycle i -> i+1 mod m, raised to the power k.
  static Perm cycle_power(std::size_t m, long long k);

  std::size_t degree() const { return image_.size(); }
  Letter operator()(Letter i) const { return image_[i]; }
  const std::vector<Letter> &image() const { return image_; }

  bool is_identity() const;
  /// this then o.
  Perm then(const Perm &o) const;
  Perm inverse() const;
  std::string to_string() const;

  friend bool operator==(const Perm &, const Perm &) = default;

private:
  std::vector<Letter> image_;
};

} // namespace selfsim
