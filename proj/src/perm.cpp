#include "selfsim/perm.hpp"

#include <sstream>
#include <stdexcept>

namespace selfsim {

Perm::Perm(std::vector<Letter> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (Letter v : image_) {
    if (v >= image_.size() || seen[v]) throw std::invalid_argument("image array is not a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t m) {
  Perm p;
  p.image_.resize(m);
  for (std::size_t i = 0; i < m; ++i) p.image_[i] = static_cast<Letter>(i);
  return p;
}

Perm Perm::cycle_power(std::size_t m, long long k) {
  Perm p;
  p.image_.resize(m);
  const long long mm = static_cast<long long>(m);
  const long long s = ((k % mm) + mm) % mm;
  for (std::size_t i = 0; i < m; ++i) p.image_[i] = static_cast<Letter>((static_cast<long long>(i) + s) % mm);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Perm Perm::then(const Perm &o) const {
  if (o.degree() != degree()) throw std::invalid_argument("permutation degree mismatch");
  Perm r;
  r.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) r.image_[i] = o.image_[image_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) r.image_[image_[i]] = static_cast<Letter>(i);
  return r;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < image_.size(); ++i) os << (i ? "," : "") << image_[i];
  os << "]";
  return os.str();
}

} // namespace selfsim
