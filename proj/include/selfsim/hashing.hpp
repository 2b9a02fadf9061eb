#pragma once

#include <cstddef>
#include <cstdint>

namespace selfsim {

inline void hash_combine(std::size_t &seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

} // namespace selfsim
