#pragma once

#include <random>

#include "symspace/linalg.hpp"
#include "symspace/matrix.hpp"

namespace symspace::testing {

inline Scalar random_scalar(std::mt19937_64& rng, Ring ring, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Scalar s(d(rng));
  if (ring != Ring::R) s[1] = d(rng);
  if (ring == Ring::H) {
    s[2] = d(rng);
    s[3] = d(rng);
  }
  return s;
}

inline Matrix random_matrix(std::mt19937_64& rng, Ring ring, std::size_t rows, std::size_t cols, int lo = -3, int hi = 3) {
  Matrix m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(rng, ring, lo, hi);
  return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, Ring ring, std::size_t n) {
  for (;;) {
    Matrix m = random_matrix(rng, ring, n, n);
    if (is_invertible(m)) return m;
  }
}

constexpr Ring kRings[] = {Ring::R, Ring::C, Ring::H};

}  // namespace symspace::testing
