#include "symspace/realify.hpp"

#include "symspace/error.hpp"
#include "symspace/linalg.hpp"

namespace symspace {

namespace {

Scalar unit(int u) {
  switch (u) {
    case 0: return 1;
    case 1: return Scalar::i();
    case 2: return Scalar::j();
    default: return Scalar::k();
  }
}

std::vector<Matrix> zeros(const std::vector<UnknownShape>& shapes) {
  std::vector<Matrix> out;
  out.reserve(shapes.size());
  for (const auto& s : shapes) out.emplace_back(s.ring, s.rows, s.cols);
  return out;
}

}  // namespace

std::size_t real_coordinate_count(const std::vector<UnknownShape>& shapes) {
  std::size_t n = 0;
  for (const auto& s : shapes) n += s.rows * s.cols * static_cast<std::size_t>(real_rank(s.ring));
  return n;
}

std::vector<Matrix> real_unit(const std::vector<UnknownShape>& shapes, std::size_t coord) {
  std::vector<Matrix> out = zeros(shapes);
  for (std::size_t m = 0; m < shapes.size(); ++m) {
    const std::size_t d = static_cast<std::size_t>(real_rank(shapes[m].ring));
    const std::size_t count = shapes[m].rows * shapes[m].cols * d;
    if (coord < count) {
      const std::size_t entry = coord / d;
      out[m](entry / shapes[m].cols, entry % shapes[m].cols) = unit(static_cast<int>(coord % d));
      return out;
    }
    coord -= count;
  }
  throw Error(ErrorKind::DimensionMismatch, "real coordinate out of range");
}

RealKernel real_kernel(const std::vector<UnknownShape>& shapes, const RealLinearMap& f) {
  const std::size_t n = real_coordinate_count(shapes);
  std::vector<std::vector<Rational>> columns;
  columns.reserve(n);
  std::size_t height = 0;
  for (std::size_t c = 0; c < n; ++c) {
    const std::vector<Matrix> image = f(real_unit(shapes, c));
    std::vector<Rational> col;
    for (const auto& m : image)
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t cc = 0; cc < m.cols(); ++cc)
          for (int u = 0; u < 4; ++u) col.push_back(m(r, cc)[u]);
    if (c == 0) height = col.size();
    if (col.size() != height) throw Error(ErrorKind::DimensionMismatch, "linear map changed its output shape");
    columns.push_back(std::move(col));
  }
  // Keep only rows that are not identically zero.
  std::vector<std::size_t> live;
  for (std::size_t r = 0; r < height; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(columns[c][r]) != 0) {
        live.push_back(r);
        break;
      }
  Matrix system(Ring::R, live.size(), n);
  for (std::size_t r = 0; r < live.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) system(r, c) = Scalar(columns[c][live[r]]);

  const Matrix k = kernel(system);
  RealKernel out;
  out.unknown_dim = n;
  for (std::size_t b = 0; b < k.cols(); ++b) {
    std::vector<Matrix> elem = zeros(shapes);
    for (std::size_t c = 0; c < n; ++c) {
      const Scalar& coeff = k(c, b);
      if (coeff.is_zero()) continue;
      const std::vector<Matrix> u = real_unit(shapes, c);
      for (std::size_t m = 0; m < shapes.size(); ++m) elem[m] += u[m] * coeff;
    }
    out.basis.push_back(std::move(elem));
  }
  return out;
}

}  // namespace symspace
