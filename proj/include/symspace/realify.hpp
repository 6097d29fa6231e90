#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "symspace/matrix.hpp"

namespace symspace {

struct UnknownShape {
  Ring ring;
  std::size_t rows;
  std::size_t cols;
};

/// An R-linear map from a tuple of K-matrices to a tuple of K-matrices.
using RealLinearMap = std::function<std::vector<Matrix>(const std::vector<Matrix>&)>;

/// Kernel of an R-linear map, computed after realification: every unknown
/// entry contributes real_rank(ring) real coordinates (C entries split into
/// 1, i parts; H entries into 1, i, j, k parts) and the image is flattened the
/// same way. Dimensions are real dimensions.
struct RealKernel {
  std::size_t unknown_dim = 0;
  std::vector<std::vector<Matrix>> basis;

  std::size_t dim() const { return basis.size(); }
};

RealKernel real_kernel(const std::vector<UnknownShape>& shapes, const RealLinearMap& f);

/// The unit basis element of the given real coordinate.
std::vector<Matrix> real_unit(const std::vector<UnknownShape>& shapes, std::size_t coord);
std::size_t real_coordinate_count(const std::vector<UnknownShape>& shapes);

}  // namespace symspace
