#include "symspace/invariants.hpp"

#include "symspace/linalg.hpp"

namespace symspace {

DoubleRatio charpoly_of(const Matrix& op) {
  std::vector<Scalar> c = charpoly(op);
  return {op.ring(), c.size() - 1, std::move(c)};
}

DoubleRatio double_ratio(const SeriesEntry&, const SpacePoint& pt1, const SpacePoint& pt2) {
  const Matrix m = angular_operator(pt2.q1, pt1.q1, pt1.q2);
  const Matrix n = angular_operator(pt2.q2, pt1.q2, pt1.q1);
  return charpoly_of(n * m);
}

Matrix coordinate_double_ratio(const AngularCoords& pt1, const AngularCoords& pt2) {
  const Matrix& x1 = pt1.m;
  const Matrix& x2 = pt1.n;
  const Matrix& y1 = pt2.m;
  const Matrix& y2 = pt2.n;
  const Matrix ix = Matrix::identity(x1.ring(), x1.cols());
  const Matrix iy = Matrix::identity(x1.ring(), x1.rows());
  return inverse(ix - y2 * x1) * (x2 - y2) * inverse(iy - y1 * x2) * (x1 - y1);
}

}  // namespace symspace
