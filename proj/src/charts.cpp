#include "symspace/charts.hpp"

#include "symspace/error.hpp"
#include "symspace/linalg.hpp"
#include "symspace/realify.hpp"

namespace symspace {

Chart make_chart(const SeriesEntry& e, const SpacePoint& center) {
  if (!membership(e, center)) throw Error(ErrorKind::ShapeViolation, "chart center is not a point of the space");
  return {e.id(), center.q1, center.q2};
}

Matrix angular_operator(const Subspace& r, const Subspace& x, const Subspace& y) {
  if (r.dim() != x.dim()) throw Error(ErrorKind::NotTransverse, "dim R differs from dim X");
  const Matrix p = hcat(x.basis(), y.basis());
  const Matrix ab = solve(p, r.basis());
  const Matrix a = ab.rows_range(0, x.dim());
  if (!is_invertible(a)) throw Error(ErrorKind::NotTransverse, "R meets Y");
  return ab.rows_range(x.dim(), y.dim()) * inverse(a);
}

Subspace graph(const Subspace& x, const Subspace& y, const Matrix& l) { return Subspace(x.basis() + y.basis() * l); }

AngularCoords to_coords(const SeriesEntry&, const Chart& c, const SpacePoint& pt) {
  return {angular_operator(pt.q1, c.x, c.y), angular_operator(pt.q2, c.y, c.x)};
}

SpacePoint from_coords(const SeriesEntry& e, const Chart& c, const AngularCoords& coords) {
  if (coords.m.rows() != c.y.dim() || coords.m.cols() != c.x.dim() || coords.n.rows() != c.x.dim() || coords.n.cols() != c.y.dim())
    throw Error(ErrorKind::ShapeViolation, "coordinate matrices have the wrong shape");
  if (!shape_conditions(e, c, coords).ok()) throw Error(ErrorKind::ShapeViolation, "coordinates violate the list's conditions");
  return make_point(e, graph(c.x, c.y, coords.m), graph(c.y, c.x, coords.n));
}

bool transversality_holds(const AngularCoords& coords) {
  const Matrix mn = coords.m * coords.n;  // on Y; 1 − MN invertible iff 1 − NM is
  return is_invertible(Matrix::identity(mn.ring(), mn.rows()) - mn);
}

bool isotropy_condition(const Form& b, const Subspace& x, const Subspace& y, const Matrix& l) {
  const FormType& t = b.type();
  const Matrix& g = b.gram();
  const Matrix lhs = adjoint_for(t, x.basis()) * g * y.basis() * l + adjoint_for(t, l) * adjoint_for(t, y.basis()) * g * x.basis();
  return lhs.is_zero();
}

bool orthogonality_condition(const Form& d, const Chart& c, const AngularCoords& coords) {
  const FormType& t = d.type();
  const Matrix& g = d.gram();
  const Matrix lhs = adjoint_for(t, coords.n) * adjoint_for(t, c.x.basis()) * g * c.x.basis() +
                     adjoint_for(t, c.y.basis()) * g * c.y.basis() * coords.m;
  return lhs.is_zero();
}

bool exchange_condition(const Semiinvolution& j, const Chart& c, const AngularCoords& coords) {
  // J Xb = Yb·Kx and J Yb = Xb·Ky, so J(graph M) = graph(Ky·σ(M)·Kx⁻¹).
  const Matrix kx = solve(c.y.basis(), j.apply(c.x.basis()));
  const Matrix ky = solve(c.x.basis(), j.apply(c.y.basis()));
  const Matrix sm = j.antilinear() ? coords.m.conj() : coords.m;
  return coords.n == ky * sm * inverse(kx);
}

ShapeReport shape_conditions(const SeriesEntry& e, const Chart& c, const AngularCoords& coords) {
  ShapeReport r;
  r.transversal = transversality_holds(coords);
  const int list = e.list();
  if (list == 1 || list == 2)
    r.isotropy = isotropy_condition(*e.b, c.x, c.y, coords.m) && isotropy_condition(*e.b, c.y, c.x, coords.n);
  if (list == 1 || list == 4) r.orthogonality = orthogonality_condition(*e.d, c, coords);
  if (list == 1 || list == 3) r.exchange = exchange_condition(*e.j, c, coords);
  return r;
}

Blocks chart_blocks(const Chart& c, const Matrix& g) {
  const Matrix p = hcat(c.x.basis(), c.y.basis());
  const Matrix h = solve(p, g * p);
  const std::size_t k = c.x.dim(), n = p.cols();
  return {h.block(0, 0, k, k), h.block(0, k, k, n - k), h.block(k, 0, n - k, k), h.block(k, k, n - k, n - k)};
}

Matrix fractional_linear(const Blocks& g, const Matrix& r) {
  const Matrix denom = g.a + g.b * r;
  if (!is_invertible(denom)) throw Error(ErrorKind::ChartBoundary, "A + BR is singular");
  return (g.c + g.d * r) * inverse(denom);
}

AngularCoords act_on_coords(const Chart& c, const Matrix& g, const AngularCoords& coords) {
  const Blocks b = chart_blocks(c, g);
  return {fractional_linear(b, coords.m), fractional_linear({b.d, b.c, b.b, b.a}, coords.n)};
}

std::size_t grassmannian_dim(const SeriesEntry& e) {
  const std::size_t k = e.q1.dim(), rest = e.dim - k;
  const std::size_t d = static_cast<std::size_t>(real_rank(e.ring));
  switch (e.list()) {
    case 1:
    case 2: {
      auto isotropic_count = [&](const Subspace& x, const Subspace& y) {
        const RealKernel ker = real_kernel({{e.ring, y.dim(), x.dim()}}, [&](const std::vector<Matrix>& u) {
          const FormType& t = e.b->type();
          const Matrix& g = e.b->gram();
          return std::vector<Matrix>{adjoint_for(t, x.basis()) * g * y.basis() * u[0] +
                                     adjoint_for(t, u[0]) * adjoint_for(t, y.basis()) * g * x.basis()};
        });
        return ker.dim();
      };
      const std::size_t dm = isotropic_count(e.q1, e.q2);
      return e.list() == 1 ? dm : dm + isotropic_count(e.q2, e.q1);
    }
    case 3:
    case 4: return k * rest * d;
    default: return 2 * k * rest * d;
  }
}

}  // namespace symspace
