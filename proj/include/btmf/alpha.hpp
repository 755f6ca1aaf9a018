#pragma once

#include <vector>

#include "btmf/context.hpp"
#include "btmf/rational.hpp"
#include "btmf/weyl.hpp"

namespace btmf {

// log_q of a spectral norm
using LogNorm = Rational;

// -(q-1) * sum_{j<=k} q^{j-1} c_j with c_j the lognorm of lambda_j.
LogNorm log_alpha_norm_vertex(const Context& ctx, const Vertex& n, int k);

// Cell of the standard triangulation containing x, with barycentric weights.
struct SimplexLocation {
  std::vector<Vertex> vertices;
  std::vector<Rational> weights;  // positive, summing to 1
};
SimplexLocation locate_simplex(const WeylPoint& x);

// Affine interpolation of the vertex values over the cell of x.
LogNorm log_alpha_norm_point(const Context& ctx, const WeylPoint& x, int k);

// q(q^k - 1)/(q - 1) - k q^k
LogNorm alpha_constant_log(const Context& ctx, int k);

}  // namespace btmf
