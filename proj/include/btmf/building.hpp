#pragma once

#include <vector>

#include "btmf/context.hpp"
#include "btmf/matrix.hpp"
#include "btmf/rational.hpp"
#include "btmf/weyl.hpp"

namespace btmf {

using LaurentVector = std::vector<FqLaurent>;

// Class [L] of the O_inf-lattice spanned by the rows of `basis`.
class LatticeVertex {
 public:
  // Rescales so that the minimal pi-exponent is 0; throws SingularMatrix.
  LatticeVertex(const Context& ctx, LaurentMatrix basis);

  const LaurentMatrix& basis() const { return basis_; }
  int rank() const { return static_cast<int>(basis_.rows()); }
  std::string to_string() const;

 private:
  LaurentMatrix basis_;
};

// Element of GL(r, A); the constructor checks det in F_q^*.
class GammaMatrix {
 public:
  GammaMatrix(const Context& ctx, PolyMatrix m);
  static GammaMatrix identity(const Context& ctx);

  const PolyMatrix& matrix() const { return m_; }
  const FqPoly& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  std::vector<FqPoly> bottom_row() const { return m_.row(m_.rows() - 1); }
  GammaMatrix inverse(const Context& ctx) const;
  GammaMatrix operator*(const GammaMatrix& other) const;

 private:
  GammaMatrix() = default;
  PolyMatrix m_;
};

struct Arrow {
  LatticeVertex origin;
  LatticeVertex target;
  // coordinates of the direction in L/piL w.r.t. the origin basis (type-1 arrows from arrows_type1)
  std::vector<FiniteField::Elem> direction;
  int type = 1;  // dim of L_target / pi L_origin
  bool is_type1() const { return type == 1; }
};

struct ReductionCertificate {
  GammaMatrix gamma;
  Vertex weyl_rep;
  LaurentMatrix unit_witness;
  int shift = 0;  // basis*gamma = pi^shift * unit_witness * diag(pi^{weyl_rep})
};

LatticeVertex standard_vertex(const Context& ctx, const Vertex& n);

// Normalized projective points of P^{r-1}(F_q): first nonzero coordinate 1.
std::vector<std::vector<FiniteField::Elem>> projective_points(const Context& ctx);

std::vector<Arrow> arrows_type1(const Context& ctx, const LatticeVertex& v);
// Throws ZeroVector.
LatticeVertex shift_toward(const Context& ctx, const LatticeVertex& v, const LaurentVector& y);
bool same_vertex(const Context& ctx, const LatticeVertex& a, const LatticeVertex& b);
bool points_to(const Context& ctx, const Arrow& e, const LaurentVector& y);

// Arrow between two apartment vertices; throws InvalidArgument unless adjacent.
Arrow apartment_arrow(const Context& ctx, const Vertex& from, const Vertex& to);

ReductionCertificate reduce_to_weyl(const Context& ctx, const LatticeVertex& v);
bool verify_certificate(const Context& ctx, const LatticeVertex& v, const ReductionCertificate& cert);

// max_i (deg v_i + x_i); -inf iff v = 0.
LogValue log_nu(const Context& ctx, const WeylPoint& x, const std::vector<FqPoly>& v);
// log_q of the norm of v attached to the lattice L: -min_i v_pi(t_i), v = t B.
long long log_nu_lattice(const Context& ctx, const LatticeVertex& L, const LaurentVector& v);

// gamma . [L] = [L gamma^{-1}]  (left action on the building)
LatticeVertex act(const Context& ctx, const GammaMatrix& gamma, const LatticeVertex& v);
// [L gamma]
LatticeVertex act_right(const Context& ctx, const LatticeVertex& v, const GammaMatrix& gamma);

LaurentVector to_laurent_vector(const std::vector<FqPoly>& v);
LaurentVector unit_vector(const Context& ctx, int i);  // e_i, 1-based

}  // namespace btmf
