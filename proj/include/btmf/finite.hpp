#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "btmf/context.hpp"
#include "btmf/field.hpp"

namespace btmf {

// F_{q^m} with F_q = {x : x^q = x} as subfield.
class ExtField {
 public:
  using Elem = FiniteField::Elem;
  // Throws GuardExceeded if q^m > 2^20.
  ExtField(const Context& ctx, int m);

  const FiniteField& F() const { return *field_; }
  std::uint32_t q() const { return q_; }
  int m() const { return m_; }
  Elem frobenius(Elem x, int j = 1) const;  // x^{q^j}
  const std::vector<Elem>& subfield() const { return subfield_; }
  bool in_subfield(Elem x) const { return frobenius(x) == x; }
  std::size_t order() const { return field_->order(); }

 private:
  const FiniteField* field_;
  std::uint32_t q_;
  int m_;
  std::vector<Elem> subfield_;
};

ExtField::Elem moore_det(const ExtField& E, const std::vector<ExtField::Elem>& elems);

// All F_q-combinations of the basis (q^n elements, zero first).
std::vector<ExtField::Elem> lattice_elements(const ExtField& E, const std::vector<ExtField::Elem>& basis);

// Dense polynomial over F_{q^m}, constant term first.
using ExtPoly = std::vector<ExtField::Elem>;
ExtPoly vanishing_poly(const ExtField& E, const std::vector<ExtField::Elem>& roots);
ExtField::Elem evaluate(const ExtField& E, const ExtPoly& p, ExtField::Elem x);

struct ExpCoefficients {
  std::vector<ExtField::Elem> alpha;  // alpha_0..alpha_n
  ExtPoly poly;                       // e_W as a dense polynomial of degree q^n
};

// Computes alpha_i from the product expansion and from Moore minors and checks they agree;
// throws DependentBasis or ConsistencyFailure.
ExpCoefficients exp_poly_coeffs(const ExtField& E, const std::vector<ExtField::Elem>& basis);
std::vector<ExtField::Elem> exp_coeffs_via_minors(const ExtField& E, const std::vector<ExtField::Elem>& basis);
std::vector<ExtField::Elem> exp_coeffs_via_product(const ExtField& E, const std::vector<ExtField::Elem>& basis);

// a + b u in F_{q^m}[u]/(u^2)
struct UElem {
  ExtField::Elem a = 0;
  ExtField::Elem b = 0;
  friend bool operator==(const UElem&, const UElem&) = default;
};

// The first d0 basis vectors are divisible by u; the rest have F_q-independent unit parts.
struct ValuedLattice {
  std::vector<UElem> basis;
  int d0 = 0;
  int dim() const { return static_cast<int>(basis.size()); }
};

// Throws HypothesisViolated when the basis does not have the stated shape.
void check_valued_lattice(const ExtField& E, const ValuedLattice& W);
// Coefficients c_j of X^{q^j} in prod_{lambda in W} (X - lambda), j = 0..d.
std::vector<UElem> valued_coefficients(const ExtField& E, const ValuedLattice& W);
// Reduction of alpha_j(W)/alpha_d(W) equals (alpha_{j-d0}(Wbar)/alpha_{d-d0}(Wbar))^{q^{d0}} for j = d0..d.
bool reduction_identity_check(const ExtField& E, const ValuedLattice& W);
// If alpha_k(W) = 0 then |lambda_k| = |lambda_{k+1}| in the spectrum of W, for all 1 <= k < d.
bool spectral_direction_check(const ExtField& E, const ValuedLattice& W);

ValuedLattice random_valued_lattice(const ExtField& E, int d, int d0, std::mt19937_64& rng);
// Every valued lattice of dimension d (all d0) with the given shape; HypothesisViolated never raised.
std::vector<ValuedLattice> all_valued_lattices(const ExtField& E, int d);

// Number of w in F_{q^2} \ F_q with alpha_1(F_q + F_q w) = 0.
std::size_t beta_zero_count(const Context& ctx);

// Polynomial over F_q in three variables x, y, z.
using Monomial = std::array<int, 3>;
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};
using TriPoly = std::map<Monomial, FiniteField::Elem, GradedLexGreater>;

TriPoly moore_minor_poly(const Context& ctx, const std::array<int, 3>& exponent_powers);
int total_degree(const TriPoly& p);
// Returns the quotient when `linear` divides p exactly.
std::optional<TriPoly> divide_linear(const FiniteField& F, const TriPoly& p, const std::array<FiniteField::Elem, 3>& linear);

// deg M^{(k')} minus the number of rational boundary lines for r = 3, k in {1, 2}; q in {2, 3}.
long long inner_degree_via_moore(const Context& ctx, int k);

}  // namespace btmf
