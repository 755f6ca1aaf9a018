#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "btmf/alpha.hpp"
#include "btmf/building.hpp"
#include "btmf/context.hpp"

namespace btmf {

enum class FormKind { Alpha, Coeff };

struct FormSpec {
  FormKind kind = FormKind::Alpha;
  int k = 1;
  int d = 0;  // coeff only
};

// Throws KOutOfRange for k < 1 and RegimeViolation for coeff forms with k > d.
void validate_form(const Context& ctx, const FormSpec& f);
std::string to_string(const FormSpec& f);

using CochainValue = BigInt;

// log_q of the spectral norm at the standard vertex of n (n in W(Z)).
LogNorm log_norm_standard(const Context& ctx, const FormSpec& f, const Vertex& n);
// Equivariant extension to an arbitrary vertex via reduce_to_weyl.
LogNorm log_norm_at_vertex(const Context& ctx, const FormSpec& f, const LatticeVertex& m);

// Throws NonIntegralTransform.
CochainValue vdp(const Context& ctx, const FormSpec& f, const Arrow& e);
// +1 if e points to z = e_r but not to the bottom row of gamma, -1 for the reverse, else 0.
int automorphy_vdp(const Context& ctx, const GammaMatrix& gamma, const Arrow& e);
// Sum of vdp over the type-1 arrows at the standard vertex of n; throws NegativeInnerDegree.
CochainValue inner_degree(const Context& ctx, const FormSpec& f, const Vertex& n);

// Sum of vdp over the closed path v_0 -> v_1 -> ... -> v_0.
CochainValue loop_sum(const Context& ctx, const FormSpec& f, const std::vector<LatticeVertex>& loop);

// Generators of the stabilizer of the standard vertex of n: elementary matrices E_ij(f) with
// deg f <= n_i - n_j and diagonal units. Exhaustive in f for q = 2, monomial plus `random_samples`
// random elements otherwise.
std::vector<GammaMatrix> stabilizer_generators(const Context& ctx, const Vertex& n, int random_samples = 200,
                                               std::uint64_t seed = 1);

struct ArrowOrbit {
  std::vector<std::size_t> members;  // indices into arrows_type1(standard_vertex(n))
  std::vector<CochainValue> p_values;  // distinct vdp values on the orbit, ascending
};

struct OrbitData {
  std::vector<Arrow> arrows;
  std::vector<ArrowOrbit> orbits;  // sorted by decreasing size
  std::size_t generators = 0;
  std::size_t consistency_checks = 0;
  std::vector<std::string> violations;  // failures of P(f)(ge) = (q^k-1) P(aut)(e) + P(f)(e)
};

OrbitData arrow_orbits(const Context& ctx, const FormSpec& f, const Vertex& n);

struct CaseStudyVertex {
  std::string label;  // o, p, q, r, s
  Vertex n;
  std::vector<std::size_t> orbit_sizes;
  std::vector<std::vector<CochainValue>> orbit_p_values;
  CochainValue inner_degree = 0;
  CochainValue expected_inner_degree = 0;
  std::vector<std::size_t> expected_orbit_sizes;  // empty when no expectation
  std::vector<std::vector<CochainValue>> expected_p_values;  // empty when no expectation
  bool passed = true;
};

struct CaseStudyReport {
  std::vector<CaseStudyVertex> vertices;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

// alpha_2 around the vertices 0, (1,1), (n,0), (n,1), (n1,n2) with n2 >= 2; requires r = 3.
CaseStudyReport case_study_report(const Context& ctx);

}  // namespace btmf
