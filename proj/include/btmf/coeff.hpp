#pragma once

#include <string>
#include <vector>

#include "btmf/alpha.hpp"
#include "btmf/context.hpp"
#include "btmf/weyl.hpp"

namespace btmf {

struct TorsionSymbol {
  int s = 0;  // 0..d-1
  int i = 1;  // 1..r
  friend bool operator==(const TorsionSymbol&, const TorsionSymbol&) = default;
};

struct TorsionEntry {
  TorsionSymbol symbol;
  Rational lognorm;
};

// log |e_{s,i}| in the finite model of a-torsion, deg a = d. Throws IndexOutOfRange.
Rational log_e_si(const Context& ctx, const WeylPoint& x, int d, int s, int i);

// All rd symbols sorted by (lognorm, -i).
std::vector<TorsionEntry> torsion_char_sequence(const Context& ctx, const WeylPoint& x, int d);

// Requires 1 <= k < rd, else KOutOfRange.
bool wprime_membership(const Context& ctx, const WeylPoint& x, int d, int k);

// d - sum_{s<=k} (q^s - q^{s-1}) m_s; requires 1 <= k <= rd.
LogNorm log_coeff_norm(const Context& ctx, const WeylPoint& x, int d, int k);
LogNorm log_coeff_norm(const Context& ctx, const Vertex& n, int d, int k);

// (d-k) q^k + q(q^k - 1)/(q - 1); RegimeViolation if k > d.
LogNorm coeff_constant_log(const Context& ctx, int d, int k);

// Closed form at the origin: k = k0 + s r with 0 <= k0 < r gives (d-s) q^k + q^r (q^{rs}-1)/(q^r-1).
LogNorm coeff_origin_closed_form(const Context& ctx, int d, int k);

struct SimplicialAgreementReport {
  bool membership_equal = true;
  bool constant_offset = true;
  bool inner_degrees_equal = true;
  Rational expected_offset;
  std::size_t vertices = 0;
  std::vector<std::string> violations;
  bool passed() const { return membership_equal && constant_offset && inner_degrees_equal; }
};

// Compares coefficient forms with alpha_k over the window n_1 <= bound; RegimeViolation if k > d.
SimplicialAgreementReport verify_simplicial_agreement(const Context& ctx, int d, int k, long long bound);

}  // namespace btmf
