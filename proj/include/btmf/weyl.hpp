#pragma once

#include <optional>
#include <string>
#include <vector>

#include "btmf/context.hpp"
#include "btmf/rational.hpp"

namespace btmf {

// Point of the apartment, coordinates (x_1, ..., x_r) with x_r = 0.
class ApartmentPoint {
 public:
  ApartmentPoint() = default;
  // Throws InvalidPoint unless the last coordinate is 0.
  explicit ApartmentPoint(std::vector<Rational> coords);
  // Subtracts x_r from every coordinate.
  static ApartmentPoint normalized(std::vector<Rational> coords);
  static ApartmentPoint from_ints(const std::vector<long long>& coords);

  int rank() const { return static_cast<int>(x_.size()); }
  const Rational& operator[](int i) const { return x_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& coords() const { return x_; }
  bool is_integral() const;
  bool in_chamber() const;
  // Throws NonIntegralPoint.
  std::vector<long long> to_ints() const;
  std::string to_string() const;

  friend bool operator==(const ApartmentPoint&, const ApartmentPoint&) = default;

 protected:
  std::vector<Rational> x_;
};

// Point of the standard Weyl chamber: x_1 >= ... >= x_r = 0.
class WeylPoint : public ApartmentPoint {
 public:
  WeylPoint() = default;
  // Throws InvalidPoint.
  explicit WeylPoint(std::vector<Rational> coords);
  static WeylPoint from_ints(const std::vector<long long>& coords);
  // Sort decreasingly and renormalize: the Weyl-group representative in W.
  static WeylPoint sorted(const ApartmentPoint& x);
};

// Integral vertex (n_1, ..., n_r), n_r = 0.
using Vertex = std::vector<long long>;

// n_i = (1, ..., 1, 0, ..., 0) with i ones; n_0 = 0.
Vertex standard_basis_vertex(int r, int i);

struct BasisSymbol {
  long long s = 0;
  int i = 1;
  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
};

struct CharSeqEntry {
  BasisSymbol symbol;
  Rational lognorm;
  int cycle_index = 1;
};

// First `count` symbols T^s e_i ordered by (s + x_i, -i).
std::vector<CharSeqEntry> characteristic_sequence(const Context& ctx, const ApartmentPoint& x, int count);

struct CycleRun {
  int length = 0;
  long long count = 0;  // -1 marks the unbounded tail of r-cycles
};

struct CycleStructure {
  std::vector<long long> h_values;  // h_1, ..., h_{r-1}
  std::vector<CycleRun> cycles;
};

// Throws NonIntegralPoint, InvalidPoint.
CycleStructure cycle_structure(const Context& ctx, const WeylPoint& n);

bool is_k_inseparable(const Context& ctx, const ApartmentPoint& x, int k);
// Vertex criterion from the cycle decomposition: lambda_k and lambda_{k+1} share a cycle.
bool cycle_criterion(const Context& ctx, const WeylPoint& n, int k);
bool wk_membership(const Context& ctx, const ApartmentPoint& x, int k);
bool wk_membership(const Context& ctx, const Vertex& n, int k);

// All n in W(Z) with n_1 <= bound, sorted lexicographically.
std::vector<Vertex> window_vertices(int r, long long bound);
std::vector<Vertex> wk_window(const Context& ctx, int k, long long bound);
// (W.W(k) + n_{r-1}) intersected with W and the window, from wk_window(k).
std::vector<Vertex> recursion_image(const Context& ctx, int k, long long bound);

bool standard_vertex_membership(const Context& ctx, int i, int k);

// Adjacent in the apartment: difference is 1_S mod (1,...,1) for a proper nonempty S.
bool adjacent(const Vertex& a, const Vertex& b);
// Simplices of W inside the window, each listed by its vertices.
std::vector<std::vector<Vertex>> window_simplices(int r, long long bound, int max_dim);
// Edges of W between members of `vertices` (sorted pairs).
std::vector<std::pair<Vertex, Vertex>> induced_edges(const std::vector<Vertex>& vertices);

struct ComplexReport {
  bool is_full = true;
  bool dim_everywhere = true;
  bool connected = true;
  std::size_t vertex_count = 0;
  std::size_t simplex_count = 0;
  std::vector<std::string> violations;
};

ComplexReport complex_checks(const Context& ctx, int k, long long bound);

std::string vertex_to_string(const Vertex& v);

}  // namespace btmf
