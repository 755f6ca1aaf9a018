#include "btmf/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "btmf/error.hpp"

namespace btmf {

// ---- points ----

ApartmentPoint::ApartmentPoint(std::vector<Rational> coords) : x_(std::move(coords)) {
  if (x_.size() < 2) throw Error(ErrorKind::InvalidPoint, "a point needs at least 2 coordinates");
  if (x_.back() != 0) throw Error(ErrorKind::InvalidPoint, "last coordinate must be 0");
}

ApartmentPoint ApartmentPoint::normalized(std::vector<Rational> coords) {
  if (coords.empty()) throw Error(ErrorKind::InvalidPoint, "empty point");
  Rational last = coords.back();
  for (auto& c : coords) c -= last;
  return ApartmentPoint(std::move(coords));
}

ApartmentPoint ApartmentPoint::from_ints(const std::vector<long long>& coords) {
  std::vector<Rational> x(coords.begin(), coords.end());
  return ApartmentPoint(std::move(x));
}

bool ApartmentPoint::is_integral() const {
  return std::all_of(x_.begin(), x_.end(), [](const Rational& c) { return btmf::is_integer(c); });
}

bool ApartmentPoint::in_chamber() const {
  for (std::size_t i = 0; i + 1 < x_.size(); ++i)
    if (x_[i] < x_[i + 1]) return false;
  return x_.empty() || x_.back() == 0;
}

std::vector<long long> ApartmentPoint::to_ints() const {
  std::vector<long long> out;
  out.reserve(x_.size());
  for (const auto& c : x_) {
    if (!btmf::is_integer(c)) throw Error(ErrorKind::NonIntegralPoint, to_string());
    out.push_back(numerator(c).convert_to<long long>());
  }
  return out;
}

std::string ApartmentPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (i) s += ",";
    s += btmf::to_string(x_[i]);
  }
  return s + ")";
}

WeylPoint::WeylPoint(std::vector<Rational> coords) : ApartmentPoint(std::move(coords)) {
  if (!in_chamber()) throw Error(ErrorKind::InvalidPoint, to_string() + " is not in the Weyl chamber");
}

WeylPoint WeylPoint::from_ints(const std::vector<long long>& coords) {
  return WeylPoint(std::vector<Rational>(coords.begin(), coords.end()));
}

WeylPoint WeylPoint::sorted(const ApartmentPoint& x) {
  std::vector<Rational> c = x.coords();
  std::sort(c.begin(), c.end(), std::greater<>());
  Rational last = c.back();
  for (auto& v : c) v -= last;
  return WeylPoint(std::move(c));
}

Vertex standard_basis_vertex(int r, int i) {
  Vertex v(static_cast<std::size_t>(r), 0);
  for (int j = 0; j < i && j < r - 1; ++j) v[static_cast<std::size_t>(j)] = 1;
  return v;
}

std::string vertex_to_string(const Vertex& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// ---- characteristic sequences ----

std::vector<CharSeqEntry> characteristic_sequence(const Context& ctx, const ApartmentPoint& x, int count) {
  if (count < 1) throw Error(ErrorKind::InvalidArgument, "count must be positive");
  if (x.rank() != ctx.r) throw Error(ErrorKind::InvalidPoint, "point rank differs from r");
  // Any of the first `count` entries has s < count: the count symbols T^s e_j for
  // the index j of the minimal coordinate already have lognorm <= x_j + count - 1.
  std::vector<CharSeqEntry> all;
  all.reserve(static_cast<std::size_t>(count) * ctx.r);
  for (long long s = 0; s < count; ++s)
    for (int i = 1; i <= ctx.r; ++i) all.push_back({{s, i}, Rational(s) + x[i - 1], 0});
  auto less = [](const CharSeqEntry& a, const CharSeqEntry& b) {
    if (a.lognorm != b.lognorm) return a.lognorm < b.lognorm;
    return a.symbol.i > b.symbol.i;
  };
  std::partial_sort(all.begin(), all.begin() + count, all.end(), less);
  all.resize(static_cast<std::size_t>(count));
  int cycle = 1;
  for (std::size_t j = 0; j < all.size(); ++j) {
    if (j > 0 && all[j].lognorm > all[j - 1].lognorm) ++cycle;
    all[j].cycle_index = cycle;
  }
  return all;
}

CycleStructure cycle_structure(const Context& ctx, const WeylPoint& n) {
  if (n.rank() != ctx.r) throw Error(ErrorKind::InvalidPoint, "point rank differs from r");
  auto v = n.to_ints();
  const int r = ctx.r;
  auto at = [&](int i) { return v[static_cast<std::size_t>(i - 1)]; };  // 1-based n_i
  CycleStructure cs;
  long long h = 0;
  for (int i = 1; i <= r - 1; ++i) {
    long long c = at(r - i) - at(r - i + 1);
    h += i * c;
    cs.h_values.push_back(h);
    if (c > 0) cs.cycles.push_back({i, c});
  }
  cs.cycles.push_back({r, -1});
  return cs;
}

bool is_k_inseparable(const Context& ctx, const ApartmentPoint& x, int k) {
  if (k < 1) throw Error(ErrorKind::KOutOfRange, "k must be >= 1");
  auto seq = characteristic_sequence(ctx, x, k + 1);
  return seq[static_cast<std::size_t>(k - 1)].lognorm == seq[static_cast<std::size_t>(k)].lognorm;
}

bool cycle_criterion(const Context& ctx, const WeylPoint& n, int k) {
  if (k < 1) throw Error(ErrorKind::KOutOfRange, "k must be >= 1");
  auto cs = cycle_structure(ctx, n);
  long long pos = 0;  // number of lambdas in completed cycles
  for (const auto& run : cs.cycles) {
    if (run.count < 0) {
      long long within = (k - pos - 1) % run.length + 1;
      return within < run.length;
    }
    if (k <= pos + run.length * run.count) {
      long long within = (k - pos - 1) % run.length + 1;
      return within < run.length;
    }
    pos += run.length * run.count;
  }
  return false;
}

bool wk_membership(const Context& ctx, const ApartmentPoint& x, int k) { return is_k_inseparable(ctx, x, k); }

bool wk_membership(const Context& ctx, const Vertex& n, int k) {
  return is_k_inseparable(ctx, ApartmentPoint::from_ints(n), k);
}

// ---- windows ----

std::vector<Vertex> window_vertices(int r, long long bound) {
  std::vector<Vertex> out;
  Vertex v(static_cast<std::size_t>(r), 0);
  std::function<void(int, long long)> rec = [&](int pos, long long upper) {
    if (pos == r - 1) {
      out.push_back(v);
      return;
    }
    for (long long c = 0; c <= upper; ++c) {
      v[static_cast<std::size_t>(pos)] = c;
      rec(pos + 1, c);
    }
  };
  rec(0, bound);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> wk_window(const Context& ctx, int k, long long bound) {
  if (bound < 0) throw Error(ErrorKind::InvalidArgument, "bound must be non-negative");
  std::vector<Vertex> out;
  for (auto& n : window_vertices(ctx.r, bound))
    if (wk_membership(ctx, n, k)) out.push_back(n);
  return out;
}

std::vector<Vertex> recursion_image(const Context& ctx, int k, long long bound) {
  const auto members = wk_window(ctx, k, bound);
  const int r = ctx.r;
  std::set<Vertex> image;
  std::vector<int> perm(static_cast<std::size_t>(r));
  for (auto& y : members) {
    for (int i = 0; i < r; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
      Vertex z(static_cast<std::size_t>(r));
      for (int i = 0; i < r; ++i) z[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      const long long last = z.back();
      for (auto& c : z) c -= last;
      for (int i = 0; i < r - 1; ++i) z[static_cast<std::size_t>(i)] += 1;
      if (z[0] > bound) continue;
      if (!std::is_sorted(z.begin(), z.end(), std::greater<>())) continue;
      image.insert(z);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {image.begin(), image.end()};
}

bool standard_vertex_membership(const Context& ctx, int i, int k) {
  if (i < 0 || i >= ctx.r) throw Error(ErrorKind::IndexOutOfRange, "i must lie in 0..r-1");
  if (k < 1) throw Error(ErrorKind::KOutOfRange, "k must be >= 1");
  return (k % ctx.r) != ((ctx.r - i) % ctx.r);
}

// ---- simplicial structure ----

bool adjacent(const Vertex& a, const Vertex& b) {
  if (a.size() != b.size()) return false;
  long long lo = b[0] - a[0], hi = lo;
  for (std::size_t i = 1; i < a.size(); ++i) {
    lo = std::min(lo, b[i] - a[i]);
    hi = std::max(hi, b[i] - a[i]);
  }
  return hi - lo == 1;
}

std::vector<std::vector<Vertex>> window_simplices(int r, long long bound, int max_dim) {
  // A simplex is v, v + 1_{S_1}, ..., v + 1_{S_m} with S_1 < ... < S_m subsets of
  // the first r-1 coordinates; each simplex has exactly one such presentation.
  std::vector<std::vector<Vertex>> out;
  const unsigned full = (1u << (r - 1)) - 1;
  auto shifted = [&](const Vertex& v, unsigned mask) {
    Vertex w = v;
    for (int i = 0; i < r - 1; ++i)
      if (mask & (1u << i)) w[static_cast<std::size_t>(i)] += 1;
    return w;
  };
  auto valid = [&](const Vertex& w) {
    return w[0] <= bound && std::is_sorted(w.begin(), w.end(), std::greater<>());
  };
  std::vector<Vertex> chain;
  std::function<void(const Vertex&, unsigned)> rec = [&](const Vertex& base, unsigned mask) {
    out.push_back(chain);
    if (static_cast<int>(chain.size()) > max_dim) return;
    for (unsigned next = 1; next <= full; ++next) {
      if ((next & mask) != mask || next == mask) continue;
      Vertex w = shifted(base, next);
      if (!valid(w)) continue;
      chain.push_back(w);
      rec(base, next);
      chain.pop_back();
    }
  };
  for (auto& v : window_vertices(r, bound)) {
    chain = {v};
    rec(v, 0);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> induced_edges(const std::vector<Vertex>& vertices) {
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (adjacent(sorted[i], sorted[j])) edges.emplace_back(sorted[i], sorted[j]);
  return edges;
}

ComplexReport complex_checks(const Context& ctx, int k, long long bound) {
  const int r = ctx.r;
  ComplexReport rep;
  const auto members_vec = wk_window(ctx, k, bound);
  const std::set<Vertex> members(members_vec.begin(), members_vec.end());
  rep.vertex_count = members.size();
  const long long core_bound = bound - r;

  const auto simplices = window_simplices(r, bound, r - 1);
  rep.simplex_count = simplices.size();
  std::set<Vertex> covered;
  for (const auto& sigma : simplices) {
    bool all_in = std::all_of(sigma.begin(), sigma.end(), [&](const Vertex& v) { return members.count(v) > 0; });
    if (sigma.size() >= 2) {
      std::vector<Rational> bary(static_cast<std::size_t>(r), Rational(0));
      for (const auto& v : sigma)
        for (int i = 0; i < r; ++i) bary[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(i)];
      for (auto& c : bary) c /= static_cast<long long>(sigma.size());
      bool bary_in = is_k_inseparable(ctx, ApartmentPoint(bary), k);
      if (all_in != bary_in) {
        rep.is_full = false;
        std::string s;
        for (auto& v : sigma) s += vertex_to_string(v);
        rep.violations.push_back("fullness: simplex " + s);
      }
    }
    if (all_in && static_cast<int>(sigma.size()) == r - 1)
      for (auto& v : sigma) covered.insert(v);
  }

  for (const auto& v : members) {
    if (v[0] > core_bound) continue;
    if (!covered.count(v)) {
      rep.dim_everywhere = false;
      rep.violations.push_back("dimension: vertex " + vertex_to_string(v));
    }
  }

  // connectivity of the core inside the window subgraph
  std::map<Vertex, int> component;
  int next_id = 0;
  for (const auto& v : members) {
    if (component.count(v)) continue;
    std::vector<Vertex> stack{v};
    component[v] = next_id;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (const auto& w : members)
        if (!component.count(w) && adjacent(u, w)) {
          component[w] = next_id;
          stack.push_back(w);
        }
    }
    ++next_id;
  }
  int core_component = -1;
  for (const auto& v : members) {
    if (v[0] > core_bound) continue;
    if (core_component < 0) core_component = component[v];
    else if (component[v] != core_component) {
      rep.connected = false;
      rep.violations.push_back("connectivity: vertex " + vertex_to_string(v));
    }
  }
  return rep;
}

}  // namespace btmf
