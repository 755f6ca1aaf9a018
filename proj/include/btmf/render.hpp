#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "btmf/context.hpp"
#include "btmf/weyl.hpp"

namespace btmf {

enum class RenderMode { Wk, WPrime, AlphaNorm, InnerDegree };
enum class RenderFormat { Svg, Ascii };

struct RenderSpec {
  RenderMode mode = RenderMode::Wk;
  int k = 1;
  int d = 0;  // WPrime only
};

using Edge = std::pair<Vertex, Vertex>;

// Window n_1 <= bound of the r = 3 chamber; vertices are (n1, n2, 0).
struct ChamberFigure {
  long long bound = 0;
  std::string title;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::set<Vertex> highlighted;
  std::set<Edge> heavy;
  std::map<Vertex, std::string> labels;  // empty for membership modes
};

// Throws UnsupportedRank for r != 3 and GuardExceeded for bound > 32.
ChamberFigure build_chamber_figure(const Context& ctx, const RenderSpec& spec, long long bound);
std::string render_svg(const ChamberFigure& fig);
std::string render_ascii(const ChamberFigure& fig);
std::string render_chamber(const Context& ctx, const RenderSpec& spec, long long bound, RenderFormat format);

// Heavy edges of the reference W(k) drawings, k = 2..5, window n_1 <= 6, as (n1, n2) pairs.
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> wk_figure_fixture(int k);

}  // namespace btmf
