#include "btmf/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "btmf/alpha.hpp"
#include "btmf/coeff.hpp"
#include "btmf/error.hpp"
#include "btmf/parallel.hpp"
#include "btmf/vanderput.hpp"

namespace btmf {

namespace {

constexpr long long kMaxBound = 32;
constexpr double kUnit = 48.0;
constexpr double kMargin = 36.0;

std::string pair_label(const Vertex& v) { return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + ")"; }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<')
      out += "&lt;";
    else if (c == '>')
      out += "&gt;";
    else if (c == '&')
      out += "&amp;";
    else
      out += c;
  }
  return out;
}

}  // namespace

ChamberFigure build_chamber_figure(const Context& ctx, const RenderSpec& spec, long long bound) {
  if (ctx.r != 3) throw Error(ErrorKind::UnsupportedRank, "chamber figures are drawn for r = 3 only");
  if (bound < 0 || bound > kMaxBound) throw Error(ErrorKind::GuardExceeded, "render bound must lie in 0..32");
  ChamberFigure fig;
  fig.bound = bound;
  fig.vertices = window_vertices(3, bound);
  fig.edges = induced_edges(fig.vertices);

  std::vector<std::string> labels(fig.vertices.size());
  std::vector<char> member(fig.vertices.size(), 0);
  switch (spec.mode) {
    case RenderMode::Wk:
      fig.title = "W(" + std::to_string(spec.k) + ")";
      for (std::size_t i = 0; i < fig.vertices.size(); ++i) member[i] = wk_membership(ctx, fig.vertices[i], spec.k);
      break;
    case RenderMode::WPrime:
      fig.title = "W'_" + std::to_string(spec.d) + "(" + std::to_string(spec.k) + ")";
      for (std::size_t i = 0; i < fig.vertices.size(); ++i)
        member[i] = wprime_membership(ctx, WeylPoint::from_ints(fig.vertices[i]), spec.d, spec.k);
      break;
    case RenderMode::AlphaNorm:
      fig.title = "log norm of alpha_" + std::to_string(spec.k);
      for (std::size_t i = 0; i < fig.vertices.size(); ++i) {
        member[i] = wk_membership(ctx, fig.vertices[i], spec.k);
        labels[i] = to_string(log_alpha_norm_vertex(ctx, fig.vertices[i], spec.k));
      }
      break;
    case RenderMode::InnerDegree: {
      fig.title = "inner degree of alpha_" + std::to_string(spec.k);
      const FormSpec f{FormKind::Alpha, spec.k, 0};
      auto values =
          parallel_map(fig.vertices.size(), [&](std::size_t i) { return inner_degree(ctx, f, fig.vertices[i]); });
      for (std::size_t i = 0; i < fig.vertices.size(); ++i) {
        member[i] = values[i] > 0;
        labels[i] = values[i].str();
      }
      break;
    }
  }
  for (std::size_t i = 0; i < fig.vertices.size(); ++i) {
    if (member[i]) fig.highlighted.insert(fig.vertices[i]);
    if (!labels[i].empty()) fig.labels[fig.vertices[i]] = labels[i];
  }
  for (const auto& e : fig.edges)
    if (fig.highlighted.count(e.first) && fig.highlighted.count(e.second)) fig.heavy.insert(e);
  return fig;
}

std::string render_svg(const ChamberFigure& fig) {
  const double s3 = std::sqrt(3.0) / 2.0;
  const double width = 2 * kMargin + kUnit * static_cast<double>(fig.bound);
  const double height = 2 * kMargin + kUnit * s3 * static_cast<double>(fig.bound) + 24.0;
  // equilateral embedding: (n1, n2) -> n1 (1, 0) + n2 (-1/2, sqrt(3)/2)
  auto x = [&](const Vertex& v) { return kMargin + kUnit * (static_cast<double>(v[0]) - 0.5 * static_cast<double>(v[1])); };
  auto py = [&](const Vertex& v) { return height - kMargin - kUnit * s3 * static_cast<double>(v[1]); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\">\n";
  out << "  <text x=\"" << fmt(kMargin) << "\" y=\"20.00\" font-size=\"14\">" << xml_escape(fig.title)
      << "</text>\n";
  for (const auto& e : fig.edges) {
    const bool heavy = fig.heavy.count(e) > 0;
    out << "  <line class=\"" << (heavy ? "heavy" : "light") << "\" x1=\"" << fmt(x(e.first)) << "\" y1=\""
        << fmt(py(e.first)) << "\" x2=\"" << fmt(x(e.second)) << "\" y2=\"" << fmt(py(e.second))
        << "\" stroke=\"" << (heavy ? "black" : "#bbbbbb") << "\" stroke-width=\"" << (heavy ? "3" : "1")
        << "\" data-from=\"" << pair_label(e.first) << "\" data-to=\"" << pair_label(e.second) << "\"/>\n";
  }
  for (const auto& v : fig.vertices) {
    const bool member = fig.highlighted.count(v) > 0;
    out << "  <circle cx=\"" << fmt(x(v)) << "\" cy=\"" << fmt(py(v)) << "\" r=\"" << (member ? "4" : "2.5")
        << "\" fill=\"" << (member ? "black" : "white") << "\" stroke=\"black\" data-n1=\"" << v[0]
        << "\" data-n2=\"" << v[1] << "\" data-member=\"" << (member ? "true" : "false") << "\"/>\n";
    auto it = fig.labels.find(v);
    if (it != fig.labels.end())
      out << "  <text x=\"" << fmt(x(v) + 5) << "\" y=\"" << fmt(py(v) - 5) << "\" font-size=\"9\">"
          << xml_escape(it->second) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ascii(const ChamberFigure& fig) {
  const long long b = fig.bound;
  const auto width = static_cast<std::size_t>(4 * b + 1);
  const auto rows = static_cast<std::size_t>(2 * b + 1);
  std::vector<std::string> canvas(rows, std::string(width, ' '));
  auto col = [&](const Vertex& v) { return static_cast<std::size_t>(4 * v[0] - 2 * v[1]); };
  auto row = [&](const Vertex& v) { return static_cast<std::size_t>(2 * (b - v[1])); };
  for (const auto& e : fig.edges) {
    const bool heavy = fig.heavy.count(e) > 0;
    const Vertex& a = e.first;
    const Vertex& c = e.second;
    const Vertex& lo = a[1] <= c[1] ? a : c;
    const Vertex& hi = a[1] <= c[1] ? c : a;
    if (lo[1] == hi[1]) {
      const std::size_t from = std::min(col(lo), col(hi)) + 1;
      for (std::size_t i = 0; i < 3; ++i) canvas[row(lo)][from + i] = heavy ? '=' : '-';
    } else {
      const std::size_t mid = row(lo) - 1;
      const bool right = col(hi) > col(lo);
      canvas[mid][right ? col(lo) + 1 : col(lo) - 1] = heavy ? '#' : (right ? '/' : '\\');
    }
  }
  for (const auto& v : fig.vertices) canvas[row(v)][col(v)] = fig.highlighted.count(v) ? '*' : 'o';

  std::ostringstream out;
  out << fig.title << ", window n1 <= " << b << "\n";
  for (auto& line : canvas) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  out << "legend: * highlighted vertex, o other vertex, = # heavy edges, - / \\ light edges;\n"
         "        bottom row is n2 = 0 with n1 = 0.." << b << " from left to right\n";
  if (!fig.labels.empty()) {
    out << "labels:\n";
    for (const auto& [v, text] : fig.labels) out << "  " << pair_label(v) << " " << text << "\n";
  }
  return out.str();
}

std::string render_chamber(const Context& ctx, const RenderSpec& spec, long long bound, RenderFormat format) {
  const auto fig = build_chamber_figure(ctx, spec, bound);
  return format == RenderFormat::Svg ? render_svg(fig) : render_ascii(fig);
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> wk_figure_fixture(int k) {
  using P = std::pair<int, int>;
  std::vector<std::pair<P, P>> e;
  auto chain = [&](int n2, int from, int to) {
    for (int n = from; n < to; ++n) e.push_back({{n, n2}, {n + 1, n2}});
  };
  switch (k) {
    case 2:
      e.push_back({{0, 0}, {1, 1}});
      chain(1, 1, 6);
      break;
    case 3:
      chain(0, 1, 6);
      e.push_back({{1, 0}, {1, 1}});
      e.push_back({{1, 1}, {2, 2}});
      chain(2, 2, 6);
      break;
    case 4:
      e.push_back({{0, 0}, {1, 0}});
      e.push_back({{1, 0}, {2, 1}});
      chain(1, 2, 6);
      e.push_back({{2, 1}, {2, 2}});
      e.push_back({{2, 2}, {3, 3}});
      chain(3, 3, 6);
      break;
    case 5:
      e.push_back({{0, 0}, {1, 1}});
      e.push_back({{1, 1}, {2, 1}});
      e.push_back({{2, 1}, {2, 0}});
      chain(0, 2, 6);
      e.push_back({{2, 1}, {3, 2}});
      chain(2, 3, 6);
      e.push_back({{3, 2}, {3, 3}});
      e.push_back({{3, 3}, {4, 4}});
      chain(4, 4, 6);
      break;
    default:
      throw Error(ErrorKind::KOutOfRange, "reference drawings exist for k = 2..5");
  }
  return e;
}

}  // namespace btmf
