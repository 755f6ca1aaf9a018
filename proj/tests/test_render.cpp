#include <doctest.h>

#include <regex>

#include "btmf/error.hpp"
#include "btmf/render.hpp"

using namespace btmf;

namespace {

Vertex V(int a, int b) { return {a, b, 0}; }

std::set<Edge> fixture_edges(int k) {
  std::set<Edge> out;
  for (const auto& [a, b] : wk_figure_fixture(k)) {
    Vertex x = V(a.first, a.second), y = V(b.first, b.second);
    out.insert(x < y ? Edge{x, y} : Edge{y, x});
  }
  return out;
}

std::set<Edge> normalized(const std::vector<Edge>& edges) {
  std::set<Edge> out;
  for (const auto& [a, b] : edges) out.insert(a < b ? Edge{a, b} : Edge{b, a});
  return out;
}

}  // namespace

TEST_CASE("W(k) windows match the reference drawings") {
  auto ctx = make_context(2, 3);
  for (int k = 2; k <= 5; ++k) {
    const auto verts = wk_window(ctx, k, 6);
    const auto edges = fixture_edges(k);
    std::set<Vertex> from_fixture;
    for (const auto& [a, b] : edges) {
      from_fixture.insert(a);
      from_fixture.insert(b);
    }
    CHECK(std::set<Vertex>(verts.begin(), verts.end()) == from_fixture);
    CHECK(normalized(induced_edges(verts)) == edges);
    const auto fig = build_chamber_figure(ctx, {RenderMode::Wk, k, 0}, 6);
    CHECK(normalized(std::vector<Edge>(fig.heavy.begin(), fig.heavy.end())) == edges);
  }
  CHECK_THROWS_AS(wk_figure_fixture(6), Error);
}

TEST_CASE("heavy edges join adjacent highlighted vertices") {
  auto ctx = make_context(3, 3);
  for (const RenderSpec& spec : {RenderSpec{RenderMode::Wk, 3, 0}, RenderSpec{RenderMode::WPrime, 2, 2},
                                 RenderSpec{RenderMode::AlphaNorm, 2, 0}, RenderSpec{RenderMode::InnerDegree, 2, 0}}) {
    const auto fig = build_chamber_figure(ctx, spec, 5);
    for (const auto& [a, b] : fig.heavy) {
      CHECK(adjacent(a, b));
      CHECK(fig.highlighted.count(a));
      CHECK(fig.highlighted.count(b));
    }
    for (const auto& e : fig.edges)
      if (fig.highlighted.count(e.first) && fig.highlighted.count(e.second)) CHECK(fig.heavy.count(e));
  }
}

TEST_CASE("inner degree labels") {
  auto ctx = make_context(2, 3);
  const auto fig = build_chamber_figure(ctx, {RenderMode::InnerDegree, 2, 0}, 4);
  for (const auto& v : fig.vertices) {
    std::string expected = "0";
    if (v == V(0, 0) || (v[1] == 1 && v[0] >= 2)) expected = "4";
    if (v == V(1, 1)) expected = "12";
    CHECK(fig.labels.at(v) == expected);
  }
  const auto norms = build_chamber_figure(ctx, {RenderMode::AlphaNorm, 2, 0}, 3);
  CHECK(norms.labels.at(V(2, 2)) == "-2");
  CHECK(norms.labels.at(V(3, 0)) == "0");
}

TEST_CASE("svg and ascii are deterministic and agree") {
  auto ctx = make_context(2, 3);
  for (int k = 2; k <= 5; ++k) {
    const RenderSpec spec{RenderMode::Wk, k, 0};
    const auto svg = render_chamber(ctx, spec, 6, RenderFormat::Svg);
    CHECK(svg == render_chamber(ctx, spec, 6, RenderFormat::Svg));
    const auto ascii = render_chamber(ctx, spec, 6, RenderFormat::Ascii);
    CHECK(ascii == render_chamber(ctx, spec, 6, RenderFormat::Ascii));

    // only line, circle and text elements
    std::regex tag("<([a-z]+)[ >]");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tag); it != std::sregex_iterator(); ++it) {
      const auto name = (*it)[1].str();
      CHECK((name == "svg" || name == "line" || name == "circle" || name == "text"));
    }
    // heavy edges and members in the svg
    std::set<std::pair<std::string, std::string>> svg_heavy;
    std::regex heavy("class=\"heavy\"[^>]*data-from=\"([^\"]+)\" data-to=\"([^\"]+)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), heavy); it != std::sregex_iterator(); ++it)
      svg_heavy.insert({(*it)[1].str(), (*it)[2].str()});
    std::size_t svg_members = 0;
    std::regex member("data-member=\"true\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), member); it != std::sregex_iterator(); ++it)
      ++svg_members;

    const auto fig = build_chamber_figure(ctx, spec, 6);
    std::set<std::pair<std::string, std::string>> expected;
    for (const auto& [a, b] : fig.heavy)
      expected.insert({"(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + ")",
                       "(" + std::to_string(b[0]) + "," + std::to_string(b[1]) + ")"});
    CHECK(svg_heavy == expected);
    CHECK(svg_members == fig.highlighted.size());

    // ascii: one '*' per member, one heavy mark per heavy edge
    const auto grid_end = ascii.find("legend:");
    const auto grid = ascii.substr(0, grid_end);
    const auto body = grid.substr(grid.find('\n') + 1);
    std::size_t stars = 0, heavy_marks = 0;
    for (char c : body) {
      stars += c == '*';
      heavy_marks += c == '#';
    }
    std::size_t eq = 0;
    for (std::size_t i = 0; i + 2 < body.size(); ++i)
      if (body.compare(i, 3, "===") == 0) {
        ++eq;
        i += 2;
      }
    CHECK(stars == fig.highlighted.size());
    CHECK(heavy_marks + eq == fig.heavy.size());
  }
}

TEST_CASE("render guards") {
  CHECK_THROWS_AS(render_chamber(make_context(2, 4), {RenderMode::Wk, 2, 0}, 3, RenderFormat::Svg), Error);
  try {
    render_chamber(make_context(2, 4), {RenderMode::Wk, 2, 0}, 3, RenderFormat::Svg);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedRank);
  }
  CHECK_THROWS_AS(render_chamber(make_context(2, 3), {RenderMode::Wk, 2, 0}, 33, RenderFormat::Ascii), Error);
}
