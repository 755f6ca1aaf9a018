#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "btmf/alpha.hpp"
#include "btmf/building.hpp"
#include "btmf/coeff.hpp"
#include "btmf/error.hpp"
#include "btmf/render.hpp"
#include "btmf/vanderput.hpp"
#include "btmf/verify.hpp"
#include "btmf/weyl.hpp"

using namespace btmf;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchemaVersion = "1.0";
constexpr long long kMaxBound = 64;

enum class Format { Json, Text, Svg };

struct Output {
  json doc = json::object();
  std::string text;
  int exit_code = 0;
};

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return json(v.convert_to<long long>());
  return json(v.str());
}

json rational_json(const Rational& v) {
  json j = json::object();
  j["num"] = big_json(numerator(v));
  j["den"] = big_json(denominator(v));
  return j;
}

// Trailing 0 of the full vertex dropped.
json vertex_json(const Vertex& v) {
  json j = json::array();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) j.push_back(v[i]);
  return j;
}

std::string short_vertex(const Vertex& v) {
  std::string s = "(";
  for (std::size_t i = 0; i + 1 < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

long long parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "cannot read " + what + " from '" + s + "'");
  }
}

// r coordinates, or r-1 with the trailing 0 implied.
std::vector<Rational> parse_coords(const std::string& text, int r) {
  std::vector<Rational> c;
  for (const auto& part : split(text, ',')) c.push_back(parse_rational(part));
  if (static_cast<int>(c.size()) == r - 1) c.emplace_back(0);
  if (static_cast<int>(c.size()) != r)
    throw Error(ErrorKind::InvalidPoint, "expected " + std::to_string(r) + " or " + std::to_string(r - 1) +
                                             " coordinates, got '" + text + "'");
  return c;
}

Vertex parse_vertex(const std::string& text, int r) {
  return ApartmentPoint(parse_coords(text, r)).to_ints();
}

Vertex parse_weyl_vertex(const std::string& text, int r) {
  return WeylPoint(parse_coords(text, r)).to_ints();
}

FormSpec parse_form(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 2 && parts[0] == "alpha") return {FormKind::Alpha, static_cast<int>(parse_int(parts[1], "k")), 0};
  if (parts.size() == 3 && parts[0] == "coeff")
    return {FormKind::Coeff, static_cast<int>(parse_int(parts[1], "k")), static_cast<int>(parse_int(parts[2], "d"))};
  throw Error(ErrorKind::InvalidArgument, "form must be alpha:K or coeff:K:D, got '" + text + "'");
}

RenderSpec parse_mode(const std::string& text) {
  const auto parts = split(text, ':');
  auto num = [&](std::size_t i) { return static_cast<int>(parse_int(parts[i], "mode parameter")); };
  if (parts.size() == 2 && parts[0] == "wk") return {RenderMode::Wk, num(1), 0};
  if (parts.size() == 3 && parts[0] == "wprime") return {RenderMode::WPrime, num(2), num(1)};
  if (parts.size() == 2 && parts[0] == "alpha-norm") return {RenderMode::AlphaNorm, num(1), 0};
  if (parts.size() == 2 && parts[0] == "inner-degree") return {RenderMode::InnerDegree, num(1), 0};
  throw Error(ErrorKind::InvalidArgument,
              "mode must be wk:K, wprime:D:K, alpha-norm:K or inner-degree:K, got '" + text + "'");
}

void check_bound(long long bound) {
  if (bound < 0 || bound > kMaxBound) throw Error(ErrorKind::GuardExceeded, "window bound must lie in 0..64");
}

json form_json(const FormSpec& f) {
  json j = json::object();
  j["kind"] = f.kind == FormKind::Alpha ? "alpha" : "coeff";
  j["k"] = f.k;
  if (f.kind == FormKind::Coeff) j["d"] = f.d;
  return j;
}

std::string form_name(const FormSpec& f) {
  return f.kind == FormKind::Alpha ? "alpha_" + std::to_string(f.k)
                                   : "coeff_" + std::to_string(f.k) + " (d=" + std::to_string(f.d) + ")";
}

struct Args {
  std::string x;
  int count = 0;
  int k = 1;
  int d = 0;
  long long bound = 6;
  std::string kind;
  std::string form;
  std::string edge;
  std::string vertex;
  std::string direction;
  std::string mode;
  std::string output;
  std::string suite = "all";
};

Output cmd_charseq(const Context& ctx, const Args& a) {
  if (a.count < 1) throw Error(ErrorKind::InvalidArgument, "--count must be >= 1");
  const ApartmentPoint x(parse_coords(a.x, ctx.r));
  const auto seq = characteristic_sequence(ctx, x, a.count);
  Output out;
  out.doc["x"] = json::array();
  for (const auto& c : x.coords()) out.doc["x"].push_back(rational_json(c));
  out.doc["entries"] = json::array();
  std::ostringstream text;
  text << "characteristic sequence at " << x.to_string() << "\n";
  for (std::size_t j = 0; j < seq.size(); ++j) {
    const auto& e = seq[j];
    json item = json::object();
    item["position"] = j + 1;
    item["s"] = e.symbol.s;
    item["i"] = e.symbol.i;
    item["lognorm"] = rational_json(e.lognorm);
    item["cycle"] = e.cycle_index;
    out.doc["entries"].push_back(item);
    text << "  " << j + 1 << ": T^" << e.symbol.s << " e_" << e.symbol.i << "  log " << to_string(e.lognorm)
         << "  cycle " << e.cycle_index << "\n";
  }
  out.text = text.str();
  return out;
}

Output cmd_wk(const Context& ctx, const Args& a) {
  check_bound(a.bound);
  const auto verts = wk_window(ctx, a.k, a.bound);
  Output out;
  out.doc["k"] = a.k;
  out.doc["bound"] = a.bound;
  out.doc["vertices"] = json::array();
  std::ostringstream text;
  text << "W(" << a.k << ") with n1 <= " << a.bound << ": " << verts.size() << " vertices\n";
  for (const auto& v : verts) {
    out.doc["vertices"].push_back(vertex_json(v));
    text << "  " << short_vertex(v) << "\n";
  }
  out.text = text.str();
  return out;
}

Output cmd_norm(const Context& ctx, const Args& a) {
  const WeylPoint x(parse_coords(a.x, ctx.r));
  FormSpec f{a.kind == "alpha" ? FormKind::Alpha : FormKind::Coeff, a.k, a.d};
  Rational value;
  if (f.kind == FormKind::Alpha) {
    value = log_alpha_norm_point(ctx, x, f.k);
  } else {
    if (f.d < 1) throw Error(ErrorKind::InvalidArgument, "coefficient forms need --d >= 1");
    value = log_coeff_norm(ctx, x, f.d, f.k);
  }
  Output out;
  out.doc["form"] = form_json(f);
  out.doc["x"] = json::array();
  for (const auto& c : x.coords()) out.doc["x"].push_back(rational_json(c));
  out.doc["log_norm"] = rational_json(value);
  out.text = "log_q norm of " + form_name(f) + " at " + x.to_string() + " = " + to_string(value) + "\n";
  return out;
}

Output cmd_vdp(const Context& ctx, const Args& a) {
  const FormSpec f = parse_form(a.form);
  validate_form(ctx, f);
  Arrow e = [&] {
    if (!a.edge.empty()) {
      if (!a.vertex.empty() || !a.direction.empty())
        throw Error(ErrorKind::InvalidArgument, "use either --edge or --vertex with --direction");
      const auto pos = a.edge.find("->");
      if (pos == std::string::npos) throw Error(ErrorKind::InvalidArgument, "edge must look like a,b,c->d,e,f");
      return apartment_arrow(ctx, parse_vertex(a.edge.substr(0, pos), ctx.r),
                             parse_vertex(a.edge.substr(pos + 2), ctx.r));
    }
    if (a.vertex.empty() || a.direction.empty())
      throw Error(ErrorKind::InvalidArgument, "give --edge, or --vertex together with --direction");
    const auto origin = standard_vertex(ctx, parse_vertex(a.vertex, ctx.r));
    LaurentVector y;
    std::vector<FiniteField::Elem> dir;
    for (const auto& part : split(a.direction, ':')) {
      const long long c = parse_int(part, "direction coordinate");
      if (c < 0 || c >= static_cast<long long>(ctx.q))
        throw Error(ErrorKind::InvalidArgument, "direction coordinates are field elements 0..q-1");
      dir.push_back(static_cast<FiniteField::Elem>(c));
      y.push_back(c ? FqLaurent::constant(ctx.F(), dir.back()) : FqLaurent(ctx.F()));
    }
    if (static_cast<int>(y.size()) != ctx.r)
      throw Error(ErrorKind::InvalidArgument, "direction needs r coordinates");
    return Arrow{origin, shift_toward(ctx, origin, y), dir, 1};
  }();
  const auto value = vdp(ctx, f, e);
  Output out;
  out.doc["form"] = form_json(f);
  out.doc["origin_log_norm"] = rational_json(log_norm_at_vertex(ctx, f, e.origin));
  out.doc["target_log_norm"] = rational_json(log_norm_at_vertex(ctx, f, e.target));
  out.doc["arrow_type"] = e.type;
  out.doc["value"] = big_json(value);
  out.text = "P(" + form_name(f) + ")(e) = " + value.str() + "\n";
  return out;
}

Output cmd_inner_degree(const Context& ctx, const Args& a) {
  const FormSpec f = parse_form(a.form);
  const Vertex n = parse_weyl_vertex(a.vertex, ctx.r);
  const auto N = inner_degree(ctx, f, n);
  Output out;
  out.doc["form"] = form_json(f);
  out.doc["vertex"] = vertex_json(n);
  out.doc["inner_degree"] = big_json(N);
  out.text = "N_" + short_vertex(n) + "(" + form_name(f) + ") = " + N.str() + "\n";
  return out;
}

Output cmd_case_study(const Context& ctx) {
  const auto rep = case_study_report(ctx);
  Output out;
  out.doc["form"] = form_json(FormSpec{FormKind::Alpha, 2, 0});
  out.doc["vertices"] = json::array();
  std::ostringstream text;
  text << "alpha_2 around the five vertex types, q = " << ctx.q << "\n";
  for (const auto& v : rep.vertices) {
    json item = json::object();
    item["label"] = v.label;
    item["vertex"] = vertex_json(v.n);
    item["orbit_sizes"] = v.orbit_sizes;
    item["orbit_p_values"] = json::array();
    for (const auto& vals : v.orbit_p_values) {
      json arr = json::array();
      for (const auto& x : vals) arr.push_back(big_json(x));
      item["orbit_p_values"].push_back(arr);
    }
    item["inner_degree"] = big_json(v.inner_degree);
    item["expected_inner_degree"] = big_json(v.expected_inner_degree);
    item["passed"] = v.passed;
    out.doc["vertices"].push_back(item);
    text << "  " << v.label << " " << short_vertex(v.n) << ": orbits";
    for (std::size_t o = 0; o < v.orbit_sizes.size(); ++o) {
      text << " " << v.orbit_sizes[o] << "{";
      for (std::size_t j = 0; j < v.orbit_p_values[o].size(); ++j)
        text << (j ? "," : "") << v.orbit_p_values[o][j].str();
      text << "}";
    }
    text << "  N = " << v.inner_degree.str() << (v.passed ? "" : "  FAILED") << "\n";
  }
  out.doc["violations"] = rep.violations;
  out.doc["passed"] = rep.passed();
  for (const auto& v : rep.violations) text << "  violation: " << v << "\n";
  out.text = text.str();
  out.exit_code = rep.passed() ? 0 : 3;
  return out;
}

Output cmd_render(const Context& ctx, const Args& a, Format format) {
  const RenderSpec spec = parse_mode(a.mode);
  const auto fig = build_chamber_figure(ctx, spec, a.bound);
  Output out;
  if (format == Format::Svg) {
    out.text = render_svg(fig);
  } else if (format == Format::Text) {
    out.text = render_ascii(fig);
  } else {
    out.doc["title"] = fig.title;
    out.doc["bound"] = fig.bound;
    out.doc["vertices"] = json::array();
    for (const auto& v : fig.vertices) {
      json item = json::object();
      item["vertex"] = vertex_json(v);
      item["highlighted"] = fig.highlighted.count(v) > 0;
      auto it = fig.labels.find(v);
      if (it != fig.labels.end()) item["label"] = it->second;
      out.doc["vertices"].push_back(item);
    }
    out.doc["heavy_edges"] = json::array();
    for (const auto& [p, q] : fig.heavy) out.doc["heavy_edges"].push_back(json::array({vertex_json(p), vertex_json(q)}));
  }
  return out;
}

Output cmd_verify(const Args& a) {
  const auto rep = run_verify(a.suite);
  Output out;
  out.doc["suite"] = rep.suite;
  out.doc["criteria"] = json::array();
  std::ostringstream text;
  for (const auto& r : rep.results) {
    json item = json::object();
    item["id"] = r.id;
    item["suite"] = r.suite;
    item["name"] = r.name;
    item["passed"] = r.passed;
    item["expected"] = r.expected;
    item["observed"] = r.observed;
    item["details"] = r.details;
    out.doc["criteria"].push_back(item);
    text << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " [" << r.suite << "] " << r.name << ": "
         << r.observed << "\n";
    for (const auto& d : r.details) text << "     " << d << "\n";
  }
  out.doc["passed"] = rep.passed();
  out.text = text.str();
  out.exit_code = rep.passed() ? 0 : 3;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Norms, van der Put transforms and zero loci of modular forms on the Bruhat-Tits building"};
  app.require_subcommand(1);
  app.fallthrough();

  long long q = 2, r = 3;
  std::string format_name = "json";
  app.add_option("--q", q, "size of the constant field (prime power)")->capture_default_str();
  app.add_option("--r", r, "rank, >= 2")->capture_default_str();
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"json", "text", "svg"}))
      ->capture_default_str();

  Args a;
  auto* charseq = app.add_subcommand("charseq", "characteristic sequence at a point");
  charseq->add_option("--x", a.x, "point, comma-separated rationals")->required();
  charseq->add_option("--count", a.count, "number of entries")->required();

  auto* wk = app.add_subcommand("wk", "vertices of W(k) in the window n1 <= bound");
  wk->add_option("--k", a.k)->required();
  wk->add_option("--bound", a.bound)->capture_default_str();

  auto* norm = app.add_subcommand("norm", "log_q spectral norm of alpha_k or of a coefficient form");
  norm->add_option("kind", a.kind, "alpha or coeff")->required()->check(CLI::IsMember({"alpha", "coeff"}));
  norm->add_option("--k", a.k)->required();
  norm->add_option("--d", a.d, "degree of a (coefficient forms)");
  norm->add_option("--x", a.x, "point of the chamber")->required();

  auto* vdpc = app.add_subcommand("vdp", "van der Put transform on an arrow");
  vdpc->add_option("--form", a.form, "alpha:K or coeff:K:D")->required();
  vdpc->add_option("--edge", a.edge, "apartment arrow a,b,c->d,e,f");
  vdpc->add_option("--vertex", a.vertex, "origin vertex (with --direction)");
  vdpc->add_option("--direction", a.direction, "projective direction over F_q, e.g. 0:0:1");

  auto* inner = app.add_subcommand("inner-degree", "local inner degree at a chamber vertex");
  inner->add_option("--form", a.form, "alpha:K or coeff:K:D")->required();
  inner->add_option("--vertex", a.vertex)->required();

  auto* cs = app.add_subcommand("case-study", "orbits and transforms of alpha_2 for r = 3");

  auto* render = app.add_subcommand("render", "draw a window of the chamber for r = 3");
  render->add_option("--mode", a.mode, "wk:K, wprime:D:K, alpha-norm:K or inner-degree:K")->required();
  render->add_option("--bound", a.bound)->capture_default_str();
  render->add_option("--output", a.output, "write the document to this file");

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--suite", a.suite)->check(CLI::IsMember(verify_suites()))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Format format = format_name == "text" ? Format::Text : format_name == "svg" ? Format::Svg : Format::Json;
  std::string command;
  try {
    if (format == Format::Svg && !render->parsed())
      throw Error(ErrorKind::InvalidArgument, "--format svg applies to render only");
    const Context ctx = make_context(q, r);
    Output out;
    if (charseq->parsed()) {
      command = "charseq";
      out = cmd_charseq(ctx, a);
    } else if (wk->parsed()) {
      command = "wk";
      out = cmd_wk(ctx, a);
    } else if (norm->parsed()) {
      command = "norm";
      out = cmd_norm(ctx, a);
    } else if (vdpc->parsed()) {
      command = "vdp";
      out = cmd_vdp(ctx, a);
    } else if (inner->parsed()) {
      command = "inner-degree";
      out = cmd_inner_degree(ctx, a);
    } else if (cs->parsed()) {
      command = "case-study";
      out = cmd_case_study(ctx);
    } else if (render->parsed()) {
      command = "render";
      out = cmd_render(ctx, a, format);
    } else {
      command = "verify";
      out = cmd_verify(a);
    }

    std::string document;
    if (format == Format::Json) {
      json doc = json::object();
      doc["schema_version"] = kSchemaVersion;
      doc["command"] = command;
      doc["q"] = q;
      doc["r"] = r;
      for (auto& [key, value] : out.doc.items()) doc[key] = value;
      document = doc.dump(2) + "\n";
    } else {
      document = out.text;
    }
    if (!a.output.empty()) {
      std::ofstream file(a.output, std::ios::binary);
      if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + a.output);
      file << document;
    } else {
      std::cout << document;
    }
    return out.exit_code;
  } catch (const Error& e) {
    std::cerr << "btmf: " << e.what() << "\n";
    return is_consistency_failure(e.kind()) ? 3 : 2;
  }
}
