#include "oscform/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "oscform/errors.hpp"
#include "oscform/expression.hpp"
#include "oscform/series.hpp"
#include "oscform/variety_file.hpp"

namespace oscform {

namespace detail {
extern const std::vector<std::pair<std::string_view, std::string_view>> kGallery;
}

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// Bad flags or unreadable input; reported like a parse error.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string file = "-";
  std::optional<unsigned> order;
  bool max = false;
  std::string at;
  bool symbolic = false;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::string format = "text";
  std::string hyperplane;
  std::string phi = "1";
  std::string degrees;
  unsigned points = 5;
  std::string name;
};

// ---- output -------------------------------------------------------------

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const Rational& q : p) out.push_back(to_string(q));
  return out;
}

Json strings(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const Polynomial& p : ps) out.push_back(p.to_string());
  return out;
}

Json matrix_json(const Matrix<Rational>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(point_json(m.row(i)));
  return out;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
    return s + "]";
  }
  return j.dump();
}

bool is_inline(const Json& j) {
  if (j.is_object()) return false;
  if (j.is_array()) {
    for (const Json& e : j) {
      if (!is_inline(e)) return false;
    }
  }
  return true;
}

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (is_inline(value)) {
      out << pad << key << ": " << scalar_text(value) << "\n";
    } else if (value.is_object()) {
      out << pad << key << ":\n";
      render_text(value, out, indent + 2);
    } else {
      out << pad << key << ":\n";
      for (const Json& item : value) {
        if (is_inline(item)) {
          out << pad << "  - " << scalar_text(item) << "\n";
        } else {
          std::ostringstream nested;
          render_text(item, nested, indent + 4);
          std::string text = nested.str();
          text.replace(0, static_cast<std::size_t>(indent) + 4, pad + "  - ");
          out << text;
        }
      }
    }
  }
}

// ---- input --------------------------------------------------------------

std::string read_input(const std::string& file, std::istream& in) {
  std::ostringstream text;
  if (file == "-") {
    text << in.rdbuf();
  } else {
    std::ifstream stream(file);
    if (!stream) throw UsageError("cannot open '" + file + "'");
    text << stream.rdbuf();
  }
  return text.str();
}

struct Loaded {
  VarietyFile file;
  std::string source;
};

Loaded load(const Options& o, std::istream& in) {
  const std::string text = read_input(o.file, in);
  return Loaded{parse_variety(text), o.file == "-" ? "stdin" : o.file};
}

Point parse_cli_point(const std::string& text, const char* what) {
  try {
    return parse_point(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(what) + ": " + e.message());
  }
}

unsigned require_order(const Options& o, const char* command) {
  if (!o.order) throw UsageError(std::string(command) + " needs --order");
  return *o.order;
}

// A chart of the input together with the point to use, if any.
struct Chart {
  Parameterization f;
  std::optional<Point> at;
  std::optional<unsigned> series_order;
};

Chart chart_for(const VarietyFile& file, const Options& o, unsigned needed_order, bool use_file_point,
                Json& warnings) {
  Chart c;
  if (file.kind == VarietyKind::kImplicit) {
    if (!o.at.empty()) throw UsageError("--at does not apply to implicit input; the file's point is used");
    JetParameterizeOptions jo;
    jo.free_coordinates = file.free;
    c.f = jet_parameterize(file.implicit(), needed_order, jo);
    c.at = Point(c.f.dim(), Rational(0));
    c.series_order = needed_order;
    warnings.push_back("implicit input: evaluated at the file's point through a series chart of order " +
                       std::to_string(needed_order));
    return c;
  }
  c.f = file.parameterization();
  if (!o.at.empty()) {
    c.at = parse_cli_point(o.at, "--at");
  } else if (use_file_point && file.point) {
    c.at = file.point;
  }
  if (c.at) {
    if (c.at->size() != c.f.dim()) {
      throw PreconditionError("point has " + std::to_string(c.at->size()) + " coordinates, expected " +
                              std::to_string(c.f.dim()));
    }
    JetTable table(c.f);
    if (!is_immersive_at(table, *c.at)) warnings.push_back("NonImmersivePoint: the first-order jets have rank < r+1 here");
  }
  return c;
}

Json base_report(const std::string& command, const Loaded* input, const Options& o) {
  Json r;
  r["schema"] = kSchemaVersion;
  r["command"] = command;
  if (input) {
    r["input"] = {{"file", input->source},
                  {"label", input->file.label},
                  {"kind", to_string(input->file.kind)}};
  }
  if (o.order) r["order"] = *o.order;
  return r;
}

std::string mode_of(const std::optional<Point>& at) { return to_string(at ? RankMode::kPoint : RankMode::kSymbolic); }

// ---- commands -----------------------------------------------------------

template <class F>
Json system_json(const LinearSystem<F>& l) {
  Json out;
  out["degree"] = l.degree;
  Json names = Json::array();
  for (const std::string& v : *l.tangent_vars) names.push_back(v);
  out["tangent_vars"] = names;
  out["size"] = l.size();
  out["dim"] = static_cast<long>(l.size()) - 1;
  out["generators"] = strings(l.generators());
  return out;
}

Json cmd_osc(const Loaded& in, const Options& o, Json report) {
  const unsigned m = require_order(o, "osc");
  Json warnings = Json::array();
  const Chart c = chart_for(in.file, o, m, false, warnings);
  ProfileOptions po;
  po.at = c.at;
  po.symbolic = o.symbolic;
  po.seed = o.seed;
  const OsculatingProfile profile = osculating_profile(c.f, m, po);
  report["mode"] = to_string(profile.mode);
  if (profile.mode == RankMode::kSampled) {
    report["seed"] = o.seed;
    Json pts = Json::array();
    for (const Point& p : profile.sampled_points) pts.push_back(point_json(p));
    report["sampled_points"] = pts;
  }
  if (c.at) report["point"] = point_json(*c.at);
  report["warnings"] = warnings;
  Json results;
  if (o.max) {
    results["dims"] = profile.dims;
  } else {
    results["s"] = profile.dims.back();
  }
  if (c.at) {
    const Subspace<Rational> osc = osculating_space(c.f, m, *c.at);
    Json basis = Json::array();
    for (std::size_t i = 0; i < osc.dim(); ++i) basis.push_back(point_json(primitive_vector(osc.vector(i))));
    results["osculating_space"] = basis;
  }
  report["results"] = results;
  return report;
}

Json cmd_fundform(const Loaded& in, const Options& o, Json report) {
  const unsigned m = require_order(o, "fundform");
  Json warnings = Json::array();
  const Chart c = chart_for(in.file, o, m + 1, false, warnings);
  report["mode"] = mode_of(c.at);
  if (c.at) report["point"] = point_json(*c.at);
  report["warnings"] = warnings;
  Json results;
  const auto fill = [&](const auto& ff) {
    results = system_json(ff.system);
    results["s_previous"] = ff.s_prev;
    results["s"] = ff.s_cur;
    results["dimension_law"] = ff.dimension_law_holds();
  };
  if (c.at) {
    fill(fundamental_form(c.f, m, *c.at));
  } else {
    fill(fundamental_form(c.f, m));
  }
  report["results"] = results;
  return report;
}

Json cmd_jacobian(const Loaded& in, const Options& o, Json report) {
  const unsigned m = require_order(o, "jacobian-check");
  if (m < 3) throw PreconditionError("jacobian-check needs --order >= 3");
  Json warnings = Json::array();
  const Chart c = chart_for(in.file, o, m + 1, false, warnings);
  report["mode"] = mode_of(c.at);
  if (c.at) report["point"] = point_json(*c.at);
  report["warnings"] = warnings;
  Json results;
  const auto fill = [&](const auto& top, const auto& previous) {
    const ContainmentReport cr = jacobian_containment(top.system, previous.system);
    results["contained"] = cr.contained;
    results["equal"] = cr.equal;
    results["jacobian"] = system_json(jacobian_system(top.system));
    results["previous_form"] = system_json(previous.system);
    if (!cr.contained) results["note"] = "containment failed: an arithmetic bug or an invalid point";
  };
  if (c.at) {
    fill(fundamental_form(c.f, m, *c.at), fundamental_form(c.f, m - 1, *c.at));
  } else {
    fill(fundamental_form(c.f, m), fundamental_form(c.f, m - 1));
  }
  report["results"] = results;
  return report;
}

Json cmd_phibar(const Loaded& in, const Options& o, Json report) {
  const unsigned m = require_order(o, "phibar-check");
  Json warnings = Json::array();
  const Chart c = chart_for(in.file, o, m + 1, false, warnings);
  report["mode"] = mode_of(c.at);
  if (c.at) report["point"] = point_json(*c.at);
  report["warnings"] = warnings;
  const PhibarReport pr = verify_phibar_relation(c.f, m, c.at);
  report["results"] = {{"holds", pr.holds},
                       {"lower_orders_vanish", pr.lower_orders_vanish},
                       {"top_identity_holds", pr.top_identity_holds},
                       {"max_order_checked", pr.max_order_checked},
                       {"kernel_vectors_checked", pr.kernel_vectors_checked}};
  return report;
}

template <class F>
Json base_locus_json(const LinearSystem<F>& l) {
  const BaseLocusReport bl = base_locus_pencil(l);
  Json out;
  out["has_base_point"] = bl.has_base_point;
  out["common_factor"] = bl.common_factor.to_string();
  Json pts = Json::array();
  for (const auto& p : bl.base_points) pts.push_back("(" + to_string(p[0]) + ":" + to_string(p[1]) + ")");
  out["base_points"] = pts;
  out["form"] = system_json(l);
  return out;
}

Json cmd_base_locus(const Loaded& in, const Options& o, Json report) {
  const unsigned m = o.order.value_or(2);
  report["order"] = m;
  Json warnings = Json::array();
  const Chart c = chart_for(in.file, o, m + 1, false, warnings);
  report["mode"] = mode_of(c.at);
  if (c.at) report["point"] = point_json(*c.at);
  report["warnings"] = warnings;
  report["results"] = c.at ? base_locus_json(fundamental_form(c.f, m, *c.at).system)
                           : base_locus_json(fundamental_form(c.f, m).system);
  return report;
}

Json cmd_tangent_cone(const Loaded& in, const Options& o, Json report) {
  if (o.hyperplane.empty()) throw UsageError("tangent-cone needs --hyperplane");
  const Point h = parse_cli_point(o.hyperplane, "--hyperplane");
  Json warnings = Json::array();
  const Chart c = chart_for(in.file, o, o.order.value_or(6), true, warnings);
  if (!c.at) throw PreconditionError("tangent-cone needs a point (--at or a 'point:' line)");
  report["mode"] = "point";
  report["point"] = point_json(*c.at);
  report["hyperplane"] = point_json(h);
  report["warnings"] = warnings;
  const TangentConeReport tc = hyperplane_tangent_cone(c.f, h, *c.at);
  report["results"] = {{"order", tc.order}, {"form", tc.form.to_string()}, {"in_fundamental_form", tc.in_fundamental_form}};
  return report;
}

ScrollSpec scroll_from(const Loaded* in, const Options& o) {
  if (!o.degrees.empty()) {
    std::vector<unsigned> degrees;
    std::stringstream s(o.degrees);
    std::string item;
    while (std::getline(s, item, ',')) {
      try {
        const long v = std::stol(item);
        if (v <= 0) throw std::invalid_argument("nonpositive");
        degrees.push_back(static_cast<unsigned>(v));
      } catch (const std::exception&) {
        throw UsageError("--degrees: expected positive integers, got '" + item + "'");
      }
    }
    return ScrollSpec::make(degrees);
  }
  if (!in) throw UsageError("scroll needs --degrees or a scroll file");
  return in->file.scroll_spec();
}

Json cmd_scroll(const Loaded* in, const Options& o, Json report) {
  const ScrollSpec spec = scroll_from(in, o);
  const RuledParameterization f = scroll(spec);
  Json warnings = Json::array();
  if (spec.fiber_count() == 0) warnings.push_back("degenerate scroll: a single degree gives a rational normal curve");
  report["mode"] = to_string(RankMode::kSymbolic);
  report["seed"] = o.seed;
  report["warnings"] = warnings;
  Json results;
  results["degrees"] = spec.degrees;
  results["ambient_dim"] = spec.ambient_dim();
  Json params = Json::array();
  for (const std::string& p : *f.chart.params) params.push_back(p);
  results["params"] = params;
  Json coords = Json::array();
  for (const RationalFunction& x : f.chart.coords) coords.push_back(x.to_string());
  results["coords"] = coords;
  std::vector<unsigned> orders;
  if (o.order) {
    orders.push_back(*o.order);
  } else {
    for (unsigned m = 1; m <= spec.degrees.front(); ++m) orders.push_back(m);
  }
  Json ranks = Json::array();
  for (unsigned m : orders) {
    const ScrollRankReport rr = scroll_rank_check(spec, m);
    const PushdownReport pd = scroll_pushdown_check(spec, m, o.seed);
    ranks.push_back({{"order", m},
                     {"rank", rr.rank},
                     {"expected", rr.expected},
                     {"match", rr.match},
                     {"pushdown_rank", pd.rank},
                     {"pushdown_expected", pd.expected},
                     {"pushdown_match", pd.match},
                     {"pushdown_point", point_json(pd.point)}});
  }
  results["ranks"] = ranks;
  report["results"] = results;
  return report;
}

Json cmd_ruling(const Loaded& in, const Options& o, Json report) {
  const unsigned m = o.order.value_or(2);
  report["order"] = m;
  const auto ruled = in.file.ruled();
  if (!ruled) throw PreconditionError("ruling-check needs a scroll or a parameterization with a 'fiber:' line");
  Json warnings = Json::array();
  std::optional<Point> at;
  if (!o.at.empty()) at = parse_cli_point(o.at, "--at");
  report["mode"] = mode_of(at);
  if (at) report["point"] = point_json(*at);
  report["warnings"] = warnings;
  const RulingReport rr = ruling_fixed_component_check(*ruled, m, at);
  const DimBoundReport db = dim_bound_check(*ruled, m, at);
  Json results;
  results["base_params"] = ruled->base_count;
  results["fiber_params"] = ruled->fiber_count;
  results["generators"] = strings(rr.generators);
  results["size"] = rr.size;
  results["all_members_contain_ruling"] = rr.all_members_contain_ruling;
  results["monomial_support_ok"] = rr.monomial_support_ok;
  if (rr.singular_along_fiber) results["singular_along_fiber"] = *rr.singular_along_fiber;
  results["fixed_component"] = rr.fixed_component.to_string();
  results["dim_bound"] = {{"dim", db.dim}, {"bound", db.bound}, {"ok", db.ok}, {"attained", db.attained}};
  report["results"] = results;
  return report;
}

Json monge_json(const MongeData& md) {
  Json out;
  out["point"] = point_json(md.point);
  out["chart"] = matrix_json(md.chart);
  out["f"] = md.f.to_string();
  Json pieces;
  for (unsigned d = 2; d <= md.order; ++d) pieces["f" + std::to_string(d)] = md.piece(d).to_string();
  out["pieces"] = pieces;
  return out;
}

Json cmd_monge(const Loaded& in, const Options& o, Json report) {
  const unsigned order = o.order.value_or(4);
  report["order"] = order;
  Json warnings = Json::array();
  MongeData md;
  if (in.file.kind == VarietyKind::kImplicit) {
    md = monge_form(in.file.implicit(), order);
  } else {
    const Chart c = chart_for(in.file, o, order, true, warnings);
    if (!c.at) throw PreconditionError("monge needs a point (--at or a 'point:' line)");
    md = monge_form(c.f, *c.at, order);
  }
  report["mode"] = "point";
  report["warnings"] = warnings;
  Json results = monge_json(md);
  try {
    const FubiniReport fr = fubini_intersection_test(md);
    results["fubini"] = {{"resultant", to_string(fr.resultant)},
                         {"intersects", fr.intersects},
                         {"common_factor", fr.common_factor.to_string()}};
  } catch (const DegenerateSecondForm& e) {
    results["fubini"] = {{"error", e.what()}};
  }
  report["results"] = results;
  return report;
}

Json diagnostic_json(const RuledDiagnostic& d) {
  Json out;
  out["verdict"] = to_string(d.verdict);
  out["disclaimer"] = RuledDiagnostic::kDisclaimer;
  if (d.projection) out["projection"] = matrix_json(*d.projection);
  Json points = Json::array();
  for (const PointDiagnostic& p : d.points) {
    Json j;
    j["point"] = point_json(p.point);
    if (p.error) {
      j["error"] = *p.error;
    } else {
      j["resultant"] = to_string(p.resultant);
      j["intersects"] = p.intersects;
      j["common_factor"] = p.common_factor.to_string();
      Json dirs = Json::array();
      for (const FlaggedDirection& f : p.directions) {
        dirs.push_back({{"direction", f.description},
                        {"contact", f.contact ? Json(*f.contact) : Json(">= " + std::to_string(d.order + 1))}});
      }
      j["directions"] = dirs;
      j["line_evidence"] = p.line_evidence;
    }
    points.push_back(j);
  }
  out["points"] = points;
  return out;
}

Json cmd_ruled_test(const Loaded& in, const Options& o, Json report) {
  DiagnosticOptions dopt;
  dopt.order = o.order.value_or(4);
  dopt.jobs = o.jobs;
  report["order"] = dopt.order;
  report["mode"] = "point";
  report["seed"] = o.seed;
  Json warnings = Json::array();
  RuledDiagnostic d;
  if (in.file.kind == VarietyKind::kImplicit) {
    d = ruled_surface_diagnostic(in.file.implicit(), dopt);
  } else {
    Parameterization f = in.file.parameterization();
    if (f.dim() != 2) throw NotASurfaceInP3("ruled-test needs a surface (two parameters)");
    std::optional<Matrix<Rational>> projection;
    if (f.ambient_dim() > 3) {
      Matrix<Rational> used;
      f = project_to_p3(f, std::nullopt, o.seed, &used);
      projection = used;
      warnings.push_back("surface projected to P^3 by a seeded random matrix");
    }
    std::vector<Point> points;
    if (!o.at.empty()) {
      points.push_back(parse_cli_point(o.at, "--at"));
    } else {
      PointSampler sampler(o.seed);
      for (unsigned i = 0; i < o.points; ++i) points.push_back(sampler.next(2));
    }
    d = ruled_surface_diagnostic(f, points, dopt);
    d.projection = projection;
  }
  report["warnings"] = warnings;
  report["results"] = diagnostic_json(d);
  return report;
}

Json cmd_heat(const Loaded& in, const Options& o, Json report) {
  const Parameterization f = in.file.parameterization();
  const RationalFunction phi = parse_expression(o.phi, f.params);
  report["mode"] = to_string(RankMode::kSymbolic);
  report["phi"] = phi.to_string();
  report["warnings"] = Json::array();
  report["results"] = {{"holds", heat_equation_check(f, phi)}};
  return report;
}

Json cmd_implicit_jet(const Loaded& in, const Options& o, Json report) {
  const unsigned order = o.order.value_or(3);
  report["order"] = order;
  const ImplicitVariety iv = in.file.implicit();
  JetParameterizeOptions jo;
  jo.free_coordinates = in.file.free;
  const Parameterization f = jet_parameterize(iv, order, jo);
  report["mode"] = "point";
  report["point"] = point_json(iv.point);
  report["warnings"] = Json::array();
  Json results;
  Json params = Json::array();
  for (const std::string& p : *f.params) params.push_back(p);
  results["params"] = params;
  Json coords = Json::array();
  std::vector<Polynomial> series;
  for (const RationalFunction& c : f.coords) {
    coords.push_back(c.to_string());
    series.push_back(c.numerator().scaled(1 / c.denominator().constant_term()));
  }
  results["coords"] = coords;
  bool residual = true;
  for (const Polynomial& g : iv.equations) residual = residual && substitute_truncated(g, series, order).is_zero();
  results["residual_vanishes_through_order"] = residual;
  report["results"] = results;
  return report;
}

// ---- dispatch -----------------------------------------------------------

void add_common(CLI::App* sub, Options& o, bool with_file) {
  if (with_file) sub->add_option("file", o.file, "variety file, or - for stdin")->capture_default_str();
  sub->add_option("--order", o.order, "order m");
  sub->add_option("--at", o.at, "rational parameter point, e.g. 1,2/3");
  sub->add_option("--seed", o.seed, "seed for sampled points and projections")->capture_default_str();
  sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

}  // namespace

std::vector<std::string> gallery_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : detail::kGallery) out.emplace_back(name);
  return out;
}

std::optional<std::string> gallery_text(std::string_view name) {
  for (const auto& [n, text] : detail::kGallery) {
    if (n == name) return std::string(text);
  }
  constexpr std::string_view prefix = "scroll-";
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  std::string degrees;
  std::string_view rest = name.substr(prefix.size());
  if (rest.empty()) return std::nullopt;
  while (!rest.empty()) {
    const auto dash = rest.find('-');
    const std::string_view item = rest.substr(0, dash);
    if (item.empty() || item.size() > 3 || item.find_first_not_of("0123456789") != std::string_view::npos || item[0] == '0') {
      return std::nullopt;
    }
    if (!degrees.empty()) degrees += ", ";
    degrees += item;
    if (dash == std::string_view::npos) break;
    rest.remove_prefix(dash + 1);
    if (rest.empty()) return std::nullopt;
  }
  return "kind: scroll\nlabel: " + std::string(name) + "\ndegrees: " + degrees + "\n";
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Osculating spaces, fundamental forms and ruledness diagnostics", "oscform"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
  };
  const std::vector<Command> file_commands{
      {"osc", "osculating dimensions s(m) (with --max, s(0..m))"},
      {"fundform", "m-th fundamental form |Phi_m|"},
      {"jacobian-check", "Jacobian of |Phi_m| inside |Phi_(m-1)|"},
      {"phibar-check", "verify phibar_m = -m phi_m on the kernel generators"},
      {"base-locus", "common zeros of |Phi_m| for surfaces"},
      {"tangent-cone", "initial form of a hyperplane section at a point"},
      {"ruling-check", "fixed components of |Phi_m| along the ruling"},
      {"monge", "Monge form and Fubini cubic of a surface in P^3"},
      {"ruled-test", "sampled ruledness diagnostic for a surface"},
      {"heat-check", "test D_(0,2) f = phi D_(1,0) f"},
      {"implicit-jet", "series chart of an implicit variety at its point"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const Command& c : file_commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, o, true);
    subs[c.name] = sub;
  }
  subs["osc"]->add_flag("--max", o.max, "report the profile s(0), ..., s(m)");
  subs["osc"]->add_flag("--symbolic", o.symbolic, "generic rank over the function field");
  subs["tangent-cone"]->add_option("--hyperplane", o.hyperplane, "hyperplane coefficients h_0,...,h_N");
  subs["ruled-test"]->add_option("--jobs", o.jobs, "parallel sample points")->capture_default_str();
  subs["ruled-test"]->add_option("--points", o.points, "number of seeded sample points")->capture_default_str();
  subs["heat-check"]->add_option("--phi", o.phi, "the function phi(x, y)")->capture_default_str();
  CLI::App* scroll_cmd = app.add_subcommand("scroll", "rank checks for a rational normal scroll");
  add_common(scroll_cmd, o, false);
  scroll_cmd->add_option("file", o.file, "scroll file, or - for stdin");
  scroll_cmd->add_option("--degrees", o.degrees, "splitting type, e.g. 2,2");
  CLI::App* example_cmd = app.add_subcommand("example", "print a shipped example file");
  example_cmd->add_option("name", o.name, "example name; omit to list them");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (example_cmd->parsed()) {
      if (o.name.empty()) {
        for (const std::string& n : gallery_names()) out << n << "\n";
        return 0;
      }
      const auto text = gallery_text(o.name);
      if (!text) throw DomainError("no example named '" + o.name + "'");
      out << *text;
      return 0;
    }
    std::string command;
    for (const auto& [name, sub] : subs) {
      if (sub->parsed()) command = name;
    }
    if (scroll_cmd->parsed()) command = "scroll";

    Json report;
    if (command == "scroll") {
      const bool has_file = scroll_cmd->count("file") > 0;
      std::optional<Loaded> loaded;
      if (has_file) loaded = load(o, in);
      report = cmd_scroll(loaded ? &*loaded : nullptr, o, base_report(command, loaded ? &*loaded : nullptr, o));
    } else {
      const Loaded loaded = load(o, in);
      Json base = base_report(command, &loaded, o);
      if (command == "osc") report = cmd_osc(loaded, o, base);
      if (command == "fundform") report = cmd_fundform(loaded, o, base);
      if (command == "jacobian-check") report = cmd_jacobian(loaded, o, base);
      if (command == "phibar-check") report = cmd_phibar(loaded, o, base);
      if (command == "base-locus") report = cmd_base_locus(loaded, o, base);
      if (command == "tangent-cone") report = cmd_tangent_cone(loaded, o, base);
      if (command == "ruling-check") report = cmd_ruling(loaded, o, base);
      if (command == "monge") report = cmd_monge(loaded, o, base);
      if (command == "ruled-test") report = cmd_ruled_test(loaded, o, base);
      if (command == "heat-check") report = cmd_heat(loaded, o, base);
      if (command == "implicit-jet") report = cmd_implicit_jet(loaded, o, base);
    }
    if (o.format == "json") {
      out << report.dump(2) << "\n";
    } else {
      render_text(report, out, 0);
    }
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << (o.file == "-" ? std::string("stdin") : o.file) << ":" << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "inconsistent input: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace oscform
