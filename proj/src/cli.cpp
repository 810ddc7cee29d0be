#include "arnold/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <functional>
#include <map>
#include <ostream>

#include "arnold/errors.hpp"
#include "arnold/lift.hpp"
#include "arnold/periodic.hpp"
#include "arnold/rotation.hpp"
#include "arnold/sweep.hpp"
#include "arnold/tongue.hpp"

namespace arnold {

using nlohmann::json;

double parse_real(const std::string& text) {
  if (text.find('/') != std::string::npos) {
    const auto slash = text.find('/');
    const double num = parse_real(text.substr(0, slash));
    const double den = parse_real(text.substr(slash + 1));
    if (den == 0.0) throw PreconditionError("zero denominator in '" + text + "'");
    return num / den;
  }
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw PreconditionError("not a number: '" + text + "'");
  }
  return v;
}

namespace {

json label_json(const std::optional<Rational>& r) {
  return r ? json(r->to_string()) : json(nullptr);
}

json rho_json(const RhoEstimate& e) {
  return {{"value", e.value},
          {"error_bound", e.error_bound},
          {"exact_rational", label_json(e.exact_rational)}};
}

json orbit_json(const PeriodicOrbit& o) {
  return {{"label", o.label.to_string()},
          {"points", o.points},
          {"multiplier", o.multiplier},
          {"stability", to_string(o.stability)},
          {"on_increasing_branch", o.on_increasing_branch},
          {"well_ordered", o.well_ordered}};
}

json opt_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json residuals_json(const BoundaryResiduals& r) {
  return {{"saddle_node", r.saddle_node},
          {"multiplier", r.multiplier},
          {"o_prime_absent", r.o_prime_absent},
          {"bl_residual", opt_json(r.bl_residual)},
          {"br_residual", opt_json(r.br_residual)},
          {"p_j", opt_json(r.p_j)},
          {"p_k", opt_json(r.p_k)}};
}

json curve_json(const BoundaryCurve& c) {
  json rows = json::array();
  for (const auto& s : c.samples) {
    rows.push_back({{"b", s.b}, {"a", s.a}, {"kind", to_string(c.kind)},
                    {"p", c.label.p()}, {"q", c.label.q()}, {"residual", s.residual}});
  }
  return rows;
}

json region_json(const Region& r) {
  json rows = json::array();
  for (const auto& s : r.slices) {
    rows.push_back({{"b", s.b}, {"a_left", s.a_left}, {"a_right", s.a_right}});
  }
  return rows;
}

json raster_json(const RasterGrid& g) {
  json rows = json::array();
  auto lock = [](const std::optional<Rational>& r, bool num) -> json {
    if (!r) return nullptr;
    return num ? r->p() : r->q();
  };
  for (int j = g.spec.nb - 1; j >= 0; --j) {
    for (int i = 0; i < g.spec.na; ++i) {
      const auto& c = g.at(i, j);
      rows.push_back({{"a", c.a},
                      {"b", c.b},
                      {"rho_minus", c.rho_minus.value},
                      {"rho_plus", c.rho_plus.value},
                      {"err", std::max(c.rho_minus.error_bound, c.rho_plus.error_bound)},
                      {"lock_p", lock(c.snapped_lo, true)},
                      {"lock_q", lock(c.snapped_lo, false)},
                      {"lock_hi_p", lock(c.snapped_hi, true)},
                      {"lock_hi_q", lock(c.snapped_hi, false)}});
    }
  }
  return rows;
}

Envelope parse_envelope(const std::string& s) {
  if (s == "plus") return Envelope::plus;
  if (s == "minus") return Envelope::minus;
  throw PreconditionError("envelope must be plus or minus, got '" + s + "'");
}

CurveRef parse_curve_ref(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) {
    throw PreconditionError("curve reference must look like KIND:p/q, got '" + s + "'");
  }
  return {parse_curve_kind(s.substr(0, colon)), Rational::parse(s.substr(colon + 1))};
}

// String-valued options of one subcommand; numbers are parsed on use so that
// both decimals and p/q fractions are accepted.
struct Args {
  std::map<std::string, std::string> v;

  bool has(const std::string& k) const {
    auto it = v.find(k);
    return it != v.end() && !it->second.empty();
  }
  const std::string& str(const std::string& k) const { return v.at(k); }
  double real(const std::string& k) const { return parse_real(v.at(k)); }
  double real_or(const std::string& k, double fallback) const {
    return has(k) ? real(k) : fallback;
  }
  long integer(const std::string& k) const {
    const double d = real(k);
    if (d != std::floor(d)) throw PreconditionError("--" + k + " must be an integer");
    return static_cast<long>(d);
  }
  long integer_or(const std::string& k, long fallback) const {
    return has(k) ? integer(k) : fallback;
  }
  Rational rational(const std::string& k) const { return Rational::parse(v.at(k)); }
  Params params() const { return Params(real("a"), real("b")); }
};

struct Command {
  std::string name;
  std::string description;
  std::vector<std::string> operations;  // library operations it exposes
  std::vector<std::pair<std::string, bool>> options;  // (name, required)
  std::function<json(const Args&)> run;
};

std::vector<Command> commands() {
  std::vector<Command> c;

  c.push_back({"eval", "evaluate the lift or one of its derivatives",
               {"eval", "deriv"},
               {{"a", true}, {"b", true}, {"x", true}, {"order", false}},
               [](const Args& a) {
                 const auto p = a.params();
                 const long order = a.integer_or("order", 0);
                 const double x = a.real("x");
                 const double v = order == 0 ? eval(p, x) : deriv(p, x, static_cast<int>(order));
                 return json{{"x", x}, {"order", order}, {"value", v}};
               }});

  c.push_back({"schwarzian", "Schwarzian derivative of the lift", {"schwarzian"},
               {{"a", true}, {"b", true}, {"x", true}},
               [](const Args& a) {
                 return json{{"x", a.real("x")}, {"value", schwarzian(a.params(), a.real("x"))}};
               }});

  c.push_back({"critical", "critical points in one period", {"critical_points"},
               {{"a", false}, {"b", true}},
               [](const Args& a) {
                 // Critical points do not depend on a.
                 const auto cs = critical_points(Params(0.0, a.real("b")));
                 return json{{"points", cs.points}, {"degenerate", cs.degenerate}};
               }});

  c.push_back({"envelope", "monotone envelope plateau (and value at --x)", {"envelope"},
               {{"a", true}, {"b", true}, {"envelope", true}, {"x", false}},
               [](const Args& a) {
                 const auto m = envelope(a.params(), parse_envelope(a.str("envelope")));
                 json j{{"envelope", to_string(m.which())}, {"has_plateau", m.has_plateau()}};
                 if (m.has_plateau()) {
                   j["plateau_start"] = m.plateau_start();
                   j["plateau_end"] = m.plateau_end();
                   j["plateau_value"] = m.plateau_value();
                 }
                 if (a.has("x")) j["value"] = m(a.real("x"));
                 return j;
               }});

  c.push_back({"rho", "rotation number of one monotone envelope", {"rho_monotone"},
               {{"a", true}, {"b", true}, {"envelope", true}, {"n", false}, {"x0", false},
                {"qmax", false}},
               [](const Args& a) {
                 const auto m = envelope(a.params(), parse_envelope(a.str("envelope")));
                 const auto e = rho_monotone(m, a.integer_or("n", 20000), a.real_or("x0", 0.0),
                                             static_cast<int>(a.integer_or("qmax", kDefaultQMax)));
                 return rho_json(e);
               }});

  c.push_back({"certify", "periodic-point certificate rho(envelope) == p/q",
               {"rho_exact_rational_test"},
               {{"a", true}, {"b", true}, {"envelope", true}, {"rot", true}},
               [](const Args& a) {
                 const auto m = envelope(a.params(), parse_envelope(a.str("envelope")));
                 const auto r = a.rational("rot");
                 const auto range = gap_range(m, r);
                 return json{{"rot", r.to_string()},
                             {"certified", rho_exact_rational_test(m, r)},
                             {"gap_min", range.min},
                             {"gap_max", range.max}};
               }});

  c.push_back({"interval", "rotation interval [rho(F-), rho(F+)]", {"rotation_interval"},
               {{"a", true}, {"b", true}, {"tol", false}},
               [](const Args& a) {
                 RhoOptions opts;
                 opts.tol = a.real_or("tol", opts.tol);
                 const auto iv = rotation_interval(a.params(), opts);
                 const bool singleton =
                     iv.width() <= iv.lo.error_bound + iv.hi.error_bound;
                 return json{{"interval", {iv.lo.value, iv.hi.value}},
                             {"singleton", singleton},
                             {"lo", rho_json(iv.lo)},
                             {"hi", rho_json(iv.hi)}};
               }});

  c.push_back({"bruteforce", "orbit-sampling bounds of the rotation set",
               {"rho_bounds_bruteforce"},
               {{"a", true}, {"b", true}, {"n-x0", false}, {"n-iter", false}},
               [](const Args& a) {
                 const auto [lo, hi] = rho_bounds_bruteforce(
                     a.params(), static_cast<int>(a.integer_or("n-x0", 256)),
                     a.integer_or("n-iter", 10000));
                 return json{{"bounds", {lo, hi}}};
               }});

  c.push_back({"snap", "smallest-denominator fraction near a value", {"snap_rational"},
               {{"value", true}, {"tol", true}, {"qmax", false}},
               [](const Args& a) {
                 const auto r = snap_rational(a.real("value"), a.real("tol"),
                                              static_cast<int>(a.integer_or("qmax", kDefaultQMax)));
                 return json{{"rational", label_json(r)}};
               }});

  c.push_back({"orbits", "all periodic orbits with rotation p/q", {"find_periodic_orbits"},
               {{"a", true}, {"b", true}, {"rot", true}},
               [](const Args& a) {
                 json list = json::array();
                 for (const auto& o : find_periodic_orbits(a.params(), a.rational("rot"))) {
                   list.push_back(orbit_json(o));
                 }
                 return json{{"orbits", list}};
               }});

  c.push_back({"orbit", "orbit pair O, O' avoiding the decreasing lap", {"orbit_pair"},
               {{"a", true}, {"b", true}, {"rot", true}},
               [](const Args& a) {
                 const auto pr = orbit_pair(a.params(), a.rational("rot"));
                 return json{{"O", orbit_json(pr.o)},
                             {"O_prime", pr.o_prime ? orbit_json(*pr.o_prime) : json(nullptr)}};
               }});

  c.push_back({"itinerary", "lap itinerary of an orbit", {"itinerary"},
               {{"a", true}, {"b", true}, {"x", true}, {"length", true}},
               [](const Args& a) {
                 const auto it = itinerary(a.params(), a.real("x"),
                                           static_cast<int>(a.integer("length")));
                 return json{{"itinerary", it.to_string()}, {"length", it.length}};
               }});

  c.push_back({"edges", "plateau edges of an envelope's rotation number", {"plateau_edges"},
               {{"b", true}, {"rot", true}, {"envelope", false}, {"a-lo", false},
                {"a-hi", false}, {"tol", false}},
               [](const Args& a) {
                 const double b = a.real("b");
                 const auto r = a.rational("rot");
                 const auto which = parse_envelope(a.has("envelope") ? a.str("envelope") : "plus");
                 Window w = default_window(b, r);
                 w.lo = a.real_or("a-lo", w.lo);
                 w.hi = a.real_or("a-hi", w.hi);
                 const auto e = plateau_edges(b, r, which, w, a.real_or("tol", 1e-9));
                 return json{{"edges", {e.left, e.right}}, {"width", e.width()},
                             {"envelope", to_string(which)}, {"rot", r.to_string()}};
               }});

  c.push_back({"trace", "continue a boundary curve in b", {"trace_curve", "export_csv"},
               {{"kind", true}, {"rot", true}, {"b-min", true}, {"b-max", true},
                {"step", true}, {"tol", false}, {"csv", false}},
               [](const Args& a) {
                 const auto c = trace_curve(parse_curve_kind(a.str("kind")), a.rational("rot"),
                                            a.real("b-min"), a.real("b-max"), a.real("step"),
                                            a.real_or("tol", 1e-9));
                 if (a.has("csv")) export_csv(c, a.str("csv"));
                 const auto lip = lipschitz_check(c);
                 return json{{"samples", curve_json(c)}, {"max_slope", lip.max_slope},
                             {"lipschitz_ok", lip.ok}};
               }});

  c.push_back({"region", "slices of the equal-rotation-interval region",
               {"region_boundary"},
               {{"lo", true}, {"hi", true}, {"b-min", true}, {"b-max", true},
                {"step", true}, {"tol", false}, {"csv", false}},
               [](const Args& a) {
                 const auto r = region_boundary(a.rational("lo"), a.rational("hi"),
                                                a.real("b-min"), a.real("b-max"),
                                                a.real("step"), a.real_or("tol", 1e-9));
                 if (a.has("csv")) export_csv(r, a.str("csv"));
                 return json{{"slices", region_json(r)}};
               }});

  c.push_back({"intersect", "crossings of two boundary curves", {"intersect_curves"},
               {{"left", true}, {"right", true}, {"b-min", true}, {"b-max", true},
                {"step", false}, {"tol", false}},
               [](const Args& a) {
                 const auto pts = intersect_curves(
                     parse_curve_ref(a.str("left")), parse_curve_ref(a.str("right")),
                     a.real("b-min"), a.real("b-max"), a.real_or("step", 0.02),
                     a.real_or("tol", 1e-9));
                 json list = json::array();
                 for (const auto& p : pts) {
                   list.push_back(
                       {{"a", p.a}, {"b", p.b},
                        {"left_residuals",
                         p.left_residuals ? residuals_json(*p.left_residuals) : json(nullptr)},
                        {"right_residuals",
                         p.right_residuals ? residuals_json(*p.right_residuals) : json(nullptr)}});
                 }
                 return json{{"intersections", list}, {"count", pts.size()}};
               }});

  c.push_back({"residuals", "boundary-condition residuals at a parameter point",
               {"boundary_condition_residuals"},
               {{"a", true}, {"b", true}, {"rot", true}},
               [](const Args& a) {
                 return residuals_json(boundary_condition_residuals(a.params(), a.rational("rot")));
               }});

  c.push_back({"raster", "parameter-plane raster with optional PPM/CSV output",
               {"raster", "render_ppm", "export_csv"},
               {{"a-min", true}, {"a-max", true}, {"b-min", true}, {"b-max", true},
                {"na", true}, {"nb", true}, {"tol", false}, {"workers", false},
                {"img", false}, {"csv", false}},
               [](const Args& a) {
                 GridSpec spec{a.real("a-min"), a.real("a-max"), a.real("b-min"),
                               a.real("b-max"), static_cast<int>(a.integer("na")),
                               static_cast<int>(a.integer("nb"))};
                 RasterOptions opts;
                 opts.tol = a.real_or("tol", opts.tol);
                 opts.workers = static_cast<int>(a.integer_or("workers", 0));
                 const auto g = raster(spec, opts);
                 if (a.has("img")) write_file(a.str("img"), render_ppm(g));
                 if (a.has("csv")) export_csv(g, a.str("csv"));
                 int locked = 0;
                 for (const auto& cell : g.cells) {
                   if (cell.snapped_lo && cell.snapped_hi && *cell.snapped_lo == *cell.snapped_hi) {
                     ++locked;
                   }
                 }
                 return json{{"cells", g.cells.size()}, {"locked", locked},
                             {"records", raster_json(g)}};
               }});

  c.push_back({"audit-lipschitz", "Lipschitz audit of a curve CSV", {"lipschitz_check"},
               {{"in", true}, {"tol", false}},
               [](const Args& a) {
                 const auto c = parse_curve_csv(read_file(a.str("in")));
                 const auto rep = lipschitz_check(c, a.real_or("tol", 1e-9));
                 return json{{"max_slope", rep.max_slope}, {"slack", rep.slack},
                             {"bound", 1.0 / kTwoPi}, {"ok", rep.ok}};
               }});
  return c;
}

void print_text(const json& j, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    if (key == "records" || key == "samples" || key == "slices") {
      out << key << ": " << value.size() << " rows\n";
      continue;
    }
    out << key << ": " << value.dump() << '\n';
  }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> cli_operation_map() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& c : commands()) {
    for (const auto& op : c.operations) out.emplace_back(op, c.name);
  }
  return out;
}

std::vector<std::string> cli_subcommands() {
  std::vector<std::string> out;
  for (const auto& c : commands()) out.push_back(c.name);
  return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotation numbers, tongues and boundary curves of the standard circle-map family"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable JSON on stdout");

  auto cmds = commands();
  std::map<std::string, Args> args;
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.description);
    auto& bound = args[c.name];
    for (const auto& [name, required] : c.options) {
      auto* opt = sub->add_option("--" + name, bound.v[name]);
      if (required) opt->required();
    }
    sub->add_flag("--json", as_json, "machine-readable JSON on stdout");
    subs[c.name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& c : cmds) {
    if (!subs[c.name]->parsed()) continue;
    auto fail = [&](int code, const std::string& kind, const std::exception& e) {
      if (as_json) {
        out << json{{"error", kind}, {"message", e.what()}}.dump() << '\n';
      }
      err << c.name << ": " << e.what() << '\n';
      return code;
    };
    try {
      const json result = c.run(args[c.name]);
      if (as_json) {
        out << result.dump(2) << '\n';
      } else {
        print_text(result, out);
      }
      return kExitOk;
    } catch (const PreconditionError& e) {
      return fail(kExitUsage, "usage", e);
    } catch (const NumericalError& e) {
      return fail(kExitNumerical, "numerical", e);
    } catch (const std::exception& e) {
      return fail(kExitIo, "io", e);
    }
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"arnold"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace arnold
