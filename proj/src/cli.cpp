#include "cvn/cli.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "cvn/appendix.hpp"
#include "cvn/candidates.hpp"
#include "cvn/envelopes.hpp"
#include "cvn/error.hpp"
#include "cvn/geodesics.hpp"
#include "cvn/io.hpp"
#include "cvn/metric.hpp"
#include "cvn/svg.hpp"

namespace cvn {

namespace {

struct Options {
  std::string a, b, simplex, svg, json, direction = "[[1],[2]]", which, mode = "right";
  bool reduced = false, witnesses = false, all_support = false;
  int max_words = 0, steps = 4;
  long budget = 0;
  std::map<std::string, std::string> params;
};

Json type_json(const TopologicalType& t) {
  Json j;
  j["rank"] = t.rank();
  j["vertices"] = t.vertex_ids();
  Json edges = Json::array();
  for (const auto& e : t.edges()) {
    Json je;
    je["id"] = e.id;
    je["from"] = t.vertex_ids()[e.from];
    je["to"] = t.vertex_ids()[e.to];
    je["label"] = word_to_json(e.label);
    je["tree"] = e.in_tree;
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

Json class_json(const ConjClass& c) {
  Json j;
  j["word"] = word_to_json(c);
  j["text"] = c.str();
  return j;
}

std::size_t budget_of(const Options& o) {
  if (o.budget < 0) throw Error(ErrorCode::ParamOutOfRange, "budget must be positive");
  return o.budget > 0 ? static_cast<std::size_t>(o.budget) : default_budget();
}

SimplexPoint load(const std::string& path, Json* info = nullptr, const char* name = nullptr) {
  Rational scale;
  SimplexPoint p = read_point_file(path, &scale);
  if (info) put_rational(*info, std::string("scale_") + name, scale);
  return p;
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_validate(const Options& o, std::ostream& out) {
  Rational scale;
  SimplexPoint p = read_point_file(o.a, &scale);
  const bool reduced = p.type->separating_edges().empty();
  if (o.reduced) require_reduced(*p.type);
  Json j;
  j["valid"] = true;
  j["reduced"] = reduced;
  put_rational(j, "scale", scale);
  put_vector(j, "lengths", p.lengths);
  j["graph"] = graph_to_json(to_marked_graph(p));
  print(out, j);
  return kExitOk;
}

int cmd_candidates(const Options& o, std::ostream& out) {
  SimplexPoint p = load(o.a);
  for (const auto& c : enumerate_candidates(*p.type)) {
    Json j;
    j["kind"] = kind_name(c.kind);
    j["word"] = word_to_json(c.word);
    j["text"] = c.word.str();
    j["counts"] = c.counts;
    put_rational(j, "length", length_from_counts(p.lengths, c.counts));
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int cmd_distance(const Options& o, std::ostream& out) {
  Json j;
  SimplexPoint a = load(o.a, &j, "a"), b = load(o.b, &j, "b");
  DistanceMode mode = o.mode == "left" ? DistanceMode::Left : o.mode == "sym" ? DistanceMode::Symmetric : DistanceMode::Right;
  Distance d = distance(a, b, mode);
  j["mode"] = o.mode;
  put_rational(j, "lambda", d.lambda);
  j["log"] = d.log_value;
  if (o.witnesses) {
    if (mode != DistanceMode::Left) j["witnesses"] = words_to_json(candidate_witnesses(a, b));
    if (mode != DistanceMode::Right) j["witnesses_reverse"] = words_to_json(candidate_witnesses(b, a));
  }
  if (o.max_words > 0) {
    Json bf;
    BruteForceResult r = brute_force_lambda(a, b, o.max_words);
    put_rational(bf, "lambda", r.lambda);
    bf["agrees"] = r.lambda == lambda(a, b);
    bf["argmax"] = words_to_json(r.argmax);
    j["brute_force"] = std::move(bf);
  }
  print(out, j);
  return kExitOk;
}

int cmd_witnesses(const Options& o, std::ostream& out) {
  Json j;
  SimplexPoint a = load(o.a, &j, "a"), b = load(o.b, &j, "b");
  StretchReport r = stretch_report(a, b);
  put_rational(j, "lambda", r.lambda);
  j["witnesses"] = words_to_json(r.witnesses);
  Json rows = Json::array();
  for (const auto& [word, ratio] : r.per_candidate) {
    Json row = class_json(word);
    put_rational(row, "ratio", ratio);
    rows.push_back(std::move(row));
  }
  j["candidates"] = std::move(rows);
  print(out, j);
  return kExitOk;
}

Json slice_json(const TypePtr& t, const Polytope& p) {
  Json j;
  j["simplex"] = type_json(*t);
  j.update(polytope_to_json(p));
  return j;
}

int cmd_envelope(const Options& o, std::ostream& out) {
  Json j;
  SimplexPoint a = load(o.a, &j, "a"), b = load(o.b, &j, "b");
  put_rational(j, "lambda", lambda(a, b));
  j["witnesses"] = words_to_json(candidate_witnesses(a, b));
  std::vector<SvgSlice> slices;
  if (o.all_support) {
    for (const auto& s : support(a, b, budget_of(o)).simplices) slices.push_back({s.simplex, s.slice});
  } else if (!o.simplex.empty()) {
    TypePtr t = load(o.simplex).type;
    slices.push_back({t, envelope(a, b, *t)});
  } else {
    slices.push_back({a.type, envelope(a, b, *a.type)});
    if (!marking_equivalent(*a.type, *b.type)) slices.push_back({b.type, envelope(a, b, *b.type)});
  }
  Json arr = Json::array();
  for (const auto& s : slices) arr.push_back(slice_json(s.simplex, s.polytope));
  j["slices"] = std::move(arr);
  if (!o.svg.empty()) write_text_file(o.svg, envelope_svg(slices, {{a, "A"}, {b, "B"}}));
  print(out, j);
  return kExitOk;
}

int cmd_support(const Options& o, std::ostream& out) {
  Json j;
  SimplexPoint a = load(o.a, &j, "a"), b = load(o.b, &j, "b");
  Support sup = support(a, b, budget_of(o));
  Json arr = Json::array();
  for (std::size_t i = 0; i < sup.simplices.size(); ++i) {
    const auto& s = sup.simplices[i];
    Json e;
    e["index"] = i;
    e["parent"] = s.parent;
    if (s.parent >= 0) e["relation"] = s.via.coface ? "coface" : "face";
    e.update(slice_json(s.simplex, s.slice));
    arr.push_back(std::move(e));
  }
  j["simplices"] = std::move(arr);
  print(out, j);
  return kExitOk;
}

int cmd_geodesic(const Options& o, std::ostream& out) {
  Json j;
  SimplexPoint a = load(o.a, &j, "a"), b = load(o.b, &j, "b");
  const std::size_t budget = budget_of(o);
  GeodesicPath path = piecewise_rigid_geodesic(a, b, budget);
  put_rational(j, "lambda", lambda(a, b));
  Json bps = Json::array();
  for (const auto& p : path.breakpoints) bps.push_back(point_to_json(p));
  j["breakpoints"] = std::move(bps);
  Json segs = Json::array();
  for (std::size_t k = 0; k + 1 < path.breakpoints.size(); ++k) {
    Json s;
    s["from"] = k;
    s["to"] = k + 1;
    s["witnesses"] = words_to_json(path.segment_witnesses[k]);
    const int dim = envelope_dimension(path.breakpoints[k], path.breakpoints[k + 1], budget);
    s["envelope_dimension"] = dim;
    s["rigid"] = dim <= 1;
    segs.push_back(std::move(s));
  }
  j["segments"] = std::move(segs);
  Json phases = Json::array();
  for (std::size_t i = 0; i + 1 < path.rigid_segments.size(); ++i) {
    Json ph;
    ph["start"] = path.rigid_segments[i];
    ph["end"] = path.rigid_segments[i + 1];
    ph["witnesses"] = words_to_json(path.phase_witnesses[i]);
    phases.push_back(std::move(ph));
  }
  j["phases"] = std::move(phases);
  Rational product = 1;
  for (std::size_t k = 0; k + 1 < path.breakpoints.size(); ++k)
    product *= lambda(path.breakpoints[k], path.breakpoints[k + 1]);
  j["multiplicative"] = product == lambda(a, b);
  j["notes"] = path.notes;
  if (!o.svg.empty()) {
    if (a.rank() != 2) throw Error(ErrorCode::Unsupported, "drawings are rank 2 only");
    write_text_file(o.svg, path_svg(path.breakpoints, {{a, "A"}, {b, "B"}}));
  }
  if (!o.json.empty()) write_text_file(o.json, j.dump(2) + "\n");
  print(out, j);
  return kExitOk;
}

Json position_json(const GeneralPosition& g) {
  Json j;
  j["value"] = g.value;
  if (g.gamma) j["gamma"] = class_json(*g.gamma);
  j["strict_constraints"] = g.strict.size();
  return j;
}

int cmd_general_position(const Options& o, std::ostream& out) {
  Json j;
  SimplexPoint a = load(o.a, &j, "a"), b = load(o.b, &j, "b");
  j["out"] = position_json(general_position(a, b));
  j["in"] = position_json(general_position_in(a, b));
  print(out, j);
  return kExitOk;
}

int cmd_ray_audit(const Options& o, std::ostream& out) {
  Json j;
  SimplexPoint a = load(o.a, &j, "a");
  auto dir = classes_from_text(o.direction, a.rank());
  RayAudit r = ray_dimension_audit(a, dir, o.steps);
  j["direction"] = words_to_json(dir);
  j["steps"] = o.steps;
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(point_to_json(p));
  j["points"] = std::move(pts);
  j["crossings"] = r.crossings;
  j["unbounded"] = r.unbounded;
  j["initial_dimension"] = r.initial_dimension;
  Json samples = Json::array();
  for (const auto& s : r.samples) samples.push_back(Json{{"s", s.s}, {"t", s.t}, {"dimension", s.dimension}});
  j["samples"] = std::move(samples);
  j["first_low_index"] = r.first_low_index;
  print(out, j);
  return kExitOk;
}

Rational param(const Options& o, const std::string& key, const char* fallback) {
  auto it = o.params.find(key);
  return parse_rational(it == o.params.end() || it->second.empty() ? fallback : it->second);
}

Json ratio_json(const std::vector<RatioRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json j = class_json(r.word);
    put_rational(j, "observed", r.observed);
    put_rational(j, "closed_form", r.closed_form);
    arr.push_back(std::move(j));
  }
  return arr;
}

int cmd_verify_appendix(const Options& o, std::ostream& out) {
  Json j;
  j["which"] = o.which;
  bool pass = false;
  if (o.which == "A1") {
    Rational a = param(o, "a", "1/2"), delta = param(o, "delta", "1/100"), eps = param(o, "eps", "1/10");
    A1Report r = verify_a1(a, delta, eps);
    j["params"] = {{"a", to_string(a)}, {"delta", to_string(delta)}, {"eps", to_string(eps)}};
    j["ratios"] = ratio_json(r.ratios);
    j["cw_ac"] = words_to_json(r.cw_ac);
    j["cw_ca"] = words_to_json(r.cw_ca);
    put_rational(j, "alpha_lower", r.lower);
    put_rational(j, "alpha_upper", r.upper);
    j["common_point_feasible"] = r.lp_feasible;
    pass = r.pass;
  } else if (o.which == "A2") {
    Rational a = param(o, "a", "1/4"), b = param(o, "b", "1/4"), c = param(o, "c", "3/10"), d = param(o, "d", "1/5");
    A2Report r = verify_a2(a, b, c, d);
    j["params"] = {{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}, {"d", to_string(d)}};
    j["ratios"] = ratio_json(r.ratios);
    j["cw_ac"] = words_to_json(r.cw_ac);
    j["cw_ca"] = words_to_json(r.cw_ca);
    put_rational(j, "stretch_lower", r.lower);
    put_rational(j, "stretch_upper", r.upper);
    j["shrink_word"] = class_json(r.shrink_word);
    put_rational(j, "shrink_lower", r.shrink_lower);
    put_rational(j, "shrink_upper", r.shrink_upper);
    put_rational(j, "alpha_lower", r.alpha_lower);
    put_rational(j, "alpha_upper", r.alpha_upper);
    put_rational(j, "alpha", r.alpha);
    j["forward"] = r.forward;
    j["backward"] = r.backward;
    put_rational(j, "stretch_midpoint", r.stretch_midpoint);
    j["stretch_midpoint_symmetric"] = r.stretch_midpoint_symmetric;
    if (r.symmetric_exists) {
      put_rational(j, "symmetric_lower", r.symmetric_lower);
      put_rational(j, "symmetric_upper", r.symmetric_upper);
    }
    pass = r.pass;
  } else if (o.which == "R2i") {
    TriangleReport r = verify_theta_triangle();
    j["points"] = {point_to_json(r.a), point_to_json(r.b), point_to_json(r.c)};
    j["cw_ab"] = words_to_json(r.cw_ab);
    j["cw_bc"] = words_to_json(r.cw_bc);
    j["cw_ca"] = words_to_json(r.cw_ca);
    j["glue_at_a"] = words_to_json(r.glue_at_a);
    j["glue_at_b"] = words_to_json(r.glue_at_b);
    j["glue_at_c"] = words_to_json(r.glue_at_c);
    pass = r.pass;
  } else {
    throw Error(ErrorCode::ParseError, "unknown scenario " + o.which + " (expected A1, A2 or R2i)");
  }
  j["pass"] = pass;
  print(out, j);
  return pass ? kExitOk : kExitDomain;
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError: return kExitParse;
    case ErrorCode::BudgetExceeded: return kExitBudget;
    default: return kExitDomain;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in rank-n Outer Space with the Lipschitz metric", "cvn"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--budget", o.budget, "simplex budget for support searches (default CVN_BUDGET or 500)");

  auto pair = [&](CLI::App* c) {
    c->add_option("A", o.a, "marked graph JSON")->required();
    c->add_option("B", o.b, "marked graph JSON")->required();
  };
  std::map<std::string, int (*)(const Options&, std::ostream&)> handlers;

  auto* validate = app.add_subcommand("validate", "parse, validate and normalize a marked graph");
  validate->add_option("graph", o.a, "marked graph JSON")->required();
  validate->add_flag("--reduced", o.reduced, "reject separating edges");
  handlers["validate"] = cmd_validate;

  auto* cands = app.add_subcommand("candidates", "list candidate loops as JSON lines");
  cands->add_option("graph", o.a, "marked graph JSON")->required();
  handlers["candidates"] = cmd_candidates;

  auto* dist = app.add_subcommand("distance", "maximal stretch from A to B");
  pair(dist);
  dist->add_option("--mode", o.mode, "right, left or sym")->check(CLI::IsMember({"right", "left", "sym"}));
  dist->add_flag("--witnesses", o.witnesses, "list the candidate witnesses");
  dist->add_option("--max-words", o.max_words, "also maximize over all classes up to this length");
  handlers["distance"] = cmd_distance;

  auto* wit = app.add_subcommand("witnesses", "stretch of every candidate of A");
  pair(wit);
  handlers["witnesses"] = cmd_witnesses;

  auto* env = app.add_subcommand("envelope", "envelope polytope slices");
  pair(env);
  env->add_option("--simplex", o.simplex, "marked graph whose simplex is sliced");
  env->add_flag("--all-support", o.all_support, "slice every supporting simplex");
  env->add_option("--svg", o.svg, "write a rank-2 drawing");
  handlers["envelope"] = cmd_envelope;

  auto* sup = app.add_subcommand("support", "simplices meeting the envelope");
  pair(sup);
  handlers["support"] = cmd_support;

  auto* geo = app.add_subcommand("geodesic", "piecewise rigid geodesic from A to B");
  pair(geo);
  geo->add_option("--json", o.json, "also write the report to a file");
  geo->add_option("--svg", o.svg, "write a rank-2 drawing");
  handlers["geodesic"] = cmd_geodesic;

  auto* gp = app.add_subcommand("general-position", "general position of A and B");
  pair(gp);
  handlers["general-position"] = cmd_general_position;

  auto* ray = app.add_subcommand("ray-audit", "envelope dimensions along an out-ray");
  ray->add_option("graph", o.a, "marked graph JSON")->required();
  ray->add_option("--direction", o.direction, "JSON list of words, default [[1],[2]]");
  ray->add_option("--steps", o.steps, "simplex crossings to walk")->check(CLI::PositiveNumber);
  handlers["ray-audit"] = cmd_ray_audit;

  auto* app_verify = app.add_subcommand("verify-appendix", "rebuild a worked example and check it");
  app_verify->add_option("which", o.which, "A1, A2 or R2i")->required()->check(CLI::IsMember({"A1", "A2", "R2i"}));
  for (const char* key : {"a", "b", "c", "d", "delta", "eps"})
    app_verify->add_option(std::string("--") + key, o.params[key], "rational parameter");
  handlers["verify-appendix"] = cmd_verify_appendix;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    for (auto* sub : app.get_subcommands()) return handlers.at(sub->get_name())(o, out);
  } catch (const Error& e) {
    err << "cvn: " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "cvn: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitParse;
}

}  // namespace cvn
