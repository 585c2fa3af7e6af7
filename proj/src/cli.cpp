#include "bjorth/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bjorth/analysis.hpp"
#include "bjorth/descriptor.hpp"
#include "bjorth/errors.hpp"
#include "bjorth/orthogonality.hpp"
#include "bjorth/preserver.hpp"
#include "bjorth/report_io.hpp"

namespace bjorth::cli {

namespace {

namespace fs = std::filesystem;

bool looks_like_path(const std::string& spec) {
  return spec.find('/') != std::string::npos || spec.ends_with(".json");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileNotFound, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path resolve_output(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') {
      p = fs::path(dir) / p;
    }
  }
  return p;
}

void write_artifact(const std::string& path, const std::string& content) {
  const fs::path p = resolve_output(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorCode::kFileNotFound, "cannot write " + p.string());
  out << content;
}

// Appends fields to a JSON object produced by JsonObject::str().
std::string with_fields(std::string json, const JsonObject& extra) {
  const std::string tail = extra.str();
  if (tail.size() <= 2) return json;
  const auto close = json.rfind('}');
  std::string body = json.substr(0, close);
  while (!body.empty() && (body.back() == '\n' || body.back() == ' ')) body.pop_back();
  const bool empty = body.size() == 1;
  // tail is "{\n  ...\n}"; keep its field lines.
  std::string fields = tail.substr(1, tail.rfind('}') - 1);
  while (!fields.empty() && fields.back() == '\n') fields.pop_back();
  return body + (empty ? "" : ",") + fields + "\n}";
}

void emit(std::ostream& out, const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    out << content;
    if (!content.empty() && content.back() != '\n') out << '\n';
  } else {
    write_artifact(out_path, content.back() == '\n' ? content : content + "\n");
  }
}

Vector parse_vector(const std::vector<double>& coords) { return Vector(coords); }

std::pair<std::size_t, std::size_t> parse_index_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorCode::kParseError, "expected i,j but got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    const unsigned long i = std::stoul(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("i");
    const std::string rest = text.substr(comma + 1);
    const unsigned long j = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("j");
    return {i, j};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParseError, "expected i,j but got '" + text + "'");
  }
}

struct Options {
  std::string space;
  std::string second_space;
  std::vector<std::string> lifts;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> angles;
  std::vector<std::vector<double>> forced;
  std::string swap;
  std::string eta_file;
  std::string out;
  std::string csv_out;
  std::size_t grid = 0;
  std::size_t samples = 0;
  std::size_t candidates = 1000;
  std::size_t pair_samples = 64;
  std::size_t directions = 0;
  bool refined = false;
  double margin = kDefaultMargin;
  double tol = 1e-6;
  std::uint64_t seed = 0;
};

int cmd_check(const Options& o, std::ostream& out) {
  const NormedSpace space = load_space(o.space);
  const Vector x = parse_vector(o.x);
  const Vector y = parse_vector(o.y);
  const AngleRelation rel = classify_angle(space, x, y, o.margin);
  out << to_string(rel.tag) << "\n";
  out << "bounds " << format_real(rel.bounds.min) << " " << format_real(rel.bounds.max) << "\n";
  out << "mutual " << (is_mutually_orthogonal(space, x, y, o.margin) ? "true" : "false")
      << "\n";
  out << "space " << to_compact(space) << "\n";
  out << "tool_version " << kToolVersion << "\n";
  return 0;
}

int cmd_radon(const Options& o, std::ostream& out) {
  const NormedSpace plane = load_space(o.space);
  const RadonDefectReport r = radon_defect(plane, o.grid, o.margin);
  out << "defect " << format_real(r.defect) << "\n";
  if (r.witness) {
    out << "witness " << format_real(r.witness->first) << " "
        << format_real(r.witness->second) << "\n";
  } else {
    out << "radon\n";
  }
  out << "tool_version " << kToolVersion << "\n";
  if (!o.out.empty()) {
    write_artifact(o.out, with_fields(to_json(r), JsonObject()
                                                      .add("space", to_compact(plane))
                                                      .add("tool_version", kToolVersion)) +
                              "\n");
  }
  if (!o.csv_out.empty()) write_artifact(o.csv_out, to_csv(r));
  return r.radon() ? 0 : 1;
}

int cmd_smooth(const Options& o, std::ostream& out) {
  const NormedSpace space = load_space(o.space);
  std::vector<Vector> forced;
  for (const auto& f : o.forced) forced.emplace_back(f);
  const SmoothnessReport r = smoothness_probe(space, o.samples, o.seed, forced);
  out << (r.smooth ? "smooth" : "not smooth") << "\n";
  out << "worst_gap " << format_real(r.worst_gap) << "\n";
  if (r.worst_at) out << "worst_at " << to_string(*r.worst_at) << "\n";
  out << "non_singleton " << r.non_singleton << "\n";
  out << "seed " << o.seed << "\n";
  out << "tool_version " << kToolVersion << "\n";
  if (!o.out.empty()) {
    JsonObject j;
    j.add("space", to_compact(space))
        .add("smooth", r.smooth)
        .add("worst_gap", r.worst_gap)
        .add("samples", static_cast<std::uint64_t>(r.samples))
        .add("non_singleton", static_cast<std::uint64_t>(r.non_singleton))
        .add("seed", o.seed)
        .add("tool_version", kToolVersion);
    write_artifact(o.out, j.str() + "\n");
  }
  return r.smooth ? 0 : 1;
}

EtaTable load_or_build_eta(const Options& o, const NormedSpace& plane) {
  if (!o.eta_file.empty()) return EtaTable::from_csv(plane, read_file(o.eta_file));
  return EtaTable::build(plane, o.grid);
}

int cmd_preserver_build(const Options& o, std::ostream& out) {
  const NormedSpace plane = load_space(o.space);
  const EtaTable table = EtaTable::build(plane, o.grid);
  double worst = 0.0;
  for (double r : table.residuals()) worst = std::max(worst, r);
  out << "nodes " << table.grid().size() << "\n";
  out << "eta_first " << format_real(table.values().front()) << "\n";
  out << "eta_last " << format_real(table.values().back()) << "\n";
  out << "max_residual " << format_real(worst) << "\n";
  out << "tool_version " << kToolVersion << "\n";
  if (!o.out.empty()) write_artifact(o.out, table.to_csv());
  return 0;
}

int cmd_preserver_verify(const Options& o, std::ostream& out) {
  const NormedSpace plane = load_space(o.space);
  EtaTable table = load_or_build_eta(o, plane);
  if (!o.swap.empty()) {
    const auto [i, j] = parse_index_pair(o.swap);
    if (i >= table.values().size() || j >= table.values().size()) {
      throw Error(ErrorCode::kInvalidArgument, "--swap-eta index out of range");
    }
    table = table.with_swapped_entries(i, j);
  }
  PreserverMap map = PreserverMap::radon_plane(std::move(table));
  if (!o.lifts.empty()) {
    std::vector<PreserverMap> parts{map};
    for (const auto& spec : o.lifts) parts.push_back(PreserverMap::identity(load_space(spec)));
    map = compose_inf_sum(std::move(parts));
  }
  const VerificationReport r = verify_preserver(map, o.samples, o.margin, o.seed);
  out << (r.pass ? "pass" : "fail") << "\n";
  out << "disagreements " << r.disagreements << "\n";
  out << "acute_disagreements " << r.acute_disagreements << "\n";
  out << "boundary_excluded " << r.boundary_excluded << "\n";
  out << "max_norm_error " << format_real(r.max_norm_error) << "\n";
  out << "max_homog_error " << format_real(r.max_homog_error) << "\n";
  out << "seed " << r.seed << "\n";
  out << "tool_version " << kToolVersion << "\n";
  if (!o.out.empty()) {
    JsonObject extra;
    extra.add("target", to_compact(map.target()))
        .add("grid", static_cast<std::uint64_t>(
                         map.as_radon_plane() ? map.as_radon_plane()->eta->intervals()
                                              : map.as_sum()->parts.front()
                                                    .as_radon_plane()->eta->intervals()));
    write_artifact(o.out, with_fields(to_json(r), extra) + "\n");
  }
  return r.pass ? 0 : 1;
}

int cmd_sections(const Options& o, std::ostream& out) {
  const NormedSpace space = load_space(o.space);
  const auto candidates = section_candidates(space, o.candidates, o.seed);
  const SectionSearchResult r =
      euclidean_section_search(space, candidates, o.pair_samples, o.tol, o.seed);
  out << "flagged " << r.flagged.size() << " of " << candidates.size() << "\n";
  for (std::size_t k : r.flagged) {
    out << "section " << k << " u=" << to_string(candidates[k].u)
        << " v=" << to_string(candidates[k].v) << "\n";
  }
  out << "seed " << o.seed << "\n";
  out << "tool_version " << kToolVersion << "\n";
  if (!o.out.empty()) {
    write_artifact(o.out,
                   with_fields(to_json(r, candidates.size(), o.pair_samples, o.tol, o.seed),
                               JsonObject().add("space", to_compact(space))) +
                       "\n");
  }
  return 0;
}

int cmd_sum_acute(const Options& o, std::ostream& out) {
  const NormedSpace xs = load_space(o.space);
  const NormedSpace ys = load_space(o.second_space);
  const SumAcuteReport r = sum_acute_equivalence_check(xs, ys, o.samples, o.margin, o.seed);
  out << (r.pass() ? "pass" : "fail") << "\n";
  out << "compared " << r.compared << "\n";
  out << "disagreements " << r.disagreements << "\n";
  out << "excluded_fraction " << format_real(r.excluded_fraction()) << "\n";
  out << "seed " << r.seed << "\n";
  out << "tool_version " << kToolVersion << "\n";
  if (!o.out.empty()) {
    write_artifact(o.out, with_fields(to_json(r), JsonObject()
                                                      .add("x_space", to_compact(xs))
                                                      .add("y_space", to_compact(ys))) +
                              "\n");
  }
  return r.pass() ? 0 : 1;
}

int cmd_orthograph(const Options& o, std::ostream& out) {
  const NormedSpace plane = load_space(o.space);
  Orthograph g;
  if (!o.angles.empty()) {
    g = sample_orthograph(plane, o.angles, o.margin);
  } else if (o.refined) {
    g = refined_orthograph(plane, o.directions, o.margin);
  } else {
    g = sample_orthograph(plane, uniform_angles(o.directions), o.margin);
  }
  out << "vertices " << g.vertices.size() << "\n";
  out << "edges " << g.edges().size() << "\n";
  out << "tool_version " << kToolVersion << "\n";
  emit(out, o.out, to_edge_list(g));
  return 0;
}

int cmd_circle(const Options& o, std::ostream& out) {
  const NormedSpace plane = load_space(o.space);
  std::vector<std::vector<double>> rows;
  rows.reserve(o.samples);
  for (std::size_t k = 0; k < o.samples; ++k) {
    const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(o.samples);
    const Vector y = unit_vector_at_angle(plane, theta);
    rows.push_back({theta, y[0], y[1]});
  }
  emit(out, o.out, to_csv({"theta", "x", "y"}, rows));
  return 0;
}

}  // namespace

NormedSpace load_space(const std::string& spec) {
  std::error_code ec;
  if (fs::is_regular_file(spec, ec)) return validate_space(parse_json(read_file(spec)));
  if (looks_like_path(spec)) throw Error(ErrorCode::kFileNotFound, "no such file: " + spec);
  return validate_space(parse_compact(spec));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Birkhoff-James orthogonality toolkit"};
  app.name(args.empty() ? "bjorth" : args.front());
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  Options o;
  int (*handler)(const Options&, std::ostream&) = nullptr;

  auto add_space = [&](CLI::App* sub, const char* name = "--space") {
    sub->add_option(name, o.space, "space: compact form or JSON file")->required();
  };
  auto add_margin = [&](CLI::App* sub) {
    sub->add_option("--margin", o.margin, "decision margin")->check(CLI::PositiveNumber);
  };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "random seed"); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output file"); };

  auto* check = app.add_subcommand("check", "classify the angle from x to y");
  add_space(check);
  check->add_option("--x", o.x, "coordinates of x")->delimiter(',')->required();
  check->add_option("--y", o.y, "coordinates of y")->delimiter(',')->required();
  add_margin(check);
  check->callback([&] { handler = cmd_check; });

  auto* radon = app.add_subcommand("radon", "measure the Radon symmetry defect of a plane");
  add_space(radon);
  o.grid = 720;
  radon->add_option("--grid", o.grid, "number of angles in [0, pi)");
  add_margin(radon);
  add_out(radon);
  radon->add_option("--csv", o.csv_out, "per-angle CSV output");
  radon->callback([&] { handler = cmd_radon; });

  auto* smooth = app.add_subcommand("smooth", "probe smoothness of the norm");
  add_space(smooth);
  smooth->add_option("--samples", o.samples, "random unit vectors")->default_val(1000);
  smooth->add_option("--force", o.forced, "extra probe point (repeatable)")
      ->delimiter(',')
      ->allow_extra_args(false);
  add_seed(smooth);
  add_out(smooth);
  smooth->callback([&] { handler = cmd_smooth; });

  auto* build = app.add_subcommand("preserver-build", "tabulate eta for a smooth Radon plane");
  add_space(build, "--target");
  build->add_option("--grid", o.grid, "grid intervals")->default_val(1024);
  add_out(build);
  build->callback([&] { handler = cmd_preserver_build; });

  auto* verify = app.add_subcommand("preserver-verify", "build and verify the preserver");
  add_space(verify, "--target");
  verify->add_option("--grid", o.grid, "grid intervals")->default_val(1024);
  verify->add_option("--eta", o.eta_file, "load the eta table from CSV instead of building");
  verify->add_option("--samples", o.samples, "sample pairs")->default_val(10000);
  verify->add_option("--lift", o.lifts, "identity summand (repeatable)");
  verify->add_option("--swap-eta", o.swap, "swap two eta entries i,j (fault injection)");
  add_margin(verify);
  add_seed(verify);
  add_out(verify);
  verify->callback([&] { handler = cmd_preserver_verify; });

  auto* sections = app.add_subcommand("sections", "search for Euclidean 2-D sections");
  add_space(sections);
  sections->add_option("--candidates", o.candidates, "number of candidate sections");
  sections->add_option("--pair-samples", o.pair_samples, "coefficient samples per section");
  sections->add_option("--tol", o.tol, "normalized defect tolerance");
  add_seed(sections);
  add_out(sections);
  sections->callback([&] { handler = cmd_sections; });

  auto* sum_acute = app.add_subcommand("sum-acute", "check the acute-angle trichotomy in X (+) Y");
  add_space(sum_acute, "--x-space");
  sum_acute->add_option("--y-space", o.second_space, "second summand")->required();
  sum_acute->add_option("--samples", o.samples, "sample pairs")->default_val(10000);
  add_margin(sum_acute);
  add_seed(sum_acute);
  add_out(sum_acute);
  sum_acute->callback([&] { handler = cmd_sum_acute; });

  auto* graph = app.add_subcommand("orthograph", "sample the mutual-orthogonality graph");
  add_space(graph);
  auto* angles_opt = graph->add_option("--angles", o.angles, "explicit angles")->delimiter(',');
  graph->add_option("--directions", o.directions, "uniform angles in [0, pi)")
      ->excludes(angles_opt);
  graph->add_flag("--refined", o.refined, "add the orthogonal partner of each angle");
  add_margin(graph);
  add_out(graph);
  graph->callback([&] { handler = cmd_orthograph; });

  auto* circle = app.add_subcommand("circle", "sample the unit circle as CSV");
  add_space(circle);
  circle->add_option("--samples", o.samples, "points")->default_val(360);
  add_out(circle);
  circle->callback([&] { handler = cmd_circle; });

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    app.exit(e, out, err);
    return 2;
  }

  try {
    return handler(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace bjorth::cli
