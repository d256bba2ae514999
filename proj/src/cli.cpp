#include "schober/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "schober/io.hpp"
#include "schober/random.hpp"
#include "schober/suite.hpp"

namespace schober {

namespace {

// Raised for outcomes that are data rather than failures (e.g. a validation
// report with exit code 1).
struct Outcome {
  Json body;
  int code = kExitOk;
};

[[noreturn]] void syntax(const std::string& what) { throw Error(ErrorKind::Parse, what); }

Json load(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) syntax("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_json(text);
}

PervQuiver load_quiver(const std::string& path) {
  const Json j = load(path);
  if (detect_kind(j) != Kind::Quiver) syntax(path + ": expected a quiver");
  return quiver_from_json(j);
}

// All word problems, including letters out of range, are syntax errors.
BraidWord read_word(std::size_t n, const std::string& text) {
  try {
    return parse_word(n, text);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, std::string("--word: ") + e.what());
  }
}

Json violations_json(const std::vector<Violation>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(to_json(v));
  return arr;
}

Json cube_violations_json(const std::vector<CubeViolation>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(to_json(v));
  return arr;
}

Outcome report_validity(Json violations) {
  if (violations.empty()) return {{{"valid", true}}, kExitOk};
  return {{{"valid", false}, {"violations", std::move(violations)}}, kExitViolation};
}

Outcome validate_document(const Json& j, std::optional<Kind> only) {
  const Kind kind = detect_kind(j);
  if (only && kind != *only) syntax("expected a " + std::string(to_string(*only)));
  switch (kind) {
    case Kind::Quiver: return report_validity(violations_json(validate(quiver_from_json(j))));
    case Kind::Pair: return report_validity(violations_json(validate_pair(pair_from_json(j))));
    case Kind::Cube: return report_validity(cube_violations_json(validate_cube(cube_from_json(j))));
    default: syntax("validate accepts a quiver, pair or cube, got " + std::string(to_string(kind)));
  }
}

Json report_json(const PervQuiver& q) {
  Json dets = Json::array();
  const auto ts = local_monodromies(q);
  for (const auto& t : ts) dets.push_back(to_string(determinant(t)));
  return {{"local_monodromies", to_json(ts)},
          {"total_monodromy", to_json(total_monodromy(q))},
          {"vanishing_total", vanishing_total(q)},
          {"dets", std::move(dets)}};
}

Json iso_json(const IsoResult& r) {
  const char* verdict = r.verdict == IsoVerdict::Yes ? "yes" : r.verdict == IsoVerdict::No ? "no" : "unknown";
  return {{"verdict", verdict},
          {"reason", r.reason},
          {"certificate", r.certificate ? to_json(*r.certificate) : Json(nullptr)}};
}

Json suite_json(const SuiteReport& report, std::size_t trials, std::uint64_t seed) {
  Json props = Json::array();
  for (const auto& r : report.results) props.push_back({{"name", r.name}, {"passed", r.passed}, {"failed", r.failed}});
  return {{"trials", trials}, {"seed", seed}, {"properties", std::move(props)}, {"failed", report.total_failed()}};
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::ArityMismatch: return kExitSyntax;
    default: return kExitViolation;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact linear-algebra workbench for perverse sheaves and Schober shadows on a disk", "schober"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string output;
  bool pretty = false;
  app.add_option("--seed", seed, "Seed for randomized commands");
  app.add_option("--output", output, "Write the result here instead of stdout");
  app.add_flag("--pretty", pretty, "Indent JSON output");

  std::string file, file2, word, coords, to, kind = "quiver", arc_file;
  std::size_t i = 0, j = 0, k = 0, n = 3, maxdim = 3, length = 6, trials = 100, iso_trials = 32;
  std::optional<std::size_t> detour;

  auto* validate_cmd = app.add_subcommand("validate", "Validate a quiver, pair or cube");
  validate_cmd->add_option("file", file)->required();

  auto* act_cmd = app.add_subcommand("act", "Apply a braid word to a quiver");
  act_cmd->add_option("file", file)->required();
  act_cmd->add_option("--word", word, "Comma-separated signed generators, e.g. 1,-2,1")->required();

  auto* report_cmd = app.add_subcommand("report", "Monodromies and invariants of a quiver");
  report_cmd->add_option("file", file)->required();

  auto* plcheck_cmd = app.add_subcommand("plcheck", "Check the Picard-Lefschetz identity");
  plcheck_cmd->add_option("file", file)->required();
  plcheck_cmd->add_option("--i", i)->required();
  plcheck_cmd->add_option("--j", j)->required();
  plcheck_cmd->add_option("--k", k)->required();
  plcheck_cmd->add_option("--coords", coords, "Braid word for the cut system");

  auto* transition_cmd = app.add_subcommand("transition", "Transition map along an arc");
  transition_cmd->add_option("file", file)->required();
  transition_cmd->add_option("--arc", arc_file, "Arc JSON file (overrides the flags below)");
  transition_cmd->add_option("--i", i);
  transition_cmd->add_option("--k", k);
  transition_cmd->add_option("--detour", detour);
  transition_cmd->add_option("--coords", coords);

  auto* dual_cmd = app.add_subcommand("dual", "Verdier dual of a quiver or dual of a cube");
  dual_cmd->add_option("file", file)->required();

  auto* convert_cmd = app.add_subcommand("convert", "Convert between one-point quivers and spherical pairs");
  convert_cmd->add_option("file", file)->required();
  convert_cmd->add_option("--to", to)->required()->check(CLI::IsMember({"quiver", "pair"}));

  auto* hom_cmd = app.add_subcommand("hom", "Basis of the morphism space between two quivers");
  hom_cmd->add_option("source", file)->required();
  hom_cmd->add_option("target", file2)->required();

  auto* iso_cmd = app.add_subcommand("iso", "Randomized isomorphism test");
  iso_cmd->add_option("first", file)->required();
  iso_cmd->add_option("second", file2)->required();
  iso_cmd->add_option("--trials", iso_trials);

  auto* hurwitz_cmd = app.add_subcommand("hurwitz", "Hurwitz action on a monodromy tuple");
  hurwitz_cmd->add_option("file", file, "Matrix list, or a quiver whose local monodromies are used")->required();
  hurwitz_cmd->add_option("--word", word)->required();

  auto* cube_cmd = app.add_subcommand("cube-validate", "Validate a double cubical diagram");
  cube_cmd->add_option("file", file)->required();

  auto* rand_cmd = app.add_subcommand("rand", "Emit a random valid object");
  rand_cmd->add_option("--kind", kind)->check(CLI::IsMember({"quiver", "pair", "cube", "braid"}));
  rand_cmd->add_option("--n", n, "Marked points, strands, or cube rank");
  rand_cmd->add_option("--maxdim", maxdim);
  rand_cmd->add_option("--length", length, "Maximum braid word length");

  auto* suite_cmd = app.add_subcommand("suite", "Run every property suite");
  suite_cmd->add_option("--trials", trials);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSyntax;
  }

  Outcome result;
  try {
    if (validate_cmd->parsed()) {
      result = validate_document(load(file), std::nullopt);
    } else if (cube_cmd->parsed()) {
      result = validate_document(load(file), Kind::Cube);
    } else if (act_cmd->parsed()) {
      const PervQuiver q = load_quiver(file);
      const BraidWord w = read_word(q.n, word);
      result.body = to_json(act(q, w));
    } else if (report_cmd->parsed()) {
      const PervQuiver q = load_quiver(file);
      require_valid(q);
      result.body = report_json(q);
    } else if (plcheck_cmd->parsed()) {
      const PervQuiver q = load_quiver(file);
      const BraidWord w = read_word(q.n, coords);
      const PlTriangle tri = pl_triangle_k0(q, i, j, k, w);
      result.body = {{"holds", tri.additive},
                     {"m_gamma", to_json(tri.m_gamma)},
                     {"m_gamma_prime", to_json(tri.m_gamma_prime)},
                     {"composite", to_json(tri.composite)}};
      result.code = tri.additive ? kExitOk : kExitViolation;
    } else if (transition_cmd->parsed()) {
      const PervQuiver q = load_quiver(file);
      ArcSpec arc;
      if (!arc_file.empty()) {
        arc = arc_from_json(load(arc_file), q.n);
      } else {
        arc = {read_word(q.n, coords), i, k, detour};
      }
      result.body = to_json(transition(q, arc));
    } else if (dual_cmd->parsed()) {
      const Json doc = load(file);
      const Kind kd = detect_kind(doc);
      if (kd == Kind::Quiver) {
        const PervQuiver q = quiver_from_json(doc);
        require_valid(q);
        result.body = to_json(verdier_dual(q));
      } else if (kd == Kind::Cube) {
        result.body = to_json(dual_cube(cube_from_json(doc)));
      } else {
        syntax("dual accepts a quiver or cube");
      }
    } else if (convert_cmd->parsed()) {
      const Json doc = load(file);
      const Kind kd = detect_kind(doc);
      if (kd == Kind::Quiver) {
        const PervQuiver q = quiver_from_json(doc);
        require_valid(q);
        result.body = to == "pair" ? to_json(quiver_to_pair(q)) : to_json(q);
      } else if (kd == Kind::Pair) {
        const SymDiagram d = pair_from_json(doc);
        require_valid(d);
        result.body = to == "quiver" ? to_json(pair_to_quiver(d)) : to_json(d);
      } else {
        syntax("convert accepts a quiver or pair");
      }
    } else if (hom_cmd->parsed()) {
      const auto basis = hom_space(load_quiver(file), load_quiver(file2));
      Json arr = Json::array();
      for (const auto& f : basis) arr.push_back(to_json(f));
      result.body = {{"dim", basis.size()}, {"basis", std::move(arr)}};
    } else if (iso_cmd->parsed()) {
      result.body = iso_json(is_isomorphic(load_quiver(file), load_quiver(file2), iso_trials, seed));
    } else if (hurwitz_cmd->parsed()) {
      const Json doc = load(file);
      std::vector<RatMatrix> ts;
      const Kind kd = detect_kind(doc);
      if (kd == Kind::Quiver) {
        const PervQuiver q = quiver_from_json(doc);
        require_valid(q);
        ts = local_monodromies(q);
      } else if (kd == Kind::Matrices || (kd == Kind::Braid && doc.empty())) {
        ts = matrices_from_json(doc);
      } else {
        syntax("hurwitz accepts a matrix list or a quiver");
      }
      const BraidWord w = read_word(ts.size(), word);
      result.body = to_json(hurwitz_act(std::move(ts), w));
    } else if (rand_cmd->parsed()) {
      Rng rng(seed);
      if (kind == "quiver") {
        result.body = to_json(random_quiver(rng, {n, maxdim, 1, 3}));
      } else if (kind == "pair") {
        result.body = to_json(random_pair(rng, maxdim));
      } else if (kind == "cube") {
        if (n > 6) syntax("--n above 6 gives an impractically large cube");
        result.body = to_json(random_cube(rng, n, maxdim));
      } else {
        result.body = to_json(random_word(rng, n, length));
      }
    } else if (suite_cmd->parsed()) {
      const SuiteReport report = run_suite(builtin_properties(), trials, seed);
      result.body = suite_json(report, trials, seed);
      result.code = report.total_failed() == 0 ? kExitOk : kExitViolation;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  }

  const std::string text = dump(result.body, pretty) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << output << "\n";
      return kExitSyntax;
    }
    f << text;
  }
  return result.code;
}

}  // namespace schober
