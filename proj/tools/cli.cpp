#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ipc/ball.hpp"
#include "ipc/complex.hpp"
#include "ipc/errors.hpp"
#include "ipc/hyperplane.hpp"
#include "ipc/ideal.hpp"
#include "ipc/io.hpp"
#include "ipc/piercing.hpp"
#include "ipc/scan.hpp"
#include "ipc/toric.hpp"

namespace ipc::cli {

namespace {

struct Options {
  std::string input;
  std::string code;
  std::string out;
  std::string order = "lex";
  std::vector<std::int64_t> weights;
  std::string naming = "digits";
  std::string mode = "hyperplane";
  std::string method = "lp";
  std::string svg;
  std::string lambda;
  std::string sigma;
  std::string tau;
  std::string sub;
  std::string sup;
  int max_n = 4;
  int max_k = 2;
  std::size_t samples = 1'000'000;
  unsigned jobs = 1;
  std::size_t max_pairs = BuchbergerLimits{}.max_pairs;
  int max_degree = BuchbergerLimits{}.max_degree;
  std::uint64_t seed = 0x1d5eedULL;
  unsigned extra_halvings = 0;
  bool timing = false;
  bool no_relabel = false;
  bool homogenize = false;
  bool all_codes = false;
};

// A report plus the exit code it implies.
struct Outcome {
  Json report;
  int code = kOk;
};

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput("malformed JSON in " + what + ": " + e.what());
  }
}

Json input_json(const Options& o) {
  if (!o.code.empty()) return parse_json(o.code, "--code");
  if (!o.input.empty()) return parse_json(read_file(o.input), o.input);
  throw InvalidInput("no input: pass --code or --input");
}

NeuralCode input_code(const Options& o) { return code_from_json(input_json(o)); }

BuchbergerLimits limits(const Options& o) {
  if (o.max_pairs == 0 || o.max_degree <= 0) throw InvalidInput("caps must be positive");
  return BuchbergerLimits{o.max_pairs, o.max_degree};
}

Codeword codeword_arg(const std::string& text, const char* name) {
  if (text.empty()) return Codeword{};
  return codeword_from_json(parse_json(text, name));
}

// Weight per codeword from a listing over {1..top}; restricted to {1..n}.
std::vector<std::int64_t> weights_for(const Options& o, int n) {
  if (o.weights.empty()) {
    if (n == 3) return {0, 0, 0, 1, 1, 1, 0};
    throw InvalidInput("--weights is required for weighted grevlex on " + std::to_string(n) + " neurons");
  }
  int top = 0;
  while (top < 20 && (std::size_t{1} << top) - 1 < o.weights.size()) ++top;
  if ((std::size_t{1} << top) - 1 != o.weights.size())
    throw InvalidInput("--weights must have 2^n - 1 entries");
  if (n > top) throw InvalidInput("--weights covers only " + std::to_string(top) + " neurons");
  std::map<Codeword, std::int64_t> by_word;
  auto listing = grevlex_listing(top);
  for (std::size_t i = 0; i < listing.size(); ++i) by_word[listing[i]] = o.weights[i];
  std::vector<std::int64_t> w;
  for (Codeword c : grevlex_listing(n)) w.push_back(by_word.at(c));
  return w;
}

MonomialOrder order_for(const Options& o, const ToricIdeal& ideal) {
  if (o.order == "lex") return ideal.codeword_lex();
  return ideal.weighted_grevlex(weights_for(o, ideal.code().neurons()));
}

Json signs(const std::vector<Face>& facets, int n) {
  Json a = Json::array();
  for (Face f : facets) a.push_back(polar_facet_signs(f, n));
  return a;
}

Outcome cmd_analyze(const Options& o) {
  NeuralCode code = input_code(o);
  Outcome res;
  Json& j = res.report;
  j["code"] = to_json(code);
  CanonicalForm cf = canonical_form(code);
  j["canonical_form"] = to_json(cf);
  j["cf_max_degree"] = cf_max_degree(code);
  j["intersection_complete"] = is_intersection_complete(code);

  SimplicialComplex delta = simplicial_complex_of(code);
  Json dj = to_json(delta);
  dj["clique_complex"] = is_clique_complex(delta);
  Json comps = Json::array();
  bool all_vd = true;
  for (const SimplicialComplex& comp : connected_components(delta)) {
    Json cj = to_json(comp);
    auto cert = vertex_decomposition(comp);
    cj["vertex_decomposable"] = cert.has_value();
    if (cert) cj["certificate"] = to_json(*cert);
    all_vd = all_vd && cert.has_value();
    comps.push_back(std::move(cj));
  }
  dj["components"] = std::move(comps);
  dj["components_vertex_decomposable"] = all_vd;
  j["simplicial_complex"] = std::move(dj);

  Json pj;
  int n = code.neurons();
  if (n <= kMaxPolarNeurons && !code.has_dummy()) {
    PolarComplex gamma = polar_complex_of(code);
    auto order = shelling_order(code);
    pj["shelling_order"] = signs(order, n);
    ShellingCheck check = verify_shelling(gamma.complex(), order);
    pj["shelling_verified"] = check.ok;
    if (check.failure) {
      pj["failure"] = Json{{"earlier", check.failure->earlier},
                           {"later", check.failure->later},
                           {"intersection", polar_facet_label(check.failure->intersection, n)}};
      res.code = kPropertyViolation;
    }
  }
  j["polar_complex"] = std::move(pj);

  auto seq = recover_piercing_sequence(code, n, !o.no_relabel);
  j["inductively_pierced"] = seq.has_value();
  if (seq) j["piercing_sequence"] = to_json(*seq);
  j["status"] = res.code == kOk ? "ok" : "violation";
  return res;
}

Outcome cmd_pierce(const Options& o) {
  NeuralCode code = input_code(o);
  PiercingStep step{codeword_arg(o.lambda, "--lambda"), codeword_arg(o.sigma, "--sigma"),
                    codeword_arg(o.tau, "--tau")};
  Outcome res;
  res.report["code"] = to_json(code);
  res.report["step"] = to_json(step);
  if (!is_pierceable(code, step)) {
    res.report["status"] = "NotPierceable";
    res.code = kPropertyViolation;
    return res;
  }
  res.report["result"] = to_json(pierce(code, step));
  res.report["status"] = "ok";
  return res;
}

Outcome cmd_detect(const Options& o) {
  NeuralCode code = input_code(o);
  int k = o.max_k >= 0 ? o.max_k : code.neurons();
  auto seq = recover_piercing_sequence(code, k, !o.no_relabel);
  Outcome res;
  res.report["code"] = to_json(code);
  res.report["max_k"] = k;
  res.report["status"] = seq ? "Pierced" : "NotPierced";
  if (seq) {
    res.report["k"] = seq->max_degree();
    res.report["sequence"] = to_json(*seq);
  }
  return res;
}

Outcome cmd_toric_gb(const Options& o) {
  NeuralCode code = input_code(o);
  if (o.homogenize) code = homogenize_with_dummy(code);
  if (o.order == "wgrevlex" && code.has_dummy())
    throw InvalidInput("weighted grevlex is not defined on homogenized codes");
  ToricIdeal ideal(code, limits(o));
  MonomialOrder order = order_for(o, ideal);
  auto t0 = Clock::now();
  const auto& gb = ideal.groebner_basis(order);
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  VariableNaming naming = o.naming == "bits" ? VariableNaming::bits : VariableNaming::digits;
  Outcome res;
  Json& j = res.report;
  j["code"] = to_json(code);
  j["order"] = o.order;
  if (o.order == "wgrevlex") j["weights"] = weights_for(o, code.neurons());
  Json vars = Json::array();
  for (Codeword c : ideal.variables()) vars.push_back(c.to_string());
  j["variables"] = std::move(vars);
  j["basis"] = basis_to_json(ideal, gb, naming);
  j["max_degree"] = gb_max_degree(ideal, order);
  bool certified = satisfies_buchberger_criterion(gb, order) && is_reduced_basis(gb, order);
  j["buchberger_certificate"] = certified;
  bool homogeneous = std::all_of(gb.begin(), gb.end(), [](const Binomial& b) { return b.homogeneous(); });
  j["homogeneous"] = homogeneous;
  if (o.timing) j["time_ms"] = ms;
  if (!certified) res.code = kPropertyViolation;
  j["status"] = res.code == kOk ? "ok" : "violation";
  return res;
}

Outcome cmd_nesting(const Options& o) {
  if (o.sub.empty() || o.sup.empty()) throw InvalidInput("nesting needs --sub and --sup");
  NeuralCode sub = code_from_json(parse_json(o.sub, "--sub"));
  NeuralCode sup = code_from_json(parse_json(o.sup, "--sup"));
  bool nested = check_nesting(sub, sup, limits(o));
  Outcome res;
  res.report = Json{{"sub", to_json(sub)}, {"sup", to_json(sup)}, {"nested", nested}};
  res.code = nested ? kOk : kPropertyViolation;
  res.report["status"] = nested ? "ok" : "violation";
  return res;
}

Outcome cmd_realize(const Options& o) {
  Json in = input_json(o);
  PiercingSequence seq;
  NeuralCode code;
  Outcome res;
  if (in.is_object() && in.contains("steps")) {
    seq = sequence_from_json(in);
    code = replay(seq);
  } else {
    code = code_from_json(in);
    auto found = recover_piercing_sequence(code, code.neurons(), !o.no_relabel);
    if (!found) {
      res.report = Json{{"code", to_json(code)}, {"status", "NotPierced"}};
      res.code = kPropertyViolation;
      return res;
    }
    seq = std::move(*found);
  }
  NeuralCode expected = replay(seq);
  Json& j = res.report;
  j["code"] = to_json(code);
  j["sequence"] = to_json(seq);
  j["mode"] = o.mode;
  bool ok = false;
  if (o.mode == "hyperplane") {
    HyperplaneOptions ho;
    ho.extra_halvings = o.extra_halvings;
    auto r = build_hyperplane_realization(seq, ho);
    FeasibilityMethod m = o.method == "fm"     ? FeasibilityMethod::fourier_motzkin
                          : o.method == "both" ? FeasibilityMethod::both
                                               : FeasibilityMethod::lp;
    auto v = verify_hyperplane_realization(r, expected, m);
    j["realization"] = to_json(r);
    j["verification"] = to_json(v);
    Rational margin = nondegeneracy_margin(r);
    j["nondegeneracy_margin"] = to_string(margin);
    j["bound_is_simplex"] = bound_is_simplex(r);
    ok = v.ok && sgn(margin) > 0 && r.dim == expected.neurons();
  } else {
    BallOptions bo;
    bo.seed = o.seed;
    auto r = build_ball_realization(seq, bo);
    auto v = verify_ball_realization(r, expected, o.samples, o.seed);
    j["realization"] = to_json(r);
    j["verification"] = to_json(v);
    ok = v.ok();
    if (!o.svg.empty()) {
      std::ofstream svg(o.svg);
      if (!svg) throw InvalidInput("cannot write " + o.svg);
      svg << to_svg(r);
    }
  }
  res.code = ok ? kOk : kPropertyViolation;
  j["status"] = ok ? "ok" : "violation";
  return res;
}

Outcome cmd_scan(const Options& o) {
  Outcome res;
  if (o.all_codes) {
    auto report = classify_all_codes(o.max_n, weights_for(o, o.max_n), limits(o));
    res.report = to_json(report);
    res.report["exploratory"] = true;
    res.report["status"] = "ok";
    return res;
  }
  ScanConfig cfg;
  cfg.max_n = o.max_n;
  cfg.max_k = o.max_k;
  cfg.limits = limits(o);
  cfg.jobs = std::max(1u, o.jobs);
  if (o.order == "wgrevlex") {
    cfg.order = ScanOrder::weighted_grevlex;
    for (int n = 1; n <= o.max_n; ++n) cfg.weights[n] = weights_for(o, n);
  }
  ScanReport report = conjecture_scan(cfg);
  res.report = to_json(report, o.timing);
  if (report.violations > 0) res.code = kPropertyViolation;
  else if (report.skipped > 0) res.code = kResourceCap;
  res.report["status"] = res.code == kOk ? "ok" : res.code == kPropertyViolation ? "violation" : "incomplete";
  return res;
}

Outcome cmd_counterexample(const Options& o) {
  CounterexampleReport r = analyze_counterexample(limits(o));
  Outcome res;
  res.report = to_json(r);
  // The listed order is claimed to be a shelling of the polar complex.
  std::vector<Face> order;
  for (Codeword c : r.listing) order.push_back(polar_facet(c.without(kDummyNeuron), r.code.neurons()));
  ShellingCheck check = verify_shelling(polar_complex_of(r.code).complex(), order);
  res.report["listing_is_shelling"] = check.ok;
  bool ok = r.max_degree == 3 && r.cubics.size() == 2;
  res.code = ok ? kOk : kPropertyViolation;
  res.report["status"] = ok ? "ok" : "violation";
  return res;
}

void add_code_options(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "JSON file with a code");
  sub->add_option("--code", o.code, "inline JSON code, e.g. '[[],[1],[1,2],[2]]'");
}

void add_cap_options(CLI::App* sub, Options& o) {
  sub->add_option("--max-pairs", o.max_pairs, "S-pair cap per basis");
  sub->add_option("--max-degree", o.max_degree, "degree cap for basis elements");
}

void add_order_options(CLI::App* sub, Options& o) {
  sub->add_option("--order", o.order, "term order")->check(CLI::IsMember({"lex", "wgrevlex"}));
  sub->add_option("--weights", o.weights, "grevlex weights over subsets listed by size, then lex")->delimiter(',');
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Inductively pierced neural codes: construction and certification", "ipc"};
  app.require_subcommand(1);
  app.add_option("--out", o.out, "write the report here instead of stdout");
  app.add_flag("--timing", o.timing, "include wall-clock timings");

  auto* analyze = app.add_subcommand("analyze", "canonical form, complexes, shelling");
  add_code_options(analyze, o);
  analyze->add_flag("--no-relabel", o.no_relabel, "only peel the highest neuron");

  auto* pierce_cmd = app.add_subcommand("pierce", "apply one piercing");
  add_code_options(pierce_cmd, o);
  pierce_cmd->add_option("--lambda", o.lambda, "JSON list");
  pierce_cmd->add_option("--sigma", o.sigma, "JSON list");
  pierce_cmd->add_option("--tau", o.tau, "JSON list");

  auto* detect = app.add_subcommand("detect", "recover a piercing sequence");
  add_code_options(detect, o);
  detect->add_option("--max-k", o.max_k, "largest piercing degree (default: n)");
  detect->add_flag("--no-relabel", o.no_relabel, "only peel the highest neuron");

  auto* gb = app.add_subcommand("toric-gb", "reduced Groebner basis of the toric ideal");
  add_code_options(gb, o);
  add_order_options(gb, o);
  add_cap_options(gb, o);
  gb->add_flag("--homogenize", o.homogenize, "add the dummy neuron 0 to every codeword");
  gb->add_option("--naming", o.naming, "variable names")->check(CLI::IsMember({"digits", "bits"}));

  auto* nesting = app.add_subcommand("nesting", "check T_sub is contained in T_sup");
  nesting->add_option("--sub", o.sub, "inline JSON code")->required();
  nesting->add_option("--sup", o.sup, "inline JSON code")->required();
  add_cap_options(nesting, o);

  auto* realize = app.add_subcommand("realize", "build and verify a geometric realization");
  add_code_options(realize, o);
  realize->add_option("--mode", o.mode, "realization kind")->check(CLI::IsMember({"hyperplane", "ball"}));
  realize->add_option("--method", o.method, "exact feasibility test")->check(CLI::IsMember({"lp", "fm", "both"}));
  realize->add_option("--samples", o.samples, "sampling points for ball mode");
  realize->add_option("--seed", o.seed, "sampling seed");
  realize->add_option("--extra-halvings", o.extra_halvings, "shrink the scale factor further");
  realize->add_option("--svg", o.svg, "write an SVG of a 2-D ball realization");
  realize->add_flag("--no-relabel", o.no_relabel, "only peel the highest neuron");

  auto* scan = app.add_subcommand("scan-conjecture", "basis degrees over enumerated pierced codes");
  scan->add_option("--max-n", o.max_n, "largest neuron count");
  scan->add_option("--max-k", o.max_k, "largest piercing degree");
  scan->add_option("--jobs", o.jobs, "worker threads");
  scan->add_flag("--all-codes", o.all_codes, "classify every code on max-n neurons (wgrevlex)");
  add_order_options(scan, o);
  add_cap_options(scan, o);

  auto* counter = app.add_subcommand("counterexample", "the shelling-order lex counterexample");
  add_cap_options(counter, o);

  // detect defaults to k = n unless --max-k is given
  bool detect_k_given = false;
  try {
    app.parse(argc, argv);
    detect_k_given = detect->count("--max-k") > 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    out << Json{{"status", "error"}, {"error", e.what()}}.dump(2) << "\n";
    return kMalformed;
  }

  Outcome res;
  try {
    if (analyze->parsed()) res = cmd_analyze(o);
    else if (pierce_cmd->parsed()) res = cmd_pierce(o);
    else if (detect->parsed()) {
      if (!detect_k_given) o.max_k = -1;
      res = cmd_detect(o);
    } else if (gb->parsed()) res = cmd_toric_gb(o);
    else if (nesting->parsed()) res = cmd_nesting(o);
    else if (realize->parsed()) res = cmd_realize(o);
    else if (scan->parsed()) res = cmd_scan(o);
    else if (counter->parsed()) res = cmd_counterexample(o);
  } catch (const ResourceCapExceeded& e) {
    res = {Json{{"status", "resource_cap"}, {"error", e.what()}}, kResourceCap};
  } catch (const NumericFailure& e) {
    res = {Json{{"status", "undecided"}, {"error", e.what()}}, kResourceCap};
  } catch (const NotPierceable& e) {
    res = {Json{{"status", "NotPierceable"}, {"error", e.what()}}, kPropertyViolation};
  } catch (const Json::exception& e) {
    res = {Json{{"status", "error"}, {"error", std::string("malformed input: ") + e.what()}}, kMalformed};
  } catch (const std::invalid_argument& e) {
    res = {Json{{"status", "error"}, {"error", e.what()}}, kMalformed};
  }
  if (res.code != kOk && res.report.contains("error")) err << "ipc: " << res.report["error"].get<std::string>() << "\n";

  const std::string text = res.report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "ipc: cannot write " << o.out << "\n";
      return kMalformed;
    }
    file << text;
  }
  return res.code;
}

}  // namespace ipc::cli
