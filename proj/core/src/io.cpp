#include "ipc/io.hpp"

#include "ipc/errors.hpp"

namespace ipc {

namespace {

Json vec_to_json(const RVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json vec_to_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json label_or_empty(Codeword c) { return c.empty() ? std::string("∅") : c.to_string(); }

}  // namespace

Json to_json(Codeword c) {
  Json a = Json::array();
  for (Neuron i : c.neurons()) a.push_back(i);
  return a;
}

Json to_json(const NeuralCode& code) {
  Json j;
  j["neurons"] = code.neurons();
  if (code.has_dummy()) j["dummy"] = true;
  Json words = Json::array();
  for (Codeword c : sort_codewords(code)) words.push_back(to_json(c));
  j["codewords"] = std::move(words);
  return j;
}

Json to_json(const PiercingStep& step) {
  return Json{{"lambda", to_json(step.lambda)}, {"sigma", to_json(step.sigma)}, {"tau", to_json(step.tau)}};
}

Json to_json(const PiercingSequence& seq) {
  Json steps = Json::array();
  for (const auto& s : seq.steps) steps.push_back(to_json(s));
  Json j{{"neurons", seq.neurons()}, {"max_degree", seq.max_degree()}, {"steps", std::move(steps)}};
  if (!seq.labels.empty()) j["labels"] = seq.labels;
  return j;
}

Json to_json(const PseudoMonomial& pm) {
  return Json{{"on", to_json(pm.on)},
              {"off", to_json(pm.off)},
              {"degree", pm.degree()},
              {"type", pm.type()},
              {"text", pm.to_string()}};
}

Json to_json(const CanonicalForm& cf) {
  Json a = Json::array();
  for (const auto& pm : cf) a.push_back(to_json(pm));
  return a;
}

Json to_json(const VdCertificate& cert) {
  if (cert.vertex < 0) return Json{{"simplex", true}};
  Json j{{"vertex", cert.vertex}};
  j["link"] = cert.link ? to_json(*cert.link) : Json();
  j["deletion"] = cert.deletion ? to_json(*cert.deletion) : Json();
  return j;
}

Json to_json(const SimplicialComplex& k) {
  Json facets = Json::array();
  for (Face f : k.facets()) {
    Json a = Json::array();
    for (int v = 0; v < 64; ++v)
      if (f >> v & 1) a.push_back(v);
    facets.push_back(std::move(a));
  }
  return Json{{"facets", std::move(facets)}};
}

Json to_json(const HyperplaneRealization& r) {
  Json j;
  j["dim"] = r.dim;
  Json hs = Json::array();
  for (const auto& h : r.halfspaces)
    hs.push_back(Json{{"normal", vec_to_json(h.normal)}, {"offset", to_string(h.offset)}, {"side", h.upper ? ">" : "<"}});
  j["halfspaces"] = std::move(hs);
  Json bound = Json::array();
  for (const auto& v : r.bound) bound.push_back(vec_to_json(v));
  j["bound"] = std::move(bound);
  Json w = Json::array();
  for (const auto& [c, x] : r.witnesses) w.push_back(Json{{"codeword", to_json(c)}, {"point", vec_to_json(x)}});
  j["witnesses"] = std::move(w);
  Json trace = Json::array();
  for (const auto& s : r.trace)
    trace.push_back(Json{{"p", vec_to_json(s.p)},
                         {"p_prime", vec_to_json(s.p_prime)},
                         {"apex", vec_to_json(s.apex)},
                         {"a", to_string(s.a)},
                         {"height", to_string(s.height)}});
  j["trace"] = std::move(trace);
  return j;
}

Json to_json(const HyperplaneVerification& v) {
  Json j{{"ok", v.ok}, {"regions_checked", v.regions_checked}};
  if (!v.ok) {
    j["reason"] = v.reason;
    if (v.offending) j["offending"] = to_json(*v.offending);
  }
  return j;
}

Json to_json(const BallRealization& r) {
  Json j;
  j["dim"] = r.dim;
  j["tolerance"] = r.tolerance;
  Json balls = Json::array();
  for (const auto& b : r.balls) balls.push_back(Json{{"center", vec_to_json(b.center)}, {"radius", b.radius}});
  j["balls"] = std::move(balls);
  Json w = Json::array();
  for (const auto& [c, x] : r.witnesses) w.push_back(Json{{"codeword", to_json(c)}, {"point", vec_to_json(x)}});
  j["witnesses"] = std::move(w);
  Json trace = Json::array();
  for (const auto& s : r.trace)
    trace.push_back(Json{{"p", vec_to_json(s.p)}, {"radius", s.radius}, {"sphere_dim", s.sphere_dim}, {"room", s.room}});
  j["trace"] = std::move(trace);
  return j;
}

Json to_json(const BallVerification& v) {
  Json wit{{"ok", v.witnesses_ok}, {"margin", v.witness_margin}};
  if (!v.witnesses_ok) {
    wit["reason"] = v.witness_failure;
    if (v.witness_offending) wit["offending"] = to_json(*v.witness_offending);
  }
  Json samp{{"probabilistic", true},
            {"ok", v.sampling_ok},
            {"samples", v.samples},
            {"codewords_hit", v.codewords_hit},
            {"extra_points", v.extra_points}};
  if (v.extra_codeword) samp["extra_codeword"] = to_json(*v.extra_codeword);
  return Json{{"ok", v.ok()}, {"witnesses", std::move(wit)}, {"sampling", std::move(samp)}};
}

Json to_json(const ScanReport& r, bool timing) {
  Json j;
  j["max_n"] = r.config.max_n;
  j["max_k"] = r.config.max_k;
  j["order"] = r.config.order == ScanOrder::codeword_lex ? "lex" : "wgrevlex";
  j["codes"] = r.entries.size();
  j["violations"] = r.violations;
  j["skipped"] = r.skipped;
  Json hist = Json::object();
  for (const auto& [d, c] : r.degree_histogram) hist[std::to_string(d)] = c;
  j["degree_histogram"] = std::move(hist);
  if (timing) j["time_ms"] = r.total_ms;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x{{"code", to_json(e.code)}, {"n", e.n}, {"k", e.k}, {"gb_degree", e.gb_degree}};
    if (timing) x["time_ms"] = e.time_ms;
    x["status"] = to_string(e.status);
    if (!e.detail.empty()) x["detail"] = e.detail;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  return j;
}

Json to_json(const ClassificationReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"code", to_json(row.code)},
                        {"gb_degree", row.gb_degree},
                        {"quadratic", row.quadratic},
                        {"pierced01", row.pierced01}});
  Json table{{"quadratic_and_pierced", r.table[1][1]},
             {"quadratic_not_pierced", r.table[1][0]},
             {"not_quadratic_but_pierced", r.table[0][1]},
             {"neither", r.table[0][0]}};
  return Json{{"weights", r.weights},
              {"codes", r.rows.size()},
              {"disagreements", r.disagreements},
              {"table", std::move(table)},
              {"rows", std::move(rows)}};
}

Json to_json(const CounterexampleReport& r) {
  Json listing = Json::array();
  for (Codeword c : r.listing) listing.push_back(label_or_empty(c));
  return Json{{"code", to_json(r.code)},
              {"homogenized", to_json(r.homogenized)},
              {"listing", std::move(listing)},
              {"direction", r.direction},
              {"basis_size", r.basis.size()},
              {"max_degree", r.max_degree},
              {"cubics", r.cubics},
              {"other_direction_max_degree", r.other_direction_max_degree},
              {"published_size", r.published_size},
              {"matches_published", r.matches_published},
              {"lead_agreements", r.lead_agreements},
              {"missing", r.missing},
              {"extra", r.extra},
              {"basis", r.formatted}};
}

Json basis_to_json(const ToricIdeal& ideal, std::span<const Binomial> basis, VariableNaming naming) {
  Json a = Json::array();
  for (const auto& b : basis) a.push_back(ideal.format(b, naming));
  return a;
}

Codeword codeword_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("codeword must be an array of neuron labels");
  Codeword c;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InvalidInput("neuron labels must be integers");
    auto v = x.get<long long>();
    if (v < 0 || v > kMaxNeuron) throw InvalidInput("neuron label out of range: " + std::to_string(v));
    c = c.with(static_cast<Neuron>(v));
  }
  return c;
}

NeuralCode code_from_json(const Json& j) {
  const Json* words = &j;
  int n = -1;
  bool dummy = false;
  if (j.is_object()) {
    if (!j.contains("codewords")) throw InvalidInput("code object needs a \"codewords\" field");
    words = &j.at("codewords");
    if (j.contains("neurons")) {
      if (!j.at("neurons").is_number_integer()) throw InvalidInput("\"neurons\" must be an integer");
      n = j.at("neurons").get<int>();
    }
    if (j.contains("dummy")) dummy = j.at("dummy").get<bool>();
  }
  if (!words->is_array()) throw InvalidInput("codewords must be an array");
  std::vector<Codeword> cw;
  Neuron top = 0;
  for (const auto& w : *words) {
    Codeword c = codeword_from_json(w);
    if (c.contains(kDummyNeuron)) dummy = true;
    top = std::max(top, c.max());
    cw.push_back(c);
  }
  if (n < 0) n = top;
  return NeuralCode(n, std::move(cw), dummy);
}

PiercingSequence sequence_from_json(const Json& j) {
  const Json& steps = j.is_object() ? j.at("steps") : j;
  if (!steps.is_array()) throw InvalidInput("steps must be an array");
  PiercingSequence seq;
  for (const auto& s : steps)
    seq.steps.push_back(PiercingStep{codeword_from_json(s.at("lambda")), codeword_from_json(s.at("sigma")),
                                     codeword_from_json(s.at("tau"))});
  if (j.is_object() && j.contains("labels")) seq.labels = j.at("labels").get<std::vector<Neuron>>();
  return seq;
}

}  // namespace ipc
