// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.

#include <ipc/ball.hpp>
#include <ipc/complex.hpp>
#include <ipc/groebner.hpp>
#include <ipc/hyperplane.hpp>
#include <ipc/ideal.hpp>
#include <ipc/piercing.hpp>
#include <ipc/scan.hpp>
#include <ipc/toric.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"

using namespace ipc;
using fixtures::code;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

// Collects the first few failures without stopping the sweep.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  std::size_t checks() const { return checks_; }
  Result result(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failures: " + notes_.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream notes_;
};

std::vector<Face> raw_polar_order(const std::vector<Face>& order, int n) {
  std::vector<Face> out;
  for (Face f : order) out.push_back(oracle::polar_facet(codeword_of_polar_facet(f, n).bits(), n));
  return out;
}

Result piercing_examples() {
  Tally t;
  auto p = [](const NeuralCode& c, Codeword l, Codeword s, Codeword ta) { return pierce(c, {l, s, ta}); };
  auto c2 = p(code(1, "∅ 1"), {1}, {}, {});
  t.expect(c2 == code(2, "∅ 1 12 2"), "pierce {∅,1}");
  t.expect(p(c2, {2}, {1}, {}) == code(3, "∅ 1 12 2 123 13"), "lambda=2 sigma=1");
  t.expect(p(c2, {2}, {}, {1}) == code(3, "∅ 1 12 2 23 3"), "lambda=2 tau=1");
  t.expect(p(c2, {1, 2}, {}, {}) == code(3, "∅ 1 12 2 123 13 23 3"), "2-piercing");
  // two-step build of {∅,1,12,2,123,13}
  PiercingSequence fig{{{{1}, {}, {}}, {{2}, {1}, {}}}, {}};
  t.expect(replay(fig) == code(3, "∅ 1 12 2 123 13"), "two-step build");
  return t.result("5 piercings reproduce exactly");
}

Result order_and_shelling() {
  Tally t;
  auto c = code(3, "∅ 23 123 2 12 1");
  auto sorted = sort_codewords(c);
  t.expect(sorted == std::vector<Codeword>{{}, {1}, {1, 2}, {2}, {1, 2, 3}, {2, 3}}, "listed order");
  auto order = shelling_order(c);
  t.expect(verify_shelling(polar_complex_of(c).complex(), order).ok, "listed order shells");
  std::size_t codes = 0;
  for_each_pierced_code(5, 2, [&](const PiercedCode& pc) {
    ++codes;
    auto o = shelling_order(pc.code);
    bool ok = verify_shelling(polar_complex_of(pc.code).complex(), o).ok;
    t.expect(ok, "shelling fails on " + pc.code.to_string());
    t.expect(oracle::is_shelling_raw(raw_polar_order(o, pc.code.neurons())) == ok,
             "raw definition disagrees on " + pc.code.to_string());
  });
  return t.result(std::to_string(codes) + " codes (n<=5, k<=2) shelled, raw definition agrees");
}

Result consequences() {
  Tally t;
  std::size_t codes = 0, no_shedding = 0;
  for_each_pierced_code(5, 2, [&](const PiercedCode& pc) {
    ++codes;
    const auto& c = pc.code;
    try {
      t.expect(cf_max_degree(c) <= 2, "CF degree on " + c.to_string());
      t.expect(is_intersection_complete(c), "intersection complete on " + c.to_string());
      auto delta = simplicial_complex_of(c);
      t.expect(is_clique_complex(delta), "clique complex on " + c.to_string());
      for (const auto& comp : connected_components(delta)) {
        t.expect(vertex_decomposition(comp).has_value(), "vertex decomposable on " + c.to_string());
      }
      // stronger rule, reported only: bowties such as {124,135} have no shedding vertex
      for (const auto& comp : connected_components(delta))
        if (!is_vertex_decomposable(comp, VdRule::shedding)) {
          ++no_shedding;
          break;
        }
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
  });
  return t.result(std::to_string(codes) + " codes: CF <= 2, intersection complete, clique, VD components; " +
                  std::to_string(no_shedding) + " without a shedding decomposition");
}

bool same_ideal(const ToricIdeal& t, const std::vector<Binomial>& gens, const MonomialOrder& order) {
  auto other = groebner_basis(gens, order);
  for (const auto& b : gens)
    if (!ideal_contains(t, b, order)) return false;
  for (const auto& b : t.groebner_basis(order))
    if (reduce(b, other, order)) return false;
  return true;
}

Result toric_exactness() {
  Tally t;
  ToricIdeal sq(code(2, "∅ 1 2 12"));
  auto lex = sq.codeword_lex();
  const auto& gb = sq.groebner_basis(lex);
  t.expect(gb.size() == 1 && gb[0].lead == sq.monomial({Codeword{1}, Codeword{2}}) &&
               gb[0].trail == sq.monomial({Codeword{1, 2}}),
           "square code basis");

  ToricIdeal full(full_code(3));
  auto flex = full.codeword_lex();
  auto m = [&](std::initializer_list<Codeword> f) { return full.monomial(f); };
  std::vector<Binomial> quadrics{
      *make_binomial(m({{1, 2}}), m({{1}, {2}}), flex),
      *make_binomial(m({{1, 3}}), m({{1}, {3}}), flex),
      *make_binomial(m({{2, 3}}), m({{2}, {3}}), flex),
      *make_binomial(m({{1, 2, 3}}), m({{1, 2}, {3}}), flex),
  };
  t.expect(same_ideal(full, quadrics, flex), "full 3-neuron code vs quadrics");

  ToricIdeal cubic(code(3, "∅ 1 2 3 123"));
  t.expect(gb_max_degree(cubic, cubic.codeword_lex()) == 3, "cubic example under lex");
  std::vector<std::int64_t> w{0, 0, 0, 1, 1, 1, 0};
  t.expect(gb_max_degree(cubic, cubic.weighted_grevlex(w)) == 3, "cubic example under weighted grevlex");
  return t.result("square, full 3-neuron and cubic examples exact");
}

Result conjecture_evidence() {
  ScanConfig cfg;
  cfg.max_n = 4;
  cfg.max_k = 2;
  auto r = conjecture_scan(cfg);
  std::ostringstream s;
  s << r.entries.size() << " codes, " << r.violations << " violations, " << r.skipped << " skipped; degrees";
  for (auto [d, c] : r.degree_histogram) s << " " << d << ":" << c;
  return {r.violations == 0 && r.skipped == 0, s.str()};
}

Result counterexample() {
  auto r = analyze_counterexample();
  std::ostringstream s;
  s << "max degree " << r.max_degree << ", " << r.cubics.size() << " cubics, direction " << r.direction
    << ", published basis " << (r.matches_published ? "matched" : "not matched") << " (" << r.basis.size()
    << "/" << r.published_size << ")";
  return {r.max_degree == 3 && r.cubics.size() == 2, s.str()};
}

Result nesting() {
  Tally t;
  std::size_t pairs = 0;
  for_each_pierced_code(4, 3, [&](const PiercedCode& pc) {
    NeuralCode prev = base_code();
    for (const auto& step : pc.sequence.steps) {
      NeuralCode next = pierce(prev, step);
      ++pairs;
      t.expect(check_nesting(prev, next), "nesting " + prev.to_string() + " in " + next.to_string());
      prev = std::move(next);
    }
  });
  return t.result(std::to_string(pairs) + " consecutive pairs nested");
}

Result hyperplane_exact() {
  Tally t;
  std::size_t codes = 0;
  for_each_pierced_code(4, 3, [&](const PiercedCode& pc) {
    ++codes;
    const auto& c = pc.code;
    try {
      auto r = build_hyperplane_realization(pc.sequence);
      auto v = verify_hyperplane_realization(r, c, FeasibilityMethod::both);
      t.expect(v.ok, "verification on " + c.to_string() + ": " + v.reason);
      t.expect(nondegeneracy_margin(r) > 0, "margin on " + c.to_string());
      t.expect(r.dim == c.neurons(), "dimension on " + c.to_string());
      t.expect(bound_is_simplex(r) && static_cast<int>(r.bound.size()) == c.neurons() + 1,
               "bound on " + c.to_string());
    } catch (const std::exception& e) {
      t.expect(false, c.to_string() + ": " + e.what());
    }
  });
  return t.result(std::to_string(codes) + " codes (n<=4) verified exactly by LP and Fourier-Motzkin");
}

Result ball_numeric() {
  Tally t;
  std::size_t codes = 0;
  double worst = 1e300;
  for_each_pierced_code(4, 2, [&](const PiercedCode& pc) {
    ++codes;
    const auto& c = pc.code;
    try {
      auto r = build_ball_realization(pc.sequence);
      t.expect(r.dim == std::max(1, pc.sequence.max_degree() + 1), "dimension on " + c.to_string());
      auto v = verify_ball_realization(r, c, 1'000'000);
      worst = std::min(worst, v.witness_margin);
      t.expect(v.witnesses_ok && v.witness_margin > 1e-9, "witnesses on " + c.to_string());
      t.expect(v.sampling_ok && v.extra_points == 0, "sampling on " + c.to_string());
    } catch (const std::exception& e) {
      t.expect(false, c.to_string() + ": " + e.what());
    }
  });
  std::ostringstream s;
  s << codes << " codes (n<=4, k<=2) in dimension k+1, min witness margin " << worst
    << ", 10^6 samples each (sampling is probabilistic)";
  return t.result(s.str());
}

void order_axioms(Tally& t, const MonomialOrder& order, std::size_t vars, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    std::vector<int> e(vars);
    for (auto& x : e) x = static_cast<int>(rng() % 4);
    return Monomial(e);
  };
  Monomial one(vars);
  for (int i = 0; i < 1000; ++i) {
    auto a = draw(), b = draw(), c = draw();
    t.expect(order.compare(a * c, b * c) == order.compare(a, b), "multiplicativity " + order.describe());
    t.expect(a.is_one() || order.less(one, a), "1 is smallest " + order.describe());
    t.expect((order.compare(a, b) == 0) == (a == b), "antisymmetry " + order.describe());
    if (order.less(a, b) && order.less(b, c)) t.expect(order.less(a, c), "transitivity " + order.describe());
  }
}

Result property_suites() {
  Tally t;
  ToricIdeal full(full_code(4));
  std::vector<std::int64_t> w(15);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<std::int64_t>(i % 3);
  order_axioms(t, full.codeword_lex(), full.variable_count(), 1);
  order_axioms(t, full.weighted_grevlex(w), full.variable_count(), 2);
  order_axioms(t, MonomialOrder::elimination({5, 6, 7}, MonomialOrder::lex({4, 3, 2, 1, 0})), 8, 3);

  // Buchberger certificates and the kernel oracle on every pierced code, the
  // full code and the cubic examples.
  std::vector<NeuralCode> codes;
  for_each_pierced_code(4, 3, [&](const PiercedCode& pc) { codes.push_back(pc.code); });
  codes.push_back(full_code(4));
  codes.push_back(code(3, "∅ 1 2 3 123"));
  codes.push_back(code(4, "∅ 1 2 3 4 1234"));
  std::size_t bases = 0, classes = 0;
  for (const auto& c : codes) {
    if (c.size() < 2) continue;
    ToricIdeal ti(c);
    std::vector<MonomialOrder> orders{ti.codeword_lex()};
    if (c.neurons() == 4) orders.push_back(ti.weighted_grevlex(w));
    std::vector<oracle::Mask> vars;
    for (Codeword v : ti.variables()) vars.push_back(v.bits());
    auto groups = oracle::kernel_classes(vars, 4);
    for (const auto& order : orders) {
      const auto& gb = ti.groebner_basis(order);
      ++bases;
      t.expect(satisfies_buchberger_criterion(gb, order), "S-pairs on " + c.to_string());
      t.expect(is_reduced_basis(gb, order), "reducedness on " + c.to_string());
      std::set<Monomial> forms;
      for (const auto& g : gb) {
        t.expect(ti.image(g.lead) == ti.image(g.trail), "kernel soundness on " + c.to_string());
        if (g.degree() <= 4) {
          // g must appear inside one oracle class
          bool found = false;
          for (const auto& grp : groups) {
            bool lead_in = std::find(grp.begin(), grp.end(), std::vector<int>(g.lead.exponents().begin(),
                                                                               g.lead.exponents().end())) != grp.end();
            if (!lead_in) continue;
            found = std::find(grp.begin(), grp.end(), std::vector<int>(g.trail.exponents().begin(),
                                                                       g.trail.exponents().end())) != grp.end();
            break;
          }
          t.expect(found, "basis element outside the enumerated kernel on " + c.to_string());
        }
      }
      for (const auto& grp : groups) {
        ++classes;
        Monomial nf = normal_form(Monomial(grp.front()), gb, order);
        for (const auto& e : grp)
          t.expect(normal_form(Monomial(e), gb, order) == nf, "kernel binomial not reduced on " + c.to_string());
        t.expect(forms.insert(nf).second, "distinct images share a normal form on " + c.to_string());
      }
    }
  }

  // Canonical form completeness over every code with ∅ on up to 4 neurons.
  std::size_t cf_codes = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& c : fixtures::all_codes_with_empty(n)) {
      ++cf_codes;
      auto cf = canonical_form(c);
      std::set<oracle::Pm> got;
      for (const auto& pm : cf) got.insert({pm.on.bits(), pm.off.bits()});
      t.expect(got == oracle::minimal_pseudo_monomials(fixtures::raw(c), n), "CF on " + c.to_string());
    }

  std::ostringstream s;
  s << "order axioms on 3x1000 triples; " << bases << " bases certified; " << classes
    << " kernel classes (degree <= 4); " << cf_codes << " canonical forms";
  return t.result(s.str());
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Result()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "piercing examples", 1, piercing_examples},
      {2, "order and shelling", 120, order_and_shelling},
      {3, "canonical form, clique and vertex decomposability", 300, consequences},
      {4, "toric exactness", 10, toric_exactness},
      {5, "conjecture evidence", 900, conjecture_evidence},
      {6, "homogenized counterexample", 30, counterexample},
      {7, "nesting", 300, nesting},
      {8, "hyperplane realizations (exact)", 600, hyperplane_exact},
      {9, "ball realizations (numeric)", 600, ball_numeric},
      {10, "property suites", 600, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= c.budget_s) {
      r.pass = false;
      r.detail += "; over the time budget";
    }
    std::printf("criterion %d: %s - %s: %s (%.2fs of %.0fs)\n", c.id, r.pass ? "PASS" : "FAIL", c.name,
                r.detail.c_str(), secs, c.budget_s);
    std::fflush(stdout);
    failed += !r.pass;
  }
  return failed == 0 ? 0 : 1;
}
