#include <doctest.h>

#include <ipc/complex.hpp>
#include <ipc/errors.hpp>
#include <ipc/ideal.hpp>
#include <ipc/piercing.hpp>

#include "fixtures.hpp"

using namespace ipc;
using fixtures::code;

namespace {

std::set<oracle::Pm> raw(const CanonicalForm& cf) {
  std::set<oracle::Pm> out;
  for (const auto& pm : cf) out.insert({pm.on.bits(), pm.off.bits()});
  return out;
}

}  // namespace

TEST_CASE("vanishes_on") {
  CHECK(vanishes_on({Codeword{2}, Codeword{1}}, code(2, "∅ 1 12")));
  CHECK_FALSE(vanishes_on({Codeword{1}, Codeword{}}, code(2, "∅ 1")));
  CHECK(vanishes_on({Codeword{1, 2}, Codeword{}}, code(2, "∅ 1 2")));
}

TEST_CASE("canonical form examples") {
  CHECK(canonical_form(code(2, "∅ 1 2 12")).empty());
  auto cf = canonical_form(code(2, "∅ 1 12"));
  REQUIRE(cf.size() == 1);
  CHECK(cf[0] == PseudoMonomial{Codeword{2}, Codeword{1}});
  CHECK(cf[0].to_string() == "x2*(1-x1)");
  CHECK(cf[0].type() == 2);
  CHECK_THROWS_AS(canonical_form(NeuralCode(2, std::vector<Codeword>{})), InvalidInput);
}

TEST_CASE("cf_max_degree") {
  // the oracle's minimal set contains x1*x2*(1-x3) and its relatives
  auto expected = oracle::minimal_pseudo_monomials(fixtures::raw(code(3, "∅ 1 2 3 123")), 3);
  int top = 0;
  for (const auto& p : expected) top = std::max(top, oracle::popcount(p.on) + oracle::popcount(p.off));
  CHECK(top == 3);
  CHECK(cf_max_degree(code(3, "∅ 1 2 3 123")) == top);
  CHECK(cf_max_degree(full_code(4)) == 0);
}

TEST_CASE("canonical form ordering is degree, then on, then off") {
  auto cf = canonical_form(code(3, "∅ 1 2 3 123"));
  for (std::size_t i = 0; i + 1 < cf.size(); ++i) CHECK(canonical_less(cf[i], cf[i + 1]));
}

TEST_CASE("canonical form is sound, minimal and complete on every code of 4 neurons") {
  for (const auto& c : fixtures::all_codes_with_empty(4)) {
    auto cf = canonical_form(c);
    CHECK(raw(cf) == oracle::minimal_pseudo_monomials(fixtures::raw(c), 4));
    for (const auto& p : cf) CHECK(vanishes_on(p, c));
    for (const auto& p : cf)
      for (const auto& q : cf)
        if (!(p == q)) CHECK_FALSE(p.divides(q));
    // every vanishing pseudo-monomial is a multiple of some CF element
    for (const auto& v : oracle::vanishing_pseudo_monomials(fixtures::raw(c), 4)) {
      PseudoMonomial pm{Codeword(v.on), Codeword(v.off)};
      bool covered = std::any_of(cf.begin(), cf.end(), [&](const PseudoMonomial& g) { return g.divides(pm); });
      CHECK(covered);
    }
  }
}

TEST_CASE("intersection completeness") {
  CHECK_FALSE(is_intersection_complete(code(3, "∅ 12 13")));
  CHECK(is_intersection_complete(code(0, "∅")));
  for (const auto& c : fixtures::all_codes_with_empty(3))
    CHECK_EQ(is_intersection_complete(c), oracle::is_intersection_complete(fixtures::raw(c)));
  for (const auto& c : fixtures::all_codes_with_empty(4))
    CHECK_EQ(intersection_complete_direct(c), intersection_complete_by_cf(c));
}

TEST_CASE("quadratic canonical form implies a clique complex") {
  for (const auto& c : fixtures::all_codes_with_empty(4))
    if (cf_max_degree(c) <= 2) CHECK(is_clique_complex(simplicial_complex_of(c)));
}

TEST_CASE("pierced codes have quadratic, intersection-complete canonical forms") {
  for (const auto& pc : enumerate_pierced_codes(4, 3)) {
    CHECK(cf_max_degree(pc.code) <= 2);
    CHECK(is_intersection_complete(pc.code));
  }
}
