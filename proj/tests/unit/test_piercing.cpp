#include <doctest.h>

#include <ipc/errors.hpp>
#include <ipc/piercing.hpp>

#include "fixtures.hpp"

using namespace ipc;
using fixtures::code;

namespace {

PiercingStep step(Codeword lambda, Codeword sigma, Codeword tau) { return {lambda, sigma, tau}; }

}  // namespace

TEST_CASE("is_pierceable") {
  CHECK(is_pierceable(code(2, "∅ 1 12 2"), step({1, 2}, {}, {})));
  CHECK_FALSE(is_pierceable(code(2, "∅ 1 2"), step({1, 2}, {}, {})));
  CHECK_FALSE(is_pierceable(code(2, "∅ 1 12"), step({1, 2}, {}, {})));
  CHECK_THROWS_AS(is_pierceable(code(2, "∅ 1"), step({1}, {1}, {2})), InvalidInput);
  CHECK_THROWS_AS(is_pierceable(code(2, "∅ 1"), step({1}, {}, {})), InvalidInput);
}

TEST_CASE("the four worked piercings") {
  CHECK(pierce(code(1, "∅ 1"), step({1}, {}, {})) == code(2, "∅ 1 12 2"));
  CHECK(pierce(code(2, "∅ 1 12 2"), step({2}, {1}, {})) == code(3, "∅ 1 12 2 123 13"));
  CHECK(pierce(code(2, "∅ 1 12 2"), step({2}, {}, {1})) == code(3, "∅ 1 12 2 23 3"));
  CHECK(pierce(code(2, "∅ 1 12 2"), step({1, 2}, {}, {})) == code(3, "∅ 1 12 2 123 13 23 3"));
  CHECK_THROWS_AS(pierce(code(2, "∅ 1 2"), step({1, 2}, {}, {})), NotPierceable);
}

TEST_CASE("pierce matches the oracle on every step of small codes") {
  for (const auto& pc : enumerate_pierced_codes(3, 2)) {
    int n = pc.code.neurons();
    for (const auto& s : pierceable_steps(pc.code, 2)) {
      auto expect = oracle::pierce(fixtures::raw(pc.code), n, s.lambda.bits(), s.sigma.bits());
      REQUIRE(expect);
      auto got = pierce(pc.code, s);
      CHECK(fixtures::raw(got) == *expect);
      CHECK(got.size() == pc.code.size() + (std::size_t{1} << s.degree()));
      CHECK(pc.code.subset_of(got));
    }
  }
}

TEST_CASE("recover_piercing_sequence") {
  auto seq = recover_piercing_sequence(code(3, "∅ 1 12 2 123 13"), 2);
  REQUIRE(seq);
  // the words added with neuron 3 are 13 and 123: sigma = 1, lambda = 2
  CHECK(seq->steps == std::vector<PiercingStep>{step({1}, {}, {}), step({2}, {1}, {})});
  CHECK(seq->labels.empty());

  auto base = recover_piercing_sequence(code(1, "∅ 1"), 2);
  REQUIRE(base);
  CHECK(base->steps.empty());

  // {∅,1,2} is the 0-piercing of {∅,1} with neuron 1 in the background
  auto zero = recover_piercing_sequence(code(2, "∅ 1 2"), 2);
  REQUIRE(zero);
  CHECK(zero->steps == std::vector<PiercingStep>{step({}, {}, {1})});
  CHECK(oracle::is_inductively_pierced(fixtures::raw(code(2, "∅ 1 2")), 2, 0, true));

  auto cubic = code(3, "∅ 1 2 3 123");
  CHECK_FALSE(recover_piercing_sequence(cubic, 2));
  CHECK_FALSE(recover_piercing_sequence(cubic, 3, true));
  CHECK_FALSE(oracle::is_inductively_pierced(fixtures::raw(cubic), 3, 3, false));
  CHECK_FALSE(recover_piercing_sequence(code(1, "∅"), 2));
}

TEST_CASE("relabeling finds sequences the fixed labeling misses") {
  // neuron 1 is nested in neuron 2, so 1 must come second
  auto c = code(2, "∅ 2 12");
  CHECK_FALSE(recover_piercing_sequence(c, 1));
  auto seq = recover_piercing_sequence(c, 1, true);
  REQUIRE(seq);
  CHECK(seq->labels == std::vector<Neuron>{2, 1});
}

TEST_CASE("enumeration examples") {
  auto one = enumerate_pierced_codes(1, 2);
  REQUIRE(one.size() == 1);
  CHECK(one[0].code == code(1, "∅ 1"));
  CHECK(one[0].sequence.steps.empty());

  auto two = enumerate_pierced_codes(2, 1);
  auto has = [](const std::vector<PiercedCode>& v, const NeuralCode& c) {
    return std::any_of(v.begin(), v.end(), [&](const PiercedCode& p) { return p.code == c; });
  };
  CHECK(has(two, code(2, "∅ 1 12 2")));
  CHECK(has(two, code(2, "∅ 1 12")));
  CHECK(has(two, code(2, "∅ 1 2")));
  CHECK(has(enumerate_pierced_codes(3, 2), code(3, "∅ 1 12 2 123 13 23 3")));
}

TEST_CASE("enumeration round-trips and matches the exhaustive oracle") {
  for (const auto& pc : enumerate_pierced_codes(4, 2)) {
    CHECK(pc.code.labeled_by_construction());
    CHECK(replay(pc.sequence) == pc.code);
    CHECK(pc.sequence.max_degree() <= 2);
    auto rec = recover_piercing_sequence(pc.code, 2, false);
    REQUIRE(rec);
    CHECK(replay(*rec) == pc.code);
    CHECK(oracle::is_inductively_pierced(fixtures::raw(pc.code), pc.code.neurons(), 2, true));
  }
}

TEST_CASE("enumeration is complete: every fixed-label pierced code on 3 neurons appears") {
  auto listed = enumerate_pierced_codes(3, 2);
  std::size_t count = 0;
  for (const auto& c : fixtures::all_codes_with_empty(3)) {
    bool oracle_says = oracle::is_inductively_pierced(fixtures::raw(c), 3, 2, true);
    bool found = std::any_of(listed.begin(), listed.end(), [&](const PiercedCode& p) { return p.code == c; });
    CHECK_EQ(oracle_says, found);
    count += oracle_says;
  }
  CHECK(count > 0);
}

TEST_CASE("recovery with relabeling agrees with the exhaustive oracle on all 3-neuron codes") {
  for (const auto& c : fixtures::all_codes_with_empty(3))
    for (int k = 0; k <= 2; ++k) {
      auto seq = recover_piercing_sequence(c, k, true);
      CHECK_EQ(seq.has_value(), oracle::is_inductively_pierced(fixtures::raw(c), 3, k, false));
      CHECK_EQ(recover_piercing_sequence(c, k, false).has_value(),
               oracle::is_inductively_pierced(fixtures::raw(c), 3, k, true));
    }
}
