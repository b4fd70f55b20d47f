#include <doctest.h>

#include <ipc/code.hpp>
#include <ipc/errors.hpp>

#include <algorithm>
#include <random>

#include "fixtures.hpp"

using namespace ipc;

TEST_CASE("compare follows max, then weight, then lex") {
  CHECK(compare(Codeword{1}, Codeword{1, 2}) < 0);
  CHECK(compare(Codeword{1, 3}, Codeword{2, 3}) < 0);
  CHECK(compare(Codeword{2, 3}, Codeword{2, 3}) == 0);
  CHECK(compare(Codeword{}, Codeword{1}) < 0);
  CHECK(compare(Codeword{1, 2, 3}, Codeword{3}) < 0);
}

TEST_CASE("chain on the three-neuron example") {
  std::vector<Codeword> chain{{}, {1}, {1, 2}, {2}, {1, 2, 3}, {2, 3}};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(compare(chain[i], chain[i + 1]) < 0);
}

TEST_CASE("sort_codewords") {
  auto sorted = sort_codewords(fixtures::code(3, "∅ 23 123 2 12 1"));
  CHECK(sorted == std::vector<Codeword>{{}, {1}, {1, 2}, {2}, {1, 2, 3}, {2, 3}});
  CHECK(sort_codewords(fixtures::code(1, "∅")) == std::vector<Codeword>{{}});
  // 13 and 3 share their max; the heavier word comes first
  std::vector<Codeword> expect{{1}, {3}, {1, 3}};
  std::sort(expect.begin(), expect.end(),
            [](Codeword a, Codeword b) { return oracle::codeword_less(a.bits(), b.bits()); });
  CHECK(expect == std::vector<Codeword>{{1}, {1, 3}, {3}});
  CHECK(sort_codewords(fixtures::code(3, "13 3 1")) == expect);
}

TEST_CASE("compare agrees with the literal definition on all subsets of 6 neurons") {
  for (std::uint64_t a = 0; a < 64; ++a)
    for (std::uint64_t b = 0; b < 64; ++b) {
      Codeword c(a << 1), d(b << 1);
      CHECK_EQ(compare(c, d) < 0, oracle::codeword_less(c.bits(), d.bits()));
    }
}

TEST_CASE("compare is a strict total order on 6 neurons") {
  std::vector<Codeword> all;
  for (std::uint64_t a = 0; a < 64; ++a) all.emplace_back(a << 1);
  for (Codeword a : all)
    for (Codeword b : all) {
      auto ab = compare(a, b), ba = compare(b, a);
      CHECK((ab == 0) == (a == b));
      CHECK((ab < 0) == (ba > 0));
    }
  // transitivity, via sorting and checking every pair against positions
  std::sort(all.begin(), all.end(), CodewordLess{});
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(compare(all[i], all[j]) < 0);
}

TEST_CASE("sorting is idempotent and puts the empty word first") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Codeword> words{Codeword{}};
    for (int i = 0; i < 8; ++i) words.emplace_back((rng() & 0x3e));
    NeuralCode c(5, words);
    auto once = sort_codewords(c);
    auto twice = sort_codewords(NeuralCode(5, once));
    CHECK(once == twice);
    CHECK(once.front().empty());
  }
}

TEST_CASE("restrict_code") {
  CHECK(restrict_code(fixtures::code(2, "∅ 1 12 2"), 2) == fixtures::code(1, "∅ 1"));
  CHECK(restrict_code(fixtures::code(1, "∅"), 1) == fixtures::code(0, "∅"));
  CHECK(restrict_code(fixtures::code(3, "∅ 1 12 2 123 13"), 3) == fixtures::code(2, "∅ 1 12 2"));
  CHECK_THROWS_AS(restrict_code(fixtures::code(2, "∅ 1"), 3), InvalidInput);
}

TEST_CASE("codeword text and parsing") {
  CHECK(Codeword::parse("123") == Codeword{1, 2, 3});
  CHECK(Codeword::parse("") == Codeword{});
  CHECK(Codeword{0, 1, 2}.to_string() == "012");
  CHECK(Codeword{}.max() == 0);
  CHECK_THROWS_AS(NeuralCode(2, {Codeword{3}}), InvalidInput);
}
