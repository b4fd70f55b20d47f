#pragma once

#include <ipc/code.hpp>
#include <ipc/complex.hpp>

#include <string_view>
#include <vector>

#include "oracles.hpp"

namespace fixtures {

inline ipc::NeuralCode code(int n, std::string_view text) { return ipc::NeuralCode::parse(n, text); }

inline oracle::Code raw(const ipc::NeuralCode& c) {
  oracle::Code out;
  for (ipc::Codeword w : c.words()) out.insert(w.bits());
  return out;
}

inline ipc::NeuralCode from_raw(int n, const oracle::Code& words) {
  std::vector<ipc::Codeword> cw;
  for (auto m : words) cw.emplace_back(m);
  return ipc::NeuralCode(n, std::move(cw));
}

inline std::vector<oracle::Mask> raw_facets(const ipc::SimplicialComplex& k) {
  return {k.facets().begin(), k.facets().end()};
}

/// Every code on n neurons that contains ∅.
inline std::vector<ipc::NeuralCode> all_codes_with_empty(int n) {
  std::vector<ipc::NeuralCode> out;
  const std::uint64_t words = (std::uint64_t{1} << n) - 1;  // nonempty subsets
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << words); ++pick) {
    std::vector<ipc::Codeword> cw{ipc::Codeword{}};
    for (std::uint64_t s = 1; s <= words; ++s)
      if (pick >> (s - 1) & 1) cw.emplace_back(s << 1);
    out.emplace_back(n, std::move(cw));
  }
  return out;
}

}  // namespace fixtures
