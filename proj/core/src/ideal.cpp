#include "ipc/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace ipc {

int PseudoMonomial::type() const {
  if (off.empty()) return 1;
  if (on.empty()) return 3;
  return 2;
}

std::string PseudoMonomial::to_string() const {
  std::string s;
  auto append = [&](const std::string& term) {
    if (!s.empty()) s += '*';
    s += term;
  };
  for (Neuron i : on.neurons()) append("x" + std::to_string(i));
  for (Neuron j : off.neurons()) append("(1-x" + std::to_string(j) + ")");
  return s.empty() ? "1" : s;
}

bool canonical_less(const PseudoMonomial& a, const PseudoMonomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.on != b.on) return a.on < b.on;
  return a.off < b.off;
}

bool vanishes_on(const PseudoMonomial& pm, const NeuralCode& code) {
  return std::none_of(code.words().begin(), code.words().end(), [&](Codeword c) {
    return pm.on.subset_of(c) && pm.off.disjoint(c);
  });
}

CanonicalForm canonical_form(const NeuralCode& code) {
  if (code.empty()) throw InvalidInput("canonical_form: empty code");
  if (code.neurons() > 20) throw InvalidInput("canonical_form: too many neurons for 3^n enumeration");
  const std::uint64_t all = Codeword::range(code.neurons()).bits();

  // Vanishing is closed upwards under divisibility, so a vanishing
  // pseudo-monomial is minimal iff dropping any single factor breaks it.
  auto is_minimal = [&](const PseudoMonomial& pm) {
    for (Neuron i : pm.on.neurons()) {
      PseudoMonomial smaller{pm.on.without(i), pm.off};
      if ((!smaller.on.empty() || !smaller.off.empty()) && vanishes_on(smaller, code)) return false;
    }
    for (Neuron j : pm.off.neurons()) {
      PseudoMonomial smaller{pm.on, pm.off.without(j)};
      if ((!smaller.on.empty() || !smaller.off.empty()) && vanishes_on(smaller, code)) return false;
    }
    return true;
  };

  CanonicalForm out;
  for (std::uint64_t on = all;; on = (on - 1) & all) {
    const std::uint64_t rest = all & ~on;
    for (std::uint64_t off = rest;; off = (off - 1) & rest) {
      if (on != 0 || off != 0) {
        PseudoMonomial pm{Codeword(on), Codeword(off)};
        if (vanishes_on(pm, code) && is_minimal(pm)) out.push_back(pm);
      }
      if (off == 0) break;
    }
    if (on == 0) break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

int cf_max_degree(const NeuralCode& code) {
  int d = 0;
  for (const auto& pm : canonical_form(code)) d = std::max(d, pm.degree());
  return d;
}

bool intersection_complete_direct(const NeuralCode& code) {
  auto words = code.words();
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = a + 1; b < words.size(); ++b)
      if (!code.contains(words[a] & words[b])) return false;
  return true;
}

bool intersection_complete_by_cf(const NeuralCode& code) {
  if (code.empty()) return true;
  for (const auto& pm : canonical_form(code))
    if (pm.type() == 2 && pm.off.size() > 1) return false;
  return true;
}

bool is_intersection_complete(const NeuralCode& code) {
  bool direct = intersection_complete_direct(code);
  bool by_cf = intersection_complete_by_cf(code);
  if (direct != by_cf)
    throw std::logic_error("intersection-completeness checks disagree on " + code.to_string());
  return direct;
}

}  // namespace ipc
