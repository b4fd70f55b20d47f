#include "ipc/piercing.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

namespace ipc {

namespace {

void check_partition(const NeuralCode& code, const PiercingStep& step) {
  Codeword all = Codeword::range(code.neurons());
  bool disjoint = step.lambda.disjoint(step.sigma) && step.lambda.disjoint(step.tau) &&
                  step.sigma.disjoint(step.tau);
  if (!disjoint || (step.lambda | step.sigma | step.tau) != all)
    throw InvalidInput("piercing step does not partition 1.." + std::to_string(code.neurons()));
}

// Calls f(nu) for every nu ⊆ mask, including ∅ and mask itself.
template <typename F>
void for_each_subset(Codeword mask, F&& f) {
  std::uint64_t m = mask.bits();
  std::uint64_t s = 0;
  while (true) {
    f(Codeword(s));
    if (s == m) break;
    s = (s - m) & m;
  }
}

struct WordsHash {
  std::size_t operator()(const std::vector<Codeword>& ws) const {
    std::size_t h = ws.size();
    for (Codeword c : ws) h ^= std::hash<std::uint64_t>{}(c.bits()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

int PiercingSequence::max_degree() const {
  int k = 0;
  for (const auto& s : steps) k = std::max(k, s.degree());
  return k;
}

NeuralCode base_code() {
  NeuralCode c(1, {Codeword{}, Codeword{1}});
  c.set_labeled_by_construction(true);
  return c;
}

bool is_pierceable(const NeuralCode& code, const PiercingStep& step) {
  check_partition(code, step);
  bool ok = true;
  for_each_subset(step.lambda, [&](Codeword nu) {
    if (ok && !code.contains(step.sigma | nu)) ok = false;
  });
  return ok;
}

NeuralCode pierce(const NeuralCode& code, const PiercingStep& step) {
  if (!is_pierceable(code, step))
    throw NotPierceable("code is not (lambda, sigma, tau) pierceable");
  if (code.neurons() + 1 > kMaxNeuron) throw InvalidInput("too many neurons");
  Neuron next = code.neurons() + 1;
  std::vector<Codeword> words(code.words().begin(), code.words().end());
  for_each_subset(step.lambda, [&](Codeword nu) { words.push_back((step.sigma | nu).with(next)); });
  NeuralCode out(next, std::move(words), code.has_dummy());
  out.set_labeled_by_construction(code.labeled_by_construction());
  return out;
}

NeuralCode replay(const PiercingSequence& seq) {
  NeuralCode code = base_code();
  for (const auto& step : seq.steps) code = pierce(code, step);
  return code;
}

std::vector<PiercingStep> pierceable_steps(const NeuralCode& code, int max_k) {
  // sigma must itself be a codeword (nu = ∅); lambda ranges over subsets of
  // the complement with |lambda| <= max_k; tau is what is left.
  std::vector<PiercingStep> out;
  Codeword all = Codeword::range(code.neurons());
  for (Codeword sigma : code.words()) {
    if (!sigma.subset_of(all)) continue;
    Codeword rest = all - sigma;
    for_each_subset(rest, [&](Codeword lambda) {
      if (lambda.size() > max_k) return;
      PiercingStep step{lambda, sigma, rest - lambda};
      bool ok = true;
      for_each_subset(lambda, [&](Codeword nu) {
        if (ok && !code.contains(sigma | nu)) ok = false;
      });
      if (ok) out.push_back(step);
    });
  }
  return out;
}

namespace {

class Recoverer {
 public:
  Recoverer(const NeuralCode& code, int max_k, bool relabel)
      : code_(code), max_k_(max_k), relabel_(relabel) {}

  // Steps are collected last-first, in original labels, as (neuron, step).
  bool run(Codeword remaining) {
    if (remaining.size() == 1) {
      // Base case: a one-neuron code that contains its neuron.
      return code_.contains(remaining);
    }
    if (remaining.empty()) return false;
    if (failed_.contains(remaining.bits())) return false;

    std::vector<Neuron> candidates;
    if (relabel_)
      candidates = remaining.neurons();
    else
      candidates.push_back(remaining.max());
    // Try the highest label first so relabel=true prefers the identity.
    std::reverse(candidates.begin(), candidates.end());

    for (Neuron j : candidates) {
      auto step = peel(remaining, j);
      if (!step) continue;
      trail_.push_back({j, *step});
      if (run(remaining.without(j))) return true;
      trail_.pop_back();
    }
    failed_.insert(remaining.bits());
    return false;
  }

  const std::vector<std::pair<Neuron, PiercingStep>>& trail() const { return trail_; }

 private:
  // The words of the current subcode are exactly the codewords inside `remaining`.
  std::optional<PiercingStep> peel(Codeword remaining, Neuron j) const {
    std::vector<Codeword> shadow;
    for (Codeword c : code_.words()) {
      if (c.subset_of(remaining) && c.contains(j)) shadow.push_back(c.without(j));
    }
    if (shadow.empty()) return std::nullopt;
    Codeword meet = shadow.front();
    Codeword join = shadow.front();
    for (Codeword s : shadow) {
      meet = meet & s;
      join = join | s;
    }
    Codeword lambda = join - meet;
    if (lambda.size() > max_k_) return std::nullopt;
    if (shadow.size() != (std::size_t{1} << lambda.size())) return std::nullopt;
    // Every sigma ∪ nu must already be in the smaller code.
    for (Codeword s : shadow)
      if (!code_.contains(s)) return std::nullopt;
    Codeword others = remaining.without(j);
    return PiercingStep{lambda, meet, others - join};
  }

  const NeuralCode& code_;
  int max_k_;
  bool relabel_;
  std::unordered_set<std::uint64_t> failed_;
  std::vector<std::pair<Neuron, PiercingStep>> trail_;
};

Codeword relabel_word(Codeword c, const std::vector<Neuron>& to_new) {
  std::uint64_t bits = 0;
  for (Neuron i : c.neurons()) bits |= std::uint64_t{1} << to_new[static_cast<std::size_t>(i)];
  return Codeword(bits);
}

}  // namespace

std::optional<PiercingSequence> recover_piercing_sequence(const NeuralCode& code, int max_k,
                                                          bool relabel) {
  if (code.empty()) throw InvalidInput("recover_piercing_sequence: empty code");
  if (code.has_dummy()) throw InvalidInput("recover_piercing_sequence: homogenized code");
  if (code.neurons() < 1) return std::nullopt;
  Recoverer rec(code, max_k, relabel);
  if (!rec.run(Codeword::range(code.neurons()))) return std::nullopt;

  // trail() holds the peeled neurons last-added first; the base neuron is
  // the one left over.
  const auto& trail = rec.trail();
  Codeword leftover = Codeword::range(code.neurons());
  for (const auto& [j, step] : trail) leftover = leftover.without(j);

  std::vector<Neuron> order{leftover.max()};
  for (auto it = trail.rbegin(); it != trail.rend(); ++it) order.push_back(it->first);

  bool identity = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] != static_cast<Neuron>(i + 1)) identity = false;

  PiercingSequence seq;
  std::vector<Neuron> to_new(static_cast<std::size_t>(code.neurons()) + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i) to_new[static_cast<std::size_t>(order[i])] = static_cast<Neuron>(i + 1);
  for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
    const PiercingStep& s = it->second;
    seq.steps.push_back(identity ? s
                                 : PiercingStep{relabel_word(s.lambda, to_new),
                                                relabel_word(s.sigma, to_new),
                                                relabel_word(s.tau, to_new)});
  }
  if (!identity) seq.labels = order;
  return seq;
}

void for_each_pierced_code(int max_n, int max_k,
                           const std::function<void(const PiercedCode&)>& visit,
                           EnumerationLimits limits) {
  if (max_n < 1) return;
  std::vector<PiercedCode> level{{base_code(), {}}};
  std::size_t emitted = 0;
  for (int n = 1;; ++n) {
    for (const auto& pc : level) {
      if (++emitted > limits.max_codes)
        throw ResourceCapExceeded("enumeration exceeded " + std::to_string(limits.max_codes) +
                                  " codes");
      visit(pc);
    }
    if (n == max_n) break;
    std::vector<PiercedCode> next;
    std::unordered_set<std::vector<Codeword>, WordsHash> seen;
    for (const auto& pc : level) {
      for (const auto& step : pierceable_steps(pc.code, max_k)) {
        NeuralCode child = pierce(pc.code, step);
        std::vector<Codeword> key(child.words().begin(), child.words().end());
        if (!seen.insert(std::move(key)).second) continue;
        PiercingSequence seq = pc.sequence;
        seq.steps.push_back(step);
        next.push_back({std::move(child), std::move(seq)});
        if (emitted + next.size() > limits.max_codes)
          throw ResourceCapExceeded("enumeration exceeded " +
                                    std::to_string(limits.max_codes) + " codes");
      }
    }
    level = std::move(next);
  }
}

std::vector<PiercedCode> enumerate_pierced_codes(int max_n, int max_k, EnumerationLimits limits) {
  std::vector<PiercedCode> out;
  for_each_pierced_code(max_n, max_k, [&](const PiercedCode& pc) { out.push_back(pc); }, limits);
  return out;
}

}  // namespace ipc
