#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ipc/code.hpp"
#include "ipc/errors.hpp"

namespace ipc {

/// One inductive step: neuron n+1 is added with new codewords sigma ∪ nu ∪ {n+1}
/// for every nu ⊆ lambda. (lambda, sigma, tau) partitions {1..n}.
struct PiercingStep {
  Codeword lambda;
  Codeword sigma;
  Codeword tau;

  int degree() const { return lambda.size(); }

  friend bool operator==(const PiercingStep&, const PiercingStep&) = default;
};

/// Steps for neurons 2..n, starting from the base code {∅, 1}.
///
/// `labels` is empty when the code's own labeling is the construction order.
/// Otherwise labels[i-1] is the original neuron that was added at step i and
/// the steps are expressed in construction labels.
struct PiercingSequence {
  std::vector<PiercingStep> steps;
  std::vector<Neuron> labels;

  int neurons() const { return static_cast<int>(steps.size()) + 1; }
  /// Largest |lambda| over all steps (0 for the empty sequence).
  int max_degree() const;

  friend bool operator==(const PiercingSequence&, const PiercingSequence&) = default;
};

/// The one-neuron code {∅, 1}.
NeuralCode base_code();

/// True iff sigma ∪ nu ∈ C for every nu ⊆ lambda. Throws InvalidInput when the
/// step does not partition {1..n}.
bool is_pierceable(const NeuralCode& code, const PiercingStep& step);

/// C ∪ { sigma ∪ nu ∪ {n+1} : nu ⊆ lambda } on n+1 neurons.
/// Throws NotPierceable if the precondition fails.
NeuralCode pierce(const NeuralCode& code, const PiercingStep& step);

/// Replays a sequence from {∅, 1}. The result is labeled by construction.
NeuralCode replay(const PiercingSequence& seq);

/// Peels the last-added neuron off repeatedly. With relabel=false only neuron
/// n is tried at each stage; with relabel=true every remaining neuron is tried
/// and the returned sequence carries the relabeling. Returns nullopt when no
/// peeling reaches a one-neuron code containing its neuron.
std::optional<PiercingSequence> recover_piercing_sequence(const NeuralCode& code, int max_k,
                                                          bool relabel = false);

struct PiercedCode {
  NeuralCode code;
  PiercingSequence sequence;
};

struct EnumerationLimits {
  std::size_t max_codes = 2'000'000;
};

/// Breadth-first closure of {∅, 1} under every valid piercing with
/// |lambda| <= max_k, up to max_n neurons. Codes are deduplicated by literal
/// codeword-set equality and emitted level by level in discovery order.
/// Throws ResourceCapExceeded when more than limits.max_codes codes are found.
void for_each_pierced_code(int max_n, int max_k,
                           const std::function<void(const PiercedCode&)>& visit,
                           EnumerationLimits limits = {});

std::vector<PiercedCode> enumerate_pierced_codes(int max_n, int max_k,
                                                 EnumerationLimits limits = {});

/// All steps (lambda, sigma, tau) with |lambda| <= max_k under which `code`
/// is pierceable, in a fixed deterministic order.
std::vector<PiercingStep> pierceable_steps(const NeuralCode& code, int max_k);

}  // namespace ipc
