#pragma once

#include <nlohmann/json.hpp>

#include "ipc/ball.hpp"
#include "ipc/code.hpp"
#include "ipc/complex.hpp"
#include "ipc/hyperplane.hpp"
#include "ipc/ideal.hpp"
#include "ipc/piercing.hpp"
#include "ipc/scan.hpp"
#include "ipc/toric.hpp"

namespace ipc {

using Json = nlohmann::ordered_json;

Json to_json(Codeword c);
/// {"neurons": n, "codewords": [[...], ...]} with codewords in increasing
/// codeword order; ∅ is [] and the dummy neuron appears as 0.
Json to_json(const NeuralCode& code);
Json to_json(const PiercingStep& step);
Json to_json(const PiercingSequence& seq);
Json to_json(const PseudoMonomial& pm);
Json to_json(const CanonicalForm& cf);
Json to_json(const VdCertificate& cert);
Json to_json(const SimplicialComplex& k);
Json to_json(const HyperplaneRealization& r);
Json to_json(const HyperplaneVerification& v);
Json to_json(const BallRealization& r);
Json to_json(const BallVerification& v);
Json to_json(const ClassificationReport& r);
Json to_json(const CounterexampleReport& r);
/// time_ms fields only appear when `timing` is set, so that reports are
/// reproducible byte for byte by default.
Json to_json(const ScanReport& r, bool timing = false);

/// Binomials of a basis as `y_{12}*y_{1} - y_{2}` strings.
Json basis_to_json(const ToricIdeal& ideal, std::span<const Binomial> basis,
                   VariableNaming naming = VariableNaming::digits);

/// Accepts the object form above or a bare list of codewords, in which case
/// the neuron count is the largest label. Throws InvalidInput.
NeuralCode code_from_json(const Json& j);
Codeword codeword_from_json(const Json& j);
PiercingSequence sequence_from_json(const Json& j);

}  // namespace ipc
