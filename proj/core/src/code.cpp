#include "ipc/code.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace ipc {

namespace {

void check_label(Neuron i) {
  if (i < 0 || i > kMaxNeuron)
    throw InvalidInput("neuron label out of range: " + std::to_string(i));
}

}  // namespace

Codeword::Codeword(std::initializer_list<Neuron> neurons)
    : Codeword(from_neurons(std::span<const Neuron>(neurons.begin(), neurons.size()))) {}

Codeword Codeword::from_neurons(std::span<const Neuron> neurons) {
  std::uint64_t bits = 0;
  for (Neuron i : neurons) {
    check_label(i);
    bits |= std::uint64_t{1} << i;
  }
  return Codeword(bits);
}

Codeword Codeword::range(Neuron n) {
  if (n < 0 || n > kMaxNeuron) throw InvalidInput("neuron count out of range");
  if (n == 0) return Codeword();
  std::uint64_t all = (n == 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n + 1)) - 1);
  return Codeword(all & ~std::uint64_t{1});
}

Codeword Codeword::parse(std::string_view digits) {
  std::uint64_t bits = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw InvalidInput("codeword digit expected, got '" + std::string(1, ch) + "'");
    bits |= std::uint64_t{1} << (ch - '0');
  }
  return Codeword(bits);
}

int Codeword::size() const { return std::popcount(bits_); }

Neuron Codeword::max() const { return bits_ == 0 ? 0 : 63 - std::countl_zero(bits_); }

bool Codeword::contains(Neuron i) const {
  check_label(i);
  return (bits_ >> i) & 1U;
}

Codeword Codeword::with(Neuron i) const {
  check_label(i);
  return Codeword(bits_ | (std::uint64_t{1} << i));
}

Codeword Codeword::without(Neuron i) const {
  check_label(i);
  return Codeword(bits_ & ~(std::uint64_t{1} << i));
}

std::vector<Neuron> Codeword::neurons() const {
  std::vector<Neuron> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string Codeword::to_string() const {
  auto ns = neurons();
  bool wide = !ns.empty() && ns.back() > 9;
  std::string out = wide ? "{" : "";
  for (std::size_t k = 0; k < ns.size(); ++k) {
    if (wide && k > 0) out += ',';
    out += std::to_string(ns[k]);
  }
  if (wide) out += '}';
  return out;
}

std::strong_ordering compare(Codeword c, Codeword d) {
  if (c == d) return std::strong_ordering::equal;
  if (auto cmp = c.max() <=> d.max(); cmp != 0) return cmp;
  if (auto cmp = d.size() <=> c.size(); cmp != 0) return cmp;
  // Same size: the first differing element decides. The lower one belongs to
  // the lexicographically smaller sorted sequence.
  std::uint64_t diff = c.bits() ^ d.bits();
  std::uint64_t lowest = diff & (~diff + 1);
  return (c.bits() & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

NeuralCode::NeuralCode(int neurons, std::vector<Codeword> words, bool dummy)
    : neurons_(neurons), dummy_(dummy), words_(std::move(words)) {
  if (neurons < 0 || neurons > kMaxNeuron) throw InvalidInput("neuron count out of range");
  Codeword allowed = Codeword::range(neurons);
  if (dummy) allowed = allowed.with(kDummyNeuron);
  for (Codeword c : words_) {
    if (!c.subset_of(allowed))
      throw InvalidInput("codeword " + c.to_string() + " uses a neuron outside the code's range");
  }
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

NeuralCode::NeuralCode(int neurons, std::initializer_list<Codeword> words)
    : NeuralCode(neurons, std::vector<Codeword>(words)) {}

NeuralCode NeuralCode::parse(int neurons, std::string_view text) {
  std::vector<Codeword> words;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (token == "∅" || token == "{}")
      words.emplace_back();
    else
      words.push_back(Codeword::parse(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\n')
      flush();
    else
      token += ch;
  }
  flush();
  return NeuralCode(neurons, std::move(words));
}

bool NeuralCode::contains(Codeword c) const {
  return std::binary_search(words_.begin(), words_.end(), c);
}

bool NeuralCode::subset_of(const NeuralCode& other) const {
  return std::includes(other.words_.begin(), other.words_.end(), words_.begin(), words_.end());
}

std::string NeuralCode::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Codeword c : sort_codewords(*this)) {
    if (!first) os << ", ";
    first = false;
    os << (c.empty() ? "∅" : c.to_string());
  }
  os << '}';
  return os.str();
}

std::vector<Codeword> sort_codewords(const NeuralCode& code) {
  std::vector<Codeword> out(code.words().begin(), code.words().end());
  std::sort(out.begin(), out.end(), CodewordLess{});
  return out;
}

NeuralCode restrict_code(const NeuralCode& code, Neuron j) {
  if (j < 1 || j > code.neurons())
    throw InvalidInput("restrict: neuron " + std::to_string(j) + " not in 1.." +
                       std::to_string(code.neurons()));
  std::vector<Codeword> kept;
  for (Codeword c : code.words())
    if (!c.contains(j)) kept.push_back(c);
  int n = (j == code.neurons()) ? code.neurons() - 1 : code.neurons();
  return NeuralCode(n, std::move(kept), code.has_dummy());
}

NeuralCode full_code(int n) {
  if (n < 0 || n > 20) throw InvalidInput("full_code: n out of supported range");
  std::vector<Codeword> words;
  words.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) words.emplace_back(m << 1);
  return NeuralCode(n, std::move(words));
}

}  // namespace ipc
