#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipc/errors.hpp"

namespace ipc {

/// Neuron labels run 1..63. Label 0 is reserved for the homogenizing dummy neuron.
using Neuron = int;

inline constexpr Neuron kDummyNeuron = 0;
inline constexpr Neuron kMaxNeuron = 63;

/// A set of neurons stored as a 64-bit mask (bit i <-> neuron i).
class Codeword {
 public:
  constexpr Codeword() = default;
  constexpr explicit Codeword(std::uint64_t bits) : bits_(bits) {}

  Codeword(std::initializer_list<Neuron> neurons);
  static Codeword from_neurons(std::span<const Neuron> neurons);

  /// Full set {1..n}.
  static Codeword range(Neuron n);

  /// Parses the digit form ("123", "0", "" for the empty word).
  static Codeword parse(std::string_view digits);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const;

  /// Highest neuron label; 0 for the empty word.
  Neuron max() const;

  bool contains(Neuron i) const;
  constexpr bool subset_of(Codeword other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(Codeword other) const { return (bits_ & other.bits_) == 0; }

  Codeword with(Neuron i) const;
  Codeword without(Neuron i) const;

  std::vector<Neuron> neurons() const;

  /// Digits concatenated in increasing order ("123"); "" for the empty word.
  /// Labels above 9 are comma-separated inside braces to stay unambiguous.
  std::string to_string() const;

  friend constexpr Codeword operator|(Codeword a, Codeword b) { return Codeword(a.bits_ | b.bits_); }
  friend constexpr Codeword operator&(Codeword a, Codeword b) { return Codeword(a.bits_ & b.bits_); }
  friend constexpr Codeword operator-(Codeword a, Codeword b) { return Codeword(a.bits_ & ~b.bits_); }

  // Bit-pattern ordering for use as a container key. NOT the codeword order;
  // see compare() for that.
  friend constexpr auto operator<=>(Codeword, Codeword) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// The total order on finite sets of neurons that drives shelling and the
/// toric term order:
///   c < d  iff  max(c) < max(d);
///          else |c| > |d| (heavier first);
///          else c precedes d lexicographically.
std::strong_ordering compare(Codeword c, Codeword d);

struct CodewordLess {
  bool operator()(Codeword c, Codeword d) const { return compare(c, d) < 0; }
};

/// A finite set of codewords on neurons {1..n}. If `dummy` is set the
/// codewords may also use neuron 0.
class NeuralCode {
 public:
  NeuralCode() = default;
  NeuralCode(int neurons, std::vector<Codeword> words, bool dummy = false);
  NeuralCode(int neurons, std::initializer_list<Codeword> words);

  /// Parses space- or comma-separated digit words, with "∅" or "{}" for the
  /// empty word: e.g. "∅ 1 12 2".
  static NeuralCode parse(int neurons, std::string_view text);

  int neurons() const { return neurons_; }
  bool has_dummy() const { return dummy_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  /// Codewords sorted by bit pattern (set semantics, no duplicates).
  std::span<const Codeword> words() const { return words_; }
  bool contains(Codeword c) const;

  /// Set when neuron i is known to have been added at piercing step i.
  bool labeled_by_construction() const { return labeled_; }
  NeuralCode& set_labeled_by_construction(bool v) {
    labeled_ = v;
    return *this;
  }

  bool subset_of(const NeuralCode& other) const;

  std::string to_string() const;

  friend bool operator==(const NeuralCode& a, const NeuralCode& b) {
    return a.neurons_ == b.neurons_ && a.dummy_ == b.dummy_ && a.words_ == b.words_;
  }

 private:
  int neurons_ = 0;
  bool dummy_ = false;
  bool labeled_ = false;
  std::vector<Codeword> words_;
};

/// Codewords in strictly increasing `compare` order.
std::vector<Codeword> sort_codewords(const NeuralCode& code);

/// Drops every codeword containing j. The neuron count shrinks only when j = n.
NeuralCode restrict_code(const NeuralCode& code, Neuron j);

/// All 2^n subsets of {1..n}.
NeuralCode full_code(int n);

}  // namespace ipc
