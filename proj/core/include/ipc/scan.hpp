#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ipc/code.hpp"
#include "ipc/groebner.hpp"
#include "ipc/piercing.hpp"
#include "ipc/toric.hpp"

namespace ipc {

enum class ScanOrder { codeword_lex, weighted_grevlex };

struct ScanConfig {
  int max_n = 4;
  int max_k = 2;
  ScanOrder order = ScanOrder::codeword_lex;
  /// One weight per nonempty subset of {1..n} in grevlex_listing order.
  /// Used only with weighted_grevlex; must fit every n scanned.
  std::map<int, std::vector<std::int64_t>> weights;
  BuchbergerLimits limits;
  unsigned jobs = 1;
};

enum class ScanStatus { ok, violation, skipped };

std::string to_string(ScanStatus s);

struct ScanEntry {
  NeuralCode code;
  PiercingSequence sequence;
  int n = 0;
  int k = 0;
  int gb_degree = 0;  // -1 when skipped
  double time_ms = 0;
  ScanStatus status = ScanStatus::ok;
  std::string detail;
};

struct ScanReport {
  ScanConfig config;
  std::vector<ScanEntry> entries;  // enumeration order
  std::size_t violations = 0;
  std::size_t skipped = 0;
  std::map<int, std::size_t> degree_histogram;
  double total_ms = 0;
};

/// Computes gb_max_degree for every enumerated pierced code (labeled by
/// construction). Codes with degree > 2 are violations; codes hitting a
/// resource cap are reported as skipped.
ScanReport conjecture_scan(const ScanConfig& config);

struct ClassificationRow {
  NeuralCode code;
  int gb_degree = 0;
  bool quadratic = false;    // gb_degree <= 2
  bool pierced01 = false;    // inductively 0- or 1-pierced under some labeling
  bool agrees() const { return quadratic == pierced01; }
};

struct ClassificationReport {
  std::vector<std::int64_t> weights;
  std::vector<ClassificationRow> rows;
  /// table[quadratic][pierced01]
  std::size_t table[2][2] = {{0, 0}, {0, 0}};
  std::size_t disagreements = 0;
};

/// Every code on n neurons containing ∅ (2^(2^n - 1) codes), classified by
/// whether its reduced basis under weighted grevlex is at most quadratic and
/// whether it is inductively 0/1-pierced. Intended for n <= 3.
ClassificationReport classify_all_codes(int n, const std::vector<std::int64_t>& weights,
                                        const BuchbergerLimits& limits = {});

/// A binomial from the reference listing of the homogenized
/// counterexample (bit-string variable names).
struct ListedBinomial {
  std::string lead;
  std::string trail;
};

/// The 17 binomials of the reduced basis as printed for the counterexample.
const std::vector<ListedBinomial>& published_counterexample_basis();

struct CounterexampleReport {
  NeuralCode code;
  NeuralCode homogenized;
  std::vector<Codeword> listing;  // the listed shelling order, homogenized
  /// "ascending": later-listed codewords are larger variables (consistent
  /// with ≺); "descending": the reverse.
  std::string direction;
  std::vector<Binomial> basis;
  std::vector<std::string> formatted;
  int max_degree = 0;
  std::vector<std::string> cubics;
  int other_direction_max_degree = 0;
  std::size_t published_size = 0;
  bool matches_published = false;
  /// Published binomials whose written lead agrees with ours.
  std::size_t lead_agreements = 0;
  std::vector<std::string> missing;  // published, not in ours
  std::vector<std::string> extra;    // ours, not published
};

/// The shelling-order lex computation on the homogenized code
/// {134, 13, 3, ∅, 1, 12, 34, 234, 1234, 123, 4}. Tries the ascending
/// direction first and falls back to descending only if the published
/// basis is not reproduced.
CounterexampleReport analyze_counterexample(const BuchbergerLimits& limits = {});

}  // namespace ipc
