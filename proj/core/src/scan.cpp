#include "ipc/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "ipc/errors.hpp"

namespace ipc {

std::string to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::ok: return "ok";
    case ScanStatus::violation: return "violation";
    case ScanStatus::skipped: return "skipped";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

MonomialOrder scan_order(const ScanConfig& config, const ToricIdeal& ideal) {
  if (config.order == ScanOrder::codeword_lex) return ideal.codeword_lex();
  auto it = config.weights.find(ideal.code().neurons());
  if (it == config.weights.end())
    throw InvalidInput("no weights given for n = " + std::to_string(ideal.code().neurons()));
  return ideal.weighted_grevlex(it->second);
}

bool has_nonempty_word(const NeuralCode& code) {
  return std::any_of(code.words().begin(), code.words().end(), [](Codeword c) { return !c.empty(); });
}

}  // namespace

ScanReport conjecture_scan(const ScanConfig& config) {
  if (config.max_n < 1) throw InvalidInput("max_n must be at least 1");
  if (config.max_k < 0) throw InvalidInput("max_k must be nonnegative");
  auto start = Clock::now();
  ScanReport report;
  report.config = config;
  for (auto& pc : enumerate_pierced_codes(config.max_n, config.max_k)) {
    ScanEntry e;
    e.n = pc.code.neurons();
    e.k = pc.sequence.max_degree();
    e.code = std::move(pc.code);
    e.sequence = std::move(pc.sequence);
    report.entries.push_back(std::move(e));
  }

  parallel_for(report.entries.size(), config.jobs, [&](std::size_t i) {
    ScanEntry& e = report.entries[i];
    auto t0 = Clock::now();
    try {
      ToricIdeal ideal(e.code, config.limits);
      e.gb_degree = gb_max_degree(ideal, scan_order(config, ideal));
      e.status = e.gb_degree > 2 ? ScanStatus::violation : ScanStatus::ok;
    } catch (const ResourceCapExceeded& ex) {
      e.gb_degree = -1;
      e.status = ScanStatus::skipped;
      e.detail = ex.what();
    }
    e.time_ms = elapsed_ms(t0);
  });

  for (const ScanEntry& e : report.entries) {
    if (e.status == ScanStatus::violation) ++report.violations;
    if (e.status == ScanStatus::skipped) ++report.skipped;
    else ++report.degree_histogram[e.gb_degree];
  }
  report.total_ms = elapsed_ms(start);
  return report;
}

ClassificationReport classify_all_codes(int n, const std::vector<std::int64_t>& weights,
                                        const BuchbergerLimits& limits) {
  if (n < 1 || n > 4) throw InvalidInput("classification is limited to 1 <= n <= 4");
  ClassificationReport report;
  report.weights = weights;
  const std::uint64_t words = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << words); ++mask) {
    std::vector<Codeword> cw{Codeword{}};
    for (std::uint64_t w = 0; w < words; ++w)
      if (mask >> w & 1) cw.emplace_back((w + 1) << 1);
    ClassificationRow row{NeuralCode(n, std::move(cw))};
    if (has_nonempty_word(row.code)) {
      ToricIdeal ideal(row.code, limits);
      row.gb_degree = gb_max_degree(ideal, ideal.weighted_grevlex(weights));
    }
    row.quadratic = row.gb_degree <= 2;
    row.pierced01 = recover_piercing_sequence(row.code, 1, true).has_value();
    ++report.table[row.quadratic][row.pierced01];
    if (!row.agrees()) ++report.disagreements;
    report.rows.push_back(std::move(row));
  }
  return report;
}

const std::vector<ListedBinomial>& published_counterexample_basis() {
  static const std::vector<ListedBinomial> basis = {
      {"00011 11101", "00111 11001"},
      {"00011 00101", "00111 00001"},
      {"00011 10101", "00001 10111"},
      {"11101 00111", "01111 10101"},
      {"11101 10001", "11001 10101"},
      {"11101 00001", "11001 00101"},
      {"11101 10111", "11111 10101"},
      {"11111 00111", "01111 10111"},
      {"11111 10001", "11001 10111"},
      {"11111 00001", "00111 11001"},
      {"11111 00101", "01111 10101"},
      {"01111 10001", "00111 11001"},
      {"01111 00001 10101", "00111 11001 00101"},
      {"01111 00001 10111", "00111^2 11001"},
      {"00111 10001", "00001 10111"},
      {"00111 10101", "00101 10111"},
      {"10001 00101", "00001 10101"},
  };
  return basis;
}

namespace {

// Bit names: positions 1..4 are neurons 1..4, position 5 is the dummy.
Codeword codeword_of_bits(const std::string& bits) {
  Codeword c;
  for (std::size_t p = 0; p < bits.size(); ++p) {
    if (bits[p] != '1') continue;
    Neuron i = p + 1 == bits.size() ? kDummyNeuron : static_cast<Neuron>(p + 1);
    c = c.with(i);
  }
  return c;
}

Monomial parse_listed(const ToricIdeal& ideal, const std::string& text) {
  std::vector<Codeword> factors;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) {
    int power = 1;
    if (auto hat = tok.find('^'); hat != std::string::npos) {
      power = std::stoi(tok.substr(hat + 1));
      tok.resize(hat);
    }
    for (int p = 0; p < power; ++p) factors.push_back(codeword_of_bits(tok));
  }
  return ideal.monomial(factors);
}

}  // namespace

CounterexampleReport analyze_counterexample(const BuchbergerLimits& limits) {
  CounterexampleReport r;
  r.code = NeuralCode::parse(4, "134 13 3 ∅ 1 12 34 234 1234 123 4");
  r.homogenized = homogenize_with_dummy(r.code);
  for (const char* s : {"134", "13", "3", "", "1", "12", "34", "234", "1234", "123", "4"})
    r.listing.push_back(Codeword::parse(s).with(kDummyNeuron));

  ToricIdeal ideal(r.homogenized, limits);
  std::vector<Codeword> reversed(r.listing.rbegin(), r.listing.rend());
  auto ascending = ideal.lex_from_listing(r.listing);
  auto descending = ideal.lex_from_listing(reversed);

  const auto& published = published_counterexample_basis();
  r.published_size = published.size();

  struct Attempt {
    std::vector<Binomial> basis;
    std::set<Binomial> normalized_published;
    std::size_t lead_agreements = 0;
  };
  auto attempt = [&](const MonomialOrder& order) {
    Attempt a;
    a.basis = ideal.groebner_basis(order);
    for (const ListedBinomial& lb : published) {
      Monomial lead = parse_listed(ideal, lb.lead);
      Monomial trail = parse_listed(ideal, lb.trail);
      if (auto b = make_binomial(lead, trail, order)) {
        if (b->lead == lead) ++a.lead_agreements;
        a.normalized_published.insert(*b);
      }
    }
    return a;
  };
  auto matches = [](const Attempt& a) {
    return std::set<Binomial>(a.basis.begin(), a.basis.end()) == a.normalized_published;
  };

  Attempt asc = attempt(ascending);
  Attempt chosen = asc;
  r.direction = "ascending";
  const MonomialOrder* order = &ascending;
  Attempt desc = attempt(descending);
  if (!matches(asc) && matches(desc)) {
    chosen = desc;
    r.direction = "descending";
    order = &descending;
  }
  auto other_degree = [](const std::vector<Binomial>& gb) {
    int d = 0;
    for (const Binomial& b : gb) d = std::max(d, b.degree());
    return d;
  };
  r.other_direction_max_degree = other_degree(order == &ascending ? desc.basis : asc.basis);

  r.basis = chosen.basis;
  r.lead_agreements = chosen.lead_agreements;
  r.matches_published = matches(chosen);
  for (const Binomial& b : r.basis) {
    std::string s = ideal.format(b, VariableNaming::bits);
    r.formatted.push_back(s);
    r.max_degree = std::max(r.max_degree, b.degree());
    if (b.degree() == 3) r.cubics.push_back(s);
    if (!chosen.normalized_published.count(b)) r.extra.push_back(s);
  }
  std::set<Binomial> ours(r.basis.begin(), r.basis.end());
  for (const Binomial& b : chosen.normalized_published)
    if (!ours.count(b)) r.missing.push_back(ideal.format(b, VariableNaming::bits));
  return r;
}

}  // namespace ipc
