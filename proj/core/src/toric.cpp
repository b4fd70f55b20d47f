#include "ipc/toric.hpp"

#include <algorithm>
#include <numeric>

#include "ipc/errors.hpp"

namespace ipc {

namespace {

std::vector<Codeword> nonempty_sorted(const NeuralCode& code) {
  std::vector<Codeword> vars;
  for (Codeword c : sort_codewords(code))
    if (!c.empty()) vars.push_back(c);
  return vars;
}

// Significance list for lex: the largest variable (last index) first.
std::vector<std::size_t> descending_indices(std::size_t n) {
  std::vector<std::size_t> seq(n);
  std::iota(seq.rbegin(), seq.rend(), std::size_t{0});
  return seq;
}

std::string variable_name(Codeword c, const NeuralCode& code, VariableNaming naming) {
  if (naming == VariableNaming::digits) return c.to_string();
  std::string s;
  for (Neuron i = 1; i <= code.neurons(); ++i) s += c.contains(i) ? '1' : '0';
  if (code.has_dummy()) s += c.contains(kDummyNeuron) ? '1' : '0';
  return s;
}

}  // namespace

ToricIdeal::ToricIdeal(NeuralCode code, BuchbergerLimits limits)
    : code_(std::move(code)), limits_(limits), vars_(nonempty_sorted(code_)) {
  if (!vars_.empty()) generators_ = toric_generators(code_, limits_);
  std::lock_guard lock(cache_mutex_);
  cache_.emplace(codeword_lex().describe(), generators_);
}

std::size_t ToricIdeal::variable_index(Codeword c) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), c, CodewordLess{});
  if (c.empty() || it == vars_.end() || *it != c)
    throw InvalidInput("no codeword variable y_" + c.to_string());
  return static_cast<std::size_t>(it - vars_.begin());
}

Monomial ToricIdeal::monomial(std::initializer_list<Codeword> factors) const {
  return monomial(std::span<const Codeword>(factors.begin(), factors.size()));
}

Monomial ToricIdeal::monomial(std::span<const Codeword> factors) const {
  std::vector<int> e(vars_.size(), 0);
  for (Codeword c : factors) ++e[variable_index(c)];
  return Monomial(std::move(e));
}

Monomial ToricIdeal::image(const Monomial& y) const { return monomial_map_image(*this, y); }

const std::vector<Binomial>& ToricIdeal::groebner_basis(const MonomialOrder& order) const {
  const std::string key = order.describe();
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  auto basis = ipc::groebner_basis(generators_, order, limits_);
  std::lock_guard lock(cache_mutex_);
  return cache_.emplace(key, std::move(basis)).first->second;
}

MonomialOrder ToricIdeal::codeword_lex() const {
  return MonomialOrder::lex(descending_indices(vars_.size()));
}

MonomialOrder ToricIdeal::lex_from_listing(std::span<const Codeword> ascending) const {
  std::vector<std::size_t> seq;
  std::vector<bool> seen(vars_.size(), false);
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) {
    if (it->empty() && !code_.has_dummy()) continue;  // ∅ carries no variable
    std::size_t v = variable_index(*it);
    if (seen[v]) throw InvalidInput("listing repeats y_" + it->to_string());
    seen[v] = true;
    seq.push_back(v);
  }
  if (seq.size() != vars_.size()) throw InvalidInput("listing does not cover every variable");
  return MonomialOrder::lex(std::move(seq));
}

MonomialOrder ToricIdeal::weighted_grevlex(std::span<const std::int64_t> weights) const {
  if (code_.has_dummy()) throw InvalidInput("weighted grevlex listing is defined for plain codes");
  auto listing = grevlex_listing(code_.neurons());
  if (weights.size() != listing.size())
    throw InvalidInput("expected " + std::to_string(listing.size()) + " weights, got " +
                       std::to_string(weights.size()));
  std::vector<std::int64_t> w(vars_.size(), 0);
  std::vector<std::size_t> seq;
  for (std::size_t k = 0; k < listing.size(); ++k) {
    if (!code_.contains(listing[k])) continue;
    std::size_t v = variable_index(listing[k]);
    w[v] = weights[k];
    seq.push_back(v);
  }
  return MonomialOrder::weighted_grevlex(std::move(w), std::move(seq));
}

std::string ToricIdeal::format(const Monomial& m, VariableNaming naming) const {
  if (m.is_one()) return "1";
  // Print factors from the largest codeword variable down.
  std::string s;
  for (std::size_t v = vars_.size(); v-- > 0;) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += "y_{" + variable_name(vars_[v], code_, naming) + "}";
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s;
}

std::string ToricIdeal::format(const Binomial& b, VariableNaming naming) const {
  return format(b.lead, naming) + " - " + format(b.trail, naming);
}

std::vector<Codeword> grevlex_listing(int n) {
  std::vector<Codeword> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) out.emplace_back(m << 1);
  std::sort(out.begin(), out.end(), [](Codeword a, Codeword b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.neurons() < b.neurons();
  });
  return out;
}

Monomial monomial_map_image(const ToricIdeal& ideal, const Monomial& y) {
  if (y.variables() != ideal.variable_count())
    throw InvalidInput("monomial does not live in this codeword ring");
  std::vector<int> x(static_cast<std::size_t>(ideal.code().neurons()) + 1, 0);
  for (std::size_t v = 0; v < y.variables(); ++v) {
    if (y[v] == 0) continue;
    for (Neuron i : ideal.variables()[v].neurons()) x[static_cast<std::size_t>(i)] += y[v];
  }
  return Monomial(std::move(x));
}

std::vector<Binomial> toric_generators(const NeuralCode& code, const BuchbergerLimits& limits) {
  const auto vars = nonempty_sorted(code);
  if (vars.empty()) throw InvalidInput("toric ideal needs at least one nonempty codeword");
  const std::size_t m = vars.size();
  const std::size_t nx = static_cast<std::size_t>(code.neurons()) + 1;  // x_0..x_n
  const std::size_t total = m + nx;

  std::vector<Binomial> gens;
  for (std::size_t v = 0; v < m; ++v) {
    Monomial y = Monomial::variable(total, v);
    std::vector<int> e(total, 0);
    for (Neuron i : vars[v].neurons()) e[m + static_cast<std::size_t>(i)] = 1;
    gens.push_back(Binomial{Monomial(std::move(e)), y});
  }
  std::vector<std::size_t> block(nx);
  std::iota(block.begin(), block.end(), m);
  auto inner = MonomialOrder::lex(descending_indices(m));
  auto elim = MonomialOrder::elimination(block, inner);

  std::vector<Binomial> out;
  for (const Binomial& g : groebner_basis(gens, elim, limits)) {
    bool y_only = true;
    for (std::size_t v = m; v < total && y_only; ++v) y_only = g.lead[v] == 0 && g.trail[v] == 0;
    if (y_only) out.push_back(Binomial{g.lead.truncated(m), g.trail.truncated(m)});
  }
  return out;
}

std::vector<Binomial> reduced_groebner_basis(const ToricIdeal& ideal, const MonomialOrder& order) {
  return ideal.groebner_basis(order);
}

int gb_max_degree(const ToricIdeal& ideal, const MonomialOrder& order) {
  int d = 0;
  for (const Binomial& b : ideal.groebner_basis(order)) d = std::max(d, b.degree());
  return d;
}

bool ideal_contains(const ToricIdeal& ideal, const Binomial& b, const MonomialOrder& order) {
  return ideal_contains(ideal, b.lead, b.trail, order);
}

bool ideal_contains(const ToricIdeal& ideal, const Monomial& a, const Monomial& b,
                    const MonomialOrder& order) {
  if (a.variables() != ideal.variable_count() || b.variables() != ideal.variable_count())
    throw InvalidInput("binomial does not live in this codeword ring");
  const auto& gb = ideal.groebner_basis(order);
  return normal_form(a, gb, order) == normal_form(b, gb, order);
}

bool check_nesting(const NeuralCode& sub, const NeuralCode& sup, const BuchbergerLimits& limits) {
  if (!sub.subset_of(sup)) throw InvalidInput("check_nesting: sub is not a subset of sup");
  ToricIdeal small(sub, limits);
  ToricIdeal large(sup, limits);
  auto order = large.codeword_lex();
  auto embed = [&](const Monomial& m) {
    std::vector<int> e(large.variable_count(), 0);
    for (std::size_t v = 0; v < m.variables(); ++v)
      e[large.variable_index(small.variables()[v])] += m[v];
    return Monomial(std::move(e));
  };
  return std::all_of(small.generators().begin(), small.generators().end(), [&](const Binomial& g) {
    return ideal_contains(large, embed(g.lead), embed(g.trail), order);
  });
}

NeuralCode homogenize_with_dummy(const NeuralCode& code) {
  std::vector<Codeword> words;
  for (Codeword c : code.words()) words.push_back(c.with(kDummyNeuron));
  NeuralCode out(code.neurons(), std::move(words), true);
  out.set_labeled_by_construction(code.labeled_by_construction());
  return out;
}

}  // namespace ipc
