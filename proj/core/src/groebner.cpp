#include "ipc/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ipc/errors.hpp"

namespace ipc {

std::optional<Binomial> make_binomial(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& order) {
  auto c = order.compare(a, b);
  if (c == 0) return std::nullopt;
  if (c > 0) return Binomial{a, b};
  return Binomial{b, a};
}

Monomial normal_form(Monomial m, std::span<const Binomial> basis, const MonomialOrder& /*order*/) {
  // Each rewrite strictly decreases m in the term order, so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Binomial& g : basis) {
      if (g.lead.divides(m)) {
        m = (m / g.lead) * g.trail;
        changed = true;
        break;
      }
    }
  }
  return m;
}

std::optional<Binomial> reduce(const Binomial& b, std::span<const Binomial> basis,
                               const MonomialOrder& order) {
  return make_binomial(normal_form(b.lead, basis, order), normal_form(b.trail, basis, order), order);
}

std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g, const MonomialOrder& order) {
  Monomial l = f.lead.lcm(g.lead);
  return make_binomial((l / f.lead) * f.trail, (l / g.lead) * g.trail, order);
}

namespace {

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const BuchbergerLimits& limits, BuchbergerStats& stats)
      : order_(order), limits_(limits), stats_(stats), queue_(PairLess{this}) {}

  void add_generator(const Binomial& b) {
    if (auto r = reduce(b, basis_, order_)) insert(std::move(*r));
  }

  void run() {
    while (!queue_.empty()) {
      Pair p = *queue_.begin();
      queue_.erase(queue_.begin());
      set_state(p.i, p.j, kDone);
      const Binomial& f = basis_[p.i];
      const Binomial& g = basis_[p.j];
      if (f.lead.coprime(g.lead)) {
        ++stats_.skipped_coprime;
        continue;
      }
      if (chain_criterion(p)) {
        ++stats_.skipped_chain;
        continue;
      }
      ++stats_.pairs_reduced;
      auto s = s_binomial(f, g, order_);
      if (!s) {
        ++stats_.zero_reductions;
        continue;
      }
      auto r = reduce(*s, basis_, order_);
      if (!r) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(std::move(*r));
    }
  }

  std::vector<Binomial> reduced() const {
    // Drop elements whose lead is divisible by another lead.
    std::vector<Binomial> minimal;
    for (std::size_t a = 0; a < basis_.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < basis_.size() && !redundant; ++b) {
        if (a == b || !basis_[b].lead.divides(basis_[a].lead)) continue;
        // Equal leads: keep the earliest.
        redundant = basis_[b].lead != basis_[a].lead || b < a;
      }
      if (!redundant) minimal.push_back(basis_[a]);
    }
    std::vector<Binomial> out;
    out.reserve(minimal.size());
    for (const Binomial& g : minimal) {
      Monomial t = normal_form(g.trail, minimal, order_);
      out.push_back(Binomial{g.lead, std::move(t)});
    }
    std::sort(out.begin(), out.end(), [this](const Binomial& a, const Binomial& b) {
      auto c = order_.compare(a.lead, b.lead);
      if (c != 0) return c < 0;
      return order_.less(a.trail, b.trail);
    });
    return out;
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    int degree;
  };

  struct PairLess {
    const Buchberger* self;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (auto c = self->order_.compare(a.lcm, b.lcm); c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  static constexpr unsigned char kNone = 0;
  static constexpr unsigned char kPending = 1;
  static constexpr unsigned char kDone = 2;

  unsigned char state(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return state_[j][i];
  }
  void set_state(std::size_t i, std::size_t j, unsigned char s) {
    if (i > j) std::swap(i, j);
    state_[j][i] = s;
  }

  // Skip (i, j) if some lead_k divides lcm(lead_i, lead_j) and both (i, k)
  // and (j, k) have already been treated.
  bool chain_criterion(const Pair& p) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis_[k].lead.divides(p.lcm)) continue;
      if (state(p.i, k) != kPending && state(p.j, k) != kPending) return true;
    }
    return false;
  }

  void insert(Binomial b) {
    if (b.degree() > limits_.max_degree)
      throw ResourceCapExceeded("Buchberger: element of degree " + std::to_string(b.degree()) +
                                " exceeds cap " + std::to_string(limits_.max_degree));
    std::size_t j = basis_.size();
    basis_.push_back(std::move(b));
    state_.emplace_back(j + 1, kNone);
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = basis_[i].lead.lcm(basis_[j].lead);
      int d = l.degree();
      queue_.insert(Pair{i, j, std::move(l), d});
      set_state(i, j, kPending);
      if (++stats_.pairs_formed > limits_.max_pairs)
        throw ResourceCapExceeded("Buchberger: more than " + std::to_string(limits_.max_pairs) +
                                  " S-pairs");
    }
  }

  const MonomialOrder& order_;
  const BuchbergerLimits& limits_;
  BuchbergerStats& stats_;
  std::vector<Binomial> basis_;
  std::vector<std::vector<unsigned char>> state_;
  std::set<Pair, PairLess> queue_;
};

}  // namespace

std::vector<Binomial> groebner_basis(std::span<const Binomial> generators,
                                     const MonomialOrder& order, const BuchbergerLimits& limits,
                                     BuchbergerStats* stats) {
  BuchbergerStats local;
  Buchberger bb(order, limits, stats ? *stats : local);
  for (const Binomial& g : generators) {
    // Re-orient in case the generator was built under another order.
    if (auto b = make_binomial(g.lead, g.trail, order)) bb.add_generator(*b);
  }
  bb.run();
  return bb.reduced();
}

bool satisfies_buchberger_criterion(std::span<const Binomial> basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto s = s_binomial(basis[i], basis[j], order);
      if (s && reduce(*s, basis, order)) return false;
    }
  }
  return true;
}

bool is_reduced_basis(std::span<const Binomial> basis, const MonomialOrder& order) {
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (!order.less(basis[a].trail, basis[a].lead)) return false;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a == b) continue;
      if (basis[b].lead.divides(basis[a].lead) || basis[b].lead.divides(basis[a].trail))
        return false;
    }
  }
  return true;
}

}  // namespace ipc
