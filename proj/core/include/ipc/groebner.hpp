#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ipc/monomial.hpp"

namespace ipc {

struct BuchbergerLimits {
  std::size_t max_pairs = 2'000'000;
  int max_degree = 64;
};

struct BuchbergerStats {
  std::size_t pairs_formed = 0;
  std::size_t pairs_reduced = 0;
  std::size_t skipped_coprime = 0;
  std::size_t skipped_chain = 0;
  std::size_t zero_reductions = 0;
};

/// a - b oriented so the larger monomial leads; nullopt when a == b.
std::optional<Binomial> make_binomial(const Monomial& a, const Monomial& b,
                                      const MonomialOrder& order);

/// Normal form of a monomial: repeatedly replace lead(g)·u by trail(g)·u.
Monomial normal_form(Monomial m, std::span<const Binomial> basis, const MonomialOrder& order);

/// Fully reduces both terms; nullopt when the binomial reduces to zero.
std::optional<Binomial> reduce(const Binomial& b, std::span<const Binomial> basis,
                               const MonomialOrder& order);

/// (L/lead f)·trail f - (L/lead g)·trail g with L = lcm of the leads.
std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g,
                                   const MonomialOrder& order);

/// Reduced Gröbner basis of the ideal generated by pure difference binomials.
/// Output is sorted by leading term (ascending in `order`). Throws
/// ResourceCapExceeded when a limit is hit.
std::vector<Binomial> groebner_basis(std::span<const Binomial> generators,
                                     const MonomialOrder& order,
                                     const BuchbergerLimits& limits = {},
                                     BuchbergerStats* stats = nullptr);

/// Post-hoc certificate: every S-binomial of the basis reduces to zero.
bool satisfies_buchberger_criterion(std::span<const Binomial> basis, const MonomialOrder& order);

/// Minimal and tail-reduced, with each lead the larger term.
bool is_reduced_basis(std::span<const Binomial> basis, const MonomialOrder& order);

}  // namespace ipc
