#include "ipc/hyperplane.hpp"

#include "ipc/errors.hpp"
#include "ipc/lp.hpp"

namespace ipc {

Rational Halfspace::signed_slack(const RVector& x) const {
  Rational s = dot(normal, x) - offset;
  return upper ? s : Rational(-s);
}

namespace {

constexpr unsigned kMaxHalvings = 200;

// Affine barycentric functionals of a simplex: coords = inv * [x; 1].
struct Barycentric {
  RMatrix inv;

  static std::optional<Barycentric> of(const std::vector<RVector>& vertices, int dim) {
    const std::size_t d = static_cast<std::size_t>(dim);
    if (vertices.size() != d + 1) return std::nullopt;
    RMatrix m(d + 1, RVector(d + 1));
    for (std::size_t j = 0; j <= d; ++j) {
      if (vertices[j].size() != d) return std::nullopt;
      for (std::size_t k = 0; k < d; ++k) m[k][j] = vertices[j][k];
      m[d][j] = 1;
    }
    auto inv = inverse(m);
    if (!inv) return std::nullopt;
    return Barycentric{std::move(*inv)};
  }

  std::size_t dim() const { return inv.size() - 1; }

  RVector coords(const RVector& x) const {
    RVector out(inv.size());
    for (std::size_t j = 0; j < inv.size(); ++j) {
      Rational s = inv[j].back();
      for (std::size_t k = 0; k < x.size(); ++k) s += inv[j][k] * x[k];
      out[j] = s;
    }
    return out;
  }

  bool interior(const RVector& x) const {
    for (const auto& c : coords(x))
      if (sgn(c) <= 0) return false;
    return true;
  }

  RVector gradient(std::size_t j) const { return RVector(inv[j].begin(), inv[j].end() - 1); }
};

Barycentric barycentric_or_throw(const HyperplaneRealization& r) {
  auto b = Barycentric::of(r.bound, r.dim);
  if (!b) throw NumericFailure("bounding polytope is not a full-dimensional simplex");
  return *b;
}

std::optional<Codeword> classify_with(const std::vector<Halfspace>& hs, const RVector& x) {
  Codeword c;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    int s = sgn(hs[i].signed_slack(x));
    if (s == 0) return std::nullopt;
    if (s > 0) c = c.with(static_cast<Neuron>(i + 1));
  }
  return c;
}

RVector lifted(const RVector& x, Rational h) {
  RVector y(x);
  y.push_back(std::move(h));
  return y;
}

// Interior point of the open region {λ on hyperplanes, σ inside, τ outside}
// inside the bound, maximizing the smallest slack.
RVector find_piercing_point(const HyperplaneRealization& r, const Barycentric& bary,
                            const PiercingStep& step) {
  const std::size_t d = static_cast<std::size_t>(r.dim);
  LinearProgram lp;
  lp.variables = d + 1;  // x, t
  RVector obj(d + 1, Rational(0));
  obj[d] = 1;
  lp.objective = obj;
  for (std::size_t i = 0; i < r.halfspaces.size(); ++i) {
    const Halfspace& h = r.halfspaces[i];
    const Neuron label = static_cast<Neuron>(i + 1);
    // g(x) = o (n·x - b)
    RVector g(d + 1, Rational(0));
    for (std::size_t k = 0; k < d; ++k) g[k] = h.upper ? h.normal[k] : Rational(-h.normal[k]);
    Rational g0 = h.upper ? Rational(-h.offset) : h.offset;
    if (step.lambda.contains(label)) {
      lp.a_eq.push_back(RVector(g.begin(), g.end()));
      lp.b_eq.push_back(-g0);
      continue;
    }
    // sigma: g(x) >= t  <=>  -g·x + t <= g0 ; tau: -g(x) >= t  <=>  g·x + t <= -g0
    const bool on = step.sigma.contains(label);
    RVector row(d + 1);
    for (std::size_t k = 0; k < d; ++k) row[k] = on ? Rational(-g[k]) : g[k];
    row[d] = 1;
    lp.a_ub.push_back(std::move(row));
    lp.b_ub.push_back(on ? g0 : Rational(-g0));
  }
  for (std::size_t j = 0; j <= d; ++j) {
    // coord_j(x) >= t
    RVector row(d + 1);
    for (std::size_t k = 0; k < d; ++k) row[k] = -bary.inv[j][k];
    row[d] = 1;
    lp.a_ub.push_back(std::move(row));
    lp.b_ub.push_back(bary.inv[j][d]);
  }
  RVector cap(d + 1, Rational(0));
  cap[d] = 1;
  lp.a_ub.push_back(cap);
  lp.b_ub.push_back(1);

  LpResult res = solve_lp(lp);
  if (res.status != LpStatus::optimal || sgn(res.value) <= 0)
    throw NumericFailure("no interior piercing point for the region of step " +
                         step.sigma.to_string() + "|" + step.lambda.to_string());
  res.x.pop_back();
  return res.x;
}

struct Perturbation {
  RVector p_prime;
  Rational a;
};

bool perturbation_ok(const HyperplaneRealization& r, const Barycentric& bary,
                     const PiercingStep& step, const RVector& p, const RVector& pp,
                     const Rational& a) {
  if (!classify_with(r.halfspaces, pp) || !bary.interior(pp)) return false;
  // The scaled copy p' + a(Δ - p') must sit strictly on the correct side of
  // every hyperplane outside lambda; checking its vertices suffices.
  for (const RVector& v : r.bound) {
    RVector s = pp + a * (v - pp);
    for (std::size_t i = 0; i < r.halfspaces.size(); ++i) {
      const Neuron label = static_cast<Neuron>(i + 1);
      if (step.lambda.contains(label)) continue;
      int sg = sgn(r.halfspaces[i].signed_slack(s));
      if (step.sigma.contains(label) ? sg <= 0 : sg >= 0) return false;
    }
  }
  // p must be interior to the scaled copy.
  return bary.interior(pp + (1 / a) * (p - pp));
}

Perturbation perturb(const HyperplaneRealization& r, const Barycentric& bary,
                     const PiercingStep& step, const RVector& p, unsigned extra) {
  const std::size_t d = static_cast<std::size_t>(r.dim);
  RVector u(d, Rational(0));
  for (Neuron i : step.lambda.neurons()) {
    const Halfspace& h = r.halfspaces[static_cast<std::size_t>(i - 1)];
    u = u + (h.upper ? Rational(1) : Rational(-1)) * h.normal;
  }
  auto valid = [&](unsigned t) {
    Rational a = inverse_power_of_two(t);
    return perturbation_ok(r, bary, step, p, p + (a * a) * u, a);
  };
  auto next_valid = [&](unsigned t) {
    while (!valid(t))
      if (++t > kMaxHalvings) throw NumericFailure("no valid scale factor for the cutting plane");
    return t;
  };
  unsigned t = next_valid(1);
  for (unsigned h = 0; h < extra; ++h) t = next_valid(t + 1);
  Rational a = inverse_power_of_two(t);
  return {p + (a * a) * u, a};
}

bool witness_ok(const std::vector<Halfspace>& hs, const Barycentric& bary, const RVector& x,
                Codeword expected) {
  auto c = classify_with(hs, x);
  return c && *c == expected && bary.interior(x);
}

}  // namespace

HyperplaneRealization build_hyperplane_realization(const PiercingSequence& seq,
                                                   const HyperplaneOptions& options) {
  HyperplaneRealization r;
  r.dim = 1;
  r.bound = {RVector{Rational(0)}, RVector{Rational(1)}};
  r.halfspaces.push_back(Halfspace{RVector{Rational(1)}, Rational(1, 2), true});
  r.witnesses.emplace(Codeword{}, RVector{Rational(1, 4)});
  r.witnesses.emplace(Codeword{1}, RVector{Rational(3, 4)});

  NeuralCode code = base_code();
  for (const PiercingStep& step : seq.steps) {
    code = pierce(code, step);  // validates the step
    const Barycentric bary = barycentric_or_throw(r);
    const RVector p = find_piercing_point(r, bary, step);
    const Perturbation pert = perturb(r, bary, step, p, options.extra_halvings);
    const Rational height = 1 - pert.a;
    const Neuron fresh = static_cast<Neuron>(r.dim + 1);

    HyperplaneRealization next;
    next.dim = r.dim + 1;
    for (const Halfspace& h : r.halfspaces) next.halfspaces.push_back(Halfspace{lifted(h.normal, 0), h.offset, h.upper});
    RVector up(static_cast<std::size_t>(next.dim), Rational(0));
    up.back() = 1;
    next.halfspaces.push_back(Halfspace{up, height, true});
    for (const RVector& v : r.bound) next.bound.push_back(lifted(v, 0));
    RVector apex = lifted(pert.p_prime, 1);
    next.bound.push_back(apex);
    const Barycentric next_bary = barycentric_or_throw(next);

    // Old witnesses slide up toward the apex.
    for (const auto& [c, w] : r.witnesses) {
      bool placed = false;
      for (unsigned t = 1; t <= kMaxHalvings && !placed; ++t) {
        Rational h = inverse_power_of_two(t);
        RVector x = lifted((1 - h) * w + h * pert.p_prime, h);
        if (witness_ok(next.halfspaces, next_bary, x, c)) {
          next.witnesses.emplace(c, std::move(x));
          placed = true;
        }
      }
      if (!placed) throw NumericFailure("could not lift the witness of " + c.to_string());
    }

    // New witnesses just above the cutting plane, near p in each orthant.
    const auto lam = step.lambda.neurons();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << lam.size()); ++mask) {
      Codeword nu;
      RMatrix rows;
      RVector rhs;
      for (std::size_t q = 0; q < lam.size(); ++q) {
        const Halfspace& h = r.halfspaces[static_cast<std::size_t>(lam[q] - 1)];
        const bool in = mask >> q & 1;
        if (in) nu = nu.with(lam[q]);
        rows.push_back(h.normal);
        Rational target = in ? 1 : -1;
        rhs.push_back(h.upper ? target : Rational(-target));
      }
      auto dir = solve(rows, rhs, static_cast<std::size_t>(r.dim));
      if (!dir) throw NumericFailure("hyperplanes through the piercing point are dependent");
      const Codeword target = (step.sigma | nu).with(fresh);
      bool placed = false;
      for (unsigned t = 1; t <= kMaxHalvings && !placed; ++t) {
        Rational e = inverse_power_of_two(t);
        RVector x = lifted(p + e * *dir, height + e * pert.a);
        if (witness_ok(next.halfspaces, next_bary, x, target)) {
          next.witnesses.emplace(target, std::move(x));
          placed = true;
        }
      }
      if (!placed) throw NumericFailure("could not place the witness of " + target.to_string());
    }

    next.trace = std::move(r.trace);
    next.trace.push_back(HyperplaneStep{p, pert.p_prime, std::move(apex), pert.a, height});
    r = std::move(next);
  }
  return r;
}

std::optional<Codeword> classify(const HyperplaneRealization& r, const RVector& x) {
  return classify_with(r.halfspaces, x);
}

std::optional<RVector> barycentric(const HyperplaneRealization& r, const RVector& x) {
  auto b = Barycentric::of(r.bound, r.dim);
  if (!b) return std::nullopt;
  return b->coords(x);
}

bool bound_is_simplex(const HyperplaneRealization& r) {
  return Barycentric::of(r.bound, r.dim).has_value();
}

HyperplaneVerification verify_hyperplane_realization(const HyperplaneRealization& r,
                                                     const NeuralCode& expected,
                                                     FeasibilityMethod method) {
  HyperplaneVerification out;
  const std::size_t n = r.halfspaces.size();
  if (static_cast<std::size_t>(expected.neurons()) != n) {
    out.reason = "expected code has " + std::to_string(expected.neurons()) + " neurons, arrangement has " +
                 std::to_string(n) + " halfspaces";
    return out;
  }
  auto bary = Barycentric::of(r.bound, r.dim);
  if (!bary) {
    out.reason = "bound is not a full-dimensional simplex";
    return out;
  }
  for (const Halfspace& h : r.halfspaces) {
    if (h.normal.size() != static_cast<std::size_t>(r.dim) || sgn(max_abs(h.normal)) == 0) {
      out.reason = "halfspace with a zero or misshapen normal";
      return out;
    }
  }
  const std::size_t d = static_cast<std::size_t>(r.dim);

  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    StrictSystem sys;
    sys.variables = d;
    for (std::size_t i = 0; i < n; ++i) {
      const Halfspace& h = r.halfspaces[i];
      // inside: o(n·x - b) > 0  <=>  -o n·x < -o b
      const bool in = s >> i & 1;
      const bool flip = in == h.upper;
      sys.add(flip ? Rational(-1) * h.normal : h.normal, flip ? Rational(-h.offset) : h.offset);
    }
    for (std::size_t j = 0; j <= d; ++j) sys.add(Rational(-1) * bary->gradient(j), bary->inv[j][d]);

    bool feasible = false;
    if (method == FeasibilityMethod::fourier_motzkin) {
      feasible = strictly_feasible_fm(sys);
    } else {
      feasible = strictly_feasible_point(sys).has_value();
      if (method == FeasibilityMethod::both && feasible != strictly_feasible_fm(sys)) {
        out.reason = "LP and Fourier-Motzkin disagree";
        out.offending = Codeword(s << 1);
        return out;
      }
    }
    ++out.regions_checked;
    const Codeword c(s << 1);
    if (feasible != expected.contains(c)) {
      out.reason = feasible ? "region realized but not in the code" : "codeword has an empty region";
      out.offending = c;
      return out;
    }
  }

  for (Codeword c : expected.words()) {
    auto it = r.witnesses.find(c);
    if (it == r.witnesses.end()) {
      out.reason = "missing witness";
      out.offending = c;
      return out;
    }
  }
  for (const auto& [c, w] : r.witnesses) {
    if (w.size() != d || !witness_ok(r.halfspaces, *bary, w, c) || !expected.contains(c)) {
      out.reason = "witness does not certify its codeword";
      out.offending = c;
      return out;
    }
  }
  out.ok = true;
  return out;
}

Rational nondegeneracy_margin(const HyperplaneRealization& r) {
  const Barycentric bary = barycentric_or_throw(r);
  std::optional<Rational> best;
  auto take = [&best](Rational v) {
    if (!best || v < *best) best = std::move(v);
  };
  for (const auto& [c, w] : r.witnesses) {
    for (const Halfspace& h : r.halfspaces) take(abs(h.signed_slack(w)) / max_abs(h.normal));
    RVector coords = bary.coords(w);
    for (std::size_t j = 0; j < coords.size(); ++j) {
      Rational g = max_abs(bary.gradient(j));
      if (sgn(g) != 0) take(coords[j] / g);
    }
  }
  return best.value_or(Rational(0));
}

}  // namespace ipc
