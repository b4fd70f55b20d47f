#include "ipc/ball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "ipc/errors.hpp"

namespace ipc {

std::optional<SphereIntersection> intersect_spheres(const std::vector<Ball>& balls) {
  if (balls.empty()) throw InvalidInput("intersect_spheres: no spheres");
  const Eigen::Index dim = balls[0].center.size();
  const Ball& b0 = balls[0];
  const Eigen::Index m = static_cast<Eigen::Index>(balls.size()) - 1;

  SphereIntersection s;
  if (m == 0) {
    s.center = b0.center;
    s.radius = b0.radius;
    s.basis = Eigen::MatrixXd::Identity(dim, dim);
    return s;
  }
  // |x - c_j|^2 - r_j^2 = |x - c_0|^2 - r_0^2 is linear in x.
  Eigen::MatrixXd a(m, dim);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const Ball& bj = balls[static_cast<std::size_t>(j + 1)];
    a.row(j) = 2.0 * (bj.center - b0.center).transpose();
    rhs(j) = b0.radius * b0.radius - bj.radius * bj.radius + bj.center.squaredNorm() - b0.center.squaredNorm();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const double scale = std::max(1.0, svd.singularValues()(0));
  svd.setThreshold(1e-12 * scale);
  if (svd.rank() < m) return std::nullopt;  // dependent radical planes
  Eigen::VectorXd x0 = svd.solve(rhs);
  Eigen::MatrixXd null = svd.matrixV().rightCols(dim - m);
  Eigen::VectorXd centre = x0 + null * (null.transpose() * (b0.center - x0));
  const double rho2 = b0.radius * b0.radius - (centre - b0.center).squaredNorm();
  if (!(rho2 > 0) || null.cols() == 0) return std::nullopt;
  s.center = centre;
  s.radius = std::sqrt(rho2);
  s.basis = null;
  return s;
}

Codeword classify(const BallRealization& r, const Eigen::VectorXd& x, double* margin) {
  Codeword c;
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.balls.size(); ++i) {
    double d = (x - r.balls[i].center).norm() - r.balls[i].radius;
    if (d < 0) c = c.with(static_cast<Neuron>(i + 1));
    m = std::min(m, std::abs(d));
  }
  if (margin) *margin = m;
  return c;
}

namespace {

// Room around a candidate piercing point: distance to every sphere not in
// lambda (signed so that the wrong side is negative) and to every witness.
double room(const BallRealization& r, const PiercingStep& step, const Eigen::VectorXd& p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.balls.size(); ++i) {
    const Neuron label = static_cast<Neuron>(i + 1);
    if (step.lambda.contains(label)) continue;
    double d = (p - r.balls[i].center).norm() - r.balls[i].radius;
    best = std::min(best, step.sigma.contains(label) ? -d : d);
  }
  for (const auto& [c, w] : r.witnesses) best = std::min(best, (p - w).norm());
  return best;
}

}  // namespace

BallRealization build_ball_realization(const PiercingSequence& seq, const BallOptions& options) {
  BallRealization r;
  r.dim = options.dim > 0 ? options.dim : std::max(1, seq.max_degree() + 1);
  r.tolerance = options.tolerance;
  if (seq.max_degree() + 1 > r.dim)
    throw InvalidInput("dimension " + std::to_string(r.dim) + " is below k + 1 = " +
                       std::to_string(seq.max_degree() + 1));
  const Eigen::Index dim = r.dim;
  r.balls.push_back(Ball{Eigen::VectorXd::Zero(dim), 1.0});
  Eigen::VectorXd outside = Eigen::VectorXd::Zero(dim);
  outside(0) = 2.0;
  r.witnesses.emplace(Codeword{}, outside);
  r.witnesses.emplace(Codeword{1}, Eigen::VectorXd::Zero(dim));

  NeuralCode code = base_code();
  std::mt19937_64 rng(options.seed);
  for (const PiercingStep& step : seq.steps) {
    code = pierce(code, step);
    const Neuron fresh = static_cast<Neuron>(r.balls.size() + 1);
    const auto lam = step.lambda.neurons();

    BallStep bs;
    if (lam.empty()) {
      const Eigen::VectorXd& w = r.witnesses.at(step.sigma);
      double m = 0;
      classify(r, w, &m);
      bs.p = w;
      bs.p(0) += m / 2;
    } else {
      std::vector<Ball> spheres;
      for (Neuron i : lam) spheres.push_back(r.balls[static_cast<std::size_t>(i - 1)]);
      auto s = intersect_spheres(spheres);
      if (!s) throw NumericFailure("spheres of " + step.lambda.to_string() + " do not intersect");
      bs.sphere_dim = s->sphere_dim();
      std::normal_distribution<double> normal;
      double best = -std::numeric_limits<double>::infinity();
      for (unsigned k = 0; k < options.directions; ++k) {
        Eigen::VectorXd u(s->basis.cols());
        for (Eigen::Index j = 0; j < u.size(); ++j) u(j) = normal(rng);
        if (u.norm() == 0) continue;
        Eigen::VectorXd p = s->center + s->radius * (s->basis * u.normalized());
        double score = room(r, step, p);
        if (score > best) {
          best = score;
          bs.p = p;
        }
      }
      for (Neuron i : lam) {
        const Ball& b = r.balls[static_cast<std::size_t>(i - 1)];
        if (std::abs((bs.p - b.center).norm() - b.radius) > options.tolerance * std::max(1.0, b.radius))
          throw NumericFailure("piercing point is off the sphere of neuron " + std::to_string(i));
      }
    }
    bs.room = room(r, step, bs.p);
    if (!(bs.room > 10 * options.tolerance))
      throw NumericFailure("no room for a piercing point at step " + std::to_string(fresh) +
                           " (best " + std::to_string(bs.room) + ")");
    double smallest = std::numeric_limits<double>::infinity();
    for (const Ball& b : r.balls) smallest = std::min(smallest, b.radius);
    bs.radius = 0.5 * std::min(bs.room, smallest);
    r.balls.push_back(Ball{bs.p, bs.radius});

    // Witnesses near p, one per orthant of the lambda spheres.
    Eigen::MatrixXd normals(static_cast<Eigen::Index>(lam.size()), dim);
    for (std::size_t q = 0; q < lam.size(); ++q) {
      const Ball& b = r.balls[static_cast<std::size_t>(lam[q] - 1)];
      normals.row(static_cast<Eigen::Index>(q)) = ((bs.p - b.center) / b.radius).transpose();
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << lam.size()); ++mask) {
      Codeword nu;
      Eigen::VectorXd target(static_cast<Eigen::Index>(lam.size()));
      for (std::size_t q = 0; q < lam.size(); ++q) {
        const bool in = mask >> q & 1;
        if (in) nu = nu.with(lam[q]);
        target(static_cast<Eigen::Index>(q)) = in ? -1.0 : 1.0;
      }
      Eigen::VectorXd dir = Eigen::VectorXd::Zero(dim);
      if (!lam.empty()) dir = normals.completeOrthogonalDecomposition().solve(target);
      const Codeword want = (step.sigma | nu).with(fresh);
      double eps = dir.norm() > 0 ? bs.radius / (2 * dir.norm()) : 0;
      bool placed = false;
      for (int t = 0; t < 60 && !placed; ++t, eps /= 2) {
        Eigen::VectorXd q = bs.p + eps * dir;
        double margin = 0;
        if (classify(r, q, &margin) == want && margin > 10 * options.tolerance) {
          r.witnesses.emplace(want, q);
          placed = true;
        }
      }
      if (!placed) throw NumericFailure("could not place the witness of " + want.to_string());
    }
    r.trace.push_back(std::move(bs));
  }
  return r;
}

namespace {

double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base, f = inv, x = 0;
  while (i > 0) {
    x += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return x;
}

unsigned nth_prime(int k) {
  static const unsigned primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  if (k < 0 || k >= 16) throw InvalidInput("sampling supports at most 16 dimensions");
  return primes[k];
}

}  // namespace

BallVerification verify_ball_realization(const BallRealization& r, const NeuralCode& expected,
                                         std::size_t samples, std::uint64_t seed) {
  BallVerification v;
  v.witness_margin = std::numeric_limits<double>::infinity();
  v.witnesses_ok = true;
  auto fail = [&v](std::string why, Codeword c) {
    if (!v.witnesses_ok) return;
    v.witnesses_ok = false;
    v.witness_failure = std::move(why);
    v.witness_offending = c;
  };
  if (static_cast<std::size_t>(expected.neurons()) != r.balls.size())
    fail("neuron count does not match the number of balls", Codeword{});
  for (Codeword c : expected.words()) {
    auto it = r.witnesses.find(c);
    if (it == r.witnesses.end()) {
      fail("missing witness", c);
      continue;
    }
    double margin = 0;
    Codeword got = classify(r, it->second, &margin);
    v.witness_margin = std::min(v.witness_margin, margin);
    if (got != c) fail("witness lands in " + got.to_string(), c);
    else if (!(margin > r.tolerance)) fail("witness margin below tolerance", c);
  }
  for (const auto& [c, w] : r.witnesses)
    if (!expected.contains(c)) fail("witness for a codeword outside the code", c);
  if (expected.empty()) v.witness_margin = 0;

  // Bounding box of all balls, padded.
  const Eigen::Index dim = r.dim;
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(dim, std::numeric_limits<double>::infinity());
  Eigen::VectorXd hi = -lo;
  for (const Ball& b : r.balls) {
    lo = lo.cwiseMin(b.center - Eigen::VectorXd::Constant(dim, b.radius));
    hi = hi.cwiseMax(b.center + Eigen::VectorXd::Constant(dim, b.radius));
  }
  if (r.balls.empty()) {
    lo.setConstant(-1);
    hi.setConstant(1);
  }
  Eigen::VectorXd pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXd shift(dim);
  for (Eigen::Index j = 0; j < dim; ++j) shift(j) = unit(rng);

  std::set<Codeword> hit;
  Eigen::VectorXd x(dim);
  for (std::size_t s = 0; s < samples; ++s) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      double u = radical_inverse(s + 1, nth_prime(static_cast<int>(j))) + shift(j);
      u -= std::floor(u);
      x(j) = lo(j) + u * (hi(j) - lo(j));
    }
    Codeword c = classify(r, x);
    hit.insert(c);
    if (!expected.contains(c)) {
      if (!v.extra_codeword) v.extra_codeword = c;
      ++v.extra_points;
    }
  }
  v.samples = samples;
  v.codewords_hit = hit.size();
  v.sampling_ok = v.extra_points == 0;
  return v;
}

std::string to_svg(const BallRealization& r) {
  if (r.dim != 2) throw InvalidInput("SVG export needs a 2-D realization");
  double x0 = std::numeric_limits<double>::infinity(), y0 = x0, x1 = -x0, y1 = -x0;
  for (const Ball& b : r.balls) {
    x0 = std::min(x0, b.center(0) - b.radius);
    y0 = std::min(y0, b.center(1) - b.radius);
    x1 = std::max(x1, b.center(0) + b.radius);
    y1 = std::max(y1, b.center(1) + b.radius);
  }
  for (const auto& [c, w] : r.witnesses) {
    x0 = std::min(x0, w(0));
    y0 = std::min(y0, w(1));
    x1 = std::max(x1, w(0));
    y1 = std::max(y1, w(1));
  }
  const double span = std::max(x1 - x0, y1 - y0);
  const double pad = 0.05 * span;
  const double px = 600.0 / (span + 2 * pad);
  auto X = [&](double x) { return (x - x0 + pad) * px; };
  auto Y = [&](double y) { return (y1 - y + pad) * px; };  // flip so y points up

  std::ostringstream out;
  out.precision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << X(x1) + pad * px << "\" height=\""
      << Y(y0) + pad * px << "\">\n";
  for (std::size_t i = 0; i < r.balls.size(); ++i) {
    const Ball& b = r.balls[i];
    out << "  <circle cx=\"" << X(b.center(0)) << "\" cy=\"" << Y(b.center(1)) << "\" r=\"" << b.radius * px
        << "\" fill=\"none\" stroke=\"black\"><title>U" << i + 1 << "</title></circle>\n";
  }
  for (const auto& [c, w] : r.witnesses) {
    std::string label = c.empty() ? "∅" : c.to_string();
    out << "  <circle cx=\"" << X(w(0)) << "\" cy=\"" << Y(w(1)) << "\" r=\"2\" fill=\"red\"/>\n"
        << "  <text x=\"" << X(w(0)) + 3 << "\" y=\"" << Y(w(1)) - 3 << "\" font-size=\"10\">" << label
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ipc
