#include "ipc/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ipc/errors.hpp"

namespace ipc {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  if (std::any_of(exps_.begin(), exps_.end(), [](int e) { return e < 0; }))
    throw InvalidInput("negative exponent");
}

Monomial Monomial::variable(std::size_t variables, std::size_t v, int power) {
  if (v >= variables) throw InvalidInput("variable index out of range");
  Monomial m(variables);
  m.exps_[v] = power;
  return m;
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v] > other.exps_[v]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v] != 0 && other.exps_[v] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial m(*this);
  for (std::size_t v = 0; v < exps_.size(); ++v) m.exps_[v] = std::max(exps_[v], other.exps_[v]);
  return m;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial m(*this);
  for (std::size_t v = 0; v < exps_.size(); ++v) m.exps_[v] = std::min(exps_[v], other.exps_[v]);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m(*this);
  for (std::size_t v = 0; v < exps_.size(); ++v) m.exps_[v] += other.exps_[v];
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m(*this);
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    m.exps_[v] -= other.exps_[v];
    if (m.exps_[v] < 0) throw InvalidInput("monomial division with remainder");
  }
  return m;
}

Monomial Monomial::truncated(std::size_t n) const {
  for (std::size_t v = n; v < exps_.size(); ++v)
    if (exps_[v] != 0) throw InvalidInput("truncating a nonzero exponent");
  return Monomial(std::vector<int>(exps_.begin(), exps_.begin() + static_cast<std::ptrdiff_t>(std::min(n, exps_.size()))));
}

Monomial Monomial::widened(std::size_t n) const {
  Monomial m(*this);
  if (n > m.exps_.size()) m.exps_.resize(n, 0);
  return m;
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> significance) {
  MonomialOrder o;
  o.kind_ = Kind::lex;
  o.sequence_ = std::move(significance);
  return o;
}

MonomialOrder MonomialOrder::weighted_grevlex(std::vector<std::int64_t> weights,
                                              std::vector<std::size_t> sequence) {
  if (std::any_of(weights.begin(), weights.end(), [](std::int64_t w) { return w < 0; }))
    throw InvalidInput("weighted grevlex needs nonnegative weights");
  MonomialOrder o;
  o.kind_ = Kind::weighted_grevlex;
  o.weights_ = std::move(weights);
  o.sequence_ = std::move(sequence);
  if (o.sequence_.empty()) {
    o.sequence_.resize(o.weights_.size());
    std::iota(o.sequence_.begin(), o.sequence_.end(), std::size_t{0});
  }
  return o;
}

MonomialOrder MonomialOrder::elimination(std::vector<std::size_t> block, MonomialOrder inner) {
  MonomialOrder o;
  o.kind_ = Kind::elimination;
  o.sequence_ = std::move(block);
  o.inner_ = std::make_shared<const MonomialOrder>(std::move(inner));
  return o;
}

namespace {

// Graded reverse lex restricted to `vars`: degree first, then the last
// variable of `vars` where they differ decides (smaller exponent is larger).
std::strong_ordering grevlex_on(const Monomial& a, const Monomial& b,
                                const std::vector<std::size_t>& vars) {
  int da = 0;
  int db = 0;
  for (std::size_t v : vars) {
    da += a[v];
    db += b[v];
  }
  if (da != db) return da <=> db;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::lex:
      for (std::size_t v : sequence_)
        if (a[v] != b[v]) return a[v] <=> b[v];
      return std::strong_ordering::equal;
    case Kind::weighted_grevlex: {
      std::int64_t wa = 0;
      std::int64_t wb = 0;
      for (std::size_t v = 0; v < weights_.size(); ++v) {
        wa += weights_[v] * a[v];
        wb += weights_[v] * b[v];
      }
      if (wa != wb) return wa <=> wb;
      return grevlex_on(a, b, sequence_);
    }
    case Kind::elimination:
      if (auto c = grevlex_on(a, b, sequence_); c != 0) return c;
      return inner_->compare(a, b);
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::describe() const {
  std::ostringstream os;
  auto list = [&os](const auto& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  };
  switch (kind_) {
    case Kind::lex:
      os << "lex[";
      list(sequence_);
      os << "]";
      break;
    case Kind::weighted_grevlex:
      os << "wgrevlex[w=";
      list(weights_);
      os << ";seq=";
      list(sequence_);
      os << "]";
      break;
    case Kind::elimination:
      os << "elim[";
      list(sequence_);
      os << "|" << inner_->describe() << "]";
      break;
  }
  return os.str();
}

}  // namespace ipc
