#include "ipc/lp.hpp"

#include <map>

#include "ipc/errors.hpp"

namespace ipc {

namespace {

struct Tableau {
  RMatrix rows;                    // constraint rows, last entry is the rhs
  std::vector<std::size_t> basis;  // basic column per row
  std::size_t columns = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j <= columns; ++j)
        if (sgn(rows[r][j]) != 0) rows[i][j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Maximizes cost·y over the current basic feasible solution. `allowed`
  // limits the entering columns. Returns false when unbounded.
  bool maximize(const RVector& cost, std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed && enter == allowed; ++j) {
        Rational r = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i)
          if (sgn(rows[i][j]) != 0 && sgn(cost[basis[i]]) != 0) r -= cost[basis[i]] * rows[i][j];
        if (sgn(r) > 0) enter = j;
      }
      if (enter == allowed) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (sgn(rows[i][enter]) <= 0) continue;
        Rational ratio = rows[i][columns] / rows[i][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.variables;
  const std::size_t mu = lp.a_ub.size();
  const std::size_t me = lp.a_eq.size();
  const std::size_t m = mu + me;
  if (lp.b_ub.size() != mu || lp.b_eq.size() != me || lp.objective.size() != n)
    throw InvalidInput("solve_lp: inconsistent dimensions");

  // Columns: x+ (n), x- (n), slacks (mu), artificials (m).
  const std::size_t structural = 2 * n + mu;
  Tableau t;
  t.columns = structural + m;
  t.rows.assign(m, RVector(t.columns + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const RVector& a = i < mu ? lp.a_ub[i] : lp.a_eq[i - mu];
    const Rational& b = i < mu ? lp.b_ub[i] : lp.b_eq[i - mu];
    if (a.size() != n) throw InvalidInput("solve_lp: row has wrong length");
    RVector& row = t.rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = a[j];
      row[n + j] = -a[j];
    }
    if (i < mu) row[2 * n + i] = 1;
    row[t.columns] = b;
    if (sgn(b) < 0)
      for (auto& x : row) x = -x;
    row[structural + i] = 1;
    t.basis[i] = structural + i;
  }

  RVector phase1(t.columns, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[structural + i] = -1;
  t.maximize(phase1, t.columns);
  for (std::size_t i = 0; i < m; ++i)
    if (t.basis[i] >= structural && sgn(t.rows[i][t.columns]) != 0) return {LpStatus::infeasible, {}, {}};

  // Drive remaining artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < structural) {
      ++i;
      continue;
    }
    std::size_t c = 0;
    while (c < structural && sgn(t.rows[i][c]) == 0) ++c;
    if (c < structural) {
      t.pivot(i, c);
      ++i;
    } else {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  RVector phase2(t.columns, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = lp.objective[j];
    phase2[n + j] = -lp.objective[j];
  }
  if (!t.maximize(phase2, structural)) return {LpStatus::unbounded, {}, {}};

  LpResult res;
  res.status = LpStatus::optimal;
  RVector y(structural, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) y[t.basis[i]] = t.rows[i][t.columns];
  res.x.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) res.x[j] = y[j] - y[n + j];
  res.value = dot(lp.objective, res.x);
  return res;
}

std::optional<RVector> strictly_feasible_point(const StrictSystem& sys) {
  const std::size_t n = sys.variables;
  LinearProgram lp;
  lp.variables = n + 1;
  for (std::size_t i = 0; i < sys.a.size(); ++i) {
    RVector row = sys.a[i];
    row.push_back(1);
    lp.a_ub.push_back(std::move(row));
    lp.b_ub.push_back(sys.b[i]);
  }
  RVector cap(n + 1, Rational(0));
  cap[n] = 1;
  lp.a_ub.push_back(cap);
  lp.b_ub.push_back(1);
  lp.objective = cap;
  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::optimal || sgn(r.value) <= 0) return std::nullopt;
  r.x.pop_back();
  return r.x;
}

bool strictly_feasible_fm(const StrictSystem& sys) {
  using Rows = std::map<RVector, Rational>;  // normalized row -> tightest rhs
  Rows rows;
  auto add = [&rows](RVector a, Rational b) {
    Rational scale = max_abs(a);
    if (sgn(scale) == 0) return sgn(b) > 0;  // 0 < b
    for (auto& x : a) x /= scale;
    b /= scale;
    auto [it, inserted] = rows.emplace(std::move(a), b);
    if (!inserted && b < it->second) it->second = b;
    return true;
  };
  for (std::size_t i = 0; i < sys.a.size(); ++i)
    if (!add(sys.a[i], sys.b[i])) return false;

  for (std::size_t k = sys.variables; k-- > 0;) {
    std::vector<std::pair<RVector, Rational>> pos, neg;
    Rows next;
    std::swap(next, rows);
    for (auto& [a, b] : next) {
      int s = sgn(a[k]);
      if (s > 0) pos.emplace_back(a, b);
      else if (s < 0) neg.emplace_back(a, b);
      else rows.emplace(a, b);
    }
    for (const auto& [ap, bp] : pos) {
      for (const auto& [an, bn] : neg) {
        // (-an_k)·(ap x < bp) + ap_k·(an x < bn) eliminates x_k.
        Rational wp = -an[k];
        Rational wn = ap[k];
        RVector a(ap.size());
        for (std::size_t j = 0; j < a.size(); ++j) a[j] = wp * ap[j] + wn * an[j];
        a[k] = 0;
        if (!add(std::move(a), wp * bp + wn * bn)) return false;
      }
    }
  }
  for (const auto& [a, b] : rows)
    if (sgn(b) <= 0) return false;
  return true;
}

}  // namespace ipc
