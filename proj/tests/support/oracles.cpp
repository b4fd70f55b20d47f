#include "oracles.hpp"

#include <algorithm>
#include <bit>

namespace oracle {

namespace {

Mask bit(int i) { return Mask{1} << i; }

std::vector<Mask> subsets(Mask m) {
  std::vector<Mask> out;
  Mask s = m;
  while (true) {
    out.push_back(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
  return out;
}

std::vector<Mask> maximal(const std::vector<Mask>& faces) {
  std::vector<Mask> out;
  for (Mask f : faces) {
    bool dominated = false;
    for (Mask g : faces)
      if (g != f && (f & ~g) == 0) dominated = true;
    if (!dominated && std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

bool peel(const Code& code, Mask neurons, int max_k, bool fixed_labels) {
  if (popcount(neurons) == 1) return code == Code{0, neurons};
  std::vector<int> candidates;
  if (fixed_labels)
    candidates.push_back(top(neurons));
  else
    candidates = elements(neurons);
  for (int j : candidates) {
    Mask rest = neurons & ~bit(j);
    Code old_words, new_words;
    for (Mask c : code) (c & bit(j) ? new_words : old_words).insert(c);
    std::vector<int> others = elements(rest);
    std::size_t total = 1;
    for (std::size_t i = 0; i < others.size(); ++i) total *= 3;
    for (std::size_t a = 0; a < total; ++a) {
      Mask lambda = 0, sigma = 0;
      std::size_t x = a;
      for (int v : others) {
        if (x % 3 == 0) lambda |= bit(v);
        if (x % 3 == 1) sigma |= bit(v);
        x /= 3;
      }
      if (popcount(lambda) > max_k) continue;
      Code expect;
      bool ok = true;
      for (Mask nu : subsets(lambda)) {
        if (!old_words.count(sigma | nu)) ok = false;
        expect.insert(sigma | nu | bit(j));
      }
      if (ok && expect == new_words && peel(old_words, rest, max_k, fixed_labels)) return true;
    }
  }
  return false;
}

}  // namespace

int popcount(Mask m) { return std::popcount(m); }

int top(Mask m) { return m == 0 ? 0 : 63 - std::countl_zero(m); }

std::vector<int> elements(Mask m) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (m & bit(i)) out.push_back(i);
  return out;
}

bool codeword_less(Mask c, Mask d) {
  if (top(c) != top(d)) return top(c) < top(d);
  if (popcount(c) != popcount(d)) return popcount(c) > popcount(d);
  auto a = elements(c), b = elements(d);
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::optional<Code> pierce(const Code& code, int n, Mask lambda, Mask sigma) {
  Code out = code;
  for (Mask nu : subsets(lambda)) {
    if (!code.count(sigma | nu)) return std::nullopt;
    out.insert(sigma | nu | bit(n + 1));
  }
  return out;
}

bool is_inductively_pierced(const Code& code, int n, int max_k, bool fixed_labels) {
  if (n < 1) return false;
  Mask neurons = 0;
  for (int i = 1; i <= n; ++i) neurons |= bit(i);
  for (Mask c : code)
    if (c & ~neurons) return false;
  return peel(code, neurons, max_k, fixed_labels);
}

Complex downward_closure(const std::vector<Mask>& facets) {
  Complex out;
  for (Mask f : facets)
    for (Mask s : subsets(f)) out.insert(s);
  return out;
}

bool is_shelling_raw(const std::vector<Mask>& order) {
  for (std::size_t j = 1; j < order.size(); ++j) {
    std::vector<Mask> meet;
    for (std::size_t i = 0; i < j; ++i)
      for (Mask s : subsets(order[i] & order[j])) meet.push_back(s);
    for (Mask m : maximal(meet))
      if (popcount(m) != popcount(order[j]) - 1) return false;
  }
  return true;
}

Mask polar_facet(Mask codeword, int n) {
  Mask f = 0;
  for (int i = 1; i <= n; ++i) f |= (codeword & bit(i)) ? bit(i - 1) : bit(31 + i);
  return f;
}

bool is_vertex_decomposable(const std::vector<Mask>& facets, bool shedding) {
  std::vector<Mask> k = maximal(facets);
  if (k.size() <= 1) return true;
  Mask vertices = 0;
  for (Mask f : k) vertices |= f;
  for (int v : elements(vertices)) {
    std::vector<Mask> lk, del;
    for (Mask f : k) {
      if (f & bit(v)) lk.push_back(f & ~bit(v));
      del.push_back(f & ~bit(v));
    }
    if (shedding) {
      bool sheds = true;
      for (Mask d : maximal(del))
        for (Mask l : lk)
          if ((d & ~l) == 0) sheds = false;
      if (!sheds) continue;
    }
    if (is_vertex_decomposable(lk, shedding) && is_vertex_decomposable(del, shedding)) return true;
  }
  return false;
}

bool is_clique_complex(const std::vector<Mask>& facets) {
  Mask vertices = 0;
  for (Mask f : facets) vertices |= f;
  auto is_face = [&](Mask s) {
    return std::any_of(facets.begin(), facets.end(), [&](Mask f) { return (s & ~f) == 0; });
  };
  for (Mask s : subsets(vertices)) {
    bool clique = true;
    auto vs = elements(s);
    for (std::size_t a = 0; a < vs.size() && clique; ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        if (!is_face(bit(vs[a]) | bit(vs[b]))) {
          clique = false;
          break;
        }
    if (clique && !is_face(s)) return false;
  }
  return true;
}

bool is_intersection_complete(const Code& code) {
  std::vector<Mask> words(code.begin(), code.end());
  const std::size_t m = words.size();
  for (std::size_t family = 1; family < (std::size_t{1} << m); ++family) {
    Mask meet = ~Mask{0};
    for (std::size_t i = 0; i < m; ++i)
      if (family >> i & 1) meet &= words[i];
    if (!code.count(meet)) return false;
  }
  return true;
}

std::set<Pm> vanishing_pseudo_monomials(const Code& code, int n) {
  Mask all = 0;
  for (int i = 1; i <= n; ++i) all |= bit(i);
  std::set<Pm> out;
  for (Mask on : subsets(all))
    for (Mask off : subsets(all & ~on)) {
      if (on == 0 && off == 0) continue;
      bool vanishes = true;
      for (Mask c : code)
        if ((on & ~c) == 0 && (off & c) == 0) vanishes = false;
      if (vanishes) out.insert(Pm{on, off});
    }
  return out;
}

std::set<Pm> minimal_pseudo_monomials(const Code& code, int n) {
  auto all = vanishing_pseudo_monomials(code, n);
  std::set<Pm> out;
  for (const Pm& p : all) {
    bool minimal = true;
    for (const Pm& q : all)
      if (!(q == p) && (q.on & ~p.on) == 0 && (q.off & ~p.off) == 0) minimal = false;
    if (minimal) out.insert(p);
  }
  return out;
}

std::vector<Mask> component_vertex_sets(const std::vector<Mask>& facets) {
  std::vector<Mask> comps;
  for (Mask f : facets) {
    if (f == 0) continue;
    Mask merged = f;
    std::vector<Mask> keep;
    for (Mask c : comps) {
      if (c & f)
        merged |= c;
      else
        keep.push_back(c);
    }
    keep.push_back(merged);
    comps = std::move(keep);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

std::vector<std::vector<std::vector<int>>> kernel_classes(const std::vector<Mask>& vars,
                                                          int max_degree) {
  std::map<std::vector<int>, std::vector<std::vector<int>>> groups;
  std::vector<int> exps(vars.size(), 0);
  auto record = [&] {
    std::vector<int> image(64, 0);
    for (std::size_t v = 0; v < vars.size(); ++v)
      for (int i : elements(vars[v])) image[i] += exps[v];
    groups[image].push_back(exps);
  };
  // Every exponent vector of total degree <= max_degree, by recursion on
  // the variable index.
  auto rec = [&](auto&& self, std::size_t v, int budget) -> void {
    if (v == vars.size()) {
      record();
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      exps[v] = e;
      self(self, v + 1, budget - e);
    }
    exps[v] = 0;
  };
  rec(rec, 0, max_degree);
  std::vector<std::vector<std::vector<int>>> out;
  for (auto& [image, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace oracle
