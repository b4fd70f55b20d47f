#include "ipc/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace ipc {

namespace {

constexpr Face bit(int v) { return Face{1} << v; }

void require_vertex(const SimplicialComplex& k, int v) {
  if (v < 0 || v > 63 || (k.vertices() & bit(v)) == 0)
    throw InvalidInput("vertex " + std::to_string(v) + " is not in the complex");
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  // Larger faces first so containment only needs to look backwards.
  std::stable_sort(faces.begin(), faces.end(),
                   [](Face a, Face b) { return std::popcount(a) > std::popcount(b); });
  for (Face f : faces) {
    bool covered = std::any_of(facets_.begin(), facets_.end(),
                               [f](Face g) { return (f & ~g) == 0; });
    if (!covered) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end());
  for (Face f : facets_) vertices_ |= f;
}

std::vector<int> SimplicialComplex::vertex_list() const {
  std::vector<int> out;
  for (Face b = vertices_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  int s = std::popcount(facets_.front());
  return std::all_of(facets_.begin(), facets_.end(),
                     [s](Face f) { return std::popcount(f) == s; });
}

bool SimplicialComplex::contains_face(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return (f & ~g) == 0; });
}

int SimplicialComplex::max_facet_size() const {
  int m = -1;
  for (Face f : facets_) m = std::max(m, std::popcount(f));
  return m;
}

SimplicialComplex simplicial_complex_of(const NeuralCode& code) {
  std::vector<Face> faces;
  faces.reserve(code.size());
  for (Codeword c : code.words()) faces.push_back(c.bits());
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& k, int v) {
  require_vertex(k, v);
  std::vector<Face> faces;
  for (Face f : k.facets())
    if (f & bit(v)) faces.push_back(f & ~bit(v));
  return SimplicialComplex(std::move(faces));
}

SimplicialComplex deletion(const SimplicialComplex& k, int v) {
  require_vertex(k, v);
  std::vector<Face> faces;
  for (Face f : k.facets()) faces.push_back(f & ~bit(v));
  return SimplicialComplex(std::move(faces));
}

namespace {

// No face of the link is a facet of the deletion.
bool is_shedding(const SimplicialComplex& lk, const SimplicialComplex& del) {
  for (Face f : del.facets())
    if (lk.contains_face(f)) return false;
  return true;
}

class VdSearch {
 public:
  using Cert = std::shared_ptr<const VdCertificate>;

  explicit VdSearch(VdRule rule) : rule_(rule) {}

  Cert solve(const SimplicialComplex& k) {
    std::vector<Face> key(k.facets().begin(), k.facets().end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Cert result;
    if (k.is_simplex()) {
      result = std::make_shared<VdCertificate>();
    } else {
      for (int v : k.vertex_list()) {
        if (rule_ == VdRule::shedding && !is_shedding(link(k, v), deletion(k, v))) continue;
        Cert l = solve(link(k, v));
        if (!l) continue;
        Cert d = solve(deletion(k, v));
        if (!d) continue;
        result = std::make_shared<VdCertificate>(VdCertificate{v, l, d});
        break;
      }
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  VdRule rule_;
  std::map<std::vector<Face>, Cert> memo_;
};

}  // namespace

std::optional<VdCertificate> vertex_decomposition(const SimplicialComplex& k, VdRule rule) {
  VdSearch search(rule);
  auto cert = search.solve(k);
  if (!cert) return std::nullopt;
  return *cert;
}

bool is_vertex_decomposable(const SimplicialComplex& k, VdRule rule) {
  return vertex_decomposition(k, rule).has_value();
}

std::vector<SimplicialComplex> connected_components(const SimplicialComplex& k) {
  std::vector<int> parent(64);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (Face f : k.facets()) {
    if (f == 0) continue;
    int root = find(std::countr_zero(f));
    for (Face b = f & (f - 1); b != 0; b &= b - 1) {
      int r = find(std::countr_zero(b));
      if (r != root) parent[static_cast<std::size_t>(r)] = root;
    }
  }
  std::map<int, std::vector<Face>> groups;
  for (Face f : k.facets()) {
    if (f == 0) continue;
    groups[find(std::countr_zero(f))].push_back(f);
  }
  // Order components by their smallest vertex.
  std::vector<std::pair<int, SimplicialComplex>> comps;
  for (auto& [root, faces] : groups) {
    SimplicialComplex c(std::move(faces));
    comps.emplace_back(std::countr_zero(c.vertices()), std::move(c));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SimplicialComplex> out;
  for (auto& [v, c] : comps) out.push_back(std::move(c));
  return out;
}

namespace {

// Bron–Kerbosch with pivoting; stops at the first maximal clique that is not a face.
bool all_maximal_cliques_are_faces(const SimplicialComplex& k, const std::vector<Face>& adj,
                                   Face r, Face p, Face x) {
  if (p == 0 && x == 0) return k.contains_face(r);
  Face px = p | x;
  int pivot = std::countr_zero(px);
  Face candidates = p & ~adj[static_cast<std::size_t>(pivot)];
  for (Face b = candidates; b != 0; b &= b - 1) {
    int v = std::countr_zero(b);
    if (!all_maximal_cliques_are_faces(k, adj, r | bit(v), p & adj[static_cast<std::size_t>(v)],
                                       x & adj[static_cast<std::size_t>(v)]))
      return false;
    p &= ~bit(v);
    x |= bit(v);
  }
  return true;
}

}  // namespace

bool is_clique_complex(const SimplicialComplex& k) {
  std::vector<Face> adj(64, 0);
  for (Face f : k.facets()) {
    for (Face b = f; b != 0; b &= b - 1) {
      int v = std::countr_zero(b);
      adj[static_cast<std::size_t>(v)] |= f & ~bit(v);
    }
  }
  if (k.vertices() == 0) return true;
  return all_maximal_cliques_are_faces(k, adj, 0, k.vertices(), 0);
}

Face polar_facet(Codeword c, int n) {
  if (n < 0 || n > kMaxPolarNeurons) throw InvalidInput("polar complex supports at most 31 neurons");
  if (!c.subset_of(Codeword::range(n))) throw InvalidInput("codeword outside 1..n");
  Face f = 0;
  for (Neuron i = 1; i <= n; ++i) f |= bit(c.contains(i) ? on_vertex(i) : off_vertex(i));
  return f;
}

Codeword codeword_of_polar_facet(Face f, int n) {
  std::uint64_t bits = 0;
  for (Neuron i = 1; i <= n; ++i)
    if (f & bit(on_vertex(i))) bits |= std::uint64_t{1} << i;
  return Codeword(bits);
}

std::string polar_facet_signs(Face f, int n) {
  std::string s;
  for (Neuron i = 1; i <= n; ++i) s += (f & bit(on_vertex(i))) ? '+' : '-';
  return s;
}

std::string polar_facet_label(Face f, int n) {
  std::string s;
  for (Neuron i = 1; i <= n; ++i) {
    if (f & bit(off_vertex(i))) s += "¬";
    s += std::to_string(i);
  }
  return s;
}

PolarComplex polar_complex_of(const NeuralCode& code) {
  if (code.has_dummy()) throw InvalidInput("polar complex of a homogenized code is not supported");
  PolarComplex pc;
  pc.n = code.neurons();
  for (Codeword c : code.words()) pc.facets.push_back(polar_facet(c, code.neurons()));
  return pc;
}

std::vector<Face> shelling_order(const NeuralCode& code) {
  std::vector<Face> out;
  for (Codeword c : sort_codewords(code)) out.push_back(polar_facet(c, code.neurons()));
  return out;
}

ShellingCheck verify_shelling(const SimplicialComplex& k, std::span<const Face> order) {
  if (!k.is_pure()) throw InvalidInput("verify_shelling: complex is not pure");
  std::vector<Face> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      !std::equal(sorted.begin(), sorted.end(), k.facets().begin(), k.facets().end()))
    throw InvalidInput("verify_shelling: order is not a permutation of the facets");

  std::vector<Face> ridges;
  for (std::size_t j = 1; j < order.size(); ++j) {
    const Face fj = order[j];
    const int ridge_size = std::popcount(fj) - 1;
    ridges.clear();
    for (std::size_t l = 0; l < j; ++l) {
      Face t = order[l] & fj;
      if (std::popcount(t) == ridge_size) ridges.push_back(t);
    }
    for (std::size_t i = 0; i < j; ++i) {
      Face s = order[i] & fj;
      bool covered = std::any_of(ridges.begin(), ridges.end(),
                                 [s](Face t) { return (s & ~t) == 0; });
      if (!covered) return {false, ShellingFailure{i, j, s}};
    }
  }
  return {};
}

}  // namespace ipc
