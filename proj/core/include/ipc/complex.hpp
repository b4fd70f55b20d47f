#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ipc/code.hpp"

namespace ipc {

/// A face is a set of vertex ids 0..63 stored as a bit mask.
using Face = std::uint64_t;

/// An abstract simplicial complex stored by its facets.
///
/// The void complex has no facets; the empty complex {∅} has the single
/// facet 0. Both count as simplices.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Keeps only the inclusion-maximal faces.
  explicit SimplicialComplex(std::vector<Face> faces);

  std::span<const Face> facets() const { return facets_; }
  Face vertices() const { return vertices_; }
  std::vector<int> vertex_list() const;

  bool is_void() const { return facets_.empty(); }
  bool is_simplex() const { return facets_.size() <= 1; }
  bool is_pure() const;
  bool contains_face(Face f) const;
  /// Size (vertex count) of the largest facet; -1 for the void complex.
  int max_facet_size() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Face> facets_;  // sorted, maximal
  Face vertices_ = 0;
};

/// Downward closure of the codewords; vertex i is neuron i.
SimplicialComplex simplicial_complex_of(const NeuralCode& code);

/// Link_K(v) = { F \ v : v ∈ F ∈ K }. Throws InvalidInput if v is not a vertex.
SimplicialComplex link(const SimplicialComplex& k, int v);
/// Del_K(v) = { F \ v : F ∈ K }. Throws InvalidInput if v is not a vertex.
SimplicialComplex deletion(const SimplicialComplex& k, int v);

/// Recursive shedding certificate. `vertex` is -1 at a simplex leaf.
struct VdCertificate {
  int vertex = -1;
  std::shared_ptr<const VdCertificate> link;
  std::shared_ptr<const VdCertificate> deletion;
};

/// `literal`: K is a simplex, or some vertex has a vertex decomposable link
/// and deletion. Every complex passes this recursion.
/// `shedding`: additionally no face of the link may be a facet of the
/// deletion at each chosen vertex.
enum class VdRule { literal, shedding };

/// Returns a certificate when K is vertex decomposable under `rule`.
/// Memoized exhaustive search.
std::optional<VdCertificate> vertex_decomposition(const SimplicialComplex& k, VdRule rule = VdRule::literal);
bool is_vertex_decomposable(const SimplicialComplex& k, VdRule rule = VdRule::literal);

/// Components of the 1-skeleton; an isolated vertex is its own component.
/// The empty and void complexes have no components.
std::vector<SimplicialComplex> connected_components(const SimplicialComplex& k);

/// True iff every clique of the 1-skeleton is a face.
bool is_clique_complex(const SimplicialComplex& k);

// ---------------------------------------------------------------------------
// Polar complexes. On-vertex i has id 2i, off-vertex ī has id 2i+1, so
// neurons 1..31 are supported.

inline constexpr int kMaxPolarNeurons = 31;

inline constexpr int on_vertex(Neuron i) { return 2 * i; }
inline constexpr int off_vertex(Neuron i) { return 2 * i + 1; }

/// The facet {i : i ∈ c} ∪ {ī : i ∉ c, 1 ≤ i ≤ n}.
Face polar_facet(Codeword c, int n);
/// Inverse of polar_facet.
Codeword codeword_of_polar_facet(Face f, int n);

/// "+--" style: position i-1 is '+' if i is on, '-' if off.
std::string polar_facet_signs(Face f, int n);
/// "1¬2¬3" style.
std::string polar_facet_label(Face f, int n);

struct PolarComplex {
  int n = 0;
  /// One facet per codeword, in bit-pattern order of the codewords.
  std::vector<Face> facets;

  SimplicialComplex complex() const { return SimplicialComplex(facets); }
};

PolarComplex polar_complex_of(const NeuralCode& code);

/// Facets of Γ(C) ordered by the codeword order.
std::vector<Face> shelling_order(const NeuralCode& code);

struct ShellingFailure {
  std::size_t earlier = 0;  // index i of F_i
  std::size_t later = 0;    // index j of F_j, i < j
  Face intersection = 0;    // F_i ∩ F_j with no codim-1 cover
};

struct ShellingCheck {
  bool ok = true;
  std::optional<ShellingFailure> failure;
};

/// For every j and i < j, F_i ∩ F_j must lie in some F_l ∩ F_j of size
/// |F_j| - 1 with l < j. Throws InvalidInput if K is impure or `order` is
/// not a permutation of K's facets.
ShellingCheck verify_shelling(const SimplicialComplex& k, std::span<const Face> order);

}  // namespace ipc
