#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "facering/field/rational.hpp"

namespace facering {

using Vertex = std::uint32_t;
/// Strictly increasing list of vertex ids.
using Face = std::vector<Vertex>;

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept;
};
using FaceSet = std::unordered_set<Face, FaceHash>;

/// Coordinates indexed by vertex id; every row has the same length.
using CoordTable = std::vector<std::vector<Rational>>;

class SimplicialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class FaceNotFound : public SimplicialError {
 public:
  using SimplicialError::SimplicialError;
};
class PreconditionError : public SimplicialError {
 public:
  using SimplicialError::SimplicialError;
};

Face make_face(std::vector<Vertex> vertices);
bool is_subface(const Face& small, const Face& big);
Face face_union(const Face& a, const Face& b);
Face face_difference(const Face& a, const Face& b);

/// A finite abstract simplicial complex over a labelled vertex universe,
/// stored by its facets.
///
/// Subcomplexes produced by the operators share the universe (labels and
/// vertex ids) of their parent, so faces can be compared across them
/// directly. The universe may contain labels that no face uses.
///
/// Two empty complexes are distinguished: the void complex has no faces at
/// all, while {∅} has exactly the empty face (it is the (-1)-sphere, the link
/// of a facet in a pseudomanifold).
///
/// Instances are immutable and cheap to copy.
class Complex {
 public:
  /// The void complex over an empty universe.
  Complex();

  /// Strict constructor used for parsed input. Throws PreconditionError on a
  /// vertex id out of range, a repeated vertex inside a facet, a duplicate
  /// facet, a facet contained in another, or coordinate rows of unequal
  /// length.
  Complex(std::vector<std::string> labels, std::vector<Face> facets,
          std::optional<CoordTable> coords = std::nullopt, std::string name = {});

  /// Keeps only the inclusion-maximal members of `generators`.
  static Complex generated_by(std::vector<std::string> labels, std::vector<Face> generators,
                              std::optional<CoordTable> coords = std::nullopt, std::string name = {});
  /// Void complex over a given universe.
  static Complex void_on(std::vector<std::string> labels);

  const std::string& name() const;
  const std::vector<std::string>& labels() const;
  std::size_t universe_size() const { return labels().size(); }
  const std::vector<Face>& facets() const;
  const std::optional<CoordTable>& coords() const;
  /// Length of the coordinate vectors, 0 without coordinates.
  std::size_t ambient_dim() const;

  bool is_void() const { return facets().empty(); }
  /// -1 for both the void complex and {∅}.
  int dim() const;
  bool contains(const Face& f) const;
  /// Faces of dimension k (k >= -1), sorted lexicographically.
  const std::vector<Face>& faces(int k) const;
  const FaceSet& face_set() const;
  std::size_t face_count() const { return face_set().size(); }
  /// Vertex ids used by some face, ascending.
  std::vector<Vertex> vertices() const;
  bool is_pure() const;

  Vertex vertex_id(std::string_view label) const;
  Face face_from_labels(const std::vector<std::string>& labels) const;
  std::string face_to_string(const Face& f) const;

  bool is_subcomplex_of(const Complex& other) const;
  bool same_faces(const Complex& other) const { return facets() == other.facets(); }

  Complex with_name(std::string name) const;
  Complex with_coords(std::optional<CoordTable> coords) const;

 private:
  struct Data;
  explicit Complex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static std::shared_ptr<const Data> build(std::vector<std::string> labels, std::vector<Face> facets,
                                           std::optional<CoordTable> coords, std::string name);
  std::shared_ptr<const Data> data_;
};

/// Pair (Δ, Γ) with Γ ⊆ Δ over the same universe.
class RelativePair {
 public:
  /// Throws PreconditionError if `sub` is not a subcomplex of `total`.
  RelativePair(Complex total, Complex sub);
  /// (Δ, void): the absolute face ring of Δ.
  static RelativePair absolute(Complex total);

  const Complex& total() const { return total_; }
  const Complex& sub() const { return sub_; }

 private:
  Complex total_;
  Complex sub_;
};

}  // namespace facering
