#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dwlat/rational.hpp"
#include "dwlat/root_vector.hpp"

namespace dwlat {

/// Names one affine Cartan matrix of Kac's tables Aff 1-3, e.g. A2-1, D4-3.
/// `rank` is the subscript of X_n; for twisted types the vertex count is not
/// rank + 1 (A4-2 has three vertices).
struct AffineTypeId {
  char family = 'A';
  int rank = 1;
  int twist = 1;

  /// Parses `<Family><rank>-<twist>`. Case-sensitive on the family letter.
  static AffineTypeId parse(std::string_view text);

  std::string str() const;
  bool valid() const;

  friend bool operator==(const AffineTypeId&, const AffineTypeId&) = default;
};

/// Finite Dynkin type of a connected proper subdiagram. B2 and C2 are both
/// reported as B2.
struct FiniteType {
  char family = 'A';
  int rank = 1;

  std::string str() const;
  friend bool operator==(const FiniteType&, const FiniteType&) = default;
};

/// A set of vertices 0..n encoded as a bitmask.
class Subdiagram {
 public:
  Subdiagram() = default;
  explicit Subdiagram(std::uint64_t bits) : bits_(bits) {}
  static Subdiagram of(std::initializer_list<int> vertices);
  static Subdiagram full(int size);

  bool contains(int v) const { return (bits_ >> v) & 1U; }
  bool empty() const { return bits_ == 0; }
  int count() const;
  std::uint64_t bits() const { return bits_; }
  std::vector<int> vertices() const;

  Subdiagram with(int v) const { return Subdiagram(bits_ | (std::uint64_t{1} << v)); }
  Subdiagram without(int v) const { return Subdiagram(bits_ & ~(std::uint64_t{1} << v)); }

  friend Subdiagram operator|(Subdiagram a, Subdiagram b) { return Subdiagram(a.bits_ | b.bits_); }
  friend Subdiagram operator&(Subdiagram a, Subdiagram b) { return Subdiagram(a.bits_ & b.bits_); }
  friend bool operator==(Subdiagram, Subdiagram) = default;
  friend auto operator<=>(Subdiagram a, Subdiagram b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// One affine generalized Cartan matrix with its numerical labels and the
/// normalized invariant form. Immutable after construction.
///
/// Conventions: a(i, j) = alpha_j(alpha_i^vee), so a coroot pairing is
/// beta(alpha_j^vee) = sum_i a(j, i) k_i. Marks a_i satisfy A * marks = 0,
/// comarks satisfy comarks^T * A = 0, and vertex 0 is the affine vertex.
class AffineDiagram {
 public:
  AffineDiagram(AffineTypeId id, std::vector<int> cartan,
                std::vector<int> marks, std::vector<int> comarks);

  const AffineTypeId& type_id() const { return id_; }
  int n() const { return size_ - 1; }
  int size() const { return size_; }

  int a(int i, int j) const { return cartan_[static_cast<std::size_t>(i * size_ + j)]; }
  std::span<const int> marks() const { return marks_; }
  std::span<const int> comarks() const { return comarks_; }
  int mark(int i) const { return marks_[static_cast<std::size_t>(i)]; }
  int comark(int i) const { return comarks_[static_cast<std::size_t>(i)]; }

  /// |alpha_i|^2 under the normalized form (long roots of the finite part
  /// have squared length 2).
  const Rational& root_length_sq(int i) const { return length_sq_[static_cast<std::size_t>(i)]; }
  /// (alpha_i, alpha_j).
  Rational form(int i, int j) const;

  bool adjacent(int i, int j) const { return i != j && a(i, j) != 0; }
  bool connected(Subdiagram k) const;
  Subdiagram vertices() const { return Subdiagram::full(size_); }

  /// Product a(i, j) * a(j, i) is 4 or more, or 3 for a triple bond.
  bool triply_laced() const;
  /// Vertices of minimal root length over the whole diagram.
  Subdiagram short_vertices() const;
  /// Vertices of minimal root length within k.
  Subdiagram short_vertices(Subdiagram k) const;

  void check_vertex(int v) const;

 private:
  AffineTypeId id_;
  int size_;
  std::vector<int> cartan_;
  std::vector<int> marks_;
  std::vector<int> comarks_;
  std::vector<Rational> length_sq_;
};

AffineDiagram build_affine(const AffineTypeId& id);
AffineDiagram build_affine(std::string_view id);

/// Catalog listing with ranks up to `max_rank` per family.
std::vector<AffineTypeId> catalog(int max_rank = 12);

/// delta = sum a_i alpha_i, as coefficients over the simple roots.
RootVector canonical_imaginary_root(const AffineDiagram& d);
/// c = sum a_i^vee alpha_i^vee, as coefficients over the simple coroots.
std::vector<std::int64_t> canonical_central_element(const AffineDiagram& d);

/// Finite Dynkin type of the principal submatrix on k.
FiniteType classify_finite(const AffineDiagram& d, Subdiagram k);

/// Exact determinant of the principal submatrix on k.
Rational principal_minor(const AffineDiagram& d, Subdiagram k);

}  // namespace dwlat
