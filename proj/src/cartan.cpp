#include "dwlat/cartan.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "dwlat/error.hpp"

namespace dwlat {

namespace {

constexpr int kMaxRank = 40;

std::string family_rank(char family, int rank) {
  return std::string(1, family) + std::to_string(rank);
}

/// Number of vertices of the diagram named by a valid id.
int vertex_count(const AffineTypeId& id) {
  if (id.twist == 1) return id.rank + 1;
  if (id.twist == 3) return 3;
  switch (id.family) {
    case 'A':
      return id.rank % 2 == 0 ? id.rank / 2 + 1 : (id.rank + 1) / 2 + 1;
    case 'D':
      return id.rank;
    case 'E':
      return 5;
    default:
      return 0;
  }
}

class CartanBuilder {
 public:
  explicit CartanBuilder(int size) : size_(size), a_(static_cast<std::size_t>(size * size), 0) {
    for (int i = 0; i < size; ++i) set(i, i, 2);
  }

  CartanBuilder& simple(int i, int j) {
    set(i, j, -1);
    set(j, i, -1);
    return *this;
  }

  // Bond of multiplicity m; a(short, long) = -m.
  CartanBuilder& bond(int shorter, int longer, int m) {
    set(shorter, longer, -m);
    set(longer, shorter, -1);
    return *this;
  }

  CartanBuilder& chain(int from, int to) {
    for (int i = from; i < to; ++i) simple(i, i + 1);
    return *this;
  }

  CartanBuilder& set(int i, int j, int v) {
    a_[static_cast<std::size_t>(i * size_ + j)] = v;
    return *this;
  }

  std::vector<int> take() { return std::move(a_); }

 private:
  int size_;
  std::vector<int> a_;
};

struct Entry {
  std::vector<int> cartan;
  std::vector<int> marks;
  std::vector<int> comarks;
};

std::vector<int> filled(int size, int value) { return std::vector<int>(static_cast<std::size_t>(size), value); }

// Labelings follow Kac, Infinite dimensional Lie algebras, Table Aff 1-3.
Entry make_entry(const AffineTypeId& id) {
  const int sz = vertex_count(id);
  const int l = sz - 1;
  CartanBuilder b(sz);
  Entry e;
  if (id.twist == 1) {
    switch (id.family) {
      case 'A':
        if (l == 1) {
          b.set(0, 1, -2).set(1, 0, -2);
        } else {
          b.chain(0, l).simple(l, 0);
        }
        e.marks = filled(sz, 1);
        e.comarks = e.marks;
        break;
      case 'B':
        b.simple(0, 2).simple(1, 2).chain(2, l - 1).bond(l, l - 1, 2);
        e.marks = filled(sz, 2);
        e.marks[0] = e.marks[1] = 1;
        e.comarks = e.marks;
        e.comarks[static_cast<std::size_t>(l)] = 1;
        break;
      case 'C':
        b.bond(1, 0, 2).chain(1, l - 1).bond(l - 1, l, 2);
        e.marks = filled(sz, 2);
        e.marks.front() = e.marks.back() = 1;
        e.comarks = filled(sz, 1);
        break;
      case 'D':
        b.simple(0, 2).simple(1, 2).chain(2, l - 1).simple(l - 2, l);
        e.marks = filled(sz, 2);
        e.marks[0] = e.marks[1] = 1;
        e.marks[static_cast<std::size_t>(l - 1)] = e.marks[static_cast<std::size_t>(l)] = 1;
        e.comarks = e.marks;
        break;
      case 'E':
        if (l == 6) {
          b.simple(1, 3).chain(3, 6).simple(2, 4).simple(0, 2);
          e.marks = {1, 1, 2, 2, 3, 2, 1};
        } else if (l == 7) {
          b.simple(1, 3).chain(3, 7).simple(2, 4).simple(0, 1);
          e.marks = {1, 2, 2, 3, 4, 3, 2, 1};
        } else {
          b.simple(1, 3).chain(3, 8).simple(2, 4).simple(0, 8);
          e.marks = {1, 2, 3, 4, 6, 5, 4, 3, 2};
        }
        e.comarks = e.marks;
        break;
      case 'F':
        b.simple(0, 1).simple(1, 2).bond(3, 2, 2).simple(3, 4);
        e.marks = {1, 2, 3, 4, 2};
        e.comarks = {1, 2, 3, 2, 1};
        break;
      case 'G':
        b.simple(0, 1).bond(2, 1, 3);
        e.marks = {1, 2, 3};
        e.comarks = {1, 2, 1};
        break;
      default:
        break;
    }
  } else if (id.twist == 2) {
    switch (id.family) {
      case 'A':
        if (id.rank == 2) {
          b.bond(0, 1, 4);
          e.marks = {2, 1};
          e.comarks = {1, 2};
        } else if (id.rank % 2 == 0) {
          b.bond(0, 1, 2).chain(1, l - 1).bond(l - 1, l, 2);
          e.marks = filled(sz, 2);
          e.marks.back() = 1;
          e.comarks = filled(sz, 2);
          e.comarks.front() = 1;
        } else {
          b.simple(0, 2).simple(1, 2).chain(2, l - 1).bond(l - 1, l, 2);
          e.marks = filled(sz, 2);
          e.marks[0] = e.marks[1] = 1;
          e.marks.back() = 1;
          e.comarks = filled(sz, 2);
          e.comarks[0] = e.comarks[1] = 1;
        }
        break;
      case 'D':
        b.bond(0, 1, 2).chain(1, l - 1).bond(l, l - 1, 2);
        e.marks = filled(sz, 1);
        e.comarks = filled(sz, 2);
        e.comarks.front() = e.comarks.back() = 1;
        break;
      case 'E':
        b.simple(0, 1).simple(1, 2).bond(2, 3, 2).simple(3, 4);
        e.marks = {1, 2, 3, 2, 1};
        e.comarks = {1, 2, 3, 4, 2};
        break;
      default:
        break;
    }
  } else {
    b.simple(0, 1).bond(1, 2, 3);
    e.marks = {1, 2, 1};
    e.comarks = {1, 2, 3};
  }
  e.cartan = b.take();
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------

AffineTypeId AffineTypeId::parse(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::UnknownType, "malformed type id '" + std::string(text) +
                                             "' (expected e.g. A2-1, D4-3)");
  };
  if (text.size() < 4) throw fail();
  AffineTypeId id;
  id.family = text[0];
  if (id.family < 'A' || id.family > 'G') throw fail();
  const auto dash = text.find('-');
  if (dash == std::string_view::npos || dash < 2 || dash + 2 != text.size()) throw fail();
  const char* first = text.data() + 1;
  const char* last = text.data() + dash;
  auto [p, ec] = std::from_chars(first, last, id.rank);
  if (ec != std::errc{} || p != last || *first == '0' || *first == '+') throw fail();
  id.twist = text[dash + 1] - '0';
  if (!id.valid()) {
    throw Error(ErrorCode::UnknownType, "no affine type " + std::string(text) + " in Table Aff 1-3");
  }
  return id;
}

std::string AffineTypeId::str() const {
  return family_rank(family, rank) + "-" + std::to_string(twist);
}

bool AffineTypeId::valid() const {
  if (rank < 1 || rank > kMaxRank) return false;
  switch (twist) {
    case 1:
      switch (family) {
        case 'A': return true;
        case 'B': return rank >= 3;
        case 'C': return rank >= 2;
        case 'D': return rank >= 4;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
      }
    case 2:
      switch (family) {
        case 'A': return rank == 2 || rank >= 4;
        case 'D': return rank >= 3;
        case 'E': return rank == 6;
        default: return false;
      }
    case 3:
      return family == 'D' && rank == 4;
    default:
      return false;
  }
}

std::string FiniteType::str() const { return family_rank(family, rank); }

// ---------------------------------------------------------------------------

Subdiagram Subdiagram::of(std::initializer_list<int> vertices) {
  Subdiagram s;
  for (int v : vertices) s = s.with(v);
  return s;
}

Subdiagram Subdiagram::full(int size) {
  return Subdiagram(size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1);
}

int Subdiagram::count() const { return std::popcount(bits_); }

std::vector<int> Subdiagram::vertices() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

// ---------------------------------------------------------------------------

AffineDiagram::AffineDiagram(AffineTypeId id, std::vector<int> cartan,
                             std::vector<int> marks, std::vector<int> comarks)
    : id_(id),
      size_(static_cast<int>(marks.size())),
      cartan_(std::move(cartan)),
      marks_(std::move(marks)),
      comarks_(std::move(comarks)) {
  const auto bad = [&](const std::string& why) {
    return Error(ErrorCode::Internal, "catalog entry " + id_.str() + " is invalid: " + why);
  };
  if (size_ < 2 || size_ > 64 || cartan_.size() != static_cast<std::size_t>(size_ * size_) ||
      comarks_.size() != marks_.size()) {
    throw bad("dimension mismatch");
  }
  for (int i = 0; i < size_; ++i) {
    if (a(i, i) != 2) throw bad("diagonal entry is not 2");
    if (mark(i) <= 0 || comark(i) <= 0) throw bad("labels must be positive");
    for (int j = 0; j < size_; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) throw bad("positive off-diagonal entry");
      if ((a(i, j) == 0) != (a(j, i) == 0)) throw bad("asymmetric zero pattern");
    }
  }
  for (int j = 0; j < size_; ++j) {
    long row = 0;
    long col = 0;
    for (int i = 0; i < size_; ++i) {
      row += static_cast<long>(a(j, i)) * mark(i);
      col += static_cast<long>(comark(i)) * a(i, j);
    }
    if (row != 0) throw bad("A * marks != 0");
    if (col != 0) throw bad("comarks^T * A != 0");
  }
  if (comark(0) != 1) throw bad("a_0^vee != 1");

  // Kac's normalized form has (alpha_i, alpha_i) proportional to a_i^vee / a_i.
  length_sq_.reserve(marks_.size());
  Rational longest(0);
  for (int i = 0; i < size_; ++i) {
    length_sq_.emplace_back(comark(i), mark(i));
    if (i > 0) longest = std::max(longest, length_sq_.back());
  }
  const Rational scale = Rational(2) / longest;
  for (auto& r : length_sq_) r *= scale;
}

Rational AffineDiagram::form(int i, int j) const {
  return Rational(a(i, j)) * length_sq_[static_cast<std::size_t>(i)] / 2;
}

void AffineDiagram::check_vertex(int v) const {
  if (v < 0 || v >= size_) {
    throw Error(ErrorCode::Index, "vertex " + std::to_string(v) + " out of range 0.." +
                                      std::to_string(n()) + " for " + id_.str());
  }
}

bool AffineDiagram::connected(Subdiagram k) const {
  if (k.empty()) return false;
  const auto verts = k.vertices();
  Subdiagram seen = Subdiagram::of({verts.front()});
  std::vector<int> stack{verts.front()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : verts) {
      if (!seen.contains(w) && adjacent(v, w)) {
        seen = seen.with(w);
        stack.push_back(w);
      }
    }
  }
  return seen == k;
}

bool AffineDiagram::triply_laced() const {
  for (int i = 0; i < size_; ++i)
    for (int j = i + 1; j < size_; ++j)
      if (a(i, j) * a(j, i) == 3) return true;
  return false;
}

Subdiagram AffineDiagram::short_vertices() const { return short_vertices(vertices()); }

Subdiagram AffineDiagram::short_vertices(Subdiagram k) const {
  Subdiagram out;
  if (k.empty()) return out;
  Rational best = root_length_sq(k.vertices().front());
  for (int v : k.vertices()) best = std::min(best, root_length_sq(v));
  for (int v : k.vertices())
    if (root_length_sq(v) == best) out = out.with(v);
  return out;
}

AffineDiagram build_affine(const AffineTypeId& id) {
  if (!id.valid()) throw Error(ErrorCode::UnknownType, "no affine type " + id.str() + " in Table Aff 1-3");
  Entry e = make_entry(id);
  return AffineDiagram(id, std::move(e.cartan), std::move(e.marks), std::move(e.comarks));
}

AffineDiagram build_affine(std::string_view id) { return build_affine(AffineTypeId::parse(id)); }

std::vector<AffineTypeId> catalog(int max_rank) {
  std::vector<AffineTypeId> out;
  const std::string families = "ABCDEFG";
  for (int twist = 1; twist <= 3; ++twist)
    for (char f : families)
      for (int r = 1; r <= max_rank; ++r) {
        AffineTypeId id{f, r, twist};
        if (id.valid()) out.push_back(id);
      }
  return out;
}

RootVector canonical_imaginary_root(const AffineDiagram& d) {
  return RootVector(std::vector<std::int64_t>(d.marks().begin(), d.marks().end()));
}

std::vector<std::int64_t> canonical_central_element(const AffineDiagram& d) {
  return {d.comarks().begin(), d.comarks().end()};
}

Rational principal_minor(const AffineDiagram& d, Subdiagram k) {
  const auto v = k.vertices();
  const std::size_t r = v.size();
  std::vector<Rational> m(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m[i * r + j] = d.a(v[i], v[j]);
  Rational det(1);
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t piv = c;
    while (piv < r && m[piv * r + c] == 0) ++piv;
    if (piv == r) return Rational(0);
    if (piv != c) {
      for (std::size_t j = 0; j < r; ++j) std::swap(m[piv * r + j], m[c * r + j]);
      det = -det;
    }
    det *= m[c * r + c];
    for (std::size_t i = c + 1; i < r; ++i) {
      const Rational f = m[i * r + c] / m[c * r + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < r; ++j) m[i * r + j] -= f * m[c * r + j];
    }
  }
  return det;
}

FiniteType classify_finite(const AffineDiagram& d, Subdiagram k) {
  if (k.empty()) throw Error(ErrorCode::InvalidSubdiagram, "empty subdiagram");
  if ((k.bits() & ~d.vertices().bits()) != 0) throw Error(ErrorCode::Index, "subdiagram has out-of-range vertex");
  if (k == d.vertices()) throw Error(ErrorCode::InvalidSubdiagram, "subdiagram is the full affine diagram");
  if (!d.connected(k)) throw Error(ErrorCode::InvalidSubdiagram, "subdiagram is disconnected");

  const auto v = k.vertices();
  const int r = static_cast<int>(v.size());
  if (r == 1) return {'A', 1};

  std::vector<int> degree(v.size(), 0);
  int max_bond = 1;
  std::size_t bond_u = 0, bond_w = 0;
  int edges = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (!d.adjacent(v[i], v[j])) continue;
      ++degree[i];
      ++degree[j];
      ++edges;
      const int prod = d.a(v[i], v[j]) * d.a(v[j], v[i]);
      if (prod > max_bond) {
        max_bond = prod;
        bond_u = i;
        bond_w = j;
      }
    }
  const auto internal = [&] {
    return Error(ErrorCode::Internal, "subdiagram of " + d.type_id().str() + " is not of finite type");
  };
  if (edges != r - 1 || max_bond >= 4) throw internal();

  if (max_bond == 3) {
    if (r != 2) throw internal();
    return {'G', 2};
  }
  if (max_bond == 2) {
    if (r == 2) return {'B', 2};
    if (r == 4 && degree[bond_u] == 2 && degree[bond_w] == 2) return {'F', 4};
    // Double bond at one end of a path: B when the end vertex is short.
    const std::size_t end = degree[bond_u] == 1 ? bond_u : bond_w;
    const std::size_t other = end == bond_u ? bond_w : bond_u;
    if (degree[end] != 1) throw internal();
    return {d.root_length_sq(v[end]) < d.root_length_sq(v[other]) ? 'B' : 'C', r};
  }

  const auto branch = std::find(degree.begin(), degree.end(), 3);
  if (branch == degree.end()) return {'A', r};
  if (std::count(degree.begin(), degree.end(), 3) != 1) throw internal();

  // Arm lengths from the branch vertex.
  const int centre = v[static_cast<std::size_t>(branch - degree.begin())];
  std::vector<int> arms;
  for (int w : v) {
    if (!d.adjacent(centre, w)) continue;
    int len = 0, prev = centre, cur = w;
    while (true) {
      ++len;
      int next = -1;
      for (int x : v)
        if (x != prev && x != cur && d.adjacent(cur, x)) next = x;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', r};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {'E', r};
  throw internal();
}

}  // namespace dwlat
