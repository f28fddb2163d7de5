#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dwlat {

/// Element of the root lattice: integer coefficients k_0..k_n over the simple
/// roots alpha_0..alpha_n.
class RootVector {
 public:
  RootVector() = default;
  explicit RootVector(std::size_t size) : c_(size, 0) {}
  explicit RootVector(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {}
  RootVector(std::initializer_list<std::int64_t> coeffs) : c_(coeffs) {}

  static RootVector simple(int size, int i) {
    RootVector r(static_cast<std::size_t>(size));
    r.c_[static_cast<std::size_t>(i)] = 1;
    return r;
  }

  std::size_t size() const { return c_.size(); }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  std::span<const std::int64_t> coeffs() const { return c_; }
  const std::vector<std::int64_t>& vec() const { return c_; }

  std::int64_t height() const;
  bool is_zero() const;
  bool nonnegative() const;
  bool nonpositive() const;
  /// Componentwise <=.
  bool leq(const RootVector& other) const;

  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator*(std::int64_t s, RootVector a);
  RootVector operator-() const { return -1 * *this; }

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;

  std::string str() const;

 private:
  std::vector<std::int64_t> c_;
};

}  // namespace dwlat
