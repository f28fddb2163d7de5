#include "dwlat/root_vector.hpp"

#include <algorithm>
#include <numeric>

#include "dwlat/error.hpp"

namespace dwlat {

namespace {
void check_sizes(const RootVector& a, const RootVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::Index, "root vector length mismatch");
}
}  // namespace

std::int64_t RootVector::height() const { return std::accumulate(c_.begin(), c_.end(), std::int64_t{0}); }

bool RootVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x == 0; });
}

bool RootVector::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x >= 0; });
}

bool RootVector::nonpositive() const {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x <= 0; });
}

bool RootVector::leq(const RootVector& other) const {
  check_sizes(*this, other);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] > other.c_[i]) return false;
  return true;
}

RootVector& RootVector::operator+=(const RootVector& o) {
  check_sizes(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  check_sizes(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RootVector operator*(std::int64_t s, RootVector a) {
  for (auto& x : a.c_) x *= s;
  return a;
}

std::string RootVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

}  // namespace dwlat
