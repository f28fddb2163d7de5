#pragma once

#include <span>
#include <utility>

namespace dwlat {

template <typename F>
void for_each_in_box(const AffineDiagram& d, std::span<const std::int64_t> base_labels,
                     const std::vector<std::int64_t>& hi, int sign, F&& f) {
  const std::size_t n = hi.size();
  RootVector offset(n);
  std::vector<std::int64_t> lab(base_labels.begin(), base_labels.end());
  while (true) {
    f(std::as_const(offset), std::as_const(lab));
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (offset[i] < hi[i]) {
        ++offset[i];
        for (std::size_t j = 0; j < n; ++j) lab[j] += sign * d.a(static_cast<int>(j), static_cast<int>(i));
        break;
      }
      for (std::size_t j = 0; j < n; ++j) lab[j] -= sign * offset[i] * d.a(static_cast<int>(j), static_cast<int>(i));
      offset[i] = 0;
    }
    if (i == n) return;
  }
}

}  // namespace dwlat
