#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace delzant {

// Visits every k-subset of {0..n-1} in lexicographic order. The visitor
// returns false to stop early.
template <class Visitor>
void for_each_combination(std::size_t n, std::size_t k, Visitor&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(std::span<const std::size_t>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Visits every a in Z_{>=0}^d with sum(a) <= max_total in lexicographic order.
template <class Visitor>
void for_each_bounded_composition(std::size_t d, unsigned max_total, Visitor&& visit) {
  std::vector<unsigned> a(d, 0);
  std::vector<unsigned> prefix(d + 1, 0);  // prefix[i] = a[0] + ... + a[i-1]
  while (true) {
    if (!visit(std::span<const unsigned>(a))) return;
    // Increment the last coordinate that still has room, zero the tail.
    std::size_t i = d;
    while (i > 0) {
      --i;
      unsigned tail_free = max_total - prefix[i];
      if (a[i] < tail_free) {
        ++a[i];
        for (std::size_t j = i + 1; j < d; ++j) a[j] = 0;
        for (std::size_t j = i; j < d; ++j) prefix[j + 1] = prefix[j] + a[j];
        break;
      }
      if (i == 0) return;
    }
    if (d == 0) return;
  }
}

}  // namespace delzant
