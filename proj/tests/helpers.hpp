#pragma once
// Shared fixtures and independent oracles for the test suites. Oracles here
// deliberately avoid the library's search paths: brute force only.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "skb/catalog.hpp"
#include "skb/digroup.hpp"
#include "skb/group.hpp"

namespace testing_support {

// Plain loop over all group laws, independent of FiniteGroup::validate.
inline bool table_is_group(const skb::Table& t) {
  const int n = static_cast<int>(t.size());
  if (n == 0) return false;
  for (const auto& row : t)
    if (static_cast<int>(row.size()) != n) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t[a][b] < 0 || t[a][b] >= n) return false;
  for (int a = 0; a < n; ++a)
    if (t[0][a] != a || t[a][0] != a) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  // inverses via search
  for (int a = 0; a < n; ++a) {
    bool has = false;
    for (int b = 0; b < n && !has; ++b) has = t[a][b] == 0 && t[b][a] == 0;
    if (!has) return false;
  }
  return true;
}

// Every automorphism by checking all bijections fixing 0. Usable to n ~ 8.
inline std::vector<std::vector<int>> brute_automorphisms(const skb::FiniteGroup& g) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  std::vector<int> tail(n > 1 ? n - 1 : 0);
  std::iota(tail.begin(), tail.end(), 1);
  std::vector<int> img(n);
  img[0] = 0;
  do {
    for (int i = 1; i < n; ++i) img[i] = tail[i - 1];
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) ok = img[g.op(a, b)] == g.op(img[a], img[b]);
    if (ok) out.push_back(img);
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

inline bool brute_isomorphic(const skb::FiniteGroup& a, const skb::FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  std::vector<int> tail(n > 1 ? n - 1 : 0);
  std::iota(tail.begin(), tail.end(), 1);
  std::vector<int> img(n);
  img[0] = 0;
  do {
    for (int i = 1; i < n; ++i) img[i] = tail[i - 1];
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) ok = img[a.op(x, y)] == b.op(img[x], img[y]);
    if (ok) return true;
  } while (std::next_permutation(tail.begin(), tail.end()));
  return n == 1;
}

inline skb::FiniteGroup cat(const char* id) { return *skb::catalog_group(id); }

// sign character of the catalog S3: transpositions are exactly the
// order-2 elements
inline std::vector<int> s3_sign() {
  const skb::FiniteGroup s3 = cat("S3");
  std::vector<int> f(6);
  for (int x = 0; x < 6; ++x) f[x] = s3.element_order(x) == 2 ? 1 : 0;
  return f;
}

inline int s3_transposition() {
  const skb::FiniteGroup s3 = cat("S3");
  for (int x = 0; x < 6; ++x)
    if (s3.element_order(x) == 2) return x;
  return -1;
}

}  // namespace testing_support
