#include "skb/yang_baxter.hpp"

#include <array>

namespace skb {

YBMap yb_map(const SkewBrace& B) {
  const int n = B.order();
  const FiniteGroup& c = B.circ();
  YBMap m;
  m.n = n;
  m.r.reserve(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int u = B.lambda().rows[a](b);
      m.r.emplace_back(u, c.op(c.inv(u), c.op(a, b)));
    }
  return m;
}

namespace {

// one triple through (r x id)(id x r)(r x id), factors applied left to right
std::array<int, 3> braid_left(const YBMap& m, int a, int b, int c) {
  auto [u1, v1] = m.at(a, b);
  auto [u2, v2] = m.at(v1, c);
  auto [u3, v3] = m.at(u1, u2);
  return {u3, v3, v2};
}

// and through (id x r)(r x id)(id x r)
std::array<int, 3> braid_right(const YBMap& m, int a, int b, int c) {
  auto [u1, v1] = m.at(b, c);
  auto [u2, v2] = m.at(a, u1);
  auto [u3, v3] = m.at(v2, v1);
  return {u2, u3, v3};
}

}  // namespace

YBReport certify_yb(const YBMap& m) {
  const int n = m.n;
  YBReport rep;

  rep.braid_ok = true;
  for (int a = 0; a < n && rep.braid_ok; ++a)
    for (int b = 0; b < n && rep.braid_ok; ++b)
      for (int c = 0; c < n && rep.braid_ok; ++c)
        if (braid_left(m, a, b, c) != braid_right(m, a, b, c)) {
          rep.braid_ok = false;
          rep.braid_witness = {a, b, c};
        }

  std::vector<char> hit(n * n, 0);
  rep.bijective = true;
  for (const auto& [u, v] : m.r) {
    if (hit[u * n + v]) {
      rep.bijective = false;
      break;
    }
    hit[u * n + v] = 1;
  }

  rep.left_nondegenerate = true;
  for (int a = 0; a < n && rep.left_nondegenerate; ++a) {
    std::vector<char> seen(n, 0);
    for (int b = 0; b < n; ++b) {
      const int u = m.at(a, b).first;
      if (seen[u]) {
        rep.left_nondegenerate = false;
        break;
      }
      seen[u] = 1;
    }
  }
  rep.right_nondegenerate = true;
  for (int b = 0; b < n && rep.right_nondegenerate; ++b) {
    std::vector<char> seen(n, 0);
    for (int a = 0; a < n; ++a) {
      const int v = m.at(a, b).second;
      if (seen[v]) {
        rep.right_nondegenerate = false;
        break;
      }
      seen[v] = 1;
    }
  }
  return rep;
}

}  // namespace skb
