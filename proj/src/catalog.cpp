#include "skb/catalog.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace skb {

namespace {

FiniteGroup from_flat(int n, std::vector<int> t) {
  auto checked = FiniteGroup::validate_flat(n, std::move(t));
  if (!checked) throw std::logic_error("catalog table invalid: " + checked.diag().str());
  return checked.value();
}

FiniteGroup cyclic(int n) {
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = (a + b) % n;
  return from_flat(n, std::move(t));
}

FiniteGroup symmetric3() {
  // permutations of {0,1,2} sorted lexicographically; identity first
  std::vector<std::array<int, 3>> ps;
  std::array<int, 3> p{0, 1, 2};
  do ps.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int n = 6;
  std::vector<int> t(36);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::array<int, 3> c;
      for (int x = 0; x < 3; ++x) c[x] = ps[i][ps[j][x]];
      t[static_cast<size_t>(i) * n + j] =
          static_cast<int>(std::find(ps.begin(), ps.end(), c) - ps.begin());
    }
  return from_flat(n, std::move(t));
}

FiniteGroup dihedral4() {
  // r^i f^j with f r = r^{-1} f; index = j*4 + i
  const int n = 8;
  std::vector<int> t(64);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) {
          const int rot = ((j ? i - k : i + k) % 4 + 4) % 4;
          const int flip = j ^ l;
          t[static_cast<size_t>(j * 4 + i) * n + (l * 4 + k)] = flip * 4 + rot;
        }
  return from_flat(n, std::move(t));
}

FiniteGroup quaternion8() {
  // elements (axis, sign): 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k
  auto enc = [](int axis, int sign) { return axis == 0 ? (sign > 0 ? 0 : 1) : 2 * axis + (sign > 0 ? 0 : 1); };
  auto axis_of = [](int e) { return e < 2 ? 0 : e / 2; };
  auto sign_of = [](int e) { return (e == 0 || (e >= 2 && e % 2 == 0)) ? 1 : -1; };
  // axis multiplication: result axis and sign for i,j,k units
  auto unit_mul = [](int a, int b, int& axis, int& sign) {
    if (a == 0) { axis = b; sign = 1; return; }
    if (b == 0) { axis = a; sign = 1; return; }
    if (a == b) { axis = 0; sign = -1; return; }  // i*i = -1
    // i*j=k, j*k=i, k*i=j and the reverses are negative
    static constexpr int other[4][4] = {{0,0,0,0},{0,0,3,2},{0,3,0,1},{0,2,1,0}};
    axis = other[a][b];
    sign = ((a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1)) ? 1 : -1;
  };
  const int n = 8;
  std::vector<int> t(64);
  for (int e = 0; e < n; ++e)
    for (int f2 = 0; f2 < n; ++f2) {
      int axis, sign;
      unit_mul(axis_of(e), axis_of(f2), axis, sign);
      sign *= sign_of(e) * sign_of(f2);
      t[static_cast<size_t>(e) * n + f2] = enc(axis, sign);
    }
  return from_flat(n, std::move(t));
}

struct Entry {
  std::string id;
  FiniteGroup g;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> es = [] {
    std::vector<Entry> v;
    v.push_back({"Z1", cyclic(1)});
    v.push_back({"Z2", cyclic(2)});
    v.push_back({"Z3", cyclic(3)});
    v.push_back({"Z4", cyclic(4)});
    v.push_back({"V4", direct_product(cyclic(2), cyclic(2))});
    v.push_back({"Z5", cyclic(5)});
    v.push_back({"Z6", cyclic(6)});
    v.push_back({"S3", symmetric3()});
    v.push_back({"Z7", cyclic(7)});
    v.push_back({"Z8", cyclic(8)});
    v.push_back({"Z4xZ2", direct_product(cyclic(4), cyclic(2))});
    v.push_back({"Z2xZ2xZ2", direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2))});
    v.push_back({"D4", dihedral4()});
    v.push_back({"Q8", quaternion8()});
    return v;
  }();
  return es;
}

}  // namespace

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : entries()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::optional<FiniteGroup> catalog_group(std::string_view id) {
  for (const auto& e : entries())
    if (e.id == id) return e.g;
  return std::nullopt;
}

std::vector<FiniteGroup> catalog_groups_of_order(int n) {
  std::vector<FiniteGroup> v;
  for (const auto& e : entries())
    if (e.g.order() == n) v.push_back(e.g);
  return v;
}

std::optional<std::string> catalog_id_of(const FiniteGroup& g) {
  for (const auto& e : entries())
    if (e.g == g) return e.id;
  return std::nullopt;
}

}  // namespace skb
