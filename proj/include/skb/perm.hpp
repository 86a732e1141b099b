#pragma once
// Permutations of {0..n-1} stored as image vectors. Composition is
// (a*b)(x) = a(b(x)), i.e. b acts first.

#include <compare>
#include <numeric>
#include <optional>
#include <vector>

namespace skb {

inline bool is_bijection(const std::vector<int>& image) {
  std::vector<char> seen(image.size(), 0);
  for (int v : image) {
    if (v < 0 || v >= static_cast<int>(image.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

class Perm {
 public:
  Perm() = default;
  explicit Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

  static std::optional<Perm> checked(std::vector<int> image) {
    if (!is_bijection(image)) return std::nullopt;
    Perm p;
    p.img_ = std::move(image);
    return p;
  }
  // Caller guarantees bijectivity.
  static Perm unchecked(std::vector<int> image) {
    Perm p;
    p.img_ = std::move(image);
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& image() const { return img_; }

  Perm inverse() const {
    std::vector<int> inv(img_.size());
    for (int x = 0; x < size(); ++x) inv[img_[x]] = x;
    return unchecked(std::move(inv));
  }

  bool is_identity() const {
    for (int x = 0; x < size(); ++x)
      if (img_[x] != x) return false;
    return true;
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    std::vector<int> img(a.img_.size());
    for (int x = 0; x < a.size(); ++x) img[x] = a.img_[b.img_[x]];
    return unchecked(std::move(img));
  }

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

}  // namespace skb
