#pragma once
// Finite groups as multiplication tables on {0..n-1} with the identity
// pinned at index 0. Everything downstream (digroups, braces, split points)
// is built out of these tables.

#include <optional>
#include <vector>

#include "skb/diag.hpp"
#include "skb/perm.hpp"

namespace skb {

using Table = std::vector<std::vector<int>>;

class FiniteGroup {
 public:
  static constexpr int id = 0;

  FiniteGroup() : n_(1), table_{0}, inv_{0} {}

  // Accepts a square table over {0..n-1}; rejections name the first broken
  // law: BadShape, EntryOutOfRange(a,b), NoIdentityAtZero(a), NotLatinRow(a),
  // NotLatinCol(b), NoInverse(a), NotAssociative(a,b,c).
  static Checked<FiniteGroup> validate(const Table& table);
  static Checked<FiniteGroup> validate_flat(int n, std::vector<int> flat);

  int order() const { return n_; }
  int op(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  // g x g^{-1}
  int conj(int g, int x) const { return op(op(g, x), inv(g)); }

  bool commutative() const;
  int element_order(int a) const;

  // Same carrier, transposed table; always a group.
  FiniteGroup opposite() const;

  Table rows() const;
  const std::vector<int>& flat() const { return table_; }

  bool operator==(const FiniteGroup&) const = default;

 private:
  FiniteGroup(int n, std::vector<int> t, std::vector<int> inv)
      : n_(n), table_(std::move(t)), inv_(std::move(inv)) {}

  int n_;
  std::vector<int> table_;  // row-major n*n
  std::vector<int> inv_;
};

struct GroupHom {
  FiniteGroup dom, cod;
  std::vector<int> map;
};

// NotUnital, NotMultiplicative(a,b), SizeMismatch, EntryOutOfRange(a).
Status validate_hom(const GroupHom& h);
Checked<GroupHom> make_hom(FiniteGroup dom, FiniteGroup cod, std::vector<int> map);

// Left action by automorphisms: perms[0] = id, perms[y *_actor y'] =
// perms[y] * perms[y'], every perms[y] an automorphism of target.
struct GroupAction {
  FiniteGroup actor, target;
  std::vector<Perm> perms;
};

// NotAutomorphism(y), NotMultiplicative(y,y'), NotUnital, SizeMismatch.
Status validate_action(const GroupAction& psi);
GroupAction trivial_action(FiniteGroup actor, FiniteGroup target);

// (y,k)(y',k') = (y y', k psi_y(k')) on pairs linearized as y*|K|+k.
// Propagates an action diagnosis; the result always validates.
Checked<FiniteGroup> semidirect_product(const GroupAction& psi);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// All automorphisms, sorted by image vector. Exhausts bijections fixing 0
// for order <= 8, otherwise backtracks over generator images.
std::vector<Perm> automorphisms(const FiniteGroup& g);

// All homomorphisms dom -> cod, sorted by map vector.
std::vector<GroupHom> all_homs(const FiniteGroup& dom, const FiniteGroup& cod);

// All actions of y on k, sorted; one entry per homomorphism y -> Aut(k).
std::vector<GroupAction> all_actions(const FiniteGroup& y, const FiniteGroup& k);

// Composition table of a composition-closed set of permutations containing
// the identity. The set is sorted (identity lands at index 0) and the sorted
// order is written back.
FiniteGroup perm_table_group(std::vector<Perm>& perms);

std::optional<Perm> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b);

// Every group table on {0..n-1} with identity 0, by Latin-square
// backtracking plus an associativity filter. Guarded to n <= 6.
std::vector<FiniteGroup> all_group_tables(int n);

}  // namespace skb
