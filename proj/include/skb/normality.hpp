#pragma once
// Normal subobjects of digroups, ideals of skew braces, quotients by ideals,
// Huq commutation of subobjects, the single-law factorization criterion for split
// epimorphisms of groups, and finite-instance checks of the two normality
// reflections (kernel-functor and single-law exact-sequence versions).

#include <vector>

#include "skb/diag.hpp"
#include "skb/digroup.hpp"
#include "skb/group.hpp"
#include "skb/split.hpp"

namespace skb {

// A subset of a digroup carrier containing the unit and closed under both
// laws (hence under both inverses). validate canonicalizes elems to sorted
// order. Errors: EntryOutOfRange, DuplicateEntry, MissingUnit,
// NotClosed (witness {a, b}, detail names the law).
struct SubObject {
  Digroup parent;
  std::vector<int> elems;  // sorted, elems[0] == 0
  static Checked<SubObject> validate(Digroup parent, std::vector<int> elems);
};

// Normality of a subobject in the category of digroups:
//   i)   (K,*) is a normal subgroup of (G,*);
//   ii)  (K,o) is a normal subgroup of (G,o);
//   iii) y * x^{-*} in K  <=>  y o x^{-o} in K, for all (x, y).
struct DigroupNormalityReport {
  bool i, ii, iii;
  bool all() const { return i && ii && iii; }
};
DigroupNormalityReport is_normal_digroup(const SubObject& S);

// Ideal conditions for a subobject of a skew brace:
//   i)   (K,o) is a normal subgroup of (G,o);
//   ii)  K * a = a * K for all a;
//   iii) lambda_a(K) is contained in K for all a.
struct IdealReport {
  bool i, ii, iii;
  bool all() const { return i && ii && iii; }
};
IdealReport is_ideal(const SubObject& S);

// Quotient of a skew brace by an ideal. Classes are the o-cosets, labeled by
// ascending minimal representative (the unit's class is 0); the *-cosets are
// verified to coincide with the o-cosets and both induced laws are verified
// to be representative-independent rather than assumed. proj sends an
// element to its class and is a homomorphism for both laws; reps[c] is the
// minimal representative of class c.
// Errors: NotABrace, NotAnIdeal; WellDefinednessFail signals a bug.
struct Quotient {
  SkewBrace brace;
  std::vector<int> proj;
  std::vector<int> reps;
};
Checked<Quotient> quotient_by_ideal(const SubObject& S);

// Huq commutation [U, V] = 0 of two subobjects of one skew brace: the only
// candidate pairing U x V -> X is (u, v) |-> u * v, and the subobjects
// commute when u * v = v * u for all pairs and the pairing is a homomorphism
// from the componentwise product for both laws. Pre: same parent.
bool huq_commutes(const SubObject& U, const SubObject& V);

// A split epimorphism of groups with section: f o s = id.
// Errors: hom/shape diagnosis, NotSurjective, NotSection.
struct GroupSplit {
  FiniteGroup X, Y;
  std::vector<int> f, s;
  static Checked<GroupSplit> validate(FiniteGroup X, FiniteGroup Y, std::vector<int> f,
                                      std::vector<int> s);
  std::vector<int> kernel_elems() const;  // sorted fiber of 0 under f
  FiniteGroup kernel_group() const;       // induced law on kernel positions
};

// Factorization through a split epimorphism of groups: homomorphisms
// g_K: (Ker f, *) -> D and g_Y: Y -> D extend to a (unique) homomorphism
// g: X -> D with g(k * s(y)) = g_K(k) * g_Y(y) exactly when
// g_K(phi*_y(k)) * g_Y(y) = g_Y(y) * g_K(k) for all (y, k). exists reports
// that condition; on failure witness is the first violating (y, k); on
// success g is the verified extension.
// Errors: SizeMismatch (g_K not on the kernel / g_Y not on Y / targets
// differ), hom diagnosis.
struct FactorResult {
  bool exists;
  std::vector<int> witness;  // (y, k) violating the commutation condition
  GroupHom g;
  explicit operator bool() const { return exists; }
};
Checked<FactorResult> factor_through_point(const GroupSplit& P, const GroupHom& g_K,
                                           const GroupHom& g_Y);

// A monomorphism of split points over a fixed base: v embeds the inner point
// into the outer one with f' v = f and v s = s'. Both points must satisfy
// the skew-brace axioms. Errors: NotABrace, BaseMismatch, NotInjective,
// NotMultiplicative, SquareFail, SectionFail.
struct MonoOfPoints {
  SplitPoint inner, outer;
  std::vector<int> v;
  static Checked<MonoOfPoints> validate(SplitPoint inner, SplitPoint outer, std::vector<int> v);
};

// Kernel-functor normality reflection at a monomorphism of points: if the
// kernel restriction v|Ker f is an ideal of Ker f', then the composite
// Ker f -> X' must be an ideal of X'. Returns the implication's truth; a
// false return would falsify the reflection property.
bool ideal_reflection_check(const MonoOfPoints& m);

// Single-law diagram of exact rows over a common base: v embeds X into X'
// with f' v = f, both f and f' surjective. Errors: hom/shape diagnosis,
// NotSurjective, NotInjective, SquareFail.
struct GroupExactMono {
  FiniteGroup X, Xp, Y;
  std::vector<int> v, f, fp;
  static Checked<GroupExactMono> validate(FiniteGroup X, FiniteGroup Xp, FiniteGroup Y,
                                          std::vector<int> v, std::vector<int> f,
                                          std::vector<int> fp);
};

// Normality reflection for groups along an exact-row embedding: if
// v(Ker f) is normal in Ker f', then v(Ker f) is normal in X'. Returns the
// implication's truth.
bool group_normality_reflection_check(const GroupExactMono& d);

// All sub-points of a split point: subsets of X containing s(Y), closed
// under both laws, together with the inclusion as a mono of points. Used to
// generate reflection-check instances. Pre: p satisfies the brace axioms.
std::vector<MonoOfPoints> sub_points_of(const SplitPoint& p);

}  // namespace skb
