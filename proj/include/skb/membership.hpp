#pragma once
// Deciding when a digroup split point lies in the category of skew braces.
// The decisive quantity is which lambda_x are *-homomorphisms: X is a brace
// iff all of them are, and x = s(y) o k splits that question into a section
// part and a kernel part, each with a three-condition decomposition form
// that is necessary in general and equivalent when the index is trivial.

#include <vector>

#include "skb/diag.hpp"
#include "skb/split.hpp"

namespace skb {

// Common shape of the two lambda reports: alpha is the one-line homomorphy
// condition, beta_* the split-out decomposition conditions. alpha always
// implies all three beta parts, and on points with a trivial index the two
// sides are equivalent. In general the converse fails: the beta parts
// constrain lambda only on kernel values and section values separately, so a
// nontrivial skewing index can satisfy them while lambda breaks on mixed
// products k * s(y). agree() records whether the point is equivalence-tight.
struct LambdaHomReport {
  bool alpha;
  bool beta_i, beta_ii, beta_iii;
  std::vector<int> alpha_witness;  // first (x, a, b) with lambda_x(a*b) off
  bool beta() const { return beta_i && beta_ii && beta_iii; }
  bool agree() const { return alpha == beta(); }
};

// alpha: every lambda_{s(y)} is a *-homomorphism of X.
// beta: i) Y is a skew brace; ii) lambda_{s(y)}|K is a *-automorphism of K;
// iii) lambda_{s(gamma)} phi*_y(k) * s(lambdaY_gamma(y))
//        = s(lambdaY_gamma(y)) * lambda_{s(gamma)}(k).
LambdaHomReport section_lambda_report(const SplitPoint& p);

// alpha: every lambda_k (k in K) is a *-homomorphism of X.
// beta: i) K is a skew brace; ii) lambda_k s is a homomorphic section of f;
// iii) lambda_k phi*_y(kbar) * lambda_k(s(y)) = lambda_k(s(y)) * lambda_k(kbar).
LambdaHomReport kernel_lambda_report(const SplitPoint& p);

// Membership by the two-condition theorem (all lambda_{s(y)} and all
// lambda_k are *-homomorphisms), cross-checked against the direct brace
// axioms on X. The two routes agree on every digroup split point.
struct MembershipVerdict {
  bool via_conditions;
  bool via_brace_axioms;
  std::vector<int> witness;  // first (x, a, b) violating *-homomorphy
  bool in_skb() const { return via_brace_axioms; }
  bool agree() const { return via_conditions == via_brace_axioms; }
};
MembershipVerdict skb_membership(const SplitPoint& p);

// The six-part decomposition report: i) Y and K are braces; ii) the kernel
// restriction of lambda_{s(y)} is a *-automorphism and lambda_k s is a
// homomorphic section; iii) the two displayed commutation equations. All six
// parts are necessary for membership, and jointly sufficient on points with
// a trivial index; with a nontrivial skewing index they can all hold for a
// point outside SkB (same mixed-product blind spot as the lambda reports).
struct MembershipReport {
  bool y_brace, k_brace;
  bool section_restriction;  // lambda_{s(y)}|K in Aut(K,*)
  bool kernel_section;       // lambda_k s homomorphic section of f
  bool kernel_equation;      // lambda_k phi*_y(kbar) * lambda_k s(y) = ...
  bool section_equation;     // lambda_{s(gamma)} phi*_y(k) * s lambdaY_gamma(y) = ...
  bool holds() const {
    return y_brace && k_brace && section_restriction && kernel_section &&
           kernel_equation && section_equation;
  }
};
MembershipReport membership_report(const SplitPoint& p);

// For a double semidirect product of braces: the point (Y x K, x_psi*, x_psio)
// lies in SkB iff c1) psi_{o y} is a *-automorphism of K; c2) psi_{* y}
// commutes with every lambdaK_k; c3) psi_{* (gamma o y) * gamma^{-*}} =
// psi_{o gamma} psi_{* y} psi_{o gamma}^{-1}.
struct ActionPairReport {
  bool c1, c2, c3;
  std::vector<int> c1_witness;  // (y, a, b)
  std::vector<int> c2_witness;  // (y, k, a)
  std::vector<int> c3_witness;  // (gamma, y, a)
  bool all() const { return c1 && c2 && c3; }
};
// psi_star: (Y,*) acting on (K,*); psi_circ: (Y,o) acting on (K,o).
// Errors: SizeMismatch and action diagnosis when the actors/targets do not
// match the braces.
Checked<ActionPairReport> action_pair_report(const SkewBrace& Y, const SkewBrace& K,
                                             const GroupAction& psi_star,
                                             const GroupAction& psi_circ);

// (Y x A, x_psi, x_op) over (Y,*,*^op): any action psi of (Y,*) on an
// abelian (A,+) gives a skew-brace split point with kernel (A,+,+).
// Errors: NotAbelian; membership failure would signal a bug (logic_error).
Checked<SplitPoint> make_op_semidirect_point(const GroupAction& psi);

// (Y x A, x, x_psi) over (Y,*,o): Y a brace, psi an action of (Y,o) on an
// abelian (A,+). Errors: NotAbelian, SizeMismatch (actor is not (Y,o)).
Checked<SplitPoint> make_circ_semidirect_point(const SkewBrace& Y, const GroupAction& psi);

// (B x A, x, x_psi) or (B x A, x_psi, x) over (B,+,+) for abelian A, B.
enum class MixedSide { circ_twisted, star_twisted };
Checked<SplitPoint> make_abelian_mixed_point(const GroupAction& psi, MixedSide side);

}  // namespace skb
