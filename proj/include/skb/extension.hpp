#pragma once

// Extensions of a skew brace by an abelian kernel, their directions, and the
// Baer sum that turns equivalence classes with a fixed direction into an
// abelian group.
//
// An exact sequence here is  A >--k--> X --f->> Y  where A, X, Y are skew
// braces, k is an injective two-law homomorphism, f is a surjective two-law
// homomorphism, k(A) is exactly the fiber of the unit under f, and A is of
// abelian type (one commutative law shared by both operations). Under these
// hypotheses the lambda maps of X restrict trivially to the kernel, are
// constant along fibers of f, the two laws agree on Mal'tsev words of fiber
// triples, and the skewing index of f is well defined; validate_sequence
// checks all of it and reports a witness on failure.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skb/config.hpp"
#include "skb/diag.hpp"
#include "skb/digroup.hpp"
#include "skb/group.hpp"
#include "skb/normality.hpp"
#include "skb/perm.hpp"
#include "skb/split.hpp"

namespace skb {

// Plain data; validate_sequence performs every check. k maps kernel indices
// to X, f maps X to Y.
struct ExactSequence {
  SkewBrace A;
  SkewBrace X;
  SkewBrace Y;
  std::vector<int> k;
  std::vector<int> f;
};

// Full validation: shapes, injective/surjective two-law homomorphisms,
// exactness (k(A) equals the unit fiber of f), abelian-type kernel, and the
// four derived facts listed above. First failure wins; witnesses name the
// offending elements.
Status validate_sequence(const ExactSequence& E);

// The direction of a sequence: the conjugation actions of Y on A under each
// law, the skewing index xi (per y, a permutation of A), and the restricted
// lambda table lambda_f (per y, the action of lambda_x on A for any x in the
// fiber of y). lambda_f is derived data, recorded for convenience; equality
// compares the three defining tables.
struct Direction {
  GroupAction phi_star;         // (Y,*) acting on (A,+) by *-conjugation
  GroupAction phi_circ;         // (Y,o) acting on (A,+) by o-conjugation
  std::vector<Perm> xi;         // y -> (a -> (a o x) * x^-1), any rep x
  std::vector<Perm> lambda_f;   // y -> restriction of lambda_x to A

  bool operator==(const Direction& other) const {
    return phi_star.perms == other.phi_star.perms &&
           phi_circ.perms == other.phi_circ.perms && xi == other.xi;
  }
};

// Name of the first defining component where the two directions differ
// ("phi_star", "phi_circ" or "xi"), or nullopt when equal.
std::optional<std::string> direction_mismatch(const Direction& a,
                                              const Direction& b);

// Computes the direction, verifying that every fiber representative induces
// the same conjugation permutations and that the compatibility law
// xi_y . phi_circ_y = phi_star_y . lambda_f_y holds for every y.
Checked<Direction> direction_of(const ExactSequence& E);

// Pullback of two sequences over the same Y (compared tablewise; otherwise
// CodomainMismatch). Carrier: lexicographically sorted pairs (x, x') with
// f(x) = f'(x'), so (0,0) sits at index 0. Laws act componentwise; the result
// is verified to be a skew brace and both projections two-law homomorphisms.
struct Pullback {
  SkewBrace brace;
  std::vector<std::pair<int, int>> carrier;  // index -> (x, x')
  std::vector<int> index;  // x * |X'| + x' -> carrier index, -1 if absent
};
Checked<Pullback> pullback(const ExactSequence& E, const ExactSequence& Ep);

// The antidiagonal copy of A inside the pullback: a -> (k(-a), k'(a)).
// Requires equal kernels, codomains and directions (DirectionMismatch names
// the first differing component). The returned subobject lives in the
// pullback's digroup and is verified to be an ideal; the identity
// lambda_x(a) = lambda_{x'}(a) for fiber pairs, which drives the proof, is
// checked directly.
Checked<SubObject> antidiagonal(const ExactSequence& E,
                                const ExactSequence& Ep);

// Baer sum: quotient of the pullback by the antidiagonal. The kernel embeds
// as the class of (k(a), k'(0)) (equivalently (k(0), k'(a))), the projection
// is induced by either f. The result is validated as a sequence and verified
// to carry the common direction, skewing index included.
Checked<ExactSequence> baer_sum(const ExactSequence& E,
                                const ExactSequence& Ep);

// Inverse for the Baer sum: same X, Y, f; the kernel embedding is reversed,
// a -> k(-a).
Checked<ExactSequence> baer_inverse(const ExactSequence& E);

// Unit for the Baer sum: the split sequence assembled from the direction's
// actions and skewing index. Fails with IncompatibleDirection when the triple
// does not assemble into a skew brace or contradicts the recorded lambda_f.
Checked<ExactSequence> baer_unit(const Direction& d);

// The sequence of a split point whose kernel is of abelian type.
Checked<ExactSequence> point_sequence(const SplitPoint& p);

// Equivalence of extensions: a two-law isomorphism v with v . k = k' and
// f' . v = f. The search walks fiber transversals -- on each fiber v is
// determined by a single kernel translate -- and is bounded by
// Limits::equiv_max_x (SearchBoundExceeded beyond it). found == false means
// the exhaustive search proved there is no equivalence.
struct ExtEquivalence {
  bool found = false;
  std::vector<int> v;  // X -> X', empty when not found
};
Checked<ExtEquivalence> ext_equivalent(const ExactSequence& E,
                                       const ExactSequence& Ep,
                                       const Limits& lim = {});

}  // namespace skb
