#pragma once
// Two group laws on one carrier with the shared unit 0. A skew brace is a
// digroup whose laws interact through the compatibility law
//   a o (b * c) = (a o b) * a^{-*} * (a o c),
// equivalently: every lambda_a(b) = a^{-*} * (a o b) is a *-automorphism and
// a |-> lambda_a is multiplicative for o.

#include <vector>

#include "skb/config.hpp"
#include "skb/diag.hpp"
#include "skb/group.hpp"

namespace skb {

struct Digroup {
  FiniteGroup star, circ;
  int order() const { return star.order(); }
  bool operator==(const Digroup&) const = default;
};

// Validates both tables as groups and the shared carrier size.
Checked<Digroup> validate_digroup(const Table& star, const Table& circ);
// For laws already validated individually.
Checked<Digroup> make_digroup(FiniteGroup star, FiniteGroup circ);

struct LambdaTable {
  std::vector<Perm> rows;  // rows[a] = lambda_a, always a bijection
  bool operator==(const LambdaTable&) const = default;
};

LambdaTable lambda_of(const Digroup& d);

// The three brace characterizations, evaluated independently. They agree on
// every digroup; a disagreement would be an implementation bug.
struct BraceReport {
  struct Verdict {
    bool ok = true;
    std::vector<int> witness;  // first failing tuple
  };
  Verdict compat;      // a o (b*c) = (a o b) * a^{-*} * (a o c), witness (a,b,c)
  Verdict lambda_mult; // lambda_{a o b} = lambda_a lambda_b, witness (a,b)
  Verdict lambda_hom;  // lambda_a(b*c) = lambda_a(b) * lambda_a(c), witness (a,b,c)
  bool all_ok() const { return compat.ok && lambda_mult.ok && lambda_hom.ok; }
  bool agree() const { return compat.ok == (lambda_mult.ok && lambda_hom.ok); }
};

BraceReport check_brace(const Digroup& d);

class SkewBrace {
 public:
  // Runs check_brace; rejects with the first failing verdict.
  static Checked<SkewBrace> validate(Digroup d);

  const Digroup& digroup() const { return d_; }
  const FiniteGroup& star() const { return d_.star; }
  const FiniteGroup& circ() const { return d_.circ; }
  const LambdaTable& lambda() const { return lambda_; }
  int order() const { return d_.order(); }

  bool operator==(const SkewBrace& o) const { return d_ == o.d_; }

 private:
  SkewBrace(Digroup d, LambdaTable l) : d_(std::move(d)), lambda_(std::move(l)) {}
  Digroup d_;
  LambdaTable lambda_;
};

// Builds circ(a,b) = a * lam[a](b) and validates the result is a skew brace.
// Errors: LambdaNotPointed, LambdaNotAutomorphism(a), NotGroupLaw,
// LambdaNotMultiplicative(a,b).
Checked<SkewBrace> brace_from_lambda(const FiniteGroup& star, const std::vector<Perm>& lam);

// Every skew brace with this exact star table, in lexicographic order of the
// circ table. Errors: BoundExceeded.
Checked<std::vector<SkewBrace>> enumerate_braces(const FiniteGroup& star, const Limits& lim = {});

// Deduplicate up to simultaneous isomorphism (a star-automorphism carrying
// one circ table to the other). Keeps the first representative of each class.
std::vector<SkewBrace> dedupe_braces(const std::vector<SkewBrace>& braces);

// Both laws equal and commutative.
bool is_abelian_brace(const SkewBrace& b);

SkewBrace trivial_brace(const FiniteGroup& g);   // (G,*,*)
SkewBrace opposite_brace(const FiniteGroup& g);  // (G,*,*^op)

}  // namespace skb
