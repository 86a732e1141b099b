#pragma once

// The set-theoretic Yang-Baxter map of a skew brace and its certificate.
//
// Convention (fixed here once and for all): for a skew brace (X,*,o) with
// lambda_a(b) = a^{-*} * (a o b), the solution is
//     r(a,b) = (u, u^{-o} o (a o b))   where u = lambda_a(b).
// On a trivial brace (G,*,*) this is (b, b^{-*} * a * b); on an abelian
// brace (A,+,+) it is the flip (b,a). The certificate -- braid identity on
// all triples, bijectivity, left and right nondegeneracy -- is the
// correctness anchor, not the formula's pedigree.

#include <utility>
#include <vector>

#include "skb/digroup.hpp"

namespace skb {

struct YBMap {
  int n = 0;
  std::vector<std::pair<int, int>> r;  // (a,b) stored at a*n + b

  const std::pair<int, int>& at(int a, int b) const { return r[a * n + b]; }
};

YBMap yb_map(const SkewBrace& B);

// Exhaustive certificate. braid_witness holds the first triple (a,b,c) where
// (r x id)(id x r)(r x id) and (id x r)(r x id)(id x r) disagree; empty when
// the braid identity holds. Nondegeneracy: b -> first(r(a,b)) is bijective
// for every a (left), a -> second(r(a,b)) is bijective for every b (right).
struct YBReport {
  bool braid_ok = false;
  bool bijective = false;
  bool left_nondegenerate = false;
  bool right_nondegenerate = false;
  std::vector<int> braid_witness;

  bool all_ok() const {
    return braid_ok && bijective && left_nondegenerate && right_nondegenerate;
  }
};

// Pre: r is total on {0..n-1}^2 with in-range entries.
YBReport certify_yb(const YBMap& r);

}  // namespace skb
