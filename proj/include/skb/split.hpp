#pragma once
// Split epimorphisms of digroups: f: X ->> Y split by s, both two-law
// homomorphisms with f s = id. The failure of the two semidirect
// decompositions to agree is measured by the index
//   chi(x) = (x * s(f(x))^{-*}) o s(f(x)),
// a bijection fixing the kernel and the section, and fiberwise by the
// skewing index xi_y(k) = (k o s(y)) * s(y)^{-*}.

#include <vector>

#include "skb/config.hpp"
#include "skb/diag.hpp"
#include "skb/digroup.hpp"

namespace skb {

struct SplitPoint {
  Digroup X, Y;
  std::vector<int> f;  // size |X|, values in Y
  std::vector<int> s;  // size |Y|, values in X

  // Rejections: SizeMismatch, EntryOutOfRange, FNotStarHom(a,b),
  // FNotCircHom(a,b), SNotStarHom(y,y'), SNotCircHom(y,y'), NotSection(y).
  static Checked<SplitPoint> validate(Digroup X, Digroup Y, std::vector<int> f, std::vector<int> s);
};

struct KernelData {
  std::vector<int> elems;  // fiber of 0 under f, sorted; elems[0] == 0
  std::vector<int> pos;    // X index -> kernel position, -1 outside
  Digroup K;               // induced laws on positions
};

KernelData kernel_of(const SplitPoint& p);

// phi*_y(k) = s(y) * k * s(y)^{-*} and phi^o_y(k) = s(y) o k o s(y)^{-o},
// as validated actions of (Y,*) on (K,*) and (Y,o) on (K,o).
struct CanonicalActions {
  GroupAction phi_star, phi_circ;
};
CanonicalActions canonical_actions(const SplitPoint& p);

// chi as a permutation of the X carrier; verifies f chi = f, chi s = s,
// chi fixes the kernel pointwise, and bijectivity.
Perm index_of(const SplitPoint& p);

// xi[y] as permutations of kernel positions; verifies xi[0] = id and the
// translation identity chi(k * s(y)) = xi_y(k) * s(y).
std::vector<Perm> skewing_index_of(const SplitPoint& p);

// Five equivalent triviality conditions, evaluated independently.
struct TrivialIndexReport {
  bool chi_identity;          // chi = id
  bool translates_match;      // x o s(f(x))^{-o} = x * s(f(x))^{-*}
  bool kernel_translates;     // k o s(y) = k * s(y)
  bool xi_trivial;            // every xi_y = id
  bool lambda_fixes_section;  // lambda_k(s(y)) = s(y)
  bool all_agree() const {
    return chi_identity == translates_match && chi_identity == kernel_translates &&
           chi_identity == xi_trivial && chi_identity == lambda_fixes_section;
  }
};
TrivialIndexReport trivial_index_report(const SplitPoint& p);

// X = (Y x K, x_psi*, x_psio) with projection and injection; the actors of
// the two actions must form a digroup, as must the targets.
Checked<SplitPoint> semidirect_digroup(const GroupAction& psi_star, const GroupAction& psi_circ);

// Same star part, but the circ law is twisted through xi:
//   (y,k) o (y',k') = (y o y', xi_{y o y'}(xi_y^{-1}(k) o psi^o_y(xi_{y'}^{-1}(k')))).
// Requires xi[0] = id and every xi_y(0) = 0 (else the injection is not a
// circ-homomorphism). Verifies the result recovers (K, psi*, psio, xi).
// Errors: XiNotPointed, XiMovesUnit(y), NotGroupLaw, InternalCheckFail.
Checked<SplitPoint> twisted_semidirect(const GroupAction& psi_star, const GroupAction& psi_circ,
                                       const std::vector<Perm>& xi);

// Rebuilds the twisted semidirect product from the invariants of p and the
// two-law isomorphism theta(y,k) = k * s(y) onto X commuting with the
// projections and injections. Errors: InternalCheckFail.
struct Reconstruction {
  SplitPoint canonical;
  std::vector<int> theta;  // canonical carrier (y*|K|+k) -> X
};
Checked<Reconstruction> reconstruct(const SplitPoint& p);

// chi = id iff X is isomorphic, over Y and under K, to the untwisted double
// semidirect product on the canonical actions. Both sides are computed
// independently; gamma ranges over two-law automorphisms of the kernel.
// Errors: SearchBoundExceeded.
struct RecognitionReport {
  bool chi_trivial;
  bool iso_found;
  std::vector<int> alpha;  // X -> Y x K linearized, valid iff iso_found
  bool agree() const { return chi_trivial == iso_found; }
};
Checked<RecognitionReport> semidirect_recognition(const SplitPoint& p, const Limits& lim = {});

// xi_y phi^o_y = phi*_y lambda_{s(y)}|K, both equal to
// k |-> (s(y) o k) * s(y)^{-*}. Returns the first violation, if any.
Status skewing_compat_check(const SplitPoint& p);

}  // namespace skb
