#include "skb/membership.hpp"

#include <stdexcept>

namespace skb {

namespace {

// First (x, a, b) with lambda_x(a * b) != lambda_x(a) * lambda_x(b), for x
// ranging over the given elements; empty if none.
std::vector<int> star_hom_violation(const Digroup& d, const LambdaTable& lt,
                                    const std::vector<int>& xs) {
  const int n = d.order();
  for (int x : xs)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (lt.rows[x](d.star.op(a, b)) != d.star.op(lt.rows[x](a), lt.rows[x](b)))
          return {x, a, b};
  return {};
}

bool restriction_is_kernel_automorphism(const SplitPoint& p, const KernelData& kd,
                                        const LambdaTable& lt) {
  // lambda_{s(y)} must stabilize K and restrict to a *-automorphism of K:
  // homomorphy and bijectivity onto K are both checked outright.
  const int nk = static_cast<int>(kd.elems.size());
  for (int y = 0; y < p.Y.order(); ++y) {
    const Perm& l = lt.rows[p.s[y]];
    std::vector<char> hit(nk, 0);
    for (int k : kd.elems) {
      const int img = kd.pos[l(k)];
      if (img < 0 || hit[img]) return false;
      hit[img] = 1;
    }
    for (int i = 0; i < nk; ++i)
      for (int j = 0; j < nk; ++j)
        if (l(kd.elems[kd.K.star.op(i, j)]) != p.X.star.op(l(kd.elems[i]), l(kd.elems[j])))
          return false;
  }
  return true;
}

bool lambda_k_s_homomorphic_section(const SplitPoint& p, const LambdaTable& lt) {
  // y |-> lambda_k(s(y)) must be a *-homomorphism and a section of f
  for (int k : kernel_of(p).elems) {
    const Perm& l = lt.rows[k];
    for (int y = 0; y < p.Y.order(); ++y) {
      if (p.f[l(p.s[y])] != y) return false;
      for (int z = 0; z < p.Y.order(); ++z)
        if (l(p.s[p.Y.star.op(y, z)]) != p.X.star.op(l(p.s[y]), l(p.s[z]))) return false;
    }
  }
  return true;
}

// phi*_y(k) = s(y) * k * s(y)^{-*} as an element of X.
int phi_star_elem(const SplitPoint& p, int y, int k) {
  const FiniteGroup& st = p.X.star;
  return st.op(st.op(p.s[y], k), st.inv(p.s[y]));
}

bool kernel_commutation_equation(const SplitPoint& p, const KernelData& kd,
                                 const LambdaTable& lt) {
  // lambda_k phi*_y(kbar) * lambda_k(s(y)) = lambda_k(s(y)) * lambda_k(kbar)
  const FiniteGroup& st = p.X.star;
  for (int y = 0; y < p.Y.order(); ++y)
    for (int k : kd.elems)
      for (int kb : kd.elems) {
        const Perm& l = lt.rows[k];
        const int lhs = st.op(l(phi_star_elem(p, y, kb)), l(p.s[y]));
        const int rhs = st.op(l(p.s[y]), l(kb));
        if (lhs != rhs) return false;
      }
  return true;
}

bool section_commutation_equation(const SplitPoint& p, const KernelData& kd,
                                  const LambdaTable& lt) {
  // lambda_{s(gamma)} phi*_y(k) * s(lambdaY_gamma(y)) =
  //   s(lambdaY_gamma(y)) * lambda_{s(gamma)}(k)
  const FiniteGroup& st = p.X.star;
  const LambdaTable ly = lambda_of(p.Y);
  for (int g = 0; g < p.Y.order(); ++g)
    for (int y = 0; y < p.Y.order(); ++y)
      for (int k : kd.elems) {
        const Perm& l = lt.rows[p.s[g]];
        const int sy = p.s[ly.rows[g](y)];
        if (st.op(l(phi_star_elem(p, y, k)), sy) != st.op(sy, l(k))) return false;
      }
  return true;
}

}  // namespace

LambdaHomReport section_lambda_report(const SplitPoint& p) {
  const LambdaTable lt = lambda_of(p.X);
  const KernelData kd = kernel_of(p);
  LambdaHomReport r;
  std::vector<int> sections;
  for (int y = 0; y < p.Y.order(); ++y) sections.push_back(p.s[y]);
  r.alpha_witness = star_hom_violation(p.X, lt, sections);
  r.alpha = r.alpha_witness.empty();
  r.beta_i = check_brace(p.Y).all_ok();
  r.beta_ii = restriction_is_kernel_automorphism(p, kd, lt);
  r.beta_iii = section_commutation_equation(p, kd, lt);
  return r;
}

LambdaHomReport kernel_lambda_report(const SplitPoint& p) {
  const LambdaTable lt = lambda_of(p.X);
  const KernelData kd = kernel_of(p);
  LambdaHomReport r;
  r.alpha_witness = star_hom_violation(p.X, lt, kd.elems);
  r.alpha = r.alpha_witness.empty();
  r.beta_i = check_brace(kd.K).all_ok();
  r.beta_ii = lambda_k_s_homomorphic_section(p, lt);
  r.beta_iii = kernel_commutation_equation(p, kd, lt);
  return r;
}

MembershipVerdict skb_membership(const SplitPoint& p) {
  const LambdaTable lt = lambda_of(p.X);
  MembershipVerdict v;

  std::vector<int> sections;
  for (int y = 0; y < p.Y.order(); ++y) sections.push_back(p.s[y]);
  std::vector<int> w = star_hom_violation(p.X, lt, sections);
  if (w.empty()) w = star_hom_violation(p.X, lt, kernel_of(p).elems);
  v.via_conditions = w.empty();
  v.witness = std::move(w);

  const BraceReport br = check_brace(p.X);
  v.via_brace_axioms = br.all_ok();
  if (v.witness.empty() && !br.lambda_hom.ok) v.witness = br.lambda_hom.witness;
  return v;
}

MembershipReport membership_report(const SplitPoint& p) {
  const LambdaTable lt = lambda_of(p.X);
  const KernelData kd = kernel_of(p);
  MembershipReport r;
  r.y_brace = check_brace(p.Y).all_ok();
  r.k_brace = check_brace(kd.K).all_ok();
  r.section_restriction = restriction_is_kernel_automorphism(p, kd, lt);
  r.kernel_section = lambda_k_s_homomorphic_section(p, lt);
  r.kernel_equation = kernel_commutation_equation(p, kd, lt);
  r.section_equation = section_commutation_equation(p, kd, lt);
  return r;
}

Checked<ActionPairReport> action_pair_report(const SkewBrace& Y, const SkewBrace& K,
                                             const GroupAction& psi_star,
                                             const GroupAction& psi_circ) {
  if (psi_star.actor != Y.star() || psi_star.target != K.star())
    return Checked<ActionPairReport>(
        make_diag("SizeMismatch", {}, "psi_star must act from (Y,*) on (K,*)"));
  if (psi_circ.actor != Y.circ() || psi_circ.target != K.circ())
    return Checked<ActionPairReport>(
        make_diag("SizeMismatch", {}, "psi_circ must act from (Y,o) on (K,o)"));
  if (Status st = validate_action(psi_star)) return Checked<ActionPairReport>(*st);
  if (Status st = validate_action(psi_circ)) return Checked<ActionPairReport>(*st);

  const int ny = Y.order(), nk = K.order();
  ActionPairReport r;

  // c1: psi_{o y} is a *-automorphism of K
  r.c1 = true;
  for (int y = 0; y < ny && r.c1; ++y)
    for (int a = 0; a < nk && r.c1; ++a)
      for (int b = 0; b < nk && r.c1; ++b)
        if (psi_circ.perms[y](K.star().op(a, b)) !=
            K.star().op(psi_circ.perms[y](a), psi_circ.perms[y](b))) {
          r.c1 = false;
          r.c1_witness = {y, a, b};
        }

  // c2: psi_{* y} lambdaK_k = lambdaK_k psi_{* y}
  const LambdaTable lk = lambda_of(K.digroup());
  r.c2 = true;
  for (int y = 0; y < ny && r.c2; ++y)
    for (int k = 0; k < nk && r.c2; ++k)
      for (int a = 0; a < nk && r.c2; ++a)
        if (psi_star.perms[y](lk.rows[k](a)) != lk.rows[k](psi_star.perms[y](a))) {
          r.c2 = false;
          r.c2_witness = {y, k, a};
        }

  // c3: psi_{* (gamma o y) * gamma^{-*}} = psi_{o gamma} psi_{* y} psi_{o gamma}^{-1}
  r.c3 = true;
  for (int g = 0; g < ny && r.c3; ++g) {
    const Perm inv_g = psi_circ.perms[g].inverse();
    for (int y = 0; y < ny && r.c3; ++y) {
      const int idx = Y.star().op(Y.circ().op(g, y), Y.star().inv(g));
      for (int a = 0; a < nk && r.c3; ++a)
        if (psi_star.perms[idx](a) != psi_circ.perms[g](psi_star.perms[y](inv_g(a)))) {
          r.c3 = false;
          r.c3_witness = {g, y, a};
        }
    }
  }
  return Checked<ActionPairReport>(r);
}

namespace {

Checked<SplitPoint> checked_skb_point(Checked<SplitPoint> built) {
  if (!built.ok()) return built;
  if (!skb_membership(built.value()).in_skb())
    throw std::logic_error("constructed split point is not a skew brace");
  return built;
}

}  // namespace

Checked<SplitPoint> make_op_semidirect_point(const GroupAction& psi) {
  if (!psi.target.commutative())
    return Checked<SplitPoint>(make_diag("NotAbelian", {}, "kernel group must be abelian"));
  return checked_skb_point(
      semidirect_digroup(psi, trivial_action(psi.actor.opposite(), psi.target)));
}

Checked<SplitPoint> make_circ_semidirect_point(const SkewBrace& Y, const GroupAction& psi) {
  if (!psi.target.commutative())
    return Checked<SplitPoint>(make_diag("NotAbelian", {}, "kernel group must be abelian"));
  if (psi.actor != Y.circ())
    return Checked<SplitPoint>(make_diag("SizeMismatch", {}, "psi must act from (Y,o)"));
  return checked_skb_point(semidirect_digroup(trivial_action(Y.star(), psi.target), psi));
}

Checked<SplitPoint> make_abelian_mixed_point(const GroupAction& psi, MixedSide side) {
  if (!psi.target.commutative())
    return Checked<SplitPoint>(make_diag("NotAbelian", {}, "kernel group must be abelian"));
  if (!psi.actor.commutative())
    return Checked<SplitPoint>(make_diag("NotAbelian", {}, "base group must be abelian"));
  const GroupAction trivial = trivial_action(psi.actor, psi.target);
  if (side == MixedSide::circ_twisted)
    return checked_skb_point(semidirect_digroup(trivial, psi));
  return checked_skb_point(semidirect_digroup(psi, trivial));
}

}  // namespace skb
