#include "skb/split.hpp"

#include <algorithm>
#include <stdexcept>

namespace skb {

Checked<SplitPoint> SplitPoint::validate(Digroup X, Digroup Y, std::vector<int> f,
                                         std::vector<int> s) {
  const int nx = X.order(), ny = Y.order();
  if (static_cast<int>(f.size()) != nx || static_cast<int>(s.size()) != ny)
    return make_diag("SizeMismatch");
  for (int x = 0; x < nx; ++x)
    if (f[x] < 0 || f[x] >= ny) return make_diag("EntryOutOfRange", {x}, "f");
  for (int y = 0; y < ny; ++y)
    if (s[y] < 0 || s[y] >= nx) return make_diag("EntryOutOfRange", {y}, "s");

  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < nx; ++b) {
      if (f[X.star.op(a, b)] != Y.star.op(f[a], f[b])) return make_diag("FNotStarHom", {a, b});
      if (f[X.circ.op(a, b)] != Y.circ.op(f[a], f[b])) return make_diag("FNotCircHom", {a, b});
    }
  for (int y = 0; y < ny; ++y)
    for (int z = 0; z < ny; ++z) {
      if (s[Y.star.op(y, z)] != X.star.op(s[y], s[z])) return make_diag("SNotStarHom", {y, z});
      if (s[Y.circ.op(y, z)] != X.circ.op(s[y], s[z])) return make_diag("SNotCircHom", {y, z});
    }
  for (int y = 0; y < ny; ++y)
    if (f[s[y]] != y) return make_diag("NotSection", {y});

  return SplitPoint{std::move(X), std::move(Y), std::move(f), std::move(s)};
}

KernelData kernel_of(const SplitPoint& p) {
  const int nx = p.X.order();
  KernelData kd;
  kd.pos.assign(nx, -1);
  for (int x = 0; x < nx; ++x)
    if (p.f[x] == 0) {
      kd.pos[x] = static_cast<int>(kd.elems.size());
      kd.elems.push_back(x);
    }
  const int nk = static_cast<int>(kd.elems.size());
  std::vector<int> st(static_cast<size_t>(nk) * nk), ci(st.size());
  for (int i = 0; i < nk; ++i)
    for (int j = 0; j < nk; ++j) {
      const int a = p.X.star.op(kd.elems[i], kd.elems[j]);
      const int b = p.X.circ.op(kd.elems[i], kd.elems[j]);
      if (kd.pos[a] < 0 || kd.pos[b] < 0)
        throw std::logic_error("kernel_of: fiber of 0 not closed; input not a split point");
      st[static_cast<size_t>(i) * nk + j] = kd.pos[a];
      ci[static_cast<size_t>(i) * nk + j] = kd.pos[b];
    }
  auto sg = FiniteGroup::validate_flat(nk, std::move(st));
  auto cg = FiniteGroup::validate_flat(nk, std::move(ci));
  if (!sg || !cg) throw std::logic_error("kernel_of: induced law is not a group");
  kd.K = Digroup{std::move(sg).value(), std::move(cg).value()};
  return kd;
}

CanonicalActions canonical_actions(const SplitPoint& p) {
  const KernelData kd = kernel_of(p);
  const int ny = p.Y.order(), nk = kd.K.order();
  std::vector<Perm> ps, pc;
  ps.reserve(ny);
  pc.reserve(ny);
  for (int y = 0; y < ny; ++y) {
    std::vector<int> imgS(nk), imgC(nk);
    for (int i = 0; i < nk; ++i) {
      const int k = kd.elems[i];
      imgS[i] = kd.pos[p.X.star.op(p.X.star.op(p.s[y], k), p.X.star.inv(p.s[y]))];
      imgC[i] = kd.pos[p.X.circ.op(p.X.circ.op(p.s[y], k), p.X.circ.inv(p.s[y]))];
      if (imgS[i] < 0 || imgC[i] < 0)
        throw std::logic_error("canonical_actions: conjugate escaped the kernel");
    }
    ps.push_back(Perm::unchecked(std::move(imgS)));
    pc.push_back(Perm::unchecked(std::move(imgC)));
  }
  CanonicalActions ca{GroupAction{p.Y.star, kd.K.star, std::move(ps)},
                      GroupAction{p.Y.circ, kd.K.circ, std::move(pc)}};
  if (validate_action(ca.phi_star) || validate_action(ca.phi_circ))
    throw std::logic_error("canonical_actions: conjugation action failed validation");
  return ca;
}

Perm index_of(const SplitPoint& p) {
  const int nx = p.X.order();
  std::vector<int> img(nx);
  for (int x = 0; x < nx; ++x) {
    const int sy = p.s[p.f[x]];
    img[x] = p.X.circ.op(p.X.star.op(x, p.X.star.inv(sy)), sy);
  }
  auto chi = Perm::checked(std::move(img));
  if (!chi) throw std::logic_error("index_of: chi not a bijection");
  for (int x = 0; x < nx; ++x) {
    if (p.f[(*chi)(x)] != p.f[x]) throw std::logic_error("index_of: f chi != f");
    if (p.f[x] == 0 && (*chi)(x) != x) throw std::logic_error("index_of: chi moves the kernel");
  }
  for (int y = 0; y < p.Y.order(); ++y)
    if ((*chi)(p.s[y]) != p.s[y]) throw std::logic_error("index_of: chi moves the section");
  return *chi;
}

std::vector<Perm> skewing_index_of(const SplitPoint& p) {
  const KernelData kd = kernel_of(p);
  const Perm chi = index_of(p);
  const int ny = p.Y.order(), nk = kd.K.order();
  std::vector<Perm> xi;
  xi.reserve(ny);
  for (int y = 0; y < ny; ++y) {
    std::vector<int> img(nk);
    for (int i = 0; i < nk; ++i) {
      const int k = kd.elems[i];
      const int v = p.X.star.op(p.X.circ.op(k, p.s[y]), p.X.star.inv(p.s[y]));
      if (kd.pos[v] < 0) throw std::logic_error("skewing_index_of: value escaped the kernel");
      img[i] = kd.pos[v];
      // chi(k * s(y)) = xi_y(k) * s(y)
      if (chi(p.X.star.op(k, p.s[y])) != p.X.star.op(v, p.s[y]))
        throw std::logic_error("skewing_index_of: translation identity failed");
    }
    auto perm = Perm::checked(std::move(img));
    if (!perm) throw std::logic_error("skewing_index_of: xi_y not a bijection");
    xi.push_back(*perm);
  }
  if (!xi[0].is_identity()) throw std::logic_error("skewing_index_of: xi_0 != id");
  return xi;
}

TrivialIndexReport trivial_index_report(const SplitPoint& p) {
  const int nx = p.X.order(), ny = p.Y.order();
  const KernelData kd = kernel_of(p);
  TrivialIndexReport r{};

  r.chi_identity = index_of(p).is_identity();

  r.translates_match = true;
  for (int x = 0; x < nx && r.translates_match; ++x) {
    const int sy = p.s[p.f[x]];
    r.translates_match =
        p.X.circ.op(x, p.X.circ.inv(sy)) == p.X.star.op(x, p.X.star.inv(sy));
  }

  r.kernel_translates = true;
  for (int k : kd.elems) {
    for (int y = 0; y < ny; ++y)
      if (p.X.circ.op(k, p.s[y]) != p.X.star.op(k, p.s[y])) {
        r.kernel_translates = false;
        break;
      }
    if (!r.kernel_translates) break;
  }

  r.xi_trivial = true;
  for (const Perm& x : skewing_index_of(p))
    if (!x.is_identity()) {
      r.xi_trivial = false;
      break;
    }

  const LambdaTable lt = lambda_of(p.X);
  r.lambda_fixes_section = true;
  for (int k : kd.elems) {
    for (int y = 0; y < ny; ++y)
      if (lt.rows[k](p.s[y]) != p.s[y]) {
        r.lambda_fixes_section = false;
        break;
      }
    if (!r.lambda_fixes_section) break;
  }

  return r;
}

namespace {

Checked<SplitPoint> assemble_product_point(const GroupAction& psi_star, FiniteGroup circ_law,
                                           const GroupAction& psi_circ) {
  auto star = semidirect_product(psi_star);
  if (!star) return star.diag();
  auto X = make_digroup(std::move(star).value(), std::move(circ_law));
  if (!X) return X.diag();
  auto Y = make_digroup(psi_star.actor, psi_circ.actor);
  if (!Y) return Y.diag();
  const int ny = Y->order(), nk = psi_star.target.order();
  std::vector<int> f(static_cast<size_t>(ny) * nk), s(ny);
  for (int y = 0; y < ny; ++y) {
    s[y] = y * nk;
    for (int k = 0; k < nk; ++k) f[static_cast<size_t>(y) * nk + k] = y;
  }
  return SplitPoint::validate(std::move(X).value(), std::move(Y).value(), std::move(f),
                              std::move(s));
}

}  // namespace

Checked<SplitPoint> semidirect_digroup(const GroupAction& psi_star, const GroupAction& psi_circ) {
  if (auto d = validate_action(psi_star)) return *d;
  if (auto d = validate_action(psi_circ)) return *d;
  if (psi_star.actor.order() != psi_circ.actor.order() ||
      psi_star.target.order() != psi_circ.target.order())
    return make_diag("SizeMismatch", {}, "actor or target carriers differ");
  auto circ = semidirect_product(psi_circ);
  if (!circ) return circ.diag();
  return assemble_product_point(psi_star, std::move(circ).value(), psi_circ);
}

Checked<SplitPoint> twisted_semidirect(const GroupAction& psi_star, const GroupAction& psi_circ,
                                       const std::vector<Perm>& xi) {
  if (auto d = validate_action(psi_star)) return *d;
  if (auto d = validate_action(psi_circ)) return *d;
  if (psi_star.actor.order() != psi_circ.actor.order() ||
      psi_star.target.order() != psi_circ.target.order())
    return make_diag("SizeMismatch", {}, "actor or target carriers differ");
  const int ny = psi_star.actor.order(), nk = psi_star.target.order();
  if (static_cast<int>(xi.size()) != ny) return make_diag("SizeMismatch", {}, "xi");
  for (int y = 0; y < ny; ++y) {
    if (xi[y].size() != nk) return make_diag("SizeMismatch", {y}, "xi_y");
    if (xi[y](0) != 0) return make_diag("XiMovesUnit", {y});
  }
  if (!xi[0].is_identity()) return make_diag("XiNotPointed");

  const auto& yc = psi_circ.actor;
  const auto& kc = psi_circ.target;
  std::vector<Perm> xi_inv;
  xi_inv.reserve(ny);
  for (const Perm& x : xi) xi_inv.push_back(x.inverse());
  const int n = ny * nk;
  std::vector<int> circ(static_cast<size_t>(n) * n);
  for (int y = 0; y < ny; ++y)
    for (int k = 0; k < nk; ++k)
      for (int y2 = 0; y2 < ny; ++y2)
        for (int k2 = 0; k2 < nk; ++k2) {
          const int yy = yc.op(y, y2);
          const int kk = xi[yy](kc.op(xi_inv[y](k), psi_circ.perms[y](xi_inv[y2](k2))));
          circ[static_cast<size_t>(y * nk + k) * n + (y2 * nk + k2)] = yy * nk + kk;
        }
  auto cg = FiniteGroup::validate_flat(n, std::move(circ));
  if (!cg) return make_diag("NotGroupLaw", cg.diag().witness, "twisted circ law: " + cg.diag().code);

  auto point = assemble_product_point(psi_star, std::move(cg).value(), psi_circ);
  if (!point) return point.diag();

  // the construction must hand back exactly what it was built from
  const KernelData kd = kernel_of(*point);
  if (!(kd.K.star == psi_star.target) || !(kd.K.circ == psi_circ.target))
    return make_diag("InternalCheckFail", {}, "kernel law mismatch");
  const CanonicalActions ca = canonical_actions(*point);
  if (ca.phi_star.perms != psi_star.perms || ca.phi_circ.perms != psi_circ.perms)
    return make_diag("InternalCheckFail", {}, "recovered actions differ");
  if (skewing_index_of(*point) != xi) return make_diag("InternalCheckFail", {}, "recovered xi differs");
  return point;
}

Checked<Reconstruction> reconstruct(const SplitPoint& p) {
  const KernelData kd = kernel_of(p);
  const CanonicalActions ca = canonical_actions(p);
  const std::vector<Perm> xi = skewing_index_of(p);
  auto canon = twisted_semidirect(ca.phi_star, ca.phi_circ, xi);
  if (!canon) {
    Diag d = canon.diag();
    return make_diag("InternalCheckFail", d.witness, "canonical build failed: " + d.code);
  }
  const int ny = p.Y.order(), nk = kd.K.order();
  std::vector<int> theta(static_cast<size_t>(ny) * nk);
  for (int y = 0; y < ny; ++y)
    for (int k = 0; k < nk; ++k)
      theta[static_cast<size_t>(y) * nk + k] = p.X.star.op(kd.elems[k], p.s[y]);
  if (!is_bijection(theta)) return make_diag("InternalCheckFail", {}, "theta not bijective");
  const SplitPoint& c = *canon;
  const int n = ny * nk;
  for (int a = 0; a < n; ++a) {
    if (p.f[theta[a]] != a / nk) return make_diag("InternalCheckFail", {a}, "f theta != projection");
    for (int b = 0; b < n; ++b) {
      if (theta[c.X.star.op(a, b)] != p.X.star.op(theta[a], theta[b]))
        return make_diag("InternalCheckFail", {a, b}, "theta not a star homomorphism");
      if (theta[c.X.circ.op(a, b)] != p.X.circ.op(theta[a], theta[b]))
        return make_diag("InternalCheckFail", {a, b}, "theta not a circ homomorphism");
    }
  }
  for (int y = 0; y < ny; ++y)
    if (theta[c.s[y]] != p.s[y]) return make_diag("InternalCheckFail", {y}, "theta misses the section");
  return Reconstruction{std::move(canon).value(), std::move(theta)};
}

Checked<RecognitionReport> semidirect_recognition(const SplitPoint& p, const Limits& lim) {
  const int nx = p.X.order();
  if (nx > lim.recognition_max_x)
    return make_diag("SearchBoundExceeded", {nx}, "raise Limits::recognition_max_x");

  RecognitionReport rep{};
  rep.chi_trivial = index_of(p).is_identity();

  const KernelData kd = kernel_of(p);
  const CanonicalActions ca = canonical_actions(p);
  auto target = semidirect_digroup(ca.phi_star, ca.phi_circ);
  if (!target) return make_diag("InternalCheckFail", {}, "canonical semidirect failed");
  const SplitPoint& t = *target;
  const int nk = kd.K.order();

  // tau(x) = x * s(f(x))^{-*}, the kernel part of the star decomposition
  std::vector<int> tau(nx);
  for (int x = 0; x < nx; ++x)
    tau[x] = kd.pos[p.X.star.op(x, p.X.star.inv(p.s[p.f[x]]))];

  // candidate isomorphisms alpha(x) = (f(x), gamma(tau(x))) over two-law
  // automorphisms gamma of the kernel; this shape is forced
  for (const Perm& g : automorphisms(kd.K.star)) {
    bool circ_auto = true;
    for (int i = 0; i < nk && circ_auto; ++i)
      for (int j = 0; j < nk; ++j)
        if (g(kd.K.circ.op(i, j)) != kd.K.circ.op(g(i), g(j))) {
          circ_auto = false;
          break;
        }
    if (!circ_auto) continue;
    std::vector<int> alpha(nx);
    for (int x = 0; x < nx; ++x) alpha[x] = p.f[x] * nk + g(tau[x]);
    bool hom = true;
    for (int a = 0; a < nx && hom; ++a)
      for (int b = 0; b < nx; ++b)
        if (alpha[p.X.star.op(a, b)] != t.X.star.op(alpha[a], alpha[b]) ||
            alpha[p.X.circ.op(a, b)] != t.X.circ.op(alpha[a], alpha[b])) {
          hom = false;
          break;
        }
    if (hom) {
      rep.iso_found = true;
      rep.alpha = std::move(alpha);
      break;
    }
  }
  return rep;
}

Status skewing_compat_check(const SplitPoint& p) {
  const KernelData kd = kernel_of(p);
  const CanonicalActions ca = canonical_actions(p);
  const std::vector<Perm> xi = skewing_index_of(p);
  const LambdaTable lt = lambda_of(p.X);
  for (int y = 0; y < p.Y.order(); ++y)
    for (int i = 0; i < kd.K.order(); ++i) {
      const int k = kd.elems[i];
      const int lhs = xi[y](ca.phi_circ.perms[y](i));
      const int lam = kd.pos[lt.rows[p.s[y]](k)];
      if (lam < 0) return make_diag("InternalCheckFail", {y, i}, "lambda_{s(y)} left the kernel");
      const int rhs = ca.phi_star.perms[y](lam);
      if (lhs != rhs) return make_diag("CompatFail", {y, i});
      // both sides are k |-> (s(y) o k) * s(y)^{-*}
      const int direct = kd.pos[p.X.star.op(p.X.circ.op(p.s[y], k), p.X.star.inv(p.s[y]))];
      if (lhs != direct) return make_diag("CompatFail", {y, i}, "closed form differs");
    }
  return std::nullopt;
}

}  // namespace skb
