#include "skb/extension.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace skb {
namespace {

// X index -> kernel position under k, -1 outside the image.
std::vector<int> kernel_positions(const ExactSequence& E) {
  std::vector<int> pos(E.X.order(), -1);
  for (int a = 0; a < E.A.order(); ++a) pos[E.k[a]] = a;
  return pos;
}

std::vector<std::vector<int>> fibers_of(const ExactSequence& E) {
  std::vector<std::vector<int>> fib(E.Y.order());
  for (int x = 0; x < E.X.order(); ++x) fib[E.f[x]].push_back(x);
  return fib;
}

int conj(const FiniteGroup& g, int x, int a) {
  return g.op(g.op(x, a), g.inv(x));
}

// Validates map as a homomorphism dom -> cod and prefixes the diagnosis.
Status hom_check(const FiniteGroup& dom, const FiniteGroup& cod,
                 const std::vector<int>& map, const std::string& role) {
  Status st = validate_hom({dom, cod, map});
  if (st) st->detail = role + (st->detail.empty() ? "" : ": " + st->detail);
  return st;
}

std::vector<int> min_transversal(const ExactSequence& E) {
  std::vector<int> t(E.Y.order(), -1);
  for (int x = 0; x < E.X.order(); ++x)
    if (t[E.f[x]] < 0) t[E.f[x]] = x;
  return t;
}

}  // namespace

Status validate_sequence(const ExactSequence& E) {
  const int na = E.A.order();
  const int nx = E.X.order();
  const int ny = E.Y.order();
  if (static_cast<int>(E.k.size()) != na)
    return input_diag("SizeMismatch", "k needs one entry per kernel element");
  if (static_cast<int>(E.f.size()) != nx)
    return input_diag("SizeMismatch", "f needs one entry per middle element");
  for (int a = 0; a < na; ++a)
    if (E.k[a] < 0 || E.k[a] >= nx) return input_diag("EntryOutOfRange", "k");
  for (int x = 0; x < nx; ++x)
    if (E.f[x] < 0 || E.f[x] >= ny) return input_diag("EntryOutOfRange", "f");

  if (!is_abelian_brace(E.A)) return make_diag("KernelNotAbelianType");

  if (Status st = hom_check(E.A.star(), E.X.star(), E.k, "k under *")) return st;
  if (Status st = hom_check(E.A.circ(), E.X.circ(), E.k, "k under o")) return st;
  {
    std::vector<int> seen(nx, -1);
    for (int a = 0; a < na; ++a) {
      if (seen[E.k[a]] >= 0) return make_diag("KNotInjective", {seen[E.k[a]], a});
      seen[E.k[a]] = a;
    }
  }
  if (Status st = hom_check(E.X.star(), E.Y.star(), E.f, "f under *")) return st;
  if (Status st = hom_check(E.X.circ(), E.Y.circ(), E.f, "f under o")) return st;
  {
    std::vector<char> hit(ny, 0);
    for (int x = 0; x < nx; ++x) hit[E.f[x]] = 1;
    for (int y = 0; y < ny; ++y)
      if (!hit[y]) return make_diag("FNotSurjective", {y});
  }
  const std::vector<int> kpos = kernel_positions(E);
  for (int x = 0; x < nx; ++x)
    if ((E.f[x] == 0) != (kpos[x] >= 0))
      return make_diag("NotExact", {x},
                       "image of k must equal the unit fiber of f");

  // Derived facts that every such sequence satisfies; a failure here names
  // the first broken instance.
  const LambdaTable lam = E.X.lambda();
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b)
      if (lam.rows[E.k[a]](E.k[b]) != E.k[b])
        return make_diag("KernelLambdaNontrivial", {a, b});

  const std::vector<std::vector<int>> fib = fibers_of(E);
  const FiniteGroup& xs = E.X.star();
  const FiniteGroup& xc = E.X.circ();
  for (int y = 0; y < ny; ++y) {
    const int x0 = fib[y].front();
    for (int x : fib[y])
      for (int a = 0; a < na; ++a)
        if (lam.rows[x](E.k[a]) != lam.rows[x0](E.k[a]))
          return make_diag("LambdaNotFiberConstant", {x0, x, a});
    for (int u : fib[y])
      for (int v : fib[y])
        for (int w : fib[y])
          if (xs.op(u, xs.op(xs.inv(v), w)) != xc.op(u, xc.op(xc.inv(v), w)))
            return make_diag("FiberWordMismatch", {u, v, w});
    for (int a = 0; a < na; ++a) {
      const int first = xs.op(xc.op(E.k[a], x0), xs.inv(x0));
      for (int x : fib[y])
        if (xs.op(xc.op(E.k[a], x), xs.inv(x)) != first)
          return make_diag("SkewingIllDefined", {y, a});
    }
  }
  return std::nullopt;
}

std::optional<std::string> direction_mismatch(const Direction& a,
                                              const Direction& b) {
  if (a.phi_star.perms != b.phi_star.perms) return "phi_star";
  if (a.phi_circ.perms != b.phi_circ.perms) return "phi_circ";
  if (a.xi != b.xi) return "xi";
  return std::nullopt;
}

Checked<Direction> direction_of(const ExactSequence& E) {
  if (Status st = validate_sequence(E)) return *std::move(st);
  const int na = E.A.order();
  const int ny = E.Y.order();
  const std::vector<int> kpos = kernel_positions(E);
  const std::vector<std::vector<int>> fib = fibers_of(E);
  const LambdaTable lam = E.X.lambda();
  const FiniteGroup& xs = E.X.star();
  const FiniteGroup& xc = E.X.circ();

  Direction d;
  d.phi_star = GroupAction{E.Y.star(), E.A.star(), {}};
  d.phi_circ = GroupAction{E.Y.circ(), E.A.star(), {}};
  for (int y = 0; y < ny; ++y) {
    std::vector<int> ps(na), pc(na), lf(na), xi(na);
    const int x0 = fib[y].front();
    for (int a = 0; a < na; ++a) {
      ps[a] = kpos[conj(xs, x0, E.k[a])];
      pc[a] = kpos[conj(xc, x0, E.k[a])];
      lf[a] = kpos[lam.rows[x0](E.k[a])];
      xi[a] = kpos[xs.op(xc.op(E.k[a], x0), xs.inv(x0))];
      if (ps[a] < 0 || pc[a] < 0 || lf[a] < 0 || xi[a] < 0)
        throw std::logic_error("direction value escaped the kernel");
    }
    // Every representative of the fiber must induce the same data. The
    // skewing index and restricted lambda were already checked rep-free by
    // validate_sequence; conjugation needs its own pass.
    for (int x : fib[y])
      for (int a = 0; a < na; ++a) {
        if (kpos[conj(xs, x, E.k[a])] != ps[a])
          return make_diag("ConjugationIllDefined", {y, x, a}, "phi_star");
        if (kpos[conj(xc, x, E.k[a])] != pc[a])
          return make_diag("ConjugationIllDefined", {y, x, a}, "phi_circ");
      }
    auto mk = [](std::vector<int> img, const char* role) {
      std::optional<Perm> p = Perm::checked(std::move(img));
      if (!p) throw std::logic_error(std::string("direction row of ") + role +
                                     " is not a bijection");
      return *std::move(p);
    };
    d.phi_star.perms.push_back(mk(std::move(ps), "phi_star"));
    d.phi_circ.perms.push_back(mk(std::move(pc), "phi_circ"));
    d.lambda_f.push_back(mk(std::move(lf), "lambda_f"));
    d.xi.push_back(mk(std::move(xi), "xi"));
  }
  if (Status st = validate_action(d.phi_star)) {
    st->detail = "phi_star" + (st->detail.empty() ? "" : ": " + st->detail);
    return *std::move(st);
  }
  if (Status st = validate_action(d.phi_circ)) {
    st->detail = "phi_circ" + (st->detail.empty() ? "" : ": " + st->detail);
    return *std::move(st);
  }
  for (int y = 0; y < ny; ++y)
    if (d.xi[y] * d.phi_circ.perms[y] != d.phi_star.perms[y] * d.lambda_f[y])
      return make_diag("CompatibilityFail", {y},
                       "xi . phi_circ must equal phi_star . lambda_f");
  return d;
}

Checked<Pullback> pullback(const ExactSequence& E, const ExactSequence& Ep) {
  if (Status st = validate_sequence(E)) return *std::move(st);
  if (Status st = validate_sequence(Ep)) return *std::move(st);
  if (!(E.Y == Ep.Y))
    return input_diag("CodomainMismatch",
                      "the two sequences must share the same codomain tables");
  const int nx = E.X.order();
  const int nxp = Ep.X.order();

  std::vector<std::pair<int, int>> carrier;
  std::vector<int> index(nx * nxp, -1);
  for (int x = 0; x < nx; ++x)
    for (int xp = 0; xp < nxp; ++xp)
      if (E.f[x] == Ep.f[xp]) {
        index[x * nxp + xp] = static_cast<int>(carrier.size());
        carrier.emplace_back(x, xp);
      }
  const int m = static_cast<int>(carrier.size());
  Table ts(m, std::vector<int>(m)), tc(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const auto [x1, xp1] = carrier[i];
      const auto [x2, xp2] = carrier[j];
      ts[i][j] = index[E.X.star().op(x1, x2) * nxp + Ep.X.star().op(xp1, xp2)];
      tc[i][j] = index[E.X.circ().op(x1, x2) * nxp + Ep.X.circ().op(xp1, xp2)];
      if (ts[i][j] < 0 || tc[i][j] < 0)
        throw std::logic_error("pullback: componentwise product left the carrier");
    }
  Checked<FiniteGroup> gs = FiniteGroup::validate(std::move(ts));
  if (!gs) throw std::logic_error("pullback star law: " + gs.diag().str());
  Checked<FiniteGroup> gc = FiniteGroup::validate(std::move(tc));
  if (!gc) throw std::logic_error("pullback circ law: " + gc.diag().str());
  Checked<SkewBrace> b = SkewBrace::validate(Digroup{*gs, *gc});
  if (!b) throw std::logic_error("pullback is not a skew brace: " + b.diag().str());

  std::vector<int> p1(m), p2(m);
  for (int i = 0; i < m; ++i) {
    p1[i] = carrier[i].first;
    p2[i] = carrier[i].second;
  }
  for (const auto& [g, h, map, role] :
       {std::tuple{&b->star(), &E.X.star(), &p1, "first projection"},
        std::tuple{&b->circ(), &E.X.circ(), &p1, "first projection"},
        std::tuple{&b->star(), &Ep.X.star(), &p2, "second projection"},
        std::tuple{&b->circ(), &Ep.X.circ(), &p2, "second projection"}})
    if (validate_hom({*g, *h, *map}))
      throw std::logic_error(std::string(role) + " is not a homomorphism");
  return Pullback{*std::move(b), std::move(carrier), std::move(index)};
}

Checked<SubObject> antidiagonal(const ExactSequence& E,
                                const ExactSequence& Ep) {
  if (!(E.A == Ep.A))
    return input_diag("KernelMismatch",
                      "the two sequences must share the same kernel tables");
  if (!(E.Y == Ep.Y))
    return input_diag("CodomainMismatch",
                      "the two sequences must share the same codomain tables");
  Checked<Direction> d = direction_of(E);
  if (!d) return d.diag();
  Checked<Direction> dp = direction_of(Ep);
  if (!dp) return dp.diag();
  if (std::optional<std::string> miss = direction_mismatch(*d, *dp))
    return input_diag("DirectionMismatch", *miss);

  Checked<Pullback> pb = pullback(E, Ep);
  if (!pb) return pb.diag();
  const int nxp = Ep.X.order();
  const int na = E.A.order();

  // The defining identity of the construction: along fiber pairs the two
  // lambda actions restrict identically to the kernel.
  {
    const LambdaTable lam = E.X.lambda();
    const LambdaTable lamp = Ep.X.lambda();
    const std::vector<int> kpos = kernel_positions(E);
    const std::vector<int> kposp = kernel_positions(Ep);
    for (const auto& [x, xp] : pb->carrier)
      for (int a = 0; a < na; ++a)
        if (kpos[lam.rows[x](E.k[a])] != kposp[lamp.rows[xp](Ep.k[a])])
          throw std::logic_error(
              "fiber pair acts differently on the kernel via lambda");
  }

  std::vector<int> elems(na);
  for (int a = 0; a < na; ++a) {
    const int idx = pb->index[E.k[E.A.star().inv(a)] * nxp + Ep.k[a]];
    if (idx < 0) throw std::logic_error("antidiagonal element left the carrier");
    elems[a] = idx;
  }
  std::sort(elems.begin(), elems.end());
  Checked<SubObject> sub = SubObject::validate(pb->brace.digroup(), std::move(elems));
  if (!sub)
    throw std::logic_error("antidiagonal is not a subobject: " + sub.diag().str());
  if (!is_ideal(*sub).all())
    throw std::logic_error("antidiagonal is not an ideal of the pullback");
  return sub;
}

Checked<ExactSequence> baer_sum(const ExactSequence& E,
                                const ExactSequence& Ep) {
  Checked<SubObject> anti = antidiagonal(E, Ep);
  if (!anti) return anti.diag();
  Checked<Pullback> pb = pullback(E, Ep);
  if (!pb) return pb.diag();
  Checked<Quotient> q = quotient_by_ideal(*anti);
  if (!q) return q.diag();

  const int na = E.A.order();
  const int nxp = Ep.X.order();
  std::vector<int> ksum(na);
  for (int a = 0; a < na; ++a) {
    ksum[a] = q->proj[pb->index[E.k[a] * nxp + Ep.k[0]]];
    // The mirrored representative lands in the same class.
    if (q->proj[pb->index[E.k[0] * nxp + Ep.k[a]]] != ksum[a])
      throw std::logic_error("kernel embedding depends on the representative");
  }
  const int nq = q->brace.order();
  std::vector<int> fsum(nq);
  for (int c = 0; c < nq; ++c) fsum[c] = E.f[pb->carrier[q->reps[c]].first];
  for (int i = 0; i < static_cast<int>(pb->carrier.size()); ++i)
    if (fsum[q->proj[i]] != E.f[pb->carrier[i].first])
      throw std::logic_error("projection depends on the representative");

  ExactSequence res{E.A, q->brace, E.Y, std::move(ksum), std::move(fsum)};
  if (Status st = validate_sequence(res))
    throw std::logic_error("sum is not a valid sequence: " + st->str());
  Checked<Direction> d = direction_of(E);
  if (!d) throw std::logic_error("summand lost its direction: " + d.diag().str());
  Checked<Direction> ds = direction_of(res);
  if (!ds) throw std::logic_error("sum has no direction: " + ds.diag().str());
  if (std::optional<std::string> miss = direction_mismatch(*d, *ds))
    throw std::logic_error("sum changed the direction component " + *miss);
  return res;
}

Checked<ExactSequence> baer_inverse(const ExactSequence& E) {
  if (Status st = validate_sequence(E)) return *std::move(st);
  std::vector<int> kinv(E.A.order());
  for (int a = 0; a < E.A.order(); ++a) kinv[a] = E.k[E.A.star().inv(a)];
  ExactSequence res{E.A, E.X, E.Y, std::move(kinv), E.f};
  if (Status st = validate_sequence(res))
    throw std::logic_error("reversed embedding broke the sequence: " + st->str());
  return res;
}

Checked<ExactSequence> baer_unit(const Direction& d) {
  const auto bad = [](const std::string& why) {
    return input_diag("IncompatibleDirection", why);
  };
  if (Status st = validate_action(d.phi_star))
    return bad("phi_star: " + st->str());
  if (Status st = validate_action(d.phi_circ))
    return bad("phi_circ: " + st->str());
  if (!(d.phi_star.target == d.phi_circ.target))
    return bad("the two actions must target the same kernel group");
  const int ny = d.phi_star.actor.order();
  const int na = d.phi_star.target.order();
  if (d.phi_circ.actor.order() != ny || static_cast<int>(d.xi.size()) != ny)
    return bad("component sizes disagree");
  if (!d.phi_star.target.commutative())
    return bad("the kernel group must be commutative");
  for (const Perm& p : d.xi)
    if (p.size() != na) return bad("xi rows must permute the kernel");
  for (int y = 0; y < ny; ++y) {
    const Perm lam =
        d.phi_star.perms[y].inverse() * (d.xi[y] * d.phi_circ.perms[y]);
    if (!d.lambda_f.empty() && d.lambda_f[y] != lam)
      return bad("recorded lambda_f contradicts xi . phi_circ = phi_star . lambda_f");
  }

  Checked<SplitPoint> tw = twisted_semidirect(d.phi_star, d.phi_circ, d.xi);
  if (!tw) return bad("the triple does not assemble: " + tw.diag().str());
  Checked<SkewBrace> X = SkewBrace::validate(tw->X);
  if (!X) return bad("the assembled laws are not a skew brace: " + X.diag().str());
  Checked<SkewBrace> Y = SkewBrace::validate(tw->Y);
  if (!Y) return bad("the actors are not a skew brace: " + Y.diag().str());
  Checked<SkewBrace> A =
      SkewBrace::validate(Digroup{d.phi_star.target, d.phi_star.target});
  if (!A) return bad("the kernel group is not a brace: " + A.diag().str());

  // Carrier is y*|A| + a, so the unit fiber is 0..|A|-1 in order.
  std::vector<int> ku(na);
  for (int a = 0; a < na; ++a) ku[a] = a;
  ExactSequence res{*A, *X, *Y, std::move(ku), tw->f};
  if (Status st = validate_sequence(res))
    return bad("the assembled point is not an extension: " + st->str());
  Checked<Direction> back = direction_of(res);
  if (!back) throw std::logic_error("unit has no direction: " + back.diag().str());
  if (std::optional<std::string> miss = direction_mismatch(d, *back))
    throw std::logic_error("unit changed the direction component " + *miss);
  return res;
}

Checked<ExactSequence> point_sequence(const SplitPoint& p) {
  Checked<SkewBrace> X = SkewBrace::validate(p.X);
  if (!X) return X.diag();
  Checked<SkewBrace> Y = SkewBrace::validate(p.Y);
  if (!Y) return Y.diag();
  const KernelData kd = kernel_of(p);
  Checked<SkewBrace> A = SkewBrace::validate(kd.K);
  if (!A) return A.diag();
  if (!is_abelian_brace(*A)) return make_diag("KernelNotAbelianType");
  ExactSequence res{*A, *X, *Y, kd.elems, p.f};
  if (Status st = validate_sequence(res)) return *std::move(st);
  return res;
}

Checked<ExtEquivalence> ext_equivalent(const ExactSequence& E,
                                       const ExactSequence& Ep,
                                       const Limits& lim) {
  if (Status st = validate_sequence(E)) return *std::move(st);
  if (Status st = validate_sequence(Ep)) return *std::move(st);
  if (!(E.A == Ep.A))
    return input_diag("KernelMismatch",
                      "equivalence is only defined over the same kernel");
  if (!(E.Y == Ep.Y))
    return input_diag("CodomainMismatch",
                      "equivalence is only defined over the same codomain");
  const int nx = E.X.order();
  if (nx > lim.equiv_max_x) return make_diag("SearchBoundExceeded", {nx});

  const int na = E.A.order();
  const int ny = E.Y.order();
  const FiniteGroup& as = E.A.star();
  const FiniteGroup& xs = E.X.star();
  const FiniteGroup& xps = Ep.X.star();
  const std::vector<int> kpos = kernel_positions(E);
  const std::vector<int> t = min_transversal(E);
  const std::vector<int> tp = min_transversal(Ep);

  // x = k(a) * t_{f(x)} uniquely; record a.
  std::vector<int> ax(nx);
  for (int x = 0; x < nx; ++x) {
    ax[x] = kpos[xs.op(x, xs.inv(t[E.f[x]]))];
    if (ax[x] < 0) throw std::logic_error("transversal decomposition failed");
  }

  // Any equivalence sends t_y to k'(c_y) * t'_y and is determined by the
  // translates c; c_0 = 0 since v fixes the unit. Walk all assignments.
  std::vector<int> c(ny, 0), v(nx);
  const auto is_equivalence = [&](const std::vector<int>& map) {
    for (int x1 = 0; x1 < nx; ++x1)
      for (int x2 = 0; x2 < nx; ++x2) {
        if (map[xs.op(x1, x2)] != xps.op(map[x1], map[x2])) return false;
        if (map[E.X.circ().op(x1, x2)] !=
            Ep.X.circ().op(map[x1], map[x2]))
          return false;
      }
    std::vector<char> hit(nx, 0);
    for (int x = 0; x < nx; ++x) {
      if (hit[map[x]]) return false;
      hit[map[x]] = 1;
    }
    for (int a = 0; a < na; ++a)
      if (map[E.k[a]] != Ep.k[a]) return false;
    for (int x = 0; x < nx; ++x)
      if (Ep.f[map[x]] != E.f[x]) return false;
    return true;
  };
  while (true) {
    for (int x = 0; x < nx; ++x)
      v[x] = xps.op(Ep.k[as.op(ax[x], c[E.f[x]])], tp[E.f[x]]);
    if (is_equivalence(v)) return ExtEquivalence{true, v};
    int y = 1;
    while (y < ny && c[y] == na - 1) c[y++] = 0;
    if (y >= ny) break;
    ++c[y];
  }
  return ExtEquivalence{false, {}};
}

}  // namespace skb
