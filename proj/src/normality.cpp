#include "skb/normality.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace skb {
namespace {

std::vector<char> member_flags(int n, const std::vector<int>& elems) {
  std::vector<char> in(n, 0);
  for (int e : elems) in[e] = 1;
  return in;
}

// a k a^{-1} in K for all a in G, k in K (under the given law).
bool conjugation_closed(const FiniteGroup& g, const std::vector<int>& elems,
                        const std::vector<char>& in) {
  for (int a = 0; a < g.order(); ++a)
    for (int k : elems)
      if (!in[g.op(g.op(a, k), g.inv(a))]) return false;
  return true;
}

FiniteGroup induced_group(const FiniteGroup& g, const std::vector<int>& elems,
                          const std::vector<int>& pos) {
  const int m = static_cast<int>(elems.size());
  Table t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t[i][j] = pos[g.op(elems[i], elems[j])];
  Checked<FiniteGroup> sub = FiniteGroup::validate(std::move(t));
  if (!sub.ok()) throw std::logic_error("closed subset did not induce a group: " + sub.diag().str());
  return *std::move(sub);
}

}  // namespace

Checked<SubObject> SubObject::validate(Digroup parent, std::vector<int> elems) {
  const int n = parent.order();
  std::sort(elems.begin(), elems.end());
  for (size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] < 0 || elems[i] >= n)
      return Diag{"EntryOutOfRange", {elems[i]}, "subobject element", true};
    if (i > 0 && elems[i] == elems[i - 1])
      return Diag{"DuplicateEntry", {elems[i]}, "subobject element", true};
  }
  if (elems.empty() || elems[0] != 0) return input_diag("MissingUnit", "subobject must contain 0");
  const std::vector<char> in = member_flags(n, elems);
  for (int a : elems)
    for (int b : elems) {
      if (!in[parent.star.op(a, b)]) return make_diag("NotClosed", {a, b}, "star");
      if (!in[parent.circ.op(a, b)]) return make_diag("NotClosed", {a, b}, "circ");
    }
  return SubObject{std::move(parent), std::move(elems)};
}

DigroupNormalityReport is_normal_digroup(const SubObject& S) {
  const Digroup& g = S.parent;
  const std::vector<char> in = member_flags(g.order(), S.elems);
  DigroupNormalityReport r{};
  r.i = conjugation_closed(g.star, S.elems, in);
  r.ii = conjugation_closed(g.circ, S.elems, in);
  r.iii = true;
  for (int x = 0; x < g.order() && r.iii; ++x)
    for (int y = 0; y < g.order(); ++y) {
      const bool star_side = in[g.star.op(y, g.star.inv(x))];
      const bool circ_side = in[g.circ.op(y, g.circ.inv(x))];
      if (star_side != circ_side) {
        r.iii = false;
        break;
      }
    }
  return r;
}

IdealReport is_ideal(const SubObject& S) {
  const Digroup& g = S.parent;
  const int n = g.order();
  const std::vector<char> in = member_flags(n, S.elems);
  IdealReport r{};
  r.i = conjugation_closed(g.circ, S.elems, in);
  r.ii = true;
  for (int a = 0; a < n && r.ii; ++a) {
    std::vector<char> left(n, 0), right(n, 0);
    for (int k : S.elems) {
      left[g.star.op(a, k)] = 1;
      right[g.star.op(k, a)] = 1;
    }
    if (left != right) r.ii = false;
  }
  r.iii = true;
  const LambdaTable lt = lambda_of(g);
  for (int a = 0; a < n && r.iii; ++a)
    for (int k : S.elems)
      if (!in[lt.rows[a](k)]) {
        r.iii = false;
        break;
      }
  return r;
}

Checked<Quotient> quotient_by_ideal(const SubObject& S) {
  const Digroup& g = S.parent;
  const int n = g.order();
  if (!check_brace(g).all_ok()) return make_diag("NotABrace");
  const IdealReport ir = is_ideal(S);
  if (!ir.all())
    return make_diag("NotAnIdeal", {},
                     std::string(ir.i ? "" : " circ-normality") + (ir.ii ? "" : " star-cosets") +
                         (ir.iii ? "" : " lambda-closure"));

  // o-cosets with minimal representatives
  std::vector<int> rep(n);
  for (int x = 0; x < n; ++x) {
    int m = n;
    for (int k : S.elems) m = std::min(m, g.circ.op(x, k));
    rep[x] = m;
  }
  // the *-cosets must coincide with the o-cosets (ideals are normal as
  // digroup subobjects; a mismatch here is a bug, not an input condition)
  for (int x = 0; x < n; ++x)
    for (int k : S.elems)
      if (rep[g.star.op(x, k)] != rep[x])
        return make_diag("WellDefinednessFail", {x, k}, "star-coset differs from circ-coset");

  std::vector<int> reps;
  std::vector<int> proj(n);
  for (int x = 0; x < n; ++x)
    if (rep[x] == x) reps.push_back(x);
  for (int x = 0; x < n; ++x)
    proj[x] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), rep[x]) - reps.begin());

  const int m = static_cast<int>(reps.size());
  Table qs(m, std::vector<int>(m)), qc(m, std::vector<int>(m));
  for (int c = 0; c < m; ++c)
    for (int d = 0; d < m; ++d) {
      qs[c][d] = proj[g.star.op(reps[c], reps[d])];
      qc[c][d] = proj[g.circ.op(reps[c], reps[d])];
    }
  // representative independence of both induced laws
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (proj[g.star.op(x, y)] != qs[proj[x]][proj[y]])
        return make_diag("WellDefinednessFail", {x, y}, "induced star law");
      if (proj[g.circ.op(x, y)] != qc[proj[x]][proj[y]])
        return make_diag("WellDefinednessFail", {x, y}, "induced circ law");
    }
  Checked<FiniteGroup> star = FiniteGroup::validate(std::move(qs));
  if (!star.ok()) return make_diag("WellDefinednessFail", {}, star.diag().str());
  Checked<FiniteGroup> circ = FiniteGroup::validate(std::move(qc));
  if (!circ.ok()) return make_diag("WellDefinednessFail", {}, circ.diag().str());
  Checked<SkewBrace> q = SkewBrace::validate(Digroup{*std::move(star), *std::move(circ)});
  if (!q.ok()) return make_diag("WellDefinednessFail", {}, q.diag().str());
  return Quotient{*std::move(q), std::move(proj), std::move(reps)};
}

bool huq_commutes(const SubObject& U, const SubObject& V) {
  if (U.parent != V.parent) return false;
  const Digroup& g = U.parent;
  for (int u : U.elems)
    for (int v : V.elems)
      if (g.star.op(u, v) != g.star.op(v, u)) return false;
  // the pairing (u, v) |-> u * v must be a homomorphism from the
  // componentwise product for both laws
  for (int u : U.elems)
    for (int v : V.elems)
      for (int up : U.elems)
        for (int vp : V.elems) {
          const int pair = g.star.op(u, v), pairp = g.star.op(up, vp);
          if (g.star.op(g.star.op(u, up), g.star.op(v, vp)) != g.star.op(pair, pairp))
            return false;
          if (g.star.op(g.circ.op(u, up), g.circ.op(v, vp)) != g.circ.op(pair, pairp))
            return false;
        }
  return true;
}

Checked<GroupSplit> GroupSplit::validate(FiniteGroup X, FiniteGroup Y, std::vector<int> f,
                                         std::vector<int> s) {
  if (static_cast<int>(f.size()) != X.order() || static_cast<int>(s.size()) != Y.order())
    return input_diag("SizeMismatch", "f must be sized by X and s by Y");
  if (Status d = validate_hom({X, Y, f})) {
    Diag out = *d;
    out.detail = "f: " + out.detail;
    return out;
  }
  if (Status d = validate_hom({Y, X, s})) {
    Diag out = *d;
    out.detail = "s: " + out.detail;
    return out;
  }
  for (int y = 0; y < Y.order(); ++y)
    if (f[s[y]] != y) return make_diag("NotSection", {y});
  return GroupSplit{std::move(X), std::move(Y), std::move(f), std::move(s)};
}

std::vector<int> GroupSplit::kernel_elems() const {
  std::vector<int> out;
  for (int x = 0; x < X.order(); ++x)
    if (f[x] == 0) out.push_back(x);
  return out;
}

FiniteGroup GroupSplit::kernel_group() const {
  const std::vector<int> elems = kernel_elems();
  std::vector<int> pos(X.order(), -1);
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  return induced_group(X, elems, pos);
}

Checked<FactorResult> factor_through_point(const GroupSplit& P, const GroupHom& g_K,
                                           const GroupHom& g_Y) {
  const std::vector<int> kelems = P.kernel_elems();
  if (g_K.dom != P.kernel_group())
    return input_diag("SizeMismatch", "g_K must be defined on the kernel of f");
  if (g_Y.dom != P.Y) return input_diag("SizeMismatch", "g_Y must be defined on Y");
  if (g_K.cod != g_Y.cod) return input_diag("SizeMismatch", "g_K and g_Y must share a target");
  if (Status d = validate_hom(g_K)) return *d;
  if (Status d = validate_hom(g_Y)) return *d;

  const FiniteGroup& D = g_K.cod;
  std::vector<int> pos(P.X.order(), -1);
  for (size_t i = 0; i < kelems.size(); ++i) pos[kelems[i]] = static_cast<int>(i);

  FactorResult res{true, {}, GroupHom{P.X, D, std::vector<int>(P.X.order())}};
  for (int y = 0; y < P.Y.order() && res.exists; ++y) {
    const int sy = P.s[y];
    for (int k : kelems) {
      const int conj = P.X.op(P.X.op(sy, k), P.X.inv(sy));
      if (D.op(g_K.map[pos[conj]], g_Y.map[y]) != D.op(g_Y.map[y], g_K.map[pos[k]])) {
        res.exists = false;
        res.witness = {y, k};
        break;
      }
    }
  }
  if (!res.exists) return res;

  // g(k * s(y)) = g_K(k) * g_Y(y), reading off x = (x * s(f(x))^{-1}) * s(f(x))
  for (int x = 0; x < P.X.order(); ++x) {
    const int k = P.X.op(x, P.X.inv(P.s[P.f[x]]));
    res.g.map[x] = D.op(g_K.map[pos[k]], g_Y.map[P.f[x]]);
  }
  if (validate_hom(res.g))
    throw std::logic_error("factorization condition held but the extension is not a homomorphism");
  return res;
}

Checked<MonoOfPoints> MonoOfPoints::validate(SplitPoint inner, SplitPoint outer,
                                             std::vector<int> v) {
  if (inner.Y != outer.Y) return input_diag("BaseMismatch", "points must share the base");
  const int n = inner.X.order(), np = outer.X.order();
  if (static_cast<int>(v.size()) != n)
    return input_diag("SizeMismatch", "v must be sized by the inner carrier");
  std::vector<char> hit(np, 0);
  for (int x : v) {
    if (x < 0 || x >= np) return Diag{"EntryOutOfRange", {x}, "v", true};
    if (hit[x]) return make_diag("NotInjective", {x});
    hit[x] = 1;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (v[inner.X.star.op(a, b)] != outer.X.star.op(v[a], v[b]))
        return make_diag("NotMultiplicative", {a, b}, "star");
      if (v[inner.X.circ.op(a, b)] != outer.X.circ.op(v[a], v[b]))
        return make_diag("NotMultiplicative", {a, b}, "circ");
    }
  for (int x = 0; x < n; ++x)
    if (outer.f[v[x]] != inner.f[x]) return make_diag("SquareFail", {x});
  for (int y = 0; y < inner.Y.order(); ++y)
    if (v[inner.s[y]] != outer.s[y]) return make_diag("SectionFail", {y});
  if (!check_brace(inner.X).all_ok() || !check_brace(outer.X).all_ok())
    return make_diag("NotABrace");
  return MonoOfPoints{std::move(inner), std::move(outer), std::move(v)};
}

bool ideal_reflection_check(const MonoOfPoints& m) {
  const KernelData kd = kernel_of(m.inner);
  const KernelData kdp = kernel_of(m.outer);
  std::vector<int> in_kernel_positions, in_outer;
  for (int k : kd.elems) {
    const int image = m.v[k];
    if (kdp.pos[image] < 0)
      throw std::logic_error("kernel image escaped the outer kernel despite f' v = f");
    in_kernel_positions.push_back(kdp.pos[image]);
    in_outer.push_back(image);
  }
  Checked<SubObject> u = SubObject::validate(kdp.K, std::move(in_kernel_positions));
  if (!u.ok()) throw std::logic_error("kernel image is not a subobject: " + u.diag().str());
  if (!is_ideal(*u).all()) return true;  // premise fails; implication holds
  Checked<SubObject> comp = SubObject::validate(m.outer.X, std::move(in_outer));
  if (!comp.ok()) throw std::logic_error("composite image is not a subobject: " + comp.diag().str());
  return is_ideal(*comp).all();
}

Checked<GroupExactMono> GroupExactMono::validate(FiniteGroup X, FiniteGroup Xp, FiniteGroup Y,
                                                 std::vector<int> v, std::vector<int> f,
                                                 std::vector<int> fp) {
  if (static_cast<int>(v.size()) != X.order() || static_cast<int>(f.size()) != X.order() ||
      static_cast<int>(fp.size()) != Xp.order())
    return input_diag("SizeMismatch", "v, f sized by X; f' sized by X'");
  if (Status d = validate_hom({X, Y, f})) {
    Diag out = *d;
    out.detail = "f: " + out.detail;
    return out;
  }
  if (Status d = validate_hom({Xp, Y, fp})) {
    Diag out = *d;
    out.detail = "f': " + out.detail;
    return out;
  }
  std::vector<char> onto(Y.order(), 0), ontop(Y.order(), 0);
  for (int x = 0; x < X.order(); ++x) onto[f[x]] = 1;
  for (int x = 0; x < Xp.order(); ++x) ontop[fp[x]] = 1;
  if (std::find(onto.begin(), onto.end(), 0) != onto.end())
    return make_diag("NotSurjective", {}, "f");
  if (std::find(ontop.begin(), ontop.end(), 0) != ontop.end())
    return make_diag("NotSurjective", {}, "f'");
  std::vector<char> hit(Xp.order(), 0);
  for (int x = 0; x < X.order(); ++x) {
    if (v[x] < 0 || v[x] >= Xp.order()) return Diag{"EntryOutOfRange", {v[x]}, "v", true};
    if (hit[v[x]]) return make_diag("NotInjective", {v[x]});
    hit[v[x]] = 1;
  }
  for (int a = 0; a < X.order(); ++a)
    for (int b = 0; b < X.order(); ++b)
      if (v[X.op(a, b)] != Xp.op(v[a], v[b])) return make_diag("NotMultiplicative", {a, b}, "v");
  for (int x = 0; x < X.order(); ++x)
    if (fp[v[x]] != f[x]) return make_diag("SquareFail", {x});
  return GroupExactMono{std::move(X), std::move(Xp), std::move(Y),
                        std::move(v),  std::move(f),  std::move(fp)};
}

bool group_normality_reflection_check(const GroupExactMono& d) {
  std::vector<char> in_vk(d.Xp.order(), 0);
  std::vector<int> vk;
  for (int x = 0; x < d.X.order(); ++x)
    if (d.f[x] == 0) {
      in_vk[d.v[x]] = 1;
      vk.push_back(d.v[x]);
    }
  // premise: v(Ker f) normal in Ker f'
  for (int a = 0; a < d.Xp.order(); ++a) {
    if (d.fp[a] != 0) continue;
    for (int t : vk)
      if (!in_vk[d.Xp.op(d.Xp.op(a, t), d.Xp.inv(a))]) return true;
  }
  // conclusion: v(Ker f) normal in X'
  for (int a = 0; a < d.Xp.order(); ++a)
    for (int t : vk)
      if (!in_vk[d.Xp.op(d.Xp.op(a, t), d.Xp.inv(a))]) return false;
  return true;
}

std::vector<MonoOfPoints> sub_points_of(const SplitPoint& p) {
  const int n = p.X.order();
  const auto closure = [&](std::vector<char> in) {
    for (bool grew = true; grew;) {
      grew = false;
      for (int a = 0; a < n; ++a) {
        if (!in[a]) continue;
        for (int b = 0; b < n; ++b) {
          if (!in[b]) continue;
          for (int c : {p.X.star.op(a, b), p.X.circ.op(a, b)})
            if (!in[c]) {
              in[c] = 1;
              grew = true;
            }
        }
      }
    }
    return in;
  };
  const auto elems_of = [&](const std::vector<char>& in) {
    std::vector<int> e;
    for (int x = 0; x < n; ++x)
      if (in[x]) e.push_back(x);
    return e;
  };

  std::vector<char> seed(n, 0);
  for (int y : p.s) seed[y] = 1;
  std::set<std::vector<int>> found;
  std::vector<std::vector<char>> frontier = {closure(std::move(seed))};
  found.insert(elems_of(frontier[0]));
  while (!frontier.empty()) {
    std::vector<std::vector<char>> next;
    for (const std::vector<char>& in : frontier)
      for (int e = 0; e < n; ++e) {
        if (in[e]) continue;
        std::vector<char> grown = in;
        grown[e] = 1;
        grown = closure(std::move(grown));
        if (found.insert(elems_of(grown)).second) next.push_back(std::move(grown));
      }
    frontier = std::move(next);
  }

  std::vector<MonoOfPoints> out;
  for (const std::vector<int>& elems : found) {
    const int m = static_cast<int>(elems.size());
    std::vector<int> pos(n, -1);
    for (int i = 0; i < m; ++i) pos[elems[i]] = i;
    Table st(m, std::vector<int>(m)), ct(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        st[i][j] = pos[p.X.star.op(elems[i], elems[j])];
        ct[i][j] = pos[p.X.circ.op(elems[i], elems[j])];
      }
    Checked<FiniteGroup> st_g = FiniteGroup::validate(std::move(st));
    Checked<FiniteGroup> ct_g = FiniteGroup::validate(std::move(ct));
    if (!st_g.ok() || !ct_g.ok())
      throw std::logic_error("closed subset did not induce a digroup");
    std::vector<int> f_in(m), s_in(p.Y.order());
    for (int i = 0; i < m; ++i) f_in[i] = p.f[elems[i]];
    for (int y = 0; y < p.Y.order(); ++y) s_in[y] = pos[p.s[y]];
    Checked<SplitPoint> inner =
        SplitPoint::validate(Digroup{*std::move(st_g), *std::move(ct_g)}, p.Y, std::move(f_in),
                             std::move(s_in));
    if (!inner.ok()) throw std::logic_error("sub-point failed validation: " + inner.diag().str());
    Checked<MonoOfPoints> mono = MonoOfPoints::validate(*std::move(inner), p, elems);
    if (!mono.ok()) throw std::logic_error("inclusion failed validation: " + mono.diag().str());
    out.push_back(*std::move(mono));
  }
  return out;
}

}  // namespace skb
