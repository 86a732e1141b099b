#include "skb/digroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace skb {

Checked<Digroup> validate_digroup(const Table& star, const Table& circ) {
  auto s = FiniteGroup::validate(star);
  if (!s) {
    Diag d = s.diag();
    d.detail = "star: " + (d.detail.empty() ? d.code : d.detail);
    return d;
  }
  auto c = FiniteGroup::validate(circ);
  if (!c) {
    Diag d = c.diag();
    d.detail = "circ: " + (d.detail.empty() ? d.code : d.detail);
    return d;
  }
  return make_digroup(std::move(s).value(), std::move(c).value());
}

Checked<Digroup> make_digroup(FiniteGroup star, FiniteGroup circ) {
  if (star.order() != circ.order()) return make_diag("SizeMismatch", {}, "laws on different carriers");
  return Digroup{std::move(star), std::move(circ)};
}

LambdaTable lambda_of(const Digroup& d) {
  const int n = d.order();
  LambdaTable lt;
  lt.rows.reserve(n);
  for (int a = 0; a < n; ++a) {
    std::vector<int> img(n);
    for (int b = 0; b < n; ++b) img[b] = d.star.op(d.star.inv(a), d.circ.op(a, b));
    lt.rows.push_back(Perm::unchecked(std::move(img)));
  }
  return lt;
}

BraceReport check_brace(const Digroup& d) {
  const int n = d.order();
  const auto& st = d.star;
  const auto& ci = d.circ;
  BraceReport r;

  for (int a = 0; a < n && r.compat.ok; ++a)
    for (int b = 0; b < n && r.compat.ok; ++b)
      for (int c = 0; c < n; ++c) {
        const int lhs = ci.op(a, st.op(b, c));
        const int rhs = st.op(st.op(ci.op(a, b), st.inv(a)), ci.op(a, c));
        if (lhs != rhs) {
          r.compat = {false, {a, b, c}};
          break;
        }
      }

  const LambdaTable lt = lambda_of(d);
  for (int a = 0; a < n && r.lambda_mult.ok; ++a)
    for (int b = 0; b < n; ++b)
      if (lt.rows[ci.op(a, b)] != lt.rows[a] * lt.rows[b]) {
        r.lambda_mult = {false, {a, b}};
        break;
      }

  for (int a = 0; a < n && r.lambda_hom.ok; ++a)
    for (int b = 0; b < n && r.lambda_hom.ok; ++b)
      for (int c = 0; c < n; ++c)
        if (lt.rows[a](st.op(b, c)) != st.op(lt.rows[a](b), lt.rows[a](c))) {
          r.lambda_hom = {false, {a, b, c}};
          break;
        }

  return r;
}

Checked<SkewBrace> SkewBrace::validate(Digroup d) {
  const BraceReport r = check_brace(d);
  if (!r.compat.ok) return make_diag("CompatFail", r.compat.witness);
  if (!r.lambda_mult.ok) return make_diag("LambdaNotMultiplicative", r.lambda_mult.witness);
  if (!r.lambda_hom.ok) return make_diag("LambdaNotHomomorphism", r.lambda_hom.witness);
  LambdaTable lt = lambda_of(d);
  return SkewBrace(std::move(d), std::move(lt));
}

Checked<SkewBrace> brace_from_lambda(const FiniteGroup& star, const std::vector<Perm>& lam) {
  const int n = star.order();
  if (static_cast<int>(lam.size()) != n) return make_diag("SizeMismatch");
  if (!lam[0].is_identity()) return make_diag("LambdaNotPointed");
  for (int a = 0; a < n; ++a) {
    if (lam[a].size() != n) return make_diag("SizeMismatch", {a});
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (lam[a](star.op(b, c)) != star.op(lam[a](b), lam[a](c)))
          return make_diag("LambdaNotAutomorphism", {a});
  }
  std::vector<int> circ(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) circ[static_cast<size_t>(a) * n + b] = star.op(a, lam[a](b));
  auto cg = FiniteGroup::validate_flat(n, std::move(circ));
  if (!cg) {
    Diag d = cg.diag();
    return make_diag("NotGroupLaw", d.witness, "circ law: " + d.code);
  }
  const Digroup dg{star, cg.value()};
  // the built lambda table reproduces lam by construction; multiplicativity
  // is the remaining law
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (lam[dg.circ.op(a, b)] != lam[a] * lam[b])
        return make_diag("LambdaNotMultiplicative", {a, b});
  auto sb = SkewBrace::validate(dg);
  if (!sb) return sb.diag();  // cannot happen; kept as a hard check
  return sb;
}

Checked<std::vector<SkewBrace>> enumerate_braces(const FiniteGroup& star, const Limits& lim) {
  const int n = star.order();
  if (n > lim.enumerate_max_order)
    return make_diag("BoundExceeded", {n}, "raise Limits::enumerate_max_order to search this size");

  std::vector<Perm> auts = automorphisms(star);
  const int m = static_cast<int>(auts.size());
  std::map<Perm, int> aut_index;
  for (int i = 0; i < m; ++i) aut_index.emplace(auts[i], i);
  // composition table of Aut(star)
  std::vector<int> comp(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) comp[static_cast<size_t>(i) * m + j] = aut_index.at(auts[i] * auts[j]);
  const int id_idx = aut_index.at(Perm(n));

  std::vector<SkewBrace> found;

  // lam[a] = index into auts, or -1. Assignments propagate through the
  // closure rule lam[a o b] = lam[a] lam[b] with a o b = a * lam[a](b);
  // a contradiction prunes the branch.
  std::vector<int> lam(n, -1);
  lam[0] = id_idx;

  auto propagate = [&](std::vector<int>& l) -> bool {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        if (l[a] < 0) continue;
        for (int b = 0; b < n; ++b) {
          if (l[b] < 0) continue;
          const int c = star.op(a, auts[l[a]](b));  // a o b
          const int want = comp[static_cast<size_t>(l[a]) * m + l[b]];
          if (l[c] < 0) {
            l[c] = want;
            changed = true;
          } else if (l[c] != want) {
            return false;
          }
        }
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, const std::vector<int>& cur) -> void {
    int a = -1;
    for (int x = 1; x < n; ++x)
      if (cur[x] < 0) {
        a = x;
        break;
      }
    if (a < 0) {
      std::vector<Perm> rows;
      rows.reserve(n);
      for (int x = 0; x < n; ++x) rows.push_back(auts[cur[x]]);
      auto sb = brace_from_lambda(star, rows);
      if (!sb) throw std::logic_error("enumerate_braces closure produced a non-brace: " + sb.diag().str());
      found.push_back(std::move(sb).value());
      return;
    }
    for (int t = 0; t < m; ++t) {
      std::vector<int> next = cur;
      next[a] = t;
      if (propagate(next)) self(self, next);
    }
  };
  rec(rec, lam);

  std::sort(found.begin(), found.end(), [](const SkewBrace& x, const SkewBrace& y) {
    return x.circ().flat() < y.circ().flat();
  });
  found.erase(std::unique(found.begin(), found.end(),
                          [](const SkewBrace& x, const SkewBrace& y) { return x.circ() == y.circ(); }),
              found.end());
  return found;
}

std::vector<SkewBrace> dedupe_braces(const std::vector<SkewBrace>& braces) {
  std::vector<SkewBrace> reps;
  for (const auto& b : braces) {
    bool fresh = true;
    for (const auto& r : reps) {
      if (!(r.star() == b.star())) continue;
      for (const Perm& s : automorphisms(b.star())) {
        bool match = true;
        for (int x = 0; x < b.order() && match; ++x)
          for (int y = 0; y < b.order(); ++y)
            if (s(b.circ().op(x, y)) != r.circ().op(s(x), s(y))) {
              match = false;
              break;
            }
        if (match) {
          fresh = false;
          break;
        }
      }
      if (!fresh) break;
    }
    if (fresh) reps.push_back(b);
  }
  return reps;
}

bool is_abelian_brace(const SkewBrace& b) {
  return b.star() == b.circ() && b.star().commutative();
}

SkewBrace trivial_brace(const FiniteGroup& g) {
  return SkewBrace::validate(Digroup{g, g}).value();
}

SkewBrace opposite_brace(const FiniteGroup& g) {
  return SkewBrace::validate(Digroup{g, g.opposite()}).value();
}

}  // namespace skb
