#include "skb/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace skb {

Checked<FiniteGroup> FiniteGroup::validate(const Table& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) return make_diag("BadShape", {}, "empty table");
  std::vector<int> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      return make_diag("BadShape", {a}, "row length differs from row count");
    for (int b = 0; b < n; ++b) flat.push_back(table[a][b]);
  }
  return validate_flat(n, std::move(flat));
}

Checked<FiniteGroup> FiniteGroup::validate_flat(int n, std::vector<int> flat) {
  if (n <= 0 || static_cast<int>(flat.size()) != n * n)
    return make_diag("BadShape", {}, "table is not n by n");
  auto at = [&](int a, int b) { return flat[static_cast<size_t>(a) * n + b]; };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (at(a, b) < 0 || at(a, b) >= n) return make_diag("EntryOutOfRange", {a, b});

  for (int a = 0; a < n; ++a) {
    if (at(0, a) != a || at(a, 0) != a) return make_diag("NoIdentityAtZero", {a});
  }

  // Latin property: each row and column is a permutation.
  for (int a = 0; a < n; ++a) {
    std::vector<char> seen(n, 0);
    for (int b = 0; b < n; ++b) {
      if (seen[at(a, b)]) return make_diag("NotLatinRow", {a});
      seen[at(a, b)] = 1;
    }
  }
  for (int b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    for (int a = 0; a < n; ++a) {
      if (seen[at(a, b)]) return make_diag("NotLatinCol", {b});
      seen[at(a, b)] = 1;
    }
  }

  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (at(a, b) == 0 && at(b, a) == 0) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0) return make_diag("NoInverse", {a});
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) return make_diag("NotAssociative", {a, b, c});

  return FiniteGroup(n, std::move(flat), std::move(inv));
}

bool FiniteGroup::commutative() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (op(a, b) != op(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = op(x, a);
    ++k;
  }
  return k;
}

FiniteGroup FiniteGroup::opposite() const {
  std::vector<int> t(table_.size());
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[static_cast<size_t>(a) * n_ + b] = op(b, a);
  auto checked = validate_flat(n_, std::move(t));
  return checked.value();
}

Table FiniteGroup::rows() const {
  Table t(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) t[a][b] = op(a, b);
  return t;
}

Status validate_hom(const GroupHom& h) {
  const int n = h.dom.order();
  if (static_cast<int>(h.map.size()) != n) return make_diag("SizeMismatch");
  for (int a = 0; a < n; ++a)
    if (h.map[a] < 0 || h.map[a] >= h.cod.order()) return make_diag("EntryOutOfRange", {a});
  if (h.map[0] != 0) return make_diag("NotUnital");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (h.map[h.dom.op(a, b)] != h.cod.op(h.map[a], h.map[b]))
        return make_diag("NotMultiplicative", {a, b});
  return std::nullopt;
}

Checked<GroupHom> make_hom(FiniteGroup dom, FiniteGroup cod, std::vector<int> map) {
  GroupHom h{std::move(dom), std::move(cod), std::move(map)};
  if (auto d = validate_hom(h)) return *d;
  return h;
}

Status validate_action(const GroupAction& psi) {
  const int ny = psi.actor.order(), nk = psi.target.order();
  if (static_cast<int>(psi.perms.size()) != ny) return make_diag("SizeMismatch");
  for (int y = 0; y < ny; ++y) {
    if (psi.perms[y].size() != nk) return make_diag("SizeMismatch", {y});
    if (!is_bijection(psi.perms[y].image())) return make_diag("NotAutomorphism", {y});
    const Perm& p = psi.perms[y];
    for (int a = 0; a < nk; ++a)
      for (int b = 0; b < nk; ++b)
        if (p(psi.target.op(a, b)) != psi.target.op(p(a), p(b)))
          return make_diag("NotAutomorphism", {y, a, b});
  }
  if (!psi.perms[0].is_identity()) return make_diag("NotUnital");
  for (int y = 0; y < ny; ++y)
    for (int z = 0; z < ny; ++z)
      if (psi.perms[psi.actor.op(y, z)] != psi.perms[y] * psi.perms[z])
        return make_diag("NotMultiplicative", {y, z});
  return std::nullopt;
}

GroupAction trivial_action(FiniteGroup actor, FiniteGroup target) {
  std::vector<Perm> perms(actor.order(), Perm(target.order()));
  return GroupAction{std::move(actor), std::move(target), std::move(perms)};
}

Checked<FiniteGroup> semidirect_product(const GroupAction& psi) {
  if (auto d = validate_action(psi)) return *d;
  const int ny = psi.actor.order(), nk = psi.target.order();
  const int n = ny * nk;
  std::vector<int> t(static_cast<size_t>(n) * n);
  for (int y = 0; y < ny; ++y)
    for (int k = 0; k < nk; ++k)
      for (int y2 = 0; y2 < ny; ++y2)
        for (int k2 = 0; k2 < nk; ++k2) {
          const int a = y * nk + k, b = y2 * nk + k2;
          t[static_cast<size_t>(a) * n + b] =
              psi.actor.op(y, y2) * nk + psi.target.op(k, psi.perms[y](k2));
        }
  return FiniteGroup::validate_flat(n, std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  return semidirect_product(trivial_action(a, b)).value();
}

namespace {

bool is_automorphism(const FiniteGroup& g, const std::vector<int>& img) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (img[g.op(a, b)] != g.op(img[a], img[b])) return false;
  return true;
}

// Smallest generating set by greedy closure.
std::vector<int> greedy_generators(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  in[0] = 1;
  int covered = 1;
  std::vector<int> gens;
  while (covered < n) {
    int pick = -1;
    for (int x = 1; x < n; ++x)
      if (!in[x]) {
        pick = x;
        break;
      }
    gens.push_back(pick);
    // close under multiplication; finiteness makes this a subgroup
    std::vector<int> members{0, pick};
    for (int x = 0; x < n; ++x)
      if (in[x] && x != 0) members.push_back(x);
    bool grew = true;
    std::vector<char> mem(n, 0);
    for (int x : members) mem[x] = 1;
    while (grew) {
      grew = false;
      for (int a = 0; a < n; ++a)
        if (mem[a])
          for (int b = 0; b < n; ++b)
            if (mem[b] && !mem[g.op(a, b)]) {
              mem[g.op(a, b)] = 1;
              grew = true;
            }
    }
    covered = 0;
    for (int x = 0; x < n; ++x) {
      in[x] = mem[x];
      covered += mem[x];
    }
  }
  return gens;
}

// Order of enumeration: each non-identity element reached as prev * gen.
struct Derivation {
  std::vector<int> order;           // BFS order, starts with 0
  std::vector<std::pair<int, int>> via;  // via[x] = (prev, gen index), x != 0
};

Derivation derive(const FiniteGroup& g, const std::vector<int>& gens) {
  const int n = g.order();
  Derivation d;
  d.via.assign(n, {-1, -1});
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  d.order.push_back(0);
  for (size_t i = 0; i < d.order.size(); ++i) {
    const int x = d.order[i];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      const int y = g.op(x, gens[gi]);
      if (!seen[y]) {
        seen[y] = 1;
        d.via[y] = {x, static_cast<int>(gi)};
        d.order.push_back(y);
      }
    }
  }
  return d;
}

// Exhaustive homomorphisms dom -> cod through generator images.
std::vector<std::vector<int>> homs_by_generators(const FiniteGroup& dom, const FiniteGroup& cod,
                                                 bool bijective_only) {
  const int n = dom.order();
  const auto gens = greedy_generators(dom);
  const auto der = derive(dom, gens);

  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    const int go = dom.element_order(gens[gi]);
    for (int h = 0; h < cod.order(); ++h) {
      const int ho = cod.element_order(h);
      if (bijective_only ? ho == go : go % ho == 0) candidates[gi].push_back(h);
    }
  }

  std::vector<std::vector<int>> out;
  std::vector<int> choice(gens.size(), 0);
  std::vector<int> map(n, -1);
  auto attempt = [&]() {
    map.assign(n, -1);
    map[0] = 0;
    for (size_t i = 1; i < der.order.size(); ++i) {
      const int x = der.order[i];
      const auto [prev, gi] = der.via[x];
      map[x] = cod.op(map[prev], choice[gi]);
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (map[dom.op(a, b)] != cod.op(map[a], map[b])) return;
    if (bijective_only && !is_bijection(map)) return;
    out.push_back(map);
  };
  // product over candidate lists
  std::vector<size_t> idx(gens.size(), 0);
  if (gens.empty()) {
    attempt();
  } else {
    while (true) {
      for (size_t gi = 0; gi < gens.size(); ++gi) choice[gi] = candidates[gi][idx[gi]];
      attempt();
      size_t pos = gens.size();
      while (pos > 0) {
        --pos;
        if (++idx[pos] < candidates[pos].size()) break;
        idx[pos] = 0;
        if (pos == 0) {
          pos = SIZE_MAX;
          break;
        }
      }
      if (pos == SIZE_MAX) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Perm> automorphisms(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<Perm> out;
  if (n <= 8) {
    std::vector<int> tail(n > 1 ? n - 1 : 0);
    std::iota(tail.begin(), tail.end(), 1);
    std::vector<int> img(n);
    img[0] = 0;
    do {
      for (int i = 1; i < n; ++i) img[i] = tail[i - 1];
      if (is_automorphism(g, img)) out.push_back(Perm::unchecked(img));
    } while (std::next_permutation(tail.begin(), tail.end()));
    return out;  // already in image-lex order
  }
  for (auto& m : homs_by_generators(g, g, true)) out.push_back(Perm::unchecked(std::move(m)));
  return out;
}

std::vector<GroupHom> all_homs(const FiniteGroup& dom, const FiniteGroup& cod) {
  std::vector<GroupHom> out;
  for (auto& m : homs_by_generators(dom, cod, false)) out.push_back(GroupHom{dom, cod, std::move(m)});
  return out;
}

FiniteGroup perm_table_group(std::vector<Perm>& perms) {
  std::sort(perms.begin(), perms.end());
  const int n = static_cast<int>(perms.size());
  std::vector<int> t(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Perm p = perms[i] * perms[j];
      const auto it = std::lower_bound(perms.begin(), perms.end(), p);
      if (it == perms.end() || !(*it == p))
        throw std::invalid_argument("perm_table_group: set not closed under composition");
      t[static_cast<size_t>(i) * n + j] = static_cast<int>(it - perms.begin());
    }
  auto checked = FiniteGroup::validate_flat(n, std::move(t));
  if (!checked)
    throw std::invalid_argument("perm_table_group: " + checked.diag().str());
  return checked.value();
}

std::vector<GroupAction> all_actions(const FiniteGroup& y, const FiniteGroup& k) {
  std::vector<Perm> auts = automorphisms(k);
  FiniteGroup autg = perm_table_group(auts);
  std::vector<GroupAction> out;
  for (const auto& h : all_homs(y, autg)) {
    std::vector<Perm> perms;
    perms.reserve(y.order());
    for (int i = 0; i < y.order(); ++i) perms.push_back(auts[h.map[i]]);
    out.push_back(GroupAction{y, k, std::move(perms)});
  }
  return out;
}

std::optional<Perm> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  const int n = a.order();
  if (n <= 8) {
    std::vector<int> tail(n > 1 ? n - 1 : 0);
    std::iota(tail.begin(), tail.end(), 1);
    std::vector<int> img(n);
    img[0] = 0;
    do {
      for (int i = 1; i < n; ++i) img[i] = tail[i - 1];
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        for (int y2 = 0; y2 < n && ok; ++y2)
          if (img[a.op(x, y2)] != b.op(img[x], img[y2])) ok = false;
      if (ok) return Perm::unchecked(img);
    } while (std::next_permutation(tail.begin(), tail.end()));
    return std::nullopt;
  }
  auto maps = homs_by_generators(a, b, true);
  if (maps.empty()) return std::nullopt;
  return Perm::unchecked(maps.front());
}

std::vector<FiniteGroup> all_group_tables(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("all_group_tables: order out of range");
  std::vector<FiniteGroup> out;
  std::vector<int> t(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    t[i] = i;                             // row 0
    t[static_cast<size_t>(i) * n] = i;    // column 0
  }
  // fill cells (r,c), r,c >= 1, row-major, keeping rows and columns Latin
  std::vector<std::vector<char>> rowUsed(n, std::vector<char>(n, 0));
  std::vector<std::vector<char>> colUsed(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    rowUsed[0][i] = colUsed[i][i] = 1;
    rowUsed[i][i] = colUsed[0][i] = 1;
  }
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == (n - 1) * (n - 1)) {
      auto checked = FiniteGroup::validate_flat(n, t);
      if (checked) out.push_back(checked.value());
      return;
    }
    const int r = 1 + cell / (n - 1), c = 1 + cell % (n - 1);
    for (int v = 0; v < n; ++v) {
      if (rowUsed[r][v] || colUsed[c][v]) continue;
      rowUsed[r][v] = colUsed[c][v] = 1;
      t[static_cast<size_t>(r) * n + c] = v;
      self(self, cell + 1);
      t[static_cast<size_t>(r) * n + c] = -1;
      rowUsed[r][v] = colUsed[c][v] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace skb
