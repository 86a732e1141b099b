#include "skb/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

namespace skb {

namespace {

Diag bad_shape(std::string what) { return input_diag("MalformedJson", std::move(what)); }

Checked<int> as_int(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) return bad_shape(where + " is not an integer");
  auto wide = v.get<std::int64_t>();
  if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max())
    return bad_shape(where + " does not fit in an int");
  return static_cast<int>(wide);
}

Checked<const Json*> field(const Json& j, const char* key) {
  if (!j.is_object()) return bad_shape("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) return bad_shape(std::string("missing key '") + key + "'");
  return &*it;
}

Checked<std::vector<int>> int_vec(const Json& v, const std::string& where) {
  if (!v.is_array()) return bad_shape(where + " is not an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Checked<int> x = as_int(v[i], where + "[" + std::to_string(i) + "]");
    if (!x) return x.diag();
    out.push_back(*x);
  }
  return out;
}

Checked<Table> int_table(const Json& v, const std::string& where) {
  if (!v.is_array()) return bad_shape(where + " is not an array of rows");
  Table out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Checked<std::vector<int>> row = int_vec(v[i], where + "[" + std::to_string(i) + "]");
    if (!row) return row.diag();
    out.push_back(std::move(*row));
  }
  return out;
}

// rows x cols, every entry in [0, bound); bound < 0 skips the range check.
Status check_shape(const Table& t, int rows, int cols, int bound, const std::string& where) {
  if (static_cast<int>(t.size()) != rows)
    return bad_shape(where + " has " + std::to_string(t.size()) + " rows, expected " +
                     std::to_string(rows));
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(t[i].size()) != cols)
      return bad_shape(where + "[" + std::to_string(i) + "] has " + std::to_string(t[i].size()) +
                       " entries, expected " + std::to_string(cols));
    if (bound >= 0)
      for (int v : t[i])
        if (v < 0 || v >= bound)
          return bad_shape(where + "[" + std::to_string(i) + "] entry " + std::to_string(v) +
                           " out of range [0," + std::to_string(bound) + ")");
  }
  return std::nullopt;
}

Status check_range(const std::vector<int>& v, int size, int bound, const std::string& where) {
  if (static_cast<int>(v.size()) != size)
    return bad_shape(where + " has " + std::to_string(v.size()) + " entries, expected " +
                     std::to_string(size));
  for (int x : v)
    if (x < 0 || x >= bound)
      return bad_shape(where + " entry " + std::to_string(x) + " out of range [0," +
                       std::to_string(bound) + ")");
  return std::nullopt;
}

// The declared order n plus an n x n table under `key`.
Checked<Table> sized_table(const Json& j, const char* key, int n) {
  Checked<const Json*> v = field(j, key);
  if (!v) return v.diag();
  Checked<Table> t = int_table(**v, key);
  if (!t) return t.diag();
  if (Status st = check_shape(*t, n, n, -1, key)) return *st;
  return t;
}

Checked<int> declared_order(const Json& j) {
  Checked<const Json*> v = field(j, "n");
  if (!v) return v.diag();
  Checked<int> n = as_int(**v, "n");
  if (!n) return n.diag();
  if (*n < 1) return bad_shape("n must be at least 1");
  return n;
}

Checked<std::vector<Perm>> perm_rows(const Table& t, const std::string& where) {
  std::vector<Perm> out;
  out.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::optional<Perm> p = Perm::checked(t[i]);
    if (!p)
      return bad_shape(where + "[" + std::to_string(i) + "] is not a permutation");
    out.push_back(std::move(*p));
  }
  return out;
}

Table perm_images(const std::vector<Perm>& perms) {
  Table t;
  t.reserve(perms.size());
  for (const Perm& p : perms) t.push_back(p.image());
  return t;
}

}  // namespace

std::string canonical_text(const Json& j) { return j.dump(2) + "\n"; }

Checked<Json> parse_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) return input_diag("JsonParse", "text is not valid JSON");
  return j;
}

Checked<Json> load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return input_diag("FileRead", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Checked<Json> j = parse_text(buf.str());
  if (!j) return input_diag(j.diag().code, "'" + path + "': " + j.diag().detail);
  return j;
}

Status save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return input_diag("FileWrite", "cannot open '" + path + "'");
  out << canonical_text(j);
  out.flush();
  if (!out) return input_diag("FileWrite", "short write to '" + path + "'");
  return std::nullopt;
}

JsonKind classify_json(const Json& j) {
  if (!j.is_object()) return JsonKind::unknown;
  auto has = [&j](const char* k) { return j.contains(k); };
  if (has("table")) return JsonKind::group;
  if (has("A") && has("X") && has("Y") && has("k") && has("f")) return JsonKind::sequence;
  if (has("X") && has("Y") && has("f") && has("s")) return JsonKind::point;
  if (has("parent") && has("elems")) return JsonKind::subobject;
  if (has("phi_star") && has("phi_circ") && has("xi")) return JsonKind::direction;
  if (has("psi_star") && has("psi_circ")) return JsonKind::actions;
  if (has("xi")) return JsonKind::xi;
  if (has("star") && has("lambda")) return JsonKind::brace;
  if (has("star") && has("circ")) return JsonKind::digroup;
  if (has("r") && has("n")) return JsonKind::yb;
  return JsonKind::unknown;
}

std::string json_kind_name(JsonKind k) {
  switch (k) {
    case JsonKind::group: return "group";
    case JsonKind::digroup: return "digroup";
    case JsonKind::brace: return "brace";
    case JsonKind::point: return "point";
    case JsonKind::subobject: return "subobject";
    case JsonKind::sequence: return "sequence";
    case JsonKind::direction: return "direction";
    case JsonKind::yb: return "yb";
    case JsonKind::actions: return "actions";
    case JsonKind::xi: return "xi";
    case JsonKind::unknown: return "unknown";
  }
  return "unknown";
}

Json group_json(const FiniteGroup& g) {
  return Json{{"n", g.order()}, {"table", g.rows()}};
}

Checked<FiniteGroup> group_from_json(const Json& j) {
  Checked<int> n = declared_order(j);
  if (!n) return n.diag();
  Checked<Table> t = sized_table(j, "table", *n);
  if (!t) return t.diag();
  return FiniteGroup::validate(*t);
}

Json digroup_json(const Digroup& d) {
  return Json{{"n", d.order()}, {"star", d.star.rows()}, {"circ", d.circ.rows()}};
}

Checked<Digroup> digroup_from_json(const Json& j) {
  Checked<int> n = declared_order(j);
  if (!n) return n.diag();
  Checked<Table> star = sized_table(j, "star", *n);
  if (!star) return star.diag();
  Checked<Table> circ = sized_table(j, "circ", *n);
  if (!circ) return circ.diag();
  return validate_digroup(*star, *circ);
}

Json brace_json(const SkewBrace& b) { return digroup_json(b.digroup()); }

Checked<SkewBrace> brace_from_json(const Json& j) {
  if (j.is_object() && j.contains("lambda")) {
    Checked<int> n = declared_order(j);
    if (!n) return n.diag();
    Checked<Table> star = sized_table(j, "star", *n);
    if (!star) return star.diag();
    Checked<Table> lam = sized_table(j, "lambda", *n);
    if (!lam) return lam.diag();
    Checked<FiniteGroup> g = FiniteGroup::validate(*star);
    if (!g) return g.diag();
    for (int a = 0; a < *n; ++a)
      if (!is_bijection((*lam)[a]))
        return make_diag("LambdaRowNotBijective", {a}, "lambda row is not a permutation");
    std::vector<Perm> rows;
    rows.reserve(static_cast<std::size_t>(*n));
    for (int a = 0; a < *n; ++a) rows.push_back(Perm::unchecked((*lam)[a]));
    return brace_from_lambda(*g, rows);
  }
  Checked<Digroup> d = digroup_from_json(j);
  if (!d) return d.diag();
  return SkewBrace::validate(std::move(*d));
}

Json point_json(const SplitPoint& p) {
  return Json{{"X", digroup_json(p.X)}, {"Y", digroup_json(p.Y)}, {"f", p.f}, {"s", p.s}};
}

Checked<SplitPoint> point_from_json(const Json& j) {
  Checked<const Json*> xj = field(j, "X");
  if (!xj) return xj.diag();
  Checked<Digroup> X = digroup_from_json(**xj);
  if (!X) return X.diag();
  Checked<const Json*> yj = field(j, "Y");
  if (!yj) return yj.diag();
  Checked<Digroup> Y = digroup_from_json(**yj);
  if (!Y) return Y.diag();
  Checked<const Json*> fj = field(j, "f");
  if (!fj) return fj.diag();
  Checked<std::vector<int>> f = int_vec(**fj, "f");
  if (!f) return f.diag();
  Checked<const Json*> sj = field(j, "s");
  if (!sj) return sj.diag();
  Checked<std::vector<int>> s = int_vec(**sj, "s");
  if (!s) return s.diag();
  if (Status st = check_range(*f, X->order(), Y->order(), "f")) return *st;
  if (Status st = check_range(*s, Y->order(), X->order(), "s")) return *st;
  return SplitPoint::validate(std::move(*X), std::move(*Y), std::move(*f), std::move(*s));
}

Json subobject_json(const SubObject& s) {
  return Json{{"parent", digroup_json(s.parent)}, {"elems", s.elems}};
}

Checked<SubObject> subobject_from_json(const Json& j) {
  Checked<const Json*> pj = field(j, "parent");
  if (!pj) return pj.diag();
  Digroup parent{FiniteGroup{}, FiniteGroup{}};
  if ((*pj)->is_object() && (*pj)->contains("lambda")) {
    Checked<SkewBrace> b = brace_from_json(**pj);
    if (!b) return b.diag();
    parent = b->digroup();
  } else {
    Checked<Digroup> d = digroup_from_json(**pj);
    if (!d) return d.diag();
    parent = std::move(*d);
  }
  Checked<const Json*> ej = field(j, "elems");
  if (!ej) return ej.diag();
  Checked<std::vector<int>> elems = int_vec(**ej, "elems");
  if (!elems) return elems.diag();
  return SubObject::validate(std::move(parent), std::move(*elems));
}

Json sequence_json(const ExactSequence& e) {
  return Json{{"A", brace_json(e.A)},
              {"X", brace_json(e.X)},
              {"Y", brace_json(e.Y)},
              {"k", e.k},
              {"f", e.f}};
}

Checked<ExactSequence> sequence_from_json(const Json& j) {
  const char* names[3] = {"A", "X", "Y"};
  std::vector<SkewBrace> parts;
  for (const char* name : names) {
    Checked<const Json*> bj = field(j, name);
    if (!bj) return bj.diag();
    Checked<SkewBrace> b = brace_from_json(**bj);
    if (!b) return b.diag();
    parts.push_back(std::move(*b));
  }
  Checked<const Json*> kj = field(j, "k");
  if (!kj) return kj.diag();
  Checked<std::vector<int>> k = int_vec(**kj, "k");
  if (!k) return k.diag();
  Checked<const Json*> fj = field(j, "f");
  if (!fj) return fj.diag();
  Checked<std::vector<int>> f = int_vec(**fj, "f");
  if (!f) return f.diag();
  ExactSequence e{std::move(parts[0]), std::move(parts[1]), std::move(parts[2]), std::move(*k),
                  std::move(*f)};
  if (Status st = validate_sequence(e)) return *st;
  return e;
}

DirectionTables direction_tables(const Direction& d) {
  return DirectionTables{perm_images(d.phi_star.perms), perm_images(d.phi_circ.perms),
                         perm_images(d.xi)};
}

Json direction_json(const DirectionTables& d) {
  return Json{{"phi_star", d.phi_star}, {"phi_circ", d.phi_circ}, {"xi", d.xi}};
}

Checked<DirectionTables> direction_from_json(const Json& j) {
  const char* names[3] = {"phi_star", "phi_circ", "xi"};
  Table tabs[3];
  for (int i = 0; i < 3; ++i) {
    Checked<const Json*> tj = field(j, names[i]);
    if (!tj) return tj.diag();
    Checked<Table> t = int_table(**tj, names[i]);
    if (!t) return t.diag();
    tabs[i] = std::move(*t);
  }
  if (tabs[0].empty() || tabs[0][0].empty())
    return bad_shape("phi_star must have at least one row and column");
  int rows = static_cast<int>(tabs[0].size());
  int cols = static_cast<int>(tabs[0][0].size());
  for (int i = 0; i < 3; ++i) {
    if (Status st = check_shape(tabs[i], rows, cols, cols, names[i])) return *st;
    for (int y = 0; y < rows; ++y)
      if (!is_bijection(tabs[i][y]))
        return bad_shape(std::string(names[i]) + "[" + std::to_string(y) +
                         "] is not a permutation");
  }
  return DirectionTables{std::move(tabs[0]), std::move(tabs[1]), std::move(tabs[2])};
}

Json yb_json(const YBMap& m) {
  Json rows = Json::array();
  for (int a = 0; a < m.n; ++a) {
    Json row = Json::array();
    for (int b = 0; b < m.n; ++b) {
      const auto& uv = m.at(a, b);
      row.push_back(Json::array({uv.first, uv.second}));
    }
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.n}, {"r", std::move(rows)}};
}

Checked<YBMap> yb_from_json(const Json& j) {
  Checked<int> n = declared_order(j);
  if (!n) return n.diag();
  Checked<const Json*> rj = field(j, "r");
  if (!rj) return rj.diag();
  if (!(*rj)->is_array() || static_cast<int>((*rj)->size()) != *n)
    return bad_shape("r must be an array of n rows");
  YBMap m;
  m.n = *n;
  m.r.reserve(static_cast<std::size_t>(*n) * *n);
  for (int a = 0; a < *n; ++a) {
    const Json& row = (**rj)[a];
    if (!row.is_array() || static_cast<int>(row.size()) != *n)
      return bad_shape("r[" + std::to_string(a) + "] must be an array of n pairs");
    for (int b = 0; b < *n; ++b) {
      const Json& cell = row[b];
      std::string where = "r[" + std::to_string(a) + "][" + std::to_string(b) + "]";
      if (!cell.is_array() || cell.size() != 2) return bad_shape(where + " must be [u, v]");
      Checked<int> u = as_int(cell[0], where + "[0]");
      if (!u) return u.diag();
      Checked<int> v = as_int(cell[1], where + "[1]");
      if (!v) return v.diag();
      if (*u < 0 || *u >= *n || *v < 0 || *v >= *n)
        return bad_shape(where + " entry out of range [0," + std::to_string(*n) + ")");
      m.r.emplace_back(*u, *v);
    }
  }
  return m;
}

Json actions_json(const ActionsFile& a) {
  return Json{{"Y", digroup_json(a.Y)},
              {"K", digroup_json(a.K)},
              {"psi_star", perm_images(a.psi_star.perms)},
              {"psi_circ", perm_images(a.psi_circ.perms)}};
}

Checked<ActionsFile> actions_from_json(const Json& j) {
  Checked<const Json*> yj = field(j, "Y");
  if (!yj) return yj.diag();
  Checked<Digroup> Y = digroup_from_json(**yj);
  if (!Y) return Y.diag();
  Checked<const Json*> kj = field(j, "K");
  if (!kj) return kj.diag();
  Checked<Digroup> K = digroup_from_json(**kj);
  if (!K) return K.diag();
  const char* names[2] = {"psi_star", "psi_circ"};
  std::vector<Perm> perms[2];
  for (int i = 0; i < 2; ++i) {
    Checked<const Json*> tj = field(j, names[i]);
    if (!tj) return tj.diag();
    Checked<Table> t = int_table(**tj, names[i]);
    if (!t) return t.diag();
    if (Status st = check_shape(*t, Y->order(), K->order(), K->order(), names[i])) return *st;
    Checked<std::vector<Perm>> rows = perm_rows(*t, names[i]);
    if (!rows) return rows.diag();
    perms[i] = std::move(*rows);
  }
  GroupAction psi_star{Y->star, K->star, std::move(perms[0])};
  GroupAction psi_circ{Y->circ, K->circ, std::move(perms[1])};
  return ActionsFile{std::move(*Y), std::move(*K), std::move(psi_star), std::move(psi_circ)};
}

Json xi_json(const std::vector<Perm>& xi) { return Json{{"xi", perm_images(xi)}}; }

Checked<std::vector<Perm>> xi_from_json(const Json& j, int kernel_size) {
  Checked<const Json*> xj = field(j, "xi");
  if (!xj) return xj.diag();
  Checked<Table> t = int_table(**xj, "xi");
  if (!t) return t.diag();
  for (std::size_t y = 0; y < t->size(); ++y)
    if (static_cast<int>((*t)[y].size()) != kernel_size)
      return bad_shape("xi[" + std::to_string(y) + "] has " + std::to_string((*t)[y].size()) +
                       " entries, expected " + std::to_string(kernel_size));
  return perm_rows(*t, "xi");
}

}  // namespace skb
