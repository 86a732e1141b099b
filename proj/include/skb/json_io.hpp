#pragma once
// JSON serialization for every value the command-line tool reads or writes.
//
// Writers produce canonical text: object keys in sorted order (the library
// default), two-space indentation, one trailing newline. Together with the
// typed loaders this makes round trips exact: parse(print(x)) == x and
// print(parse(t)) == t bit for bit whenever t itself is canonical.
//
// Schemas (identity element is always index 0):
//   group      {"n": int, "table": [[int]]}
//   digroup    {"n": int, "star": [[int]], "circ": [[int]]}
//   brace      same as digroup; loading also accepts {"n", "star",
//              "lambda": [[int]]} with circ rebuilt as a o b = a * lambda_a(b)
//   point      {"X": digroup, "Y": digroup, "f": [int], "s": [int]}
//   subobject  {"parent": brace, "elems": [int]}
//   sequence   {"A": brace, "X": brace, "Y": brace, "k": [int], "f": [int]}
//   direction  {"phi_star": [[int]], "phi_circ": [[int]], "xi": [[int]]}
//              (row y = the image vector of the permutation at y)
//   yb map     {"n": int, "r": [[[int, int]]]}  with r[a][b] = [u, v]
//   actions    {"Y": digroup, "K": digroup, "psi_star": [[int]],
//              "psi_circ": [[int]]}  (inputs for the semidirect builders)
//   xi file    {"xi": [[int]]}
//
// Loaders separate two failure layers. Structural problems -- unreadable
// file, malformed JSON, missing key, wrong type, ragged or mis-sized arrays
// -- are flagged as input errors. Values that are well shaped but break an
// algebraic law (a table that is not a group, an f that is not a
// homomorphism) come back as the ordinary validator diagnoses, so callers
// can tell "bad file" from "false verdict".

#include <string>
#include <vector>

#include "json.hpp"
#include "skb/diag.hpp"
#include "skb/digroup.hpp"
#include "skb/extension.hpp"
#include "skb/group.hpp"
#include "skb/normality.hpp"
#include "skb/split.hpp"
#include "skb/yang_baxter.hpp"

namespace skb {

using Json = nlohmann::json;

// dump(2) + trailing newline; the single canonical rendering.
std::string canonical_text(const Json& j);
Checked<Json> parse_text(const std::string& text);
Checked<Json> load_json_file(const std::string& path);
// Writes canonical text; input-flagged diagnosis on I/O failure.
Status save_json_file(const std::string& path, const Json& j);

// Best guess at which schema a parsed object follows, by its key set.
enum class JsonKind {
  group,
  digroup,   // star + circ (also the brace writer's form)
  brace,     // star + lambda
  point,
  subobject,
  sequence,
  direction,
  yb,
  actions,
  xi,
  unknown,
};
JsonKind classify_json(const Json& j);
std::string json_kind_name(JsonKind k);

Json group_json(const FiniteGroup& g);
Checked<FiniteGroup> group_from_json(const Json& j);

Json digroup_json(const Digroup& d);
Checked<Digroup> digroup_from_json(const Json& j);

// Writes the star + circ form. Loading accepts star + circ (validated as a
// brace) or star + lambda (circ rebuilt, then validated).
Json brace_json(const SkewBrace& b);
Checked<SkewBrace> brace_from_json(const Json& j);

Json point_json(const SplitPoint& p);
Checked<SplitPoint> point_from_json(const Json& j);

Json subobject_json(const SubObject& s);
Checked<SubObject> subobject_from_json(const Json& j);

Json sequence_json(const ExactSequence& e);
Checked<ExactSequence> sequence_from_json(const Json& j);

// A direction travels as its three defining tables; the acting groups are
// recovered from whatever sequence the tables came with.
struct DirectionTables {
  Table phi_star, phi_circ, xi;
  bool operator==(const DirectionTables&) const = default;
};
DirectionTables direction_tables(const Direction& d);
Json direction_json(const DirectionTables& d);
Checked<DirectionTables> direction_from_json(const Json& j);

Json yb_json(const YBMap& m);
Checked<YBMap> yb_from_json(const Json& j);

// Ingredients for the semidirect builders: psi_star as an action of (Y,*)
// on (K,*), psi_circ as an action of (Y,o) on (K,o). Loading checks shape
// and that every row is a permutation; the action laws themselves are left
// to validate_action so they surface as verdicts, not input errors.
struct ActionsFile {
  Digroup Y, K;
  GroupAction psi_star, psi_circ;
};
Json actions_json(const ActionsFile& a);
Checked<ActionsFile> actions_from_json(const Json& j);

Json xi_json(const std::vector<Perm>& xi);
Checked<std::vector<Perm>> xi_from_json(const Json& j, int kernel_size);

}  // namespace skb
