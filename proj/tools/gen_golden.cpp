// Regenerates the golden JSON corpus (tests/golden). Each file is the
// canonical rendering of one library value, spanning every schema the tool
// reads or writes; the acceptance suite re-loads each file and requires the
// re-rendered text to match bit for bit. Run with the target directory as
// the only argument.

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "skb/catalog.hpp"
#include "skb/extension.hpp"
#include "skb/json_io.hpp"
#include "skb/membership.hpp"
#include "skb/normality.hpp"
#include "skb/split.hpp"
#include "skb/yang_baxter.hpp"

using namespace skb;

namespace {

template <typename T>
T need(Checked<T> c, const std::string& what) {
  if (!c.ok()) {
    std::cerr << what << ": " << c.diag().str() << "\n";
    std::exit(1);
  }
  return std::move(c).value();
}

FiniteGroup cat(const std::string& id) {
  auto g = catalog_group(id);
  if (!g) {
    std::cerr << "missing catalog id " << id << "\n";
    std::exit(1);
  }
  return *g;
}

int g_index = 0;
std::filesystem::path g_dir;

void put(const std::string& name, const Json& j) {
  ++g_index;
  std::ostringstream file;
  file << std::setw(2) << std::setfill('0') << g_index << "_" << name << ".json";
  if (Status st = save_json_file((g_dir / file.str()).string(), j)) {
    std::cerr << file.str() << ": " << st->str() << "\n";
    std::exit(1);
  }
}

Table cyclic(int n) {
  Table t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

ExactSequence seq(const SkewBrace& A, const SkewBrace& X, const SkewBrace& Y,
                  std::vector<int> k, std::vector<int> f) {
  ExactSequence e{A, X, Y, std::move(k), std::move(f)};
  if (Status st = validate_sequence(e)) {
    std::cerr << "bad sequence fixture: " << st->str() << "\n";
    std::exit(1);
  }
  return e;
}

}  // namespace

int main(int argc, char** argv) {
  g_dir = argc > 1 ? argv[1] : "golden";
  std::filesystem::create_directories(g_dir);

  // groups: the whole catalog
  for (const std::string& id : catalog_ids()) put("group_" + id, group_json(cat(id)));

  // braces: two-sided families plus one genuinely mixed pair of laws
  FiniteGroup s3 = cat("S3"), d4 = cat("D4"), q8 = cat("Q8"), z4 = cat("Z4"), z6 = cat("Z6");
  put("brace_s3_trivial", brace_json(trivial_brace(s3)));
  put("brace_s3_opposite", brace_json(opposite_brace(s3)));
  put("brace_d4_trivial", brace_json(trivial_brace(d4)));
  put("brace_d4_opposite", brace_json(opposite_brace(d4)));
  put("brace_q8_trivial", brace_json(trivial_brace(q8)));
  put("brace_q8_opposite", brace_json(opposite_brace(q8)));
  put("brace_z6_trivial", brace_json(trivial_brace(z6)));
  SkewBrace mixed = need(SkewBrace::validate(need(
                             validate_digroup(z4.rows(), cat("V4").rows()), "z4/v4 digroup")),
                         "z4/v4 brace");
  put("brace_z4_v4", brace_json(mixed));

  // split points
  FiniteGroup z2 = cat("Z2"), z3 = cat("Z3");
  Perm inv3 = Perm::unchecked({0, 2, 1});
  GroupAction inv_act{z2, z3, {Perm(3), inv3}};
  SplitPoint pt_op = need(make_op_semidirect_point(inv_act), "op-semidirect point");
  put("point_op_semidirect", point_json(pt_op));
  SplitPoint pt_circ =
      need(make_circ_semidirect_point(trivial_brace(z2), inv_act), "circ-semidirect point");
  put("point_circ_semidirect", point_json(pt_circ));
  std::vector<int> sign{0, 1, 1, 0, 0, 1};
  SplitPoint pt_sign_triv =
      need(SplitPoint::validate(trivial_brace(s3).digroup(), trivial_brace(z2).digroup(), sign,
                                {0, 1}),
           "trivial sign point");
  put("point_s3_sign_trivial", point_json(pt_sign_triv));
  SplitPoint pt_sign_op =
      need(SplitPoint::validate(opposite_brace(s3).digroup(), opposite_brace(z2).digroup(), sign,
                                {0, 1}),
           "opposite sign point");
  put("point_s3_sign_opposite", point_json(pt_sign_op));
  GroupAction triv_act = trivial_action(z2, z3);
  SplitPoint pt_twisted =
      need(twisted_semidirect(triv_act, triv_act, {Perm(3), inv3}), "twisted point");
  put("point_twisted", point_json(pt_twisted));
  Perm inv4 = Perm::unchecked({0, 3, 2, 1});
  GroupAction dihedral{z2, z4, {Perm(4), inv4}};
  SplitPoint pt_d4 = need(semidirect_digroup(dihedral, dihedral), "dihedral point");
  put("point_dihedral", point_json(pt_d4));

  // subobjects
  put("sub_s3_a3", subobject_json(need(
                       SubObject::validate(trivial_brace(s3).digroup(), {0, 3, 4}), "A3")));
  put("sub_d4_center", subobject_json(need(
                           SubObject::validate(trivial_brace(d4).digroup(), {0, 2}), "center")));
  put("sub_z4_even", subobject_json(need(
                         SubObject::validate(trivial_brace(z4).digroup(), {0, 2}), "2Z4")));
  KernelData kd = kernel_of(pt_op);
  put("sub_point_kernel",
      subobject_json(need(SubObject::validate(pt_op.X, kd.elems), "point kernel")));

  // sequences
  FiniteGroup z9 = need(FiniteGroup::validate(cyclic(9)), "Z9");
  FiniteGroup z3sq = direct_product(z3, z3);
  ExactSequence e_z4 =
      seq(trivial_brace(z2), trivial_brace(z4), trivial_brace(z2), {0, 2}, {0, 1, 0, 1});
  put("seq_z4_over_z2", sequence_json(e_z4));
  put("seq_v4_over_z2", sequence_json(seq(trivial_brace(z2), trivial_brace(cat("V4")),
                                          trivial_brace(z2), {0, 1}, {0, 0, 1, 1})));
  put("seq_z9_over_z3", sequence_json(seq(trivial_brace(z3), trivial_brace(z9), trivial_brace(z3),
                                          {0, 3, 6}, {0, 1, 2, 0, 1, 2, 0, 1, 2})));
  put("seq_z3sq_over_z3",
      sequence_json(seq(trivial_brace(z3), trivial_brace(z3sq), trivial_brace(z3), {0, 1, 2},
                        {0, 0, 0, 1, 1, 1, 2, 2, 2})));
  put("seq_d4_over_v4", sequence_json(seq(trivial_brace(z2), trivial_brace(d4),
                                          trivial_brace(cat("V4")), {0, 2},
                                          {0, 1, 0, 1, 2, 3, 2, 3})));
  put("seq_q8_over_v4", sequence_json(seq(trivial_brace(z2), trivial_brace(q8),
                                          trivial_brace(cat("V4")), {0, 1},
                                          {0, 0, 1, 1, 2, 2, 3, 3})));
  ExactSequence e1 = need(point_sequence(pt_op), "op-semidirect sequence");
  put("seq_op_semidirect", sequence_json(e1));
  put("seq_circ_semidirect",
      sequence_json(need(point_sequence(pt_circ), "circ-semidirect sequence")));

  // directions
  put("dir_z4_over_z2",
      direction_json(direction_tables(need(direction_of(e_z4), "z4 direction"))));
  ExactSequence e_z9 = seq(trivial_brace(z3), trivial_brace(z9), trivial_brace(z3), {0, 3, 6},
                           {0, 1, 2, 0, 1, 2, 0, 1, 2});
  put("dir_z9_over_z3",
      direction_json(direction_tables(need(direction_of(e_z9), "z9 direction"))));
  put("dir_op_semidirect",
      direction_json(direction_tables(need(direction_of(e1), "op-semidirect direction"))));
  ExactSequence e_sign = need(point_sequence(pt_sign_op), "sign sequence");
  put("dir_s3_sign_opposite",
      direction_json(direction_tables(need(direction_of(e_sign), "sign direction"))));

  // Yang-Baxter maps
  put("yb_z4_trivial", yb_json(yb_map(trivial_brace(z4))));
  put("yb_s3_opposite", yb_json(yb_map(opposite_brace(s3))));
  put("yb_v4_trivial", yb_json(yb_map(trivial_brace(cat("V4")))));
  put("yb_d4_trivial", yb_json(yb_map(trivial_brace(d4))));

  // builder inputs
  put("actions_z2_on_z3",
      actions_json(ActionsFile{trivial_brace(z2).digroup(), trivial_brace(z3).digroup(), inv_act,
                               triv_act}));
  put("xi_z3_inversion", xi_json({Perm(3), inv3}));

  std::cout << "wrote " << g_index << " files to " << g_dir.string() << "\n";
  return 0;
}
