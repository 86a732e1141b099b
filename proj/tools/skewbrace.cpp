// Command-line front door. Every command builds one JSON payload; --format
// picks between canonical JSON and a flattened text rendering of the same
// object, so the two formats carry identical verdicts by construction.
//
// Exit codes: 0 = verified / ok, 1 = verdict false (the file is well formed
// but the claimed property fails; the diagnosis and witness are in the
// report), 2 = input error (unreadable file, malformed JSON, bad usage).
//
// Value-producing commands (catalog show, split build, baer direction / sum
// / inverse / unit, yb emit) print the bare value in --format json, so their
// output can be saved and fed back in as an input file.

#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "skb/catalog.hpp"
#include "skb/digroup.hpp"
#include "skb/extension.hpp"
#include "skb/group.hpp"
#include "skb/json_io.hpp"
#include "skb/membership.hpp"
#include "skb/normality.hpp"
#include "skb/split.hpp"
#include "skb/yang_baxter.hpp"

namespace {

using skb::Checked;
using skb::Diag;
using skb::Json;

bool g_json = false;

// ---- rendering ---------------------------------------------------------

bool is_scalar_array(const Json& j) {
  for (const Json& v : j)
    if (v.is_array() || v.is_object()) return false;
  return true;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_text(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      render_text(value, prefix.empty() ? key : prefix + "." + key, os);
  } else if (j.is_array()) {
    if (is_scalar_array(j)) {
      os << prefix << ":";
      for (const Json& v : j) os << " " << scalar_text(v);
      os << "\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i)
        render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
    }
  } else {
    os << prefix << ": " << scalar_text(j) << "\n";
  }
}

void emit(const Json& payload) {
  if (g_json)
    std::cout << skb::canonical_text(payload);
  else
    render_text(payload, "", std::cout);
}

Json diag_json(const Diag& d) {
  Json j{{"code", d.code}};
  if (!d.witness.empty()) j["witness"] = d.witness;
  if (!d.detail.empty()) j["detail"] = d.detail;
  return j;
}

// Input-flagged diagnoses go to the diagnostic stream with exit 2; everything
// else is a false verdict, reported on stdout with exit 1.
int report_diag(Json payload, const Diag& d) {
  if (d.input_error) {
    std::cerr << "error: " << d.str() << "\n";
    return 2;
  }
  payload["ok"] = false;
  payload["diagnosis"] = diag_json(d);
  emit(payload);
  return 1;
}

int input_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

// ---- shared loading steps ----------------------------------------------

std::optional<Json> load_or_report(const std::string& path, int& rc) {
  Checked<Json> j = skb::load_json_file(path);
  if (!j) {
    rc = report_diag(Json::object(), j.diag());
    return std::nullopt;
  }
  return *j;
}

// A digroup from either table form (star+circ, or star+lambda via the brace
// loader).
Checked<skb::Digroup> any_digroup_from_json(const Json& j) {
  if (j.is_object() && j.contains("lambda")) {
    Checked<skb::SkewBrace> b = skb::brace_from_json(j);
    if (!b) return b.diag();
    return b->digroup();
  }
  return skb::digroup_from_json(j);
}

Json verdict_json(const skb::BraceReport::Verdict& v) {
  Json j{{"ok", v.ok}};
  if (!v.witness.empty()) j["witness"] = v.witness;
  return j;
}

Json brace_report_json(const skb::BraceReport& r) {
  return Json{{"compatibility", verdict_json(r.compat)},
              {"lambda_multiplicative", verdict_json(r.lambda_mult)},
              {"lambda_homomorphic", verdict_json(r.lambda_hom)},
              {"agree", r.agree()}};
}

Json lambda_hom_report_json(const skb::LambdaHomReport& r) {
  Json j{{"alpha", r.alpha},
         {"beta_i", r.beta_i},
         {"beta_ii", r.beta_ii},
         {"beta_iii", r.beta_iii},
         {"agree", r.agree()}};
  if (!r.alpha_witness.empty()) j["alpha_witness"] = r.alpha_witness;
  return j;
}

Json index_report_json(const skb::TrivialIndexReport& r) {
  return Json{{"chi_identity", r.chi_identity},
              {"translates_match", r.translates_match},
              {"kernel_translates", r.kernel_translates},
              {"xi_trivial", r.xi_trivial},
              {"lambda_fixes_section", r.lambda_fixes_section},
              {"agree", r.all_agree()}};
}

skb::Table perm_images(const std::vector<skb::Perm>& perms) {
  skb::Table t;
  t.reserve(perms.size());
  for (const skb::Perm& p : perms) t.push_back(p.image());
  return t;
}

// ---- commands ----------------------------------------------------------

int cmd_verify(const std::string& path) {
  int rc = 0;
  std::optional<Json> j = load_or_report(path, rc);
  if (!j) return rc;
  skb::JsonKind kind = skb::classify_json(*j);
  switch (kind) {
    case skb::JsonKind::group: {
      Json payload{{"kind", "group"}};
      Checked<skb::FiniteGroup> g = skb::group_from_json(*j);
      if (!g) return report_diag(std::move(payload), g.diag());
      payload["ok"] = true;
      payload["n"] = g->order();
      payload["commutative"] = g->commutative();
      emit(payload);
      return 0;
    }
    case skb::JsonKind::digroup: {
      Json payload{{"kind", "digroup"}};
      Checked<skb::Digroup> d = skb::digroup_from_json(*j);
      if (!d) return report_diag(std::move(payload), d.diag());
      skb::BraceReport r = skb::check_brace(*d);
      payload["ok"] = true;
      payload["n"] = d->order();
      payload["brace"] = r.all_ok();
      payload["brace_report"] = brace_report_json(r);
      emit(payload);
      return 0;
    }
    case skb::JsonKind::brace: {
      Json payload{{"kind", "brace"}};
      Checked<skb::SkewBrace> b = skb::brace_from_json(*j);
      if (!b) return report_diag(std::move(payload), b.diag());
      payload["ok"] = true;
      payload["n"] = b->order();
      payload["brace"] = true;
      emit(payload);
      return 0;
    }
    default:
      return input_error("verify expects a group, digroup or brace file (this looks like: " +
                         skb::json_kind_name(kind) + ")");
  }
}

int cmd_lambda(const std::string& path) {
  int rc = 0;
  std::optional<Json> j = load_or_report(path, rc);
  if (!j) return rc;
  Checked<skb::Digroup> d = any_digroup_from_json(*j);
  if (!d) return report_diag(Json::object(), d.diag());
  skb::LambdaTable lam = skb::lambda_of(*d);
  Json payload{{"ok", true},
               {"n", d->order()},
               {"brace", skb::check_brace(*d).all_ok()},
               {"lambda", perm_images(lam.rows)}};
  emit(payload);
  return 0;
}

int cmd_enumerate(int order, const std::string& star_id) {
  std::vector<skb::FiniteGroup> stars;
  if (!star_id.empty()) {
    std::optional<skb::FiniteGroup> g = skb::catalog_group(star_id);
    if (!g) return input_error("unknown catalog id '" + star_id + "'");
    if (g->order() != order)
      return input_error("catalog table '" + star_id + "' has order " +
                         std::to_string(g->order()) + ", not " + std::to_string(order));
    stars.push_back(*g);
  } else {
    stars = skb::catalog_groups_of_order(order);
    if (stars.empty())
      return input_error("catalog has no tables of order " + std::to_string(order));
  }
  Json families = Json::array();
  int total = 0;
  for (const skb::FiniteGroup& g : stars) {
    Checked<std::vector<skb::SkewBrace>> braces = skb::enumerate_braces(g);
    if (!braces) return report_diag(Json{{"order", order}}, braces.diag());
    Json list = Json::array();
    for (const skb::SkewBrace& b : *braces) list.push_back(skb::brace_json(b));
    std::optional<std::string> id = skb::catalog_id_of(g);
    families.push_back(Json{{"star", id ? *id : std::string("?")},
                            {"count", static_cast<int>(braces->size())},
                            {"braces", std::move(list)}});
    total += static_cast<int>(braces->size());
  }
  emit(Json{{"ok", true}, {"order", order}, {"total", total}, {"families", std::move(families)}});
  return 0;
}

std::optional<skb::SplitPoint> load_point(const std::string& path, int& rc) {
  std::optional<Json> j = load_or_report(path, rc);
  if (!j) return std::nullopt;
  Checked<skb::SplitPoint> p = skb::point_from_json(*j);
  if (!p) {
    rc = report_diag(Json::object(), p.diag());
    return std::nullopt;
  }
  return std::move(p).value();
}

int cmd_split_index(const std::string& path) {
  int rc = 0;
  std::optional<skb::SplitPoint> p = load_point(path, rc);
  if (!p) return rc;
  skb::Perm chi = skb::index_of(*p);
  emit(Json{{"ok", true}, {"chi", chi.image()}, {"trivial", chi.is_identity()}});
  return 0;
}

int cmd_split_skewing(const std::string& path) {
  int rc = 0;
  std::optional<skb::SplitPoint> p = load_point(path, rc);
  if (!p) return rc;
  std::vector<skb::Perm> xi = skb::skewing_index_of(*p);
  bool trivial = true;
  for (const skb::Perm& row : xi) trivial = trivial && row.is_identity();
  emit(Json{{"ok", true}, {"xi", perm_images(xi)}, {"trivial", trivial}});
  return 0;
}

int cmd_split_report(const std::string& path) {
  int rc = 0;
  std::optional<skb::SplitPoint> p = load_point(path, rc);
  if (!p) return rc;
  skb::TrivialIndexReport r = skb::trivial_index_report(*p);
  emit(Json{{"ok", r.chi_identity}, {"report", index_report_json(r)}});
  return r.chi_identity ? 0 : 1;
}

int cmd_split_build(const std::string& actions_path, const std::string& xi_path) {
  int rc = 0;
  std::optional<Json> aj = load_or_report(actions_path, rc);
  if (!aj) return rc;
  Checked<skb::ActionsFile> acts = skb::actions_from_json(*aj);
  if (!acts) return report_diag(Json::object(), acts.diag());
  Checked<skb::SplitPoint> built = [&]() -> Checked<skb::SplitPoint> {
    if (xi_path.empty()) return skb::semidirect_digroup(acts->psi_star, acts->psi_circ);
    Checked<Json> xj = skb::load_json_file(xi_path);
    if (!xj) return xj.diag();
    Checked<std::vector<skb::Perm>> xi = skb::xi_from_json(*xj, acts->K.order());
    if (!xi) return xi.diag();
    return skb::twisted_semidirect(acts->psi_star, acts->psi_circ, *xi);
  }();
  if (!built) return report_diag(Json::object(), built.diag());
  emit(skb::point_json(*built));
  return 0;
}

int cmd_skb_check(const std::string& path) {
  int rc = 0;
  std::optional<skb::SplitPoint> p = load_point(path, rc);
  if (!p) return rc;
  skb::MembershipVerdict v = skb::skb_membership(*p);
  skb::MembershipReport m = skb::membership_report(*p);
  Json payload{{"ok", v.in_skb()},
               {"via_conditions", v.via_conditions},
               {"via_brace_axioms", v.via_brace_axioms},
               {"agree", v.agree()},
               {"section_lambda", lambda_hom_report_json(skb::section_lambda_report(*p))},
               {"kernel_lambda", lambda_hom_report_json(skb::kernel_lambda_report(*p))},
               {"decomposition",
                Json{{"y_brace", m.y_brace},
                     {"k_brace", m.k_brace},
                     {"section_restriction", m.section_restriction},
                     {"kernel_section", m.kernel_section},
                     {"kernel_equation", m.kernel_equation},
                     {"section_equation", m.section_equation},
                     {"holds", m.holds()}}},
               {"index", index_report_json(skb::trivial_index_report(*p))}};
  if (!v.witness.empty()) payload["witness"] = v.witness;
  emit(payload);
  return v.in_skb() ? 0 : 1;
}

int cmd_ideal_check(const std::string& path) {
  int rc = 0;
  std::optional<Json> j = load_or_report(path, rc);
  if (!j) return rc;
  Checked<skb::SubObject> sub = skb::subobject_from_json(*j);
  if (!sub) return report_diag(Json::object(), sub.diag());
  Checked<skb::SkewBrace> parent = skb::SkewBrace::validate(sub->parent);
  if (!parent) {
    Json payload{{"ok", false}, {"parent_brace", false}, {"diagnosis", diag_json(parent.diag())}};
    emit(payload);
    return 1;
  }
  skb::IdealReport r = skb::is_ideal(*sub);
  Json payload{{"ok", r.all()},
               {"parent_brace", true},
               {"elems", sub->elems},
               {"conditions",
                Json{{"circ_normal", r.i}, {"star_cosets", r.ii}, {"lambda_closed", r.iii}}}};
  emit(payload);
  return r.all() ? 0 : 1;
}

std::optional<skb::ExactSequence> load_sequence(const std::string& path, int& rc) {
  std::optional<Json> j = load_or_report(path, rc);
  if (!j) return std::nullopt;
  Checked<skb::ExactSequence> e = skb::sequence_from_json(*j);
  if (!e) {
    rc = report_diag(Json::object(), e.diag());
    return std::nullopt;
  }
  return std::move(e).value();
}

int cmd_baer_direction(const std::string& path) {
  int rc = 0;
  std::optional<skb::ExactSequence> e = load_sequence(path, rc);
  if (!e) return rc;
  Checked<skb::Direction> d = skb::direction_of(*e);
  if (!d) return report_diag(Json::object(), d.diag());
  emit(skb::direction_json(skb::direction_tables(*d)));
  return 0;
}

int cmd_baer_sum(const std::string& path1, const std::string& path2) {
  int rc = 0;
  std::optional<skb::ExactSequence> e1 = load_sequence(path1, rc);
  if (!e1) return rc;
  std::optional<skb::ExactSequence> e2 = load_sequence(path2, rc);
  if (!e2) return rc;
  Checked<skb::ExactSequence> sum = skb::baer_sum(*e1, *e2);
  if (!sum) return report_diag(Json::object(), sum.diag());
  emit(skb::sequence_json(*sum));
  return 0;
}

int cmd_baer_inverse(const std::string& path) {
  int rc = 0;
  std::optional<skb::ExactSequence> e = load_sequence(path, rc);
  if (!e) return rc;
  Checked<skb::ExactSequence> inv = skb::baer_inverse(*e);
  if (!inv) return report_diag(Json::object(), inv.diag());
  emit(skb::sequence_json(*inv));
  return 0;
}

int cmd_baer_unit(const std::string& path) {
  int rc = 0;
  std::optional<skb::ExactSequence> e = load_sequence(path, rc);
  if (!e) return rc;
  Checked<skb::Direction> d = skb::direction_of(*e);
  if (!d) return report_diag(Json::object(), d.diag());
  Checked<skb::ExactSequence> unit = skb::baer_unit(*d);
  if (!unit) return report_diag(Json::object(), unit.diag());
  emit(skb::sequence_json(*unit));
  return 0;
}

int cmd_baer_equivalent(const std::string& path1, const std::string& path2) {
  int rc = 0;
  std::optional<skb::ExactSequence> e1 = load_sequence(path1, rc);
  if (!e1) return rc;
  std::optional<skb::ExactSequence> e2 = load_sequence(path2, rc);
  if (!e2) return rc;
  Checked<skb::ExtEquivalence> eq = skb::ext_equivalent(*e1, *e2);
  if (!eq) return report_diag(Json::object(), eq.diag());
  Json payload{{"ok", eq->found}, {"equivalent", eq->found}};
  if (eq->found) payload["v"] = eq->v;
  emit(payload);
  return eq->found ? 0 : 1;
}

int cmd_yb_emit(const std::string& path) {
  int rc = 0;
  std::optional<Json> j = load_or_report(path, rc);
  if (!j) return rc;
  Checked<skb::SkewBrace> b = skb::brace_from_json(*j);
  if (!b) return report_diag(Json::object(), b.diag());
  emit(skb::yb_json(skb::yb_map(*b)));
  return 0;
}

int cmd_yb_certify(const std::string& path) {
  int rc = 0;
  std::optional<Json> j = load_or_report(path, rc);
  if (!j) return rc;
  skb::JsonKind kind = skb::classify_json(*j);
  Checked<skb::YBMap> m = [&]() -> Checked<skb::YBMap> {
    if (kind == skb::JsonKind::digroup || kind == skb::JsonKind::brace) {
      Checked<skb::SkewBrace> b = skb::brace_from_json(*j);
      if (!b) return b.diag();
      return skb::yb_map(*b);
    }
    return skb::yb_from_json(*j);
  }();
  if (!m) return report_diag(Json::object(), m.diag());
  skb::YBReport r = skb::certify_yb(*m);
  Json payload{{"ok", r.all_ok()},
               {"braid", r.braid_ok},
               {"bijective", r.bijective},
               {"left_nondegenerate", r.left_nondegenerate},
               {"right_nondegenerate", r.right_nondegenerate}};
  if (!r.braid_witness.empty()) payload["braid_witness"] = r.braid_witness;
  emit(payload);
  return r.all_ok() ? 0 : 1;
}

int cmd_catalog_list() {
  Json entries = Json::array();
  for (const std::string& id : skb::catalog_ids()) {
    std::optional<skb::FiniteGroup> g = skb::catalog_group(id);
    entries.push_back(Json{{"id", id},
                           {"n", g ? g->order() : 0},
                           {"commutative", g ? g->commutative() : false}});
  }
  emit(Json{{"ok", true}, {"entries", std::move(entries)}});
  return 0;
}

int cmd_catalog_show(const std::string& id) {
  std::optional<skb::FiniteGroup> g = skb::catalog_group(id);
  if (!g) return input_error("unknown catalog id '" + id + "'");
  emit(skb::group_json(*g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite digroups, skew braces, split points, extensions, Yang-Baxter maps"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  long long seed = 0;
  app.add_option("--seed", seed,
                 "seed for randomized instance generation (reserved; every current command is "
                 "deterministic)");

  int rc = 0;
  std::string file1, file2, star_id, xi_path;
  int order = 0;

  // Callbacks run inside parse(), after every option (including a
  // fallen-through --format) has been assigned; pick the rendering there.
  auto wire = [&rc, &format](CLI::App* cmd, std::function<int()> fn) {
    cmd->fallthrough();
    cmd->callback([&rc, &format, fn = std::move(fn)] {
      g_json = (format == "json");
      rc = fn();
    });
  };
  auto group_cmd = [](CLI::App* cmd) {
    cmd->require_subcommand(1);
    cmd->fallthrough();
    return cmd;
  };

  CLI::App* verify = app.add_subcommand("verify", "diagnose a group / digroup / brace file");
  verify->add_option("file", file1, "input file")->required();
  wire(verify, [&] { return cmd_verify(file1); });

  CLI::App* lambda = app.add_subcommand("lambda", "lambda table of a digroup or brace file");
  lambda->add_option("file", file1, "input file")->required();
  wire(lambda, [&] { return cmd_lambda(file1); });

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "all skew braces over catalog star tables of one order");
  enumerate->add_option("--order", order, "carrier order")->required();
  enumerate->add_option("--star", star_id, "restrict to one catalog table");
  wire(enumerate, [&] { return cmd_enumerate(order, star_id); });

  CLI::App* split = group_cmd(app.add_subcommand("split", "split epimorphisms of digroups"));
  CLI::App* split_index = split->add_subcommand("index", "index permutation chi of a point file");
  split_index->add_option("file", file1, "point file")->required();
  wire(split_index, [&] { return cmd_split_index(file1); });
  CLI::App* split_skewing = split->add_subcommand(
      "skewing", "skewing index xi of a point file, one row per base element");
  split_skewing->add_option("file", file1, "point file")->required();
  wire(split_skewing, [&] { return cmd_split_skewing(file1); });
  CLI::App* split_report = split->add_subcommand(
      "report", "five equivalent triviality conditions; exit 1 when the index is nontrivial");
  split_report->add_option("file", file1, "point file")->required();
  wire(split_report, [&] { return cmd_split_report(file1); });
  CLI::App* split_build =
      split->add_subcommand("build", "semidirect point from an actions file, optionally twisted");
  split_build->add_option("--actions", file1, "actions file")->required();
  split_build->add_option("--xi", xi_path, "xi file (twists the circ law)");
  wire(split_build, [&] { return cmd_split_build(file1, xi_path); });

  CLI::App* skb_cmd = group_cmd(app.add_subcommand("skb", "skew-brace membership of split points"));
  CLI::App* skb_check =
      skb_cmd->add_subcommand("check", "membership verdict plus every supporting report");
  skb_check->add_option("file", file1, "point file")->required();
  wire(skb_check, [&] { return cmd_skb_check(file1); });

  CLI::App* ideal = group_cmd(app.add_subcommand("ideal", "ideals of skew braces"));
  CLI::App* ideal_check = ideal->add_subcommand("check", "is the subobject an ideal?");
  ideal_check->add_option("file", file1, "subobject file")->required();
  wire(ideal_check, [&] { return cmd_ideal_check(file1); });

  CLI::App* baer =
      group_cmd(app.add_subcommand("baer", "abelian-kernel extensions and their Baer sum"));
  CLI::App* baer_direction =
      baer->add_subcommand("direction", "direction tables (phi_star, phi_circ, xi) of a sequence");
  baer_direction->add_option("file", file1, "sequence file")->required();
  wire(baer_direction, [&] { return cmd_baer_direction(file1); });
  CLI::App* baer_sum = baer->add_subcommand("sum", "Baer sum of two sequences (same direction)");
  baer_sum->add_option("first", file1, "sequence file")->required();
  baer_sum->add_option("second", file2, "sequence file")->required();
  wire(baer_sum, [&] { return cmd_baer_sum(file1, file2); });
  CLI::App* baer_inverse = baer->add_subcommand("inverse", "Baer inverse of a sequence");
  baer_inverse->add_option("file", file1, "sequence file")->required();
  wire(baer_inverse, [&] { return cmd_baer_inverse(file1); });
  CLI::App* baer_unit =
      baer->add_subcommand("unit", "split sequence representing the direction of the input");
  baer_unit->add_option("file", file1, "sequence file")->required();
  wire(baer_unit, [&] { return cmd_baer_unit(file1); });
  CLI::App* baer_equivalent =
      baer->add_subcommand("equivalent", "search for an equivalence between two sequences");
  baer_equivalent->add_option("first", file1, "sequence file")->required();
  baer_equivalent->add_option("second", file2, "sequence file")->required();
  wire(baer_equivalent, [&] { return cmd_baer_equivalent(file1, file2); });

  CLI::App* yb =
      group_cmd(app.add_subcommand("yb", "set-theoretic Yang-Baxter maps of skew braces"));
  CLI::App* yb_emit = yb->add_subcommand("emit", "Yang-Baxter map of a brace file");
  yb_emit->add_option("file", file1, "brace file")->required();
  wire(yb_emit, [&] { return cmd_yb_emit(file1); });
  CLI::App* yb_certify =
      yb->add_subcommand("certify", "braid / bijectivity / nondegeneracy certificate");
  yb_certify->add_option("file", file1, "yb map file (or brace file; the map is derived)")
      ->required();
  wire(yb_certify, [&] { return cmd_yb_certify(file1); });

  CLI::App* catalog = group_cmd(app.add_subcommand("catalog", "built-in reference tables"));
  CLI::App* catalog_list = catalog->add_subcommand("list", "every catalog id");
  wire(catalog_list, [&] { return cmd_catalog_list(); });
  CLI::App* catalog_show = catalog->add_subcommand("show", "one catalog table as a group file");
  catalog_show->add_option("id", star_id, "catalog id")->required();
  wire(catalog_show, [&] { return cmd_catalog_show(star_id); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int help_rc = app.exit(e);  // prints help or the usage error
    return help_rc == 0 ? 0 : 2;
  }
  return rc;
}
