// Command-line front end: construct families, check properties, run the
// composition operations, reproduce the reference table, evaluate bounds,
// and decide isomorphism. JSON goes to stdout, notes to stderr.
// Exit codes: 0 success / property holds, 1 property fails or mismatch,
// 2 usage or validation error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ifam/composers.hpp"
#include "ifam/constructions.hpp"
#include "ifam/io.hpp"
#include "ifam/isomorphism.hpp"
#include "ifam/properties.hpp"
#include "ifam/repro.hpp"
#include "ifam/transversal.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json family_json(const ifam::SetFamily& f) {
  ordered_json j;
  j["points"] = f.labels();
  auto blocks = ordered_json::array();
  for (std::size_t i = 0; i < f.size(); ++i) blocks.push_back(f.block_members(i));
  j["blocks"] = std::move(blocks);
  return j;
}

void emit_family(const ifam::SetFamily& f, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << family_json(f).dump() << "\n";
  } else {
    ifam::write_family(f, out_path);
    std::cerr << "wrote " << f.size() << " blocks over " << f.point_count() << " points to "
              << out_path << "\n";
  }
}

ordered_json verdict_json(const ifam::PropertyVerdict& v) {
  ordered_json j;
  j["property"] = v.property;
  j["holds"] = v.holds;
  if (v.witness.empty()) {
    j["witness"] = nullptr;
  } else {
    auto w = ordered_json::array();
    for (const auto& side : v.witness) w.push_back(side);
    j["witness"] = std::move(w);
  }
  j["detail"] = v.detail;
  return j;
}

ordered_json report_json(const char* op, const ifam::CompositionReport& rep) {
  ordered_json j;
  j["op"] = op;
  j["claim"] = rep.claim;
  j["claimed_uk"] = rep.claimed_uk;
  j["claimed_tau"] = rep.claimed_tau;
  j["blocks"] = rep.result.size();
  j["points"] = rep.result.point_count();
  auto checklist = ordered_json::array();
  for (const auto& [name, ok] : rep.checklist) checklist.push_back({{"name", name}, {"ok", ok}});
  j["checklist"] = std::move(checklist);
  j["verified"] = rep.verified;
  return j;
}

// "0,1,2;3,4;5" -> {{0,1,2},{3,4},{5}}
std::vector<std::vector<std::size_t>> parse_classes(const std::string& text) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::string token;
  auto flush_token = [&]() {
    if (token.empty()) return;
    current.push_back(std::stoul(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush_token();
    } else if (c == ';') {
      flush_token();
      out.push_back(current);
      current.clear();
    } else if (c >= '0' && c <= '9') {
      token.push_back(c);
    } else if (c != ' ') {
      throw ifam::Error(ifam::Err::InvalidParams,
                        std::string("unexpected character '") + c + "' in class list");
    }
  }
  flush_token();
  if (!current.empty()) out.push_back(current);
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for uniform intersecting set families"};
  app.require_subcommand(1);
  unsigned threads = 1;
  std::uint64_t budget = 10'000'000;
  app.add_option("--threads", threads, "worker cap for exhaustive sweeps");
  app.add_option("--budget", budget, "cap on exhaustive search spaces");

  // construct
  auto* construct = app.add_subcommand("construct", "generate a family");
  std::string family_kind, out_path;
  std::size_t opt_k = 0, opt_t = 0, opt_n = 0;
  construct->add_option("--family", family_kind,
                        "F | G | complete | pointed | triangle | singleton | affine")
      ->required();
  construct->add_option("--k", opt_k, "block size");
  construct->add_option("--t", opt_t, "cover number parameter");
  construct->add_option("--n", opt_n, "plane order (affine only)");
  construct->add_option("-o,--out", out_path, "write the family here instead of stdout");

  // check
  auto* check = app.add_subcommand("check", "evaluate a property of a family file");
  std::string check_property, check_file;
  check->add_option("--property", check_property,
                    "intersecting | uniform | mif | cif | dual-tau | upper-bound")
      ->required();
  check->add_option("file", check_file, "family file")->required();

  // compose
  auto* compose = app.add_subcommand("compose", "combine families");
  compose->require_subcommand(1);
  bool verify = false, require_closed = false;
  std::string base_file, attach_file, classes_text, pattern_file, f_file, g_file, point_label;
  std::vector<std::string> attach_files, factor_files;
  std::size_t order = 0, n_classes = 0;
  std::string mode_text = "pointset", out_remainder, out_dual;

  auto* c_embed = compose->add_subcommand("embed", "attach one maximal family across the duals");
  c_embed->add_option("--base", base_file, "closed family file")->required();
  c_embed->add_option("--attach", attach_file, "maximal family file")->required();
  c_embed->add_flag("--verify", verify, "recompute the claim exhaustively");
  c_embed->add_option("-o,--out", out_path, "write the result here");

  auto* c_part = compose->add_subcommand("partitioned",
                                         "attach one maximal family per dual class");
  c_part->add_option("--base", base_file, "closed family file")->required();
  c_part->add_option("--classes", classes_text, "dual indices, e.g. \"0,1;2,3,4\"")->required();
  c_part->add_option("--attach", attach_files, "maximal family file per class")->required();
  c_part->add_flag("--verify", verify, "recompute the claim exhaustively");
  c_part->add_option("-o,--out", out_path, "write the result here");

  auto* c_affine = compose->add_subcommand("affine", "cross dual classes with a plane");
  c_affine->add_option("--base", base_file, "closed family file")->required();
  c_affine->add_option("--classes", classes_text, "dual indices, e.g. \"0,1;2,3;4\"")->required();
  c_affine->add_option("--order", order, "plane order (= block size - cover number)")->required();
  c_affine->add_flag("--verify", verify, "recompute the claim exhaustively");
  c_affine->add_option("-o,--out", out_path, "write the result here");

  auto* c_product = compose->add_subcommand("product", "substitute factors into a pattern");
  c_product->add_option("--pattern", pattern_file, "maximal pattern family file")->required();
  c_product->add_option("--factor", factor_files,
                        "factor family file (repeat per pattern point, or give one "
                        "to replicate)")
      ->required();
  c_product->add_flag("--require-closed", require_closed,
                      "fail unless every factor is closed with a maximal dual");
  c_product->add_flag("--verify", verify, "recompute the claim exhaustively");
  c_product->add_option("-o,--out", out_path, "write the result here");

  auto* c_extend = compose->add_subcommand("extend", "grow a family inside a larger one");
  c_extend->add_option("--inner", f_file, "inner family file")->required();
  c_extend->add_option("--outer", g_file, "outer family file")->required();
  c_extend->add_flag("--verify", verify, "recompute the claim exhaustively");
  c_extend->add_option("-o,--out", out_path, "write the result here");

  auto* c_split = compose->add_subcommand("decompose", "split a maximal family at a point");
  c_split->add_option("--family", base_file, "maximal family file")->required();
  c_split->add_option("--point", point_label, "label to split at")->required();
  c_split->add_option("--out-remainder", out_remainder, "write the point-free part here");
  c_split->add_option("--out-dual", out_dual, "write the stripped blocks here");

  auto* c_search = compose->add_subcommand("search",
                                           "enumerate all valid dual partitions");
  c_search->add_option("--base", base_file, "closed family file")->required();
  c_search->add_option("--n", n_classes, "number of classes")->required();
  c_search->add_option("--mode", mode_text, "pointset | affine");

  // repro
  auto* repro = app.add_subcommand("repro", "recompute the reference table");
  std::string item_id;
  repro->add_option("--item", item_id, "run a single item by id");

  // bound
  auto* bound = app.add_subcommand("bound", "evaluate size bounds");
  std::size_t lower_k = 0, corollary_k = 0;
  std::uint64_t bound_base = 0;
  std::string upper_file;
  auto* lower_opt = bound->add_option("--lower", lower_k, "recursion step at this block size");
  bound->add_option("--t", opt_t, "cover number for --lower");
  bound->add_option("--base", bound_base,
                    "known bound for the reduced size (defaults to 1 or 3 when the "
                    "reduced size is 1 or 2)");
  auto* coroll_opt = bound->add_option("--corollary", corollary_k, "closed-form bound at k");
  auto* upper_opt = bound->add_option("--upper", upper_file, "check a family against k^k");

  // iso
  auto* iso = app.add_subcommand("iso", "decide isomorphism of two family files");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a, "first family file")->required();
  iso->add_option("b", iso_b, "second family file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  ifam::set_thread_cap(threads);

  try {
    if (construct->parsed()) {
      ifam::SetFamily fam;
      if (family_kind == "F") fam = ifam::circular_F(opt_k, opt_t);
      else if (family_kind == "G") fam = ifam::circular_G(opt_k, opt_t);
      else if (family_kind == "complete") fam = ifam::complete_cif(opt_k, opt_t);
      else if (family_kind == "pointed") fam = ifam::pointed_cif(opt_k, opt_t);
      else if (family_kind == "triangle") fam = ifam::mif_triangle();
      else if (family_kind == "singleton") fam = ifam::mif_singleton();
      else if (family_kind == "affine") {
        ifam::AffinePlane plane = ifam::affine_plane(opt_n);
        ordered_json meta;
        meta["order"] = plane.order;
        meta["classes"] = plane.classes;
        std::cerr << meta.dump() << "\n";
        fam = plane.lines;
      } else {
        throw ifam::Error(ifam::Err::InvalidParams, "unknown family kind \"" + family_kind + "\"");
      }
      emit_family(fam, out_path);
      return 0;
    }

    if (check->parsed()) {
      ifam::SetFamily fam = ifam::read_family(check_file);
      if (check_property == "dual-tau") {
        ordered_json j;
        j["property"] = "dual-tau";
        j["value"] = ifam::tau_of_dual(fam);
        std::cout << j.dump() << "\n";
        return 0;
      }
      ifam::PropertyVerdict v;
      if (check_property == "intersecting") v = ifam::is_intersecting(fam);
      else if (check_property == "uniform") v = ifam::is_uniform(fam);
      else if (check_property == "mif") v = ifam::is_mif(fam);
      else if (check_property == "cif") v = ifam::is_cif(fam);
      else if (check_property == "upper-bound") v = ifam::check_upper_bound(fam);
      else
        throw ifam::Error(ifam::Err::InvalidParams,
                          "unknown property \"" + check_property + "\"");
      std::cout << verdict_json(v).dump() << "\n";
      return v.holds ? 0 : 1;
    }

    if (compose->parsed()) {
      if (c_embed->parsed()) {
        auto rep = ifam::embed(ifam::read_family(base_file), ifam::read_family(attach_file),
                               verify);
        ordered_json j = report_json("embed", rep);
        if (out_path.empty()) j["result"] = family_json(rep.result);
        else j["output"] = out_path;
        std::cout << j.dump() << "\n";
        if (!out_path.empty()) ifam::write_family(rep.result, out_path);
        return 0;
      }
      if (c_part->parsed()) {
        std::vector<ifam::SetFamily> mifs;
        for (const auto& p : attach_files) mifs.push_back(ifam::read_family(p));
        auto rep = ifam::embed_partitioned(ifam::read_family(base_file),
                                           parse_classes(classes_text), mifs, verify);
        ordered_json j = report_json("partitioned", rep);
        if (out_path.empty()) j["result"] = family_json(rep.result);
        else j["output"] = out_path;
        std::cout << j.dump() << "\n";
        if (!out_path.empty()) ifam::write_family(rep.result, out_path);
        return 0;
      }
      if (c_affine->parsed()) {
        auto rep = ifam::embed_affine(ifam::read_family(base_file),
                                      parse_classes(classes_text), ifam::affine_plane(order),
                                      verify);
        ordered_json j = report_json("affine", rep);
        if (out_path.empty()) j["result"] = family_json(rep.result);
        else j["output"] = out_path;
        std::cout << j.dump() << "\n";
        if (!out_path.empty()) ifam::write_family(rep.result, out_path);
        return 0;
      }
      if (c_product->parsed()) {
        ifam::SetFamily pattern = ifam::read_family(pattern_file);
        std::vector<ifam::SetFamily> factors;
        for (const auto& p : factor_files) factors.push_back(ifam::read_family(p));
        if (factors.size() == 1 && pattern.point_count() > 1)
          factors.assign(pattern.point_count(), factors.front());
        auto rep = ifam::product(pattern, factors, require_closed, verify);
        ordered_json j = report_json("product", rep);
        if (out_path.empty()) j["result"] = family_json(rep.result);
        else j["output"] = out_path;
        std::cout << j.dump() << "\n";
        if (!out_path.empty()) ifam::write_family(rep.result, out_path);
        return 0;
      }
      if (c_extend->parsed()) {
        auto rep = ifam::extend(ifam::read_family(f_file), ifam::read_family(g_file), verify);
        ordered_json j = report_json("extend", rep);
        if (out_path.empty()) j["result"] = family_json(rep.result);
        else j["output"] = out_path;
        std::cout << j.dump() << "\n";
        if (!out_path.empty()) ifam::write_family(rep.result, out_path);
        return 0;
      }
      if (c_split->parsed()) {
        auto [remainder, dual] = ifam::decompose_at(ifam::read_family(base_file), point_label);
        ordered_json j;
        j["op"] = "decompose";
        j["point"] = point_label;
        j["remainder_blocks"] = remainder.size();
        j["dual_blocks"] = dual.size();
        if (out_remainder.empty()) j["remainder"] = family_json(remainder);
        else { ifam::write_family(remainder, out_remainder); j["remainder_output"] = out_remainder; }
        if (out_dual.empty()) j["dual"] = family_json(dual);
        else { ifam::write_family(dual, out_dual); j["dual_output"] = out_dual; }
        std::cout << j.dump() << "\n";
        return 0;
      }
      if (c_search->parsed()) {
        ifam::PartitionMode mode;
        if (mode_text == "pointset") mode = ifam::PartitionMode::pointset;
        else if (mode_text == "affine") mode = ifam::PartitionMode::affine;
        else
          throw ifam::Error(ifam::Err::InvalidParams, "unknown mode \"" + mode_text + "\"");
        auto res = ifam::search_partitions(ifam::read_family(base_file), n_classes, mode, budget);
        ordered_json j;
        j["op"] = "search";
        j["mode"] = ifam::to_string(res.mode);
        j["classes"] = res.n_classes;
        j["dual_size"] = res.transversals.size();
        j["valid_partitions"] = res.partitions.size();
        j["partitions"] = res.partitions;
        std::cout << j.dump() << "\n";
        return 0;
      }
    }

    if (repro->parsed()) {
      auto items = ifam::run_repro(item_id);
      bool published_mismatch = false;
      for (const auto& item : items) {
        ordered_json j;
        j["id"] = item.id;
        j["expected"] = item.expected;
        j["computed"] = item.computed;
        j["provenance"] = item.provenance;
        j["match"] = item.match;
        if (!item.note.empty()) j["note"] = item.note;
        std::cout << j.dump() << "\n";
        if (!item.match && item.provenance == "published") published_mismatch = true;
      }
      std::cerr << items.size() << " items recomputed\n";
      return published_mismatch ? 1 : 0;
    }

    if (bound->parsed()) {
      if (lower_opt->count() > 0) {
        if (opt_t == 0)
          throw ifam::Error(ifam::Err::InvalidParams, "--lower needs --t");
        if (bound_base == 0) {
          std::size_t reduced = lower_k > opt_t ? lower_k - opt_t : 0;
          if (reduced == 1) bound_base = 1;
          else if (reduced == 2) bound_base = 3;
          else
            throw ifam::Error(ifam::Err::InvalidParams,
                              "--base required: no built-in value for reduced size " +
                                  std::to_string(reduced));
        }
        ifam::BoundTable b = ifam::lower_bound(lower_k, opt_t, bound_base);
        ordered_json j;
        j["k"] = b.k;
        j["t"] = b.t;
        j["r"] = b.r;
        j["branch"] = b.branch;
        j["stem"] = b.stem;
        j["factor"] = b.factor;
        j["base"] = b.base;
        j["reduced_order"] = b.reduced_order;
        j["bound"] = b.bound;
        std::cout << j.dump() << "\n";
        return 0;
      }
      if (coroll_opt->count() > 0) {
        ordered_json j;
        j["k"] = corollary_k;
        j["bound"] = ifam::corollary_bound(corollary_k);
        std::cout << j.dump() << "\n";
        return 0;
      }
      if (upper_opt->count() > 0) {
        ifam::PropertyVerdict v = ifam::check_upper_bound(ifam::read_family(upper_file));
        std::cout << verdict_json(v).dump() << "\n";
        return v.holds ? 0 : 1;
      }
      throw ifam::Error(ifam::Err::InvalidParams,
                        "bound needs one of --lower, --corollary, --upper");
    }

    if (iso->parsed()) {
      ifam::IsoResult r = ifam::are_isomorphic(ifam::read_family(iso_a), ifam::read_family(iso_b));
      ordered_json j;
      j["isomorphic"] = r.isomorphic;
      if (r.mapping) {
        auto m = ordered_json::array();
        for (const auto& [from, to] : *r.mapping) m.push_back({{"from", from}, {"to", to}});
        j["mapping"] = std::move(m);
      } else {
        j["mapping"] = nullptr;
      }
      j["separating_invariant"] = r.separating_invariant ? ordered_json(*r.separating_invariant)
                                                         : ordered_json(nullptr);
      j["detail"] = r.detail;
      std::cout << j.dump() << "\n";
      return r.isomorphic ? 0 : 1;
    }
  } catch (const ifam::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ifam::Err::VerificationFailed ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
