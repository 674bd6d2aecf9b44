#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "steiner/catalog.hpp"
#include "steiner/io.hpp"
#include "steiner/search.hpp"

using namespace steiner;
using nlohmann::json;

namespace {

// Exit codes shared by every command.
constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Report {
  bool as_json = false;
  json record = json::object();
  std::ostringstream text;

  void emit() const {
    if (as_json)
      std::cout << record.dump(2) << "\n";
    else
      std::cout << text.str();
  }
};

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupTable load_group(const std::string& spec, const std::string& table_path) {
  if (!table_path.empty()) {
    auto check = read_cayley_table_file(table_path);
    if (!check.ok()) fail(ErrorCode::InvalidGroup, table_path + ": " + check.diagnostic->message);
    return *check.group;
  }
  if (spec.empty()) fail(ErrorCode::InvalidArgument, "give --group or --table");
  return build_group(GroupSpec::parse(spec));
}

/// Every block image g.B must be a block of the design.
bool invariant_under(const Design& d, const ActionScenario& s) {
  std::set<Block> blocks(d.blocks().begin(), d.blocks().end());
  for (const auto& b : d.blocks())
    for (const auto& img : s.block_orbit(b))
      if (!blocks.count(img)) return false;
  return true;
}

json pairs_json(const std::vector<std::pair<Point, Point>>& pairs, const PointSpace& space, std::size_t cap) {
  auto out = json::array();
  for (std::size_t i = 0; i < pairs.size() && i < cap; ++i)
    out.push_back({space.label(pairs[i].first), space.label(pairs[i].second)});
  return out;
}

int cmd_group_build(Report& r, const std::string& spec, const std::string& out_path) {
  const GroupSpec gs = GroupSpec::parse(spec);
  const GroupTable g = build_group(gs);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) fail(ErrorCode::Io, "cannot write " + out_path);
    write_cayley_table(out, g);
  } else if (!r.as_json) {
    write_cayley_table(r.text, g);
    return kOk;
  }
  r.record = {{"group", gs.to_string()}, {"order", g.order()}, {"abelian", g.is_abelian()}};
  if (!out_path.empty()) r.record["file"] = out_path;
  r.text << gs.to_string() << ": order " << g.order() << (g.is_abelian() ? ", abelian" : ", non-abelian");
  if (!out_path.empty()) r.text << ", written to " << out_path;
  r.text << "\n";
  return kOk;
}

int cmd_group_validate(Report& r, const std::string& path) {
  auto check = read_cayley_table_file(path);
  r.record = {{"file", path}, {"valid", check.ok()}};
  if (check.ok()) {
    r.record["order"] = check.group->order();
    r.record["abelian"] = check.group->is_abelian();
    r.text << path << ": valid group of order " << check.group->order() << "\n";
    return kOk;
  }
  const auto& d = *check.diagnostic;
  r.record["axiom"] = to_string(d.axiom);
  r.record["witness"] = d.witness;
  r.record["message"] = d.message;
  r.text << path << ": invalid (" << to_string(d.axiom) << "): " << d.message << "\n";
  return kFailed;
}

struct BlockSource {
  std::string blocks, blocks_file, catalog_id;
  bool strict = false;
};

int cmd_expand(Report& r, const std::string& kind_text, const std::string& spec, const std::string& table,
               const BlockSource& src, const std::string& out_path) {
  std::string text = src.blocks;
  std::string kind_name = kind_text, group_spec = spec;
  if (!src.catalog_id.empty()) {
    const auto& e = catalog_lookup(src.catalog_id);
    text = e.block_text;
    if (kind_name.empty()) kind_name = to_string(e.kind);
    if (group_spec.empty() && table.empty()) {
      auto ex = expand_entry(e);
      group_spec = ex.group;
    }
  } else if (!src.blocks_file.empty()) {
    text = read_text_file(src.blocks_file);
  }
  if (text.empty()) fail(ErrorCode::InvalidArgument, "give --blocks, --blocks-file or --catalog");
  if (kind_name.empty()) fail(ErrorCode::InvalidArgument, "give --scenario");
  const ScenarioKind kind = parse_scenario_kind(kind_name);
  auto scenario = std::make_shared<const ActionScenario>(build_scenario(kind, load_group(group_spec, table)));
  ParseOptions opt;
  opt.strict = src.strict;
  auto parsed = parse_blocks(text, scenario->space(), opt);
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  Design d = expand(BaseBlockSystem{scenario, parsed.blocks});
  DesignFile f{d, std::nullopt};
  if (table.empty()) f.scenario = ScenarioDescriptor{kind, GroupSpec::parse(group_spec)};
  if (!out_path.empty()) write_design_file(out_path, f);
  r.record = {{"v", d.v()}, {"k", d.k()}, {"b", d.b()}, {"base_blocks", parsed.blocks.size()}};
  if (!out_path.empty())
    r.record["file"] = out_path;
  else
    r.record["design"] = design_to_json(f);
  r.text << "expanded " << parsed.blocks.size() << " base blocks: v=" << d.v() << " k=" << d.k() << " b=" << d.b()
         << "\n";
  if (out_path.empty() && !r.as_json) write_design(r.text, f);
  return kOk;
}

int cmd_verify(Report& r, const std::string& path) {
  const DesignFile f = read_design_file(path);
  const auto rep = verify_steiner(f.design);
  const PointSpace space = f.space();
  bool ok = rep.pass;
  r.record = {{"file", path}, {"v", rep.v}, {"k", rep.k}, {"b", rep.b}, {"steiner", rep.pass},
              {"uncovered", rep.uncovered.size()}, {"multiply_covered", rep.multiply_covered.size()}};
  r.text << path << ": v=" << rep.v << " k=" << rep.k << " b=" << rep.b << " -> "
         << (rep.pass ? "S(2," + std::to_string(rep.k) + "," + std::to_string(rep.v) + ") verified" : "NOT a Steiner system")
         << "\n";
  if (!rep.pass) {
    r.record["uncovered_sample"] = pairs_json(rep.uncovered, space, 10);
    std::vector<std::pair<Point, Point>> multi;
    for (const auto& [pq, c] : rep.multiply_covered) multi.push_back(pq);
    r.record["multiply_covered_sample"] = pairs_json(multi, space, 10);
    r.text << "  uncovered pairs: " << rep.uncovered.size() << ", multiply covered: " << rep.multiply_covered.size()
           << "\n";
  }
  if (f.scenario) {
    const bool inv = invariant_under(f.design, *f.scenario->build());
    r.record["invariant"] = inv;
    r.text << "  invariant under " << to_string(f.scenario->kind) << " " << f.scenario->group.to_string() << ": "
           << (inv ? "yes" : "no") << "\n";
    ok = ok && inv;
  }
  return ok ? kOk : kFailed;
}

int cmd_fingerprint(Report& r, const std::string& path) {
  const DesignFile f = read_design_file(path);
  const Fingerprint fp = fingerprint(f.design);
  const auto expected = fingerprint_total(f.design.v(), f.design.k(), f.design.b());
  json hist = json::object();
  for (auto [key, count] : fp.histogram)
    if (count) hist[std::to_string(key)] = count;
  r.record = {{"file", path}, {"fingerprint", fp.to_string()}, {"histogram", hist}, {"total", fp.total()},
              {"expected_total", expected}};
  r.text << fp.to_string() << "\n";
  r.text << "total " << fp.total() << " (expected " << expected << ")\n";
  return fp.total() == expected ? kOk : kFailed;
}

int cmd_iso(Report& r, const std::string& a, const std::string& b) {
  const DesignFile fa = read_design_file(a), fb = read_design_file(b);
  const auto res = are_isomorphic(fa.design, fb.design);
  r.record = {{"first", a}, {"second", b}, {"isomorphic", res.isomorphic}, {"reason", res.reason}};
  r.text << (res.isomorphic ? "isomorphic" : "not isomorphic") << " (" << res.reason << ")\n";
  if (res.map) {
    const PointSpace sa = fa.space(), sb = fb.space();
    json m = json::object();
    std::string line;
    for (std::size_t p = 0; p < res.map->size(); ++p) {
      m[sa.label(Point(p))] = sb.label((*res.map)[p]);
      line += (p ? " " : "") + sa.label(Point(p)) + "->" + sb.label((*res.map)[p]);
    }
    r.record["map"] = m;
    r.text << "map: " << line << "\n";
  }
  return res.isomorphic ? kOk : kFailed;
}

int cmd_aut(Report& r, const std::string& path) {
  const DesignFile f = read_design_file(path);
  const auto count = automorphism_count(f.design);
  const auto gens = automorphism_generators(f.design);
  r.record = {{"file", path}, {"order", count}, {"generators", gens.size()}};
  r.text << "|Aut| = " << count << " (" << gens.size() << " generators)\n";
  return kOk;
}

struct SearchOptions {
  std::string kind, group, table, branch, checkpoint, out;
  std::size_t k = 0, jobs = 1;
  std::optional<std::size_t> limit, sample, expect_classes;
  bool no_symmetry = false, classes = false, quiet = false;
  std::string strategy = "auto";
};

int cmd_search(Report& r, const SearchOptions& o) {
  SearchConfig cfg;
  cfg.scenario =
      std::make_shared<const ActionScenario>(build_scenario(parse_scenario_kind(o.kind), load_group(o.group, o.table)));
  cfg.k = o.k;
  cfg.workers = std::max<std::size_t>(1, o.jobs);
  cfg.limit = o.limit;
  cfg.sample = o.sample;
  cfg.use_symmetry = !o.no_symmetry;
  if (o.strategy == "pairs")
    cfg.strategy = SearchStrategy::PairClasses;
  else if (o.strategy == "matching")
    cfg.strategy = SearchStrategy::DifferenceMatching;
  if (!o.checkpoint.empty()) cfg.checkpoint = o.checkpoint;
  if (!o.branch.empty()) {
    auto slash = o.branch.find('/');
    try {
      if (slash == std::string::npos) throw std::invalid_argument("no slash");
      cfg.branch_index = std::stoul(o.branch.substr(0, slash));
      cfg.branch_count = std::stoul(o.branch.substr(slash + 1));
    } catch (const std::logic_error&) {
      fail(ErrorCode::InvalidArgument, "--branch expects i/N");
    }
  }
  if (!o.quiet)
    cfg.progress = [](std::size_t done, std::size_t total) {
      std::cerr << "\rbranches " << done << "/" << total << std::flush;
    };
  const auto t0 = std::chrono::steady_clock::now();
  const SearchResult res = enumerate_designs(cfg);
  if (!o.quiet) std::cerr << "\n";
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const PointSpace& space = cfg.scenario->space();

  auto systems = json::array();
  for (const auto& sys : res.systems) systems.push_back(emit_blocks(sys, space));
  const auto& st = res.stats;
  r.record = {{"scenario", o.kind},
              {"group", o.table.empty() ? GroupSpec::parse(o.group).to_string() : "imported " + o.table},
              {"k", o.k},
              {"systems", res.systems.size()},
              {"exhaustive", res.exhaustive},
              {"seconds", secs},
              {"stats",
               {{"nodes", st.nodes},
                {"frontier", st.frontier},
                {"branches_total", st.branches_total},
                {"branches_selected", st.branches_selected},
                {"branches_resumed", st.branches_resumed},
                {"symmetries", st.symmetries}}},
              {"base_blocks", systems}};
  r.text << res.systems.size() << " base-block systems" << (res.exhaustive ? "" : " (not exhaustive)") << ", "
         << st.branches_selected << "/" << st.branches_total << " branches, " << st.nodes << " nodes, " << secs
         << " s\n";
  for (const auto& s : systems) r.text << "  " << s.get<std::string>() << "\n";

  int code = kOk;
  if (o.classes || o.expect_classes) {
    std::vector<Design> designs;
    for (const auto& sys : res.base_block_systems(cfg.scenario)) designs.push_back(expand(sys));
    const auto cls = isomorphism_classes(designs, cfg.workers);
    auto cj = json::array();
    r.text << cls.size() << " isomorphism classes\n";
    for (const auto& c : cls) {
      cj.push_back({{"representative", c.representative}, {"size", c.members.size()},
                    {"fingerprint", c.fingerprint.to_string()}});
      r.text << "  #" << c.representative << " x" << c.members.size() << " " << c.fingerprint.to_string() << "\n";
    }
    r.record["classes"] = cj;
    if (o.expect_classes && cls.size() != *o.expect_classes) {
      r.text << "expected " << *o.expect_classes << " classes\n";
      code = kFailed;
    }
  }
  if (!o.out.empty()) {
    std::ofstream out(o.out);
    if (!out) fail(ErrorCode::Io, "cannot write " + o.out);
    out << r.record.dump(2) << "\n";
  }
  return code;
}

int cmd_catalog_list(Report& r, const std::string& family) {
  if (family.empty()) {
    r.record = json::array();
    for (const auto& [prefix, count] : catalog_families()) {
      const auto& first = *catalog_family(prefix).front();
      r.record.push_back({{"family", prefix}, {"designs", count}, {"v", first.v}, {"k", first.k},
                          {"scenario", to_string(first.kind)}, {"description", first.family}});
      r.text << prefix << "  " << count << " design(s), S(2," << first.k << "," << first.v << "), "
             << to_string(first.kind) << ", " << first.family << "\n";
    }
    return kOk;
  }
  const auto entries = catalog_family(family);
  if (entries.empty()) fail(ErrorCode::NotFound, "no catalog family '" + family + "'");
  r.record = json::array();
  for (const auto* e : entries) {
    r.record.push_back(e->id);
    r.text << e->id << "\n";
  }
  return kOk;
}

int cmd_catalog_show(Report& r, const std::string& id, bool do_expand, const std::string& table,
                     const std::string& out_path) {
  const auto& e = catalog_lookup(id);
  auto cands = json::array();
  for (const auto& c : e.candidates) cands.push_back(c.to_string());
  r.record = {{"id", e.id},        {"family", e.family},          {"scenario", to_string(e.kind)},
              {"v", e.v},          {"k", e.k},                    {"candidates", cands},
              {"note", e.note},    {"fingerprint", e.printed_fingerprint}, {"blocks", emit_blocks(e.base_blocks(), e.space())}};
  r.text << e.id << "\n  family: " << e.family << "\n  scenario: " << to_string(e.kind) << ", S(2," << e.k << ","
         << e.v << ")\n  note: " << e.note << "\n  printed fingerprint: " << e.printed_fingerprint
         << "\n  base blocks: " << emit_blocks(e.base_blocks(), e.space()) << "\n";
  if (!do_expand) return kOk;

  std::optional<GroupTable> imported;
  if (!table.empty()) imported = load_group("", table);
  const auto ex = expand_entry(e, imported);
  const auto rep = verify_steiner(ex.design);
  const Fingerprint fp = fingerprint(ex.design);
  const bool totals = fp.total() == fingerprint_total(e.v, e.k, ex.design.b());
  const bool printed_match = fp == e.printed();
  r.record["expanded"] = {{"group", ex.group},          {"b", ex.design.b()},      {"verified", rep.pass},
                          {"fingerprint", fp.to_string()}, {"total_ok", totals},   {"matches_printed", printed_match}};
  r.text << "  expanded with " << ex.group << ": b=" << ex.design.b() << ", " << (rep.pass ? "verified" : "FAILED")
         << "\n  computed fingerprint: " << fp.to_string() << (printed_match ? " (matches printed)" : " (differs from printed)")
         << "\n";
  if (!out_path.empty()) {
    DesignFile f{ex.design, std::nullopt};
    if (table.empty()) f.scenario = ScenarioDescriptor{e.kind, GroupSpec::parse(ex.group)};
    write_design_file(out_path, f);
  }
  return rep.pass && totals ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner systems S(2,k,v) from group actions"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  // group build | validate
  auto* group = app.add_subcommand("group", "Build or validate Cayley tables");
  group->require_subcommand(1);
  group->fallthrough();
  std::string gspec, gout, gfile;
  auto* gbuild = group->add_subcommand("build", "Build a group and print or write its Cayley table");
  gbuild->add_option("spec", gspec, "e.g. Cyclic(48), Semidirect(19,3,7), Direct(Cyclic(5),Cyclic(31))")->required();
  gbuild->add_option("-o,--output", gout, "Cayley-table file to write");
  auto* gvalidate = group->add_subcommand("validate", "Check the group axioms of a Cayley-table file");
  gvalidate->add_option("file", gfile)->required()->check(CLI::ExistingFile);

  // expand
  auto* exp = app.add_subcommand("expand", "Expand base blocks into a design file");
  std::string kind, gs, table, out;
  BlockSource src;
  exp->add_option("--scenario", kind, "RegularPlusFixed, Regular, CyclicTwoOrbit, CyclicTwoOrbitPlusFixed, Frobenius57_19_19_1");
  exp->add_option("--group", gs, "Group spec");
  exp->add_option("--table", table, "Cayley-table file used instead of --group")->check(CLI::ExistingFile);
  exp->add_option("--blocks", src.blocks, "Base blocks, e.g. \"[[0, 1, 3, 13, 28, 0'], ...]\"");
  exp->add_option("--blocks-file", src.blocks_file, "File holding the base blocks")->check(CLI::ExistingFile);
  exp->add_option("--catalog", src.catalog_id, "Use the base blocks of a catalog entry");
  exp->add_flag("--strict", src.strict, "Reject typesetting residue and size mismatches");
  exp->add_option("-o,--output", out, "Design file to write");

  std::string file, file2;
  auto* ver = app.add_subcommand("verify", "Check that a design file is a Steiner system");
  ver->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* fpc = app.add_subcommand("fingerprint", "Configuration-census fingerprint of a design");
  fpc->add_option("file", file)->required()->check(CLI::ExistingFile);
  auto* iso = app.add_subcommand("iso", "Exact isomorphism test of two designs");
  iso->add_option("first", file)->required()->check(CLI::ExistingFile);
  iso->add_option("second", file2)->required()->check(CLI::ExistingFile);
  auto* aut = app.add_subcommand("aut", "Order of the automorphism group");
  aut->add_option("file", file)->required()->check(CLI::ExistingFile);

  // search
  SearchOptions so;
  auto* search = app.add_subcommand("search", "Enumerate base-block systems");
  search->add_option("--scenario", so.kind)->required();
  search->add_option("--group", so.group, "Group spec");
  search->add_option("--table", so.table, "Cayley-table file used instead of --group")->check(CLI::ExistingFile);
  search->add_option("-k", so.k, "Block size")->required();
  search->add_option("--branch", so.branch, "Process top-level branches j with j mod N = i (i/N)");
  search->add_option("--checkpoint", so.checkpoint, "Resume from / append completed branches to this file");
  search->add_option("--jobs", so.jobs, "Worker threads");
  search->add_option("--limit", so.limit, "Stop after this many systems");
  search->add_option("--sample", so.sample, "Process only this many top-level branches");
  search->add_option("--strategy", so.strategy)->check(CLI::IsMember({"auto", "pairs", "matching"}));
  search->add_flag("--no-symmetry", so.no_symmetry, "Disable symmetry pruning");
  search->add_flag("--classes", so.classes, "Report isomorphism classes of the results");
  search->add_option("--expect-classes", so.expect_classes, "Exit with 1 unless this many classes are found");
  search->add_flag("-q,--quiet", so.quiet, "No progress on stderr");
  search->add_option("-o,--output", so.out, "Write the JSON record here as well");

  // catalog list | show
  auto* cat = app.add_subcommand("catalog", "Designs printed in the literature");
  cat->require_subcommand(1);
  cat->fallthrough();
  std::string family, id;
  bool do_expand = false;
  auto* clist = cat->add_subcommand("list", "List families, or the entries of one family");
  clist->add_option("family", family);
  auto* cshow = cat->add_subcommand("show", "Show one entry");
  cshow->add_option("id", id)->required();
  cshow->add_flag("--expand", do_expand, "Expand, verify and fingerprint the entry");
  cshow->add_option("--table", table, "Cayley table for entries whose numbering must be imported")
      ->check(CLI::ExistingFile);
  cshow->add_option("-o,--output", out, "Design file to write after expansion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Report r;
  r.as_json = format == "json";
  int code = kOk;
  try {
    if (*gbuild)
      code = cmd_group_build(r, gspec, gout);
    else if (*gvalidate)
      code = cmd_group_validate(r, gfile);
    else if (*exp)
      code = cmd_expand(r, kind, gs, table, src, out);
    else if (*ver)
      code = cmd_verify(r, file);
    else if (*fpc)
      code = cmd_fingerprint(r, file);
    else if (*iso)
      code = cmd_iso(r, file, file2);
    else if (*aut)
      code = cmd_aut(r, file);
    else if (*search)
      code = cmd_search(r, so);
    else if (*clist)
      code = cmd_catalog_list(r, family);
    else if (*cshow)
      code = cmd_catalog_show(r, id, do_expand, table, out);
  } catch (const Error& e) {
    if (r.as_json)
      std::cout << json{{"error", e.what()}}.dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  r.emit();
  return code;
}
