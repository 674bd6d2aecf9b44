#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "action.hpp"
#include "common.hpp"
#include "design.hpp"
#include "group.hpp"
#include "invariants.hpp"
#include "notation.hpp"

namespace steiner {

namespace detail {

struct RawCatalogEntry {
  const char* id;
  const char* family;
  ScenarioKind kind;
  const char* group;          // group to try first; empty when none is known
  bool numbering_unpublished; // printed element numbering cannot be reconstructed
  std::size_t v, k;
  const char* note;
  const char* fingerprint;
  const char* blocks;
};

}  // namespace detail
}  // namespace steiner

#include "detail/catalog_data.hpp"

namespace steiner {

struct CatalogEntry {
  std::string id;
  std::string family;
  std::string note;
  ScenarioKind kind;
  std::size_t v, k;
  /// Group numbering candidates, tried in order.
  std::vector<GroupSpec> candidates;
  /// The printed numbering is not one this library can build; expansion is
  /// attempted with the candidates but is expected to need an imported table.
  bool numbering_unpublished;
  std::string printed_fingerprint;
  std::string block_text;

  std::string prefix() const { return id.substr(0, id.rfind('-')); }
  std::size_t group_order() const { return *scenario_group_order(kind, v); }
  PointSpace space() const { return scenario_space(kind, group_order()); }
  Fingerprint printed() const { return Fingerprint::parse(printed_fingerprint); }

  std::vector<Block> base_blocks(bool strict = false) const {
    ParseOptions opt;
    opt.block_size = k;
    opt.strict = strict;
    return parse_blocks(block_text, space(), opt).blocks;
  }
};

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    out.reserve(detail::kCatalogData.size());
    for (const auto& r : detail::kCatalogData) {
      CatalogEntry e{r.id, r.family, r.note, r.kind, r.v, r.k, {}, r.numbering_unpublished, r.fingerprint, r.blocks};
      if (*r.group) e.candidates.push_back(GroupSpec::parse(r.group));
      // Cyclic 1-rotational entries: natural residues first, then the
      // exponent-vector numbering of Z5 x Z31.
      if (e.prefix() == "S266-Z155-rot")
        e.candidates.push_back(GroupSpec::direct(GroupSpec::cyclic(5), GroupSpec::cyclic(31)));
      // The printed four-orbit blocks index Z19 x| Z3 row-major (n = 3a + b).
      if (e.prefix() == "S266-F57-four-orbit") e.candidates.push_back(GroupSpec::semidirect(19, 3, 7, true));
      out.push_back(std::move(e));
    }
    return out;
  }();
  return entries;
}

inline const CatalogEntry& catalog_lookup(std::string_view id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  fail(ErrorCode::NotFound, "unknown catalog id '" + std::string(id) + "'");
}

/// Entries whose id starts with the given family prefix (all when empty).
inline std::vector<const CatalogEntry*> catalog_family(std::string_view prefix) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog())
    if (e.id.compare(0, prefix.size(), prefix) == 0) out.push_back(&e);
  return out;
}

/// Family prefixes with the number of designs printed for each.
inline std::vector<std::pair<std::string, std::size_t>> catalog_families() {
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& e : catalog()) {
    if (out.empty() || out.back().first != e.prefix()) out.emplace_back(e.prefix(), 0);
    ++out.back().second;
  }
  return out;
}

struct ExpandedEntry {
  const CatalogEntry* entry = nullptr;
  std::string group;  // description of the group that was used
  BaseBlockSystem system;
  Design design;
  NumberingResolution resolution;
};

/// Expands and verifies an entry. With no imported table the candidates are
/// probed in order; an entry none of them verifies is reported as
/// ImportRequired.
inline ExpandedEntry expand_entry(const CatalogEntry& e, const std::optional<GroupTable>& imported = std::nullopt) {
  ExpandedEntry out;
  out.entry = &e;
  auto base = e.base_blocks();
  if (imported) {
    if (imported->order() != e.group_order())
      fail(ErrorCode::InvalidGroup, "imported table has order " + std::to_string(imported->order()) + ", entry " +
                                        e.id + " needs " + std::to_string(e.group_order()));
    auto scenario = std::make_shared<const ActionScenario>(build_scenario(e.kind, *imported));
    out.system = BaseBlockSystem{scenario, base};
    out.design = expand(out.system);
    auto rep = verify_steiner(out.design);
    if (!rep.pass)
      fail(ErrorCode::InvalidDesign, e.id + " does not verify under the imported table (" +
                                         std::to_string(rep.uncovered.size()) + " uncovered pairs)");
    out.group = "imported table";
    return out;
  }
  if (e.candidates.empty())
    fail(ErrorCode::ImportRequired, e.id + ": no buildable numbering for " + e.family + "; import a Cayley table");
  out.resolution = resolve_numbering(e.candidates, e.kind, base);
  if (!out.resolution.ok()) {
    std::string why;
    for (const auto& a : out.resolution.attempts) why += "; " + a.spec.to_string() + ": " + a.detail;
    fail(ErrorCode::ImportRequired, e.id + ": printed numbering not reproduced" + why);
  }
  out.group = e.candidates[*out.resolution.chosen].to_string();
  out.system = *out.resolution.system;
  out.design = *out.resolution.design;
  return out;
}

/// True when the entry cannot be expanded without an imported table.
inline bool import_required(const CatalogEntry& e) {
  if (e.candidates.empty()) return true;
  try {
    return !resolve_numbering(e.candidates, e.kind, e.base_blocks()).ok();
  } catch (const Error&) {
    return true;
  }
}

}  // namespace steiner
