#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "action.hpp"
#include "common.hpp"
#include "group.hpp"

namespace steiner {

/// An explicit incidence structure: v points, blocks of size k, blocks sorted.
class Design {
 public:
  Design() = default;

  static Design make(std::size_t v, std::size_t k, std::vector<Block> blocks) {
    if (k < 2 || v <= k) fail(ErrorCode::InvalidDesign, "design needs v > k >= 2");
    if (v > 0xFFFF) fail(ErrorCode::InvalidDesign, "too many points");
    for (auto& b : blocks) {
      if (b.size() != k)
        fail(ErrorCode::InvalidDesign, "block [" + join_points(b, ", ") + "] has size " + std::to_string(b.size()) +
                                           ", expected " + std::to_string(k));
      std::sort(b.begin(), b.end());
      for (std::size_t i = 0; i < k; ++i) {
        if (b[i] >= v) fail(ErrorCode::InvalidDesign, "point " + std::to_string(b[i]) + " out of range");
        if (i && b[i] == b[i - 1])
          fail(ErrorCode::InvalidDesign, "block [" + join_points(b, ", ") + "] repeats a point");
      }
    }
    std::sort(blocks.begin(), blocks.end());
    for (std::size_t i = 1; i < blocks.size(); ++i)
      if (blocks[i] == blocks[i - 1])
        fail(ErrorCode::InvalidDesign, "duplicate block [" + join_points(blocks[i], ", ") + "]");
    Design d;
    d.v_ = v;
    d.k_ = k;
    d.blocks_ = std::move(blocks);
    return d;
  }

  std::size_t v() const noexcept { return v_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t b() const noexcept { return blocks_.size(); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  /// Image of the design under the point map p -> perm[p].
  Design relabeled(const std::vector<Point>& perm) const {
    if (perm.size() != v_) fail(ErrorCode::InvalidArgument, "relabeling has wrong length");
    std::vector<Block> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) {
      Block nb(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) nb[i] = perm[b[i]];
      out.push_back(std::move(nb));
    }
    return make(v_, k_, std::move(out));
  }

  friend bool operator==(const Design&, const Design&) = default;

 private:
  std::size_t v_ = 0, k_ = 0;
  std::vector<Block> blocks_;
};

/// A design in compressed form: a scenario plus one representative block per
/// block orbit.
struct BaseBlockSystem {
  std::shared_ptr<const ActionScenario> scenario;
  std::vector<Block> base;
};

/// Expands every base block into its orbit. Two base blocks in the same orbit
/// are reported as an error.
inline Design expand(const BaseBlockSystem& sys) {
  if (!sys.scenario) fail(ErrorCode::InvalidArgument, "base-block system without scenario");
  const ActionScenario& s = *sys.scenario;
  if (sys.base.empty()) fail(ErrorCode::InvalidDesign, "no base blocks");
  const std::size_t k = sys.base.front().size();
  std::map<Block, std::size_t> rep_owner;
  std::vector<Block> all;
  for (std::size_t i = 0; i < sys.base.size(); ++i) {
    const Block& b = sys.base[i];
    if (b.size() != k) fail(ErrorCode::InvalidDesign, "base blocks have different sizes");
    auto orbit = s.block_orbit(b);
    auto [it, fresh] = rep_owner.emplace(orbit.front(), i);
    if (!fresh)
      fail(ErrorCode::InvalidDesign, "base blocks " + std::to_string(it->second) + " and " + std::to_string(i) +
                                         " generate the same orbit ([" + join_points(sys.base[it->second], ", ") +
                                         "] vs [" + join_points(b, ", ") + "])");
    all.insert(all.end(), std::make_move_iterator(orbit.begin()), std::make_move_iterator(orbit.end()));
  }
  return Design::make(s.v(), k, std::move(all));
}

/// Lexicographically minimal representatives of the block orbits of an
/// action-invariant design, sorted.
inline std::vector<Block> orbit_representatives(const Design& d, const ActionScenario& s) {
  if (d.v() != s.v()) fail(ErrorCode::InvalidArgument, "design and scenario disagree on v");
  std::vector<Block> reps;
  for (const auto& b : d.blocks()) reps.push_back(s.orbit_representative(b));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

struct VerificationReport {
  bool pass = false;
  std::size_t v = 0, k = 0, b = 0;
  /// Common replication number; empty when points disagree.
  std::optional<std::size_t> r;
  std::vector<std::pair<Point, Point>> uncovered;
  std::vector<std::pair<std::pair<Point, Point>, std::size_t>> multiply_covered;
};

/// Checks that every unordered pair lies in exactly one block.
inline VerificationReport verify_steiner(const Design& d) {
  VerificationReport rep;
  rep.v = d.v();
  rep.k = d.k();
  rep.b = d.b();
  const std::size_t v = d.v();
  std::vector<std::uint32_t> cover(v * v, 0);
  std::vector<std::size_t> degree(v, 0);
  for (const auto& blk : d.blocks()) {
    for (std::size_t i = 0; i < blk.size(); ++i) {
      ++degree[blk[i]];
      for (std::size_t j = i + 1; j < blk.size(); ++j) ++cover[std::size_t(blk[i]) * v + blk[j]];
    }
  }
  for (std::size_t p = 0; p < v; ++p)
    for (std::size_t q = p + 1; q < v; ++q) {
      auto c = cover[p * v + q];
      if (c == 0) rep.uncovered.emplace_back(Point(p), Point(q));
      if (c > 1) rep.multiply_covered.push_back({{Point(p), Point(q)}, c});
    }
  if (std::all_of(degree.begin(), degree.end(), [&](std::size_t x) { return x == degree[0]; })) rep.r = degree[0];
  rep.pass = rep.uncovered.empty() && rep.multiply_covered.empty() && (v - 1) % (d.k() - 1) == 0 && rep.r &&
             *rep.r == (v - 1) / (d.k() - 1);
  return rep;
}

struct Admissibility {
  bool ok = false;
  std::string reason;
  explicit operator bool() const noexcept { return ok; }
};

/// Necessary divisibility conditions for S(2,k,v).
inline Admissibility admissible(std::size_t v, std::size_t k) {
  if (k < 2 || v <= k) return {false, "requires v > k >= 2"};
  if ((v - 1) % (k - 1) != 0)
    return {false, "v-1 = " + std::to_string(v - 1) + " is not divisible by k-1 = " + std::to_string(k - 1)};
  if ((v * (v - 1)) % (k * (k - 1)) != 0)
    return {false, "v(v-1) = " + std::to_string(v * (v - 1)) + " is not divisible by k(k-1) = " +
                       std::to_string(k * (k - 1))};
  return {true, "b = " + std::to_string(v * (v - 1) / (k * (k - 1))) + ", r = " + std::to_string((v - 1) / (k - 1))};
}

struct NumberingAttempt {
  GroupSpec spec;
  bool verified = false;
  std::string detail;
};

struct NumberingResolution {
  std::optional<std::size_t> chosen;  // index into the candidate list
  std::optional<Design> design;
  std::optional<BaseBlockSystem> system;
  std::vector<NumberingAttempt> attempts;

  bool ok() const noexcept { return chosen.has_value(); }
};

/// Tries candidate groups in order and returns the first whose expansion of
/// the given base blocks is a Steiner system.
inline NumberingResolution resolve_numbering(const std::vector<GroupSpec>& candidates, ScenarioKind kind,
                                             const std::vector<Block>& base) {
  if (candidates.empty()) fail(ErrorCode::InvalidArgument, "resolve_numbering: empty candidate list");
  NumberingResolution res;
  std::optional<std::size_t> order;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    NumberingAttempt att{candidates[i], false, {}};
    try {
      auto group = build_group(candidates[i]);
      if (order && *order != group.order())
        fail(ErrorCode::InvalidArgument, "candidates disagree on group order");
      order = group.order();
      auto scenario = std::make_shared<const ActionScenario>(build_scenario(kind, std::move(group)));
      BaseBlockSystem sys{scenario, base};
      Design d = expand(sys);
      auto rep = verify_steiner(d);
      if (rep.pass) {
        att.verified = true;
        att.detail = "verified, b = " + std::to_string(rep.b);
        res.attempts.push_back(att);
        res.chosen = i;
        res.design = std::move(d);
        res.system = std::move(sys);
        return res;
      }
      att.detail = std::to_string(rep.uncovered.size()) + " uncovered and " +
                   std::to_string(rep.multiply_covered.size()) + " multiply covered pairs";
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidArgument && std::string(e.what()).find("disagree") != std::string::npos) throw;
      att.detail = e.what();
    }
    res.attempts.push_back(std::move(att));
  }
  return res;
}

}  // namespace steiner
