#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"
#include "group.hpp"

namespace steiner {

enum class OrbitKind { Regular, Cyclic, Quotient, Fixed };

struct OrbitDescriptor {
  OrbitKind kind;
  std::size_t size;
  std::size_t offset;
};

/// A point space made of labeled orbits. Orbit i (i-th non-fixed orbit)
/// prints its local index followed by i apostrophes; the fixed point prints
/// as "∞".
class PointSpace {
 public:
  PointSpace() = default;
  explicit PointSpace(const std::vector<std::pair<OrbitKind, std::size_t>>& orbits) {
    std::size_t fixed = 0;
    for (auto [kind, size] : orbits) {
      if (kind == OrbitKind::Fixed) {
        if (size != 1) fail(ErrorCode::InvalidScenario, "a fixed-point orbit has size 1");
        if (++fixed > 1) fail(ErrorCode::InvalidScenario, "at most one fixed point is supported");
      } else if (fixed) {
        fail(ErrorCode::InvalidScenario, "the fixed point must be the last orbit");
      }
      orbits_.push_back({kind, size, v_});
      v_ += size;
    }
    if (v_ > 0xFFFF) fail(ErrorCode::InvalidScenario, "point space too large");
  }

  std::size_t v() const noexcept { return v_; }
  const std::vector<OrbitDescriptor>& orbits() const noexcept { return orbits_; }

  std::size_t labeled_orbit_count() const noexcept {
    std::size_t k = 0;
    for (const auto& o : orbits_) k += o.kind != OrbitKind::Fixed;
    return k;
  }

  bool has_fixed_point() const noexcept { return !orbits_.empty() && orbits_.back().kind == OrbitKind::Fixed; }
  Point fixed_point() const {
    if (!has_fixed_point()) fail(ErrorCode::InvalidArgument, "point space has no fixed point");
    return Point(orbits_.back().offset);
  }

  std::size_t orbit_of(Point p) const {
    for (std::size_t i = 0; i < orbits_.size(); ++i)
      if (p < orbits_[i].offset + orbits_[i].size) return i;
    fail(ErrorCode::InvalidArgument, "point " + std::to_string(p) + " out of range");
  }

  std::string label(Point p) const {
    const std::size_t o = orbit_of(p);
    if (orbits_[o].kind == OrbitKind::Fixed) return "∞";
    return std::to_string(p - orbits_[o].offset) + std::string(o, '\'');
  }

  /// Resolves a label (integer with 0-2 primes, or inf / ∞) to a point.
  Point parse_label(std::string_view label) const {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '$')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '$')) s.remove_suffix(1);
      return s;
    };
    std::string_view s = trim(label);
    if (s == "inf" || s == "∞" || s == "\\infty" || s == "oo") {
      if (!has_fixed_point()) fail(ErrorCode::Parse, "label '" + std::string(s) + "': space has no fixed point");
      return fixed_point();
    }
    std::size_t i = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == 0 || i > 6) fail(ErrorCode::Parse, "malformed label '" + std::string(s) + "'");
    std::size_t local = std::stoul(std::string(s.substr(0, i)));
    std::size_t primes = 0;
    for (; i < s.size(); ++i) {
      if (s[i] == '\'') {
        ++primes;
      } else if (s.substr(i, 3) == "′") {  // unicode prime
        ++primes;
        i += 2;
      } else {
        fail(ErrorCode::Parse, "malformed label '" + std::string(s) + "'");
      }
    }
    if (primes >= labeled_orbit_count())
      fail(ErrorCode::Parse, "label '" + std::string(s) + "': prime depth " + std::to_string(primes) +
                                 " exceeds the " + std::to_string(labeled_orbit_count()) + " labeled orbits");
    const auto& orb = orbits_[primes];
    if (local >= orb.size)
      fail(ErrorCode::Parse, "label '" + std::string(s) + "': index exceeds orbit size " + std::to_string(orb.size));
    return Point(orb.offset + local);
  }

 private:
  std::vector<OrbitDescriptor> orbits_;
  std::size_t v_ = 0;
};

enum class ScenarioKind { RegularPlusFixed, Regular, CyclicTwoOrbit, CyclicTwoOrbitPlusFixed, Frobenius57_19_19_1 };

inline const char* to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::RegularPlusFixed: return "RegularPlusFixed";
    case ScenarioKind::Regular: return "Regular";
    case ScenarioKind::CyclicTwoOrbit: return "CyclicTwoOrbit";
    case ScenarioKind::CyclicTwoOrbitPlusFixed: return "CyclicTwoOrbitPlusFixed";
    case ScenarioKind::Frobenius57_19_19_1: return "Frobenius57_19_19_1";
  }
  return "?";
}

inline ScenarioKind parse_scenario_kind(std::string_view s) {
  for (auto k : {ScenarioKind::RegularPlusFixed, ScenarioKind::Regular, ScenarioKind::CyclicTwoOrbit,
                 ScenarioKind::CyclicTwoOrbitPlusFixed, ScenarioKind::Frobenius57_19_19_1})
    if (s == to_string(k)) return k;
  fail(ErrorCode::Parse, "unknown scenario kind '" + std::string(s) + "'");
}

/// Point space of a scenario kind for a group of order n.
inline PointSpace scenario_space(ScenarioKind kind, std::size_t n) {
  switch (kind) {
    case ScenarioKind::Regular: return PointSpace({{OrbitKind::Regular, n}});
    case ScenarioKind::RegularPlusFixed: return PointSpace({{OrbitKind::Regular, n}, {OrbitKind::Fixed, 1}});
    case ScenarioKind::CyclicTwoOrbit: return PointSpace({{OrbitKind::Cyclic, n}, {OrbitKind::Cyclic, n}});
    case ScenarioKind::CyclicTwoOrbitPlusFixed:
      return PointSpace({{OrbitKind::Cyclic, n}, {OrbitKind::Cyclic, n}, {OrbitKind::Fixed, 1}});
    case ScenarioKind::Frobenius57_19_19_1:
      if (n != 57) fail(ErrorCode::InvalidScenario, "Frobenius57_19_19_1 requires a group of order 57");
      return PointSpace(
          {{OrbitKind::Regular, 57}, {OrbitKind::Quotient, 19}, {OrbitKind::Quotient, 19}, {OrbitKind::Fixed, 1}});
  }
  fail(ErrorCode::InvalidScenario, "unknown scenario kind");
}

/// Group order implied by a scenario kind and a point count, if any.
inline std::optional<std::size_t> scenario_group_order(ScenarioKind kind, std::size_t v) {
  switch (kind) {
    case ScenarioKind::Regular: return v;
    case ScenarioKind::RegularPlusFixed: return v >= 2 ? std::optional<std::size_t>(v - 1) : std::nullopt;
    case ScenarioKind::CyclicTwoOrbit: return v % 2 == 0 ? std::optional<std::size_t>(v / 2) : std::nullopt;
    case ScenarioKind::CyclicTwoOrbitPlusFixed:
      return v % 2 == 1 ? std::optional<std::size_t>((v - 1) / 2) : std::nullopt;
    case ScenarioKind::Frobenius57_19_19_1: return v == 96 ? std::optional<std::size_t>(57) : std::nullopt;
  }
  return std::nullopt;
}

/// A group together with its action on a point space. The permutation of
/// every group element is materialized.
class ActionScenario {
 public:
  static ActionScenario build(ScenarioKind kind, GroupTable group) {
    ActionScenario s;
    s.kind_ = kind;
    s.group_ = std::make_shared<const GroupTable>(std::move(group));
    const GroupTable& G = *s.group_;
    const std::size_t n = G.order();
    switch (kind) {
      case ScenarioKind::CyclicTwoOrbit:
      case ScenarioKind::CyclicTwoOrbitPlusFixed:
        if (!is_standard_cyclic(G))
          fail(ErrorCode::InvalidScenario, std::string(to_string(kind)) + " requires a cyclic group Z_n");
        break;
      case ScenarioKind::Frobenius57_19_19_1:
        if (G == build_group(GroupSpec::semidirect(19, 3, 7)))
          s.row_major_ = false;
        else if (G == build_group(GroupSpec::semidirect(19, 3, 7, true)))
          s.row_major_ = true;
        else
          fail(ErrorCode::InvalidScenario, "Frobenius57_19_19_1 requires Semidirect(19,3,7) in CRT or row-major numbering");
        break;
      default:
        break;
    }
    s.space_ = scenario_space(kind, n);
    const std::size_t v = s.space_.v();
    s.perms_.resize(n * v);
    for (std::size_t g = 0; g < n; ++g) {
      Point* row = s.perms_.data() + g * v;
      switch (kind) {
        case ScenarioKind::Regular:
        case ScenarioKind::RegularPlusFixed:
          for (std::size_t x = 0; x < n; ++x) row[x] = G.op(Element(g), Element(x));
          if (kind == ScenarioKind::RegularPlusFixed) row[n] = Point(n);
          break;
        case ScenarioKind::CyclicTwoOrbit:
        case ScenarioKind::CyclicTwoOrbitPlusFixed:
          for (std::size_t x = 0; x < n; ++x) {
            row[x] = Point((x + g) % n);
            row[n + x] = Point(n + (x + g) % n);
          }
          if (kind == ScenarioKind::CyclicTwoOrbitPlusFixed) row[2 * n] = Point(2 * n);
          break;
        case ScenarioKind::Frobenius57_19_19_1: {
          for (std::size_t x = 0; x < 57; ++x) row[x] = G.op(Element(g), Element(x));
          const std::size_t a = s.row_major_ ? g / 3 : g % 19, b = g % 3;
          const std::size_t mult = detail::pow_mod(7, b, 19);
          for (std::size_t x = 0; x < 19; ++x) {
            std::size_t y = (a + mult * x) % 19;
            row[57 + x] = Point(57 + y);
            row[76 + x] = Point(76 + y);
          }
          row[95] = 95;
          break;
        }
      }
    }
    for (std::size_t p = 0; p < v; ++p)
      if (s.perms_[p] != p) fail(ErrorCode::InvalidScenario, "identity does not act trivially");
    return s;
  }

  ScenarioKind kind() const noexcept { return kind_; }
  const GroupTable& group() const noexcept { return *group_; }
  std::shared_ptr<const GroupTable> group_ptr() const noexcept { return group_; }
  const PointSpace& space() const noexcept { return space_; }
  std::size_t v() const noexcept { return space_.v(); }
  std::size_t group_order() const noexcept { return group_->order(); }

  /// Unchecked image of p under g.
  Point operator()(Element g, Point p) const noexcept { return perms_[std::size_t(g) * space_.v() + p]; }
  const Point* permutation(Element g) const noexcept { return perms_.data() + std::size_t(g) * space_.v(); }

  Point apply(std::size_t g, std::size_t p) const {
    if (g >= group_order()) fail(ErrorCode::InvalidArgument, "group element " + std::to_string(g) + " out of range");
    if (p >= v()) fail(ErrorCode::InvalidArgument, "point " + std::to_string(p) + " out of range");
    return (*this)(Element(g), Point(p));
  }

  Block apply_block(Element g, const Block& b) const {
    Block out(b.size());
    const Point* perm = permutation(g);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = perm[b[i]];
    std::sort(out.begin(), out.end());
    return out;
  }

  void check_block(const Block& b) const {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] >= v()) fail(ErrorCode::InvalidArgument, "point " + std::to_string(b[i]) + " out of range");
      for (std::size_t j = 0; j < i; ++j)
        if (b[i] == b[j]) fail(ErrorCode::InvalidArgument, "block repeats point " + std::to_string(b[i]));
    }
  }

  /// All images g.B, deduplicated and sorted.
  std::vector<Block> block_orbit(Block b) const {
    check_block(b);
    std::sort(b.begin(), b.end());
    std::vector<Block> out;
    out.reserve(group_order());
    for (std::size_t g = 0; g < group_order(); ++g) out.push_back(apply_block(Element(g), b));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Setwise stabilizer of b.
  std::vector<Element> stabilizer(Block b) const {
    check_block(b);
    std::sort(b.begin(), b.end());
    std::vector<Element> out;
    for (std::size_t g = 0; g < group_order(); ++g)
      if (apply_block(Element(g), b) == b) out.push_back(Element(g));
    return out;
  }

  /// Lexicographically smallest block in the orbit of b.
  Block orbit_representative(Block b) const {
    check_block(b);
    std::sort(b.begin(), b.end());
    Block best = b;
    for (std::size_t g = 1; g < group_order(); ++g) {
      Block img = apply_block(Element(g), b);
      if (img < best) best = std::move(img);
    }
    return best;
  }

 private:
  ActionScenario() = default;

  ScenarioKind kind_ = ScenarioKind::Regular;
  bool row_major_ = false;
  std::shared_ptr<const GroupTable> group_;
  PointSpace space_;
  std::vector<Point> perms_;
};

inline ActionScenario build_scenario(ScenarioKind kind, GroupTable group) {
  return ActionScenario::build(kind, std::move(group));
}

/// Orbits of unordered point pairs under the action.
struct PairClasses {
  static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

  std::size_t v = 0;
  std::vector<std::uint32_t> class_of;                    // v*v, symmetric
  std::vector<std::pair<Point, Point>> representative;    // lexicographically smallest member
  std::vector<std::size_t> size;

  std::size_t count() const noexcept { return representative.size(); }
  std::uint32_t operator()(Point p, Point q) const noexcept { return class_of[std::size_t(p) * v + q]; }
};

/// Partitions all pairs into action orbits; classes are numbered by their
/// lexicographically smallest pair.
inline PairClasses pair_classes(const ActionScenario& s) {
  PairClasses pc;
  const std::size_t v = s.v(), n = s.group_order();
  pc.v = v;
  pc.class_of.assign(v * v, PairClasses::kNone);
  for (std::size_t p = 0; p < v; ++p)
    for (std::size_t q = p + 1; q < v; ++q) {
      if (pc.class_of[p * v + q] != PairClasses::kNone) continue;
      const auto id = std::uint32_t(pc.representative.size());
      pc.representative.emplace_back(Point(p), Point(q));
      std::size_t members = 0;
      for (std::size_t g = 0; g < n; ++g) {
        Point a = s(Element(g), Point(p)), b = s(Element(g), Point(q));
        auto& slot = pc.class_of[std::size_t(a) * v + b];
        if (slot == PairClasses::kNone) {
          slot = id;
          pc.class_of[std::size_t(b) * v + a] = id;
          ++members;
        }
      }
      pc.size.push_back(members);
    }
  return pc;
}

}  // namespace steiner
