#pragma once

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "action.hpp"
#include "common.hpp"
#include "design.hpp"
#include "detail/two_orbit.hpp"
#include "invariants.hpp"

namespace steiner {

enum class SearchStrategy {
  Auto,               // difference matching where it applies, else pair classes
  PairClasses,        // pair-class search plus exact cover
  DifferenceMatching  // two-orbit cyclic scenarios with k >= 4 only
};

struct SearchConfig {
  std::shared_ptr<const ActionScenario> scenario;
  std::size_t k = 0;
  /// Base blocks every emitted system must contain.
  std::vector<Block> forced;
  /// Process only top-level branches j with j % branch_count == branch_index.
  std::size_t branch_index = 0, branch_count = 1;
  /// Completed branches are appended here and skipped on restart.
  std::optional<std::string> checkpoint;
  std::size_t workers = 1;
  /// Stop after this many systems (the result is then marked incomplete).
  std::optional<std::size_t> limit;
  /// Process at most this many top-level branches, spread evenly over the
  /// selected ones (sampling mode; the result is marked incomplete).
  std::optional<std::size_t> sample;
  /// Reduce by symmetries commuting with the action (multipliers, orbit
  /// translations, orbit exchange). The output is the same either way.
  bool use_symmetry = true;
  SearchStrategy strategy = SearchStrategy::Auto;
  /// Called after each finished top-level branch with (done, selected).
  std::function<void(std::size_t, std::size_t)> progress;
};

struct SearchStats {
  std::uint64_t nodes = 0;            // search nodes over all stages
  std::uint64_t frontier = 0;         // second-stage problems (exact covers or offset matchings)
  std::uint64_t frontier_skipped = 0; // partial states dropped as non-canonical
  std::size_t branches_total = 0;     // top-level branches in the whole tree
  std::size_t branches_selected = 0;  // selected by branch selector / sampling
  std::size_t branches_resumed = 0;   // skipped because the checkpoint had them
  std::size_t short_candidates = 0;
  std::size_t symmetries = 1;         // multipliers used for pruning, identity included
};

struct SearchResult {
  /// Base-block systems, each normalized to sorted lexicographically minimal
  /// orbit representatives; the list is sorted.
  std::vector<std::vector<Block>> systems;
  SearchStats stats;
  /// False when a limit or sampling cut the enumeration short.
  bool exhaustive = true;

  std::vector<BaseBlockSystem> base_block_systems(const std::shared_ptr<const ActionScenario>& s) const {
    std::vector<BaseBlockSystem> out;
    for (const auto& base : systems) out.push_back({s, base});
    return out;
  }
};

namespace detail {

/// Text form of a list of blocks: points space-separated, blocks joined by
/// " / ".
inline std::string blocks_key(const std::vector<Block>& blocks) {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += " / ";
    Block b = blocks[i];
    std::sort(b.begin(), b.end());
    out += join_points(b, " ");
  }
  return out;
}

inline std::vector<Block> parse_blocks_key(const std::string& text) {
  std::vector<Block> out(1);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "/") {
      out.emplace_back();
      continue;
    }
    try {
      out.back().push_back(Point(std::stoul(tok)));
    } catch (const std::logic_error&) {
      fail(ErrorCode::Parse, "checkpoint: bad token '" + tok + "'");
    }
  }
  return out;
}

/// Dancing-links exact cover (all columns primary).
class ExactCover {
 public:
  explicit ExactCover(std::size_t columns) : size_(columns + 1, 0) {
    for (std::uint32_t i = 0; i <= columns; ++i) {
      L_.push_back(i == 0 ? std::uint32_t(columns) : i - 1);
      R_.push_back(i == columns ? 0 : i + 1);
      U_.push_back(i);
      D_.push_back(i);
      C_.push_back(i);
      row_.push_back(0);
    }
  }

  void add_row(const std::vector<std::uint32_t>& cols) {
    const auto first = std::uint32_t(L_.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const std::uint32_t col = cols[i] + 1, node = std::uint32_t(L_.size());
      C_.push_back(col);
      row_.push_back(std::uint32_t(rows_));
      U_.push_back(U_[col]);
      D_.push_back(col);
      D_[U_[col]] = node;
      U_[col] = node;
      ++size_[col];
      L_.push_back(i == 0 ? node : node - 1);
      R_.push_back(first);
      if (i > 0) R_[node - 1] = node;
      L_[first] = node;
    }
    ++rows_;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

  /// Calls emit with the row ids of each exact cover; stops when emit
  /// returns false.
  template <class F>
  bool solve(F&& emit) {
    std::vector<std::uint32_t> sol;
    return search(sol, emit);
  }

 private:
  void cover(std::uint32_t c) {
    L_[R_[c]] = L_[c];
    R_[L_[c]] = R_[c];
    for (auto i = D_[c]; i != c; i = D_[i])
      for (auto j = R_[i]; j != i; j = R_[j]) {
        U_[D_[j]] = U_[j];
        D_[U_[j]] = D_[j];
        --size_[C_[j]];
      }
  }

  void uncover(std::uint32_t c) {
    for (auto i = U_[c]; i != c; i = U_[i])
      for (auto j = L_[i]; j != i; j = L_[j]) {
        ++size_[C_[j]];
        U_[D_[j]] = j;
        D_[U_[j]] = j;
      }
    L_[R_[c]] = c;
    R_[L_[c]] = c;
  }

  template <class F>
  bool search(std::vector<std::uint32_t>& sol, F& emit) {
    ++nodes_;
    if (R_[0] == 0) return emit(sol);
    std::uint32_t c = R_[0];
    for (auto j = R_[c]; j != 0; j = R_[j])
      if (size_[j] < size_[c]) c = j;
    if (size_[c] == 0) return true;
    cover(c);
    bool go = true;
    for (auto r = D_[c]; r != c && go; r = D_[r]) {
      sol.push_back(row_[r]);
      for (auto j = R_[r]; j != r; j = R_[j]) cover(C_[j]);
      go = search(sol, emit);
      for (auto j = L_[r]; j != r; j = L_[j]) uncover(C_[j]);
      sol.pop_back();
    }
    uncover(c);
    return go;
  }

  std::vector<std::uint32_t> L_, R_, U_, D_, C_, row_;
  std::vector<std::uint32_t> size_;
  std::size_t rows_ = 0;
  std::uint64_t nodes_ = 0;
};

/// Exact cover over pair classes: every class must be covered exactly once
/// by the orbits of the chosen base blocks. A block with trivial stabilizer
/// covers each class it touches n_B(P) |G| / |P| times, so such blocks only
/// touch full-size classes, once each; blocks with non-trivial stabilizers
/// ("short" blocks) are enumerated up front.
///
/// Stage one covers the short classes and the pure classes of orbit 0 (the
/// largest orbit). It branches on the uncovered class with the fewest
/// options and covers it by one of:
///   - a short block covering it;
///   - a new full block through its representative pair;
///   - one new point added to an open full block;
///   - two new points added to an open full block.
/// In a fixed solution the block covering a class and the point(s) added are
/// determined, so every frontier state arises once. Once stage one is done,
/// open blocks can only gain points outside orbit 0; all completions of the
/// open blocks, all canonical new blocks and the remaining short blocks
/// become rows of a dancing-links exact cover over the uncovered classes.
///
/// For cyclic groups the multipliers x -> ux act on every solution. Frontier
/// states whose orbit-0 structure is not minimal under them are dropped, and
/// the caller closes the result under the same maps.
class CoverSearch {
 public:
  struct ShortBlock {
    Block block;
    std::vector<std::uint32_t> classes;
    std::size_t full_classes = 0;  // how many of them are full-size
  };

  struct State {
    std::vector<std::uint8_t> covered;
    std::vector<Block> open;        // full blocks under construction (or complete)
    std::vector<std::size_t> shorts;
    std::size_t free_full = 0;      // uncovered full classes
  };

  CoverSearch(std::shared_ptr<const ActionScenario> scenario, std::size_t k, bool symmetry = true)
      : s_(std::move(scenario)), k_(k), pc_(pair_classes(*s_)) {
    v_ = s_->v();
    n_ = s_->group_order();
    const auto& space = s_->space();
    const std::size_t C = pc_.count();
    orbit_of_.resize(v_);
    for (std::size_t p = 0; p < v_; ++p) orbit_of_[p] = space.orbit_of(Point(p));
    full_.resize(C);
    stage1_.resize(C);
    for (std::size_t c = 0; c < C; ++c) {
      full_[c] = pc_.size[c] == n_;
      const auto [p, q] = pc_.representative[c];
      stage1_[c] = !full_[c] || (orbit_of_[p] == 0 && orbit_of_[q] == 0);
    }
    for (std::size_t c = 0; c < C; ++c)
      if (!full_[c]) order_.push_back(std::uint32_t(c));
    for (std::size_t c = 0; c < C; ++c)
      if (full_[c] && stage1_[c]) order_.push_back(std::uint32_t(c));
    // partners_[(y*C + c)] -> points x with class(x, y) = c.
    part_start_.assign(v_ * C + 1, 0);
    for (std::size_t y = 0; y < v_; ++y)
      for (std::size_t x = 0; x < v_; ++x)
        if (x != y) ++part_start_[y * C + pc_(Point(x), Point(y)) + 1];
    for (std::size_t i = 1; i < part_start_.size(); ++i) part_start_[i] += part_start_[i - 1];
    partners_.resize(part_start_.back());
    std::vector<std::size_t> fill(part_start_.begin(), part_start_.end() - 1);
    for (std::size_t y = 0; y < v_; ++y)
      for (std::size_t x = 0; x < v_; ++x)
        if (x != y) partners_[fill[y * C + pc_(Point(x), Point(y))]++] = Point(x);
    // Elements taking each point to the first point of its orbit.
    to_base_.resize(v_);
    regular_pt_.assign(v_, 0);
    for (std::size_t p = 0; p < v_; ++p) {
      const Point base = Point(space.orbits()[orbit_of_[p]].offset);
      std::size_t fixers = 0;
      for (std::size_t g = 0; g < n_; ++g) {
        if ((*s_)(Element(g), Point(p)) == base) to_base_[p].push_back(Element(g));
        fixers += (*s_)(Element(g), Point(p)) == Point(p);
      }
      regular_pt_[p] = fixers == 1;
    }
    norbits_ = space.orbits().size();
    ctype_.resize(C);
    for (std::size_t c = 0; c < C; ++c)
      ctype_[c] = type_of(orbit_of_[pc_.representative[c].first], orbit_of_[pc_.representative[c].second]);
    // Every way of splitting k points over the orbits.
    std::vector<std::size_t> comp(norbits_, 0);
    std::function<void(std::size_t, std::size_t)> split = [&](std::size_t o, std::size_t left) {
      if (o + 1 == norbits_) {
        if (left <= space.orbits()[o].size) {
          comp[o] = left;
          comps_.push_back(comp);
        }
        return;
      }
      for (std::size_t x = 0; x <= std::min(left, space.orbits()[o].size); ++x) {
        comp[o] = x;
        split(o + 1, left - x);
      }
    };
    split(0, k_);
    enumerate_short_blocks();
    if (symmetry) {
      build_multipliers();
      build_translations();
      build_swap();
    }
  }

  const PairClasses& classes() const noexcept { return pc_; }
  const std::vector<ShortBlock>& short_blocks() const noexcept { return shorts_; }
  std::size_t symmetry_count() const noexcept { return sym_.size() + 1; }
  void disable_symmetry() {
    sym_.clear();
    translations_.clear();
    swap_.clear();
  }

  /// Lexicographically smallest block in the orbit of b. The smallest image
  /// contains the first point of the first orbit b meets, so only elements
  /// moving a point of that orbit there need to be tried.
  Block orbit_rep(const Block& b) const {
    std::size_t first = orbit_of_[b[0]];
    for (Point p : b) first = std::min(first, orbit_of_[p]);
    Block best, img(b.size());
    for (Point x : b) {
      if (orbit_of_[x] != first) continue;
      for (Element g : to_base_[x]) {
        const Point* perm = s_->permutation(g);
        for (std::size_t i = 0; i < b.size(); ++i) img[i] = perm[b[i]];
        std::sort(img.begin(), img.end());
        if (best.empty() || img < best) best = img;
      }
    }
    return best;
  }

  /// Coverage of the orbit of b; empty when some class would be covered more
  /// than once.
  std::optional<std::vector<std::uint32_t>> coverage(const Block& b) const {
    const std::size_t orbit = n_ / s_->stabilizer(b).size();
    std::map<std::uint32_t, std::size_t> n;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) ++n[pc_(b[i], b[j])];
    std::vector<std::uint32_t> out;
    for (auto [c, cnt] : n) {
      if (cnt * orbit != pc_.size[c]) return std::nullopt;
      out.push_back(c);
    }
    return out;
  }

  State initial_state(const std::vector<Block>& forced) const {
    State st;
    st.covered.assign(pc_.count(), 0);
    for (std::size_t c = 0; c < pc_.count(); ++c) st.free_full += full_[c];
    for (const Block& raw : forced) {
      Block b = raw;
      std::sort(b.begin(), b.end());
      if (b.size() != k_) fail(ErrorCode::InvalidArgument, "forced block [" + join_points(b, ", ") + "] has wrong size");
      s_->check_block(b);
      auto cov = coverage(b);
      if (!cov)
        fail(ErrorCode::InvalidArgument, "forced block [" + join_points(b, ", ") + "] covers a pair class twice");
      for (auto c : *cov) {
        if (st.covered[c])
          fail(ErrorCode::InvalidArgument, "forced blocks cover pair class " + std::to_string(c) + " twice");
        st.covered[c] = 1;
        st.free_full -= full_[c];
      }
      if (s_->stabilizer(b).size() == 1) {
        st.open.push_back(b);
      } else {
        auto rep = orbit_rep(b);
        auto it = std::find_if(shorts_.begin(), shorts_.end(), [&](const ShortBlock& sb) { return sb.block == rep; });
        if (it == shorts_.end()) fail(ErrorCode::InvalidArgument, "forced short block not recognized");
        st.shorts.push_back(std::size_t(it - shorts_.begin()));
      }
    }
    return st;
  }

  bool at_frontier(const State& st) const {
    for (auto c : order_)
      if (!st.covered[c]) return false;
    return true;
  }

  /// First-stage children; empty at the frontier or when the state is dead.
  void expand_children(State& st, std::vector<State>& out) {
    out.clear();
    ++nodes_;
    if (at_frontier(st)) return;
    const auto P = choose_class(st);
    if (!P) return;
    visit_options<false>(st, *P, [&](State* child) {
      out.push_back(*child);
      return true;
    });
  }

  /// Normalized base-block list of a complete state.
  std::vector<Block> normalized(const State& st) const {
    std::vector<Block> base;
    for (auto i : st.shorts) base.push_back(shorts_[i].block);
    for (const auto& b : st.open) base.push_back(orbit_rep(b));
    std::sort(base.begin(), base.end());
    return base;
  }

  /// Images of a normalized system under the group generated by the
  /// multipliers and orbit translations (itself included).
  std::vector<std::vector<Block>> symmetric_images(const std::vector<Block>& base) const {
    std::vector<const std::vector<Point>*> gens;
    for (const auto& sigma : sym_) gens.push_back(&sigma);
    for (const auto& [o, perms] : translations_)
      if (!perms.empty()) gens.push_back(&perms.front());
    if (!swap_.empty()) gens.push_back(&swap_);
    std::set<std::vector<Block>> seen{base};
    std::vector<std::vector<Block>> out{base};
    for (std::size_t i = 0; i < out.size(); ++i)
      for (const auto* sigma : gens) {
        std::vector<Block> img;
        for (const auto& b : out[i]) {
          Block t(b.size());
          for (std::size_t j = 0; j < b.size(); ++j) t[j] = (*sigma)[b[j]];
          img.push_back(orbit_rep(t));
        }
        std::sort(img.begin(), img.end());
        if (seen.insert(img).second) out.push_back(std::move(img));
      }
    return out;
  }

  /// Enumerates below st. The callback receives normalized systems and
  /// returns false to stop.
  bool run(State& st, const std::function<bool(std::vector<Block>)>& emit) {
    ++nodes_;
    if (at_frontier(st)) return complete(st, emit);
    const auto P = choose_class(st);
    if (!P) return true;
    return visit_options<false>(st, *P, [&](State* child) { return run(*child, emit); });
  }

  std::uint64_t nodes() const noexcept { return nodes_ + cover_nodes_; }
  std::uint64_t frontier() const noexcept { return frontier_; }
  std::uint64_t frontier_skipped() const noexcept { return frontier_skipped_; }

 private:
  std::size_t pairs(std::size_t m) const { return m * (m - 1) / 2; }

  /// Multipliers x -> ux (u a unit, u != 1) on every orbit of a scenario
  /// whose group is Z_n with the standard numbering and whose orbits are all
  /// regular or fixed.
  void build_multipliers() {
    if (!is_standard_cyclic(s_->group())) return;
    if (s_->kind() == ScenarioKind::Frobenius57_19_19_1) return;
    const auto& orbits = s_->space().orbits();
    for (std::size_t u = 2; u < n_; ++u) {
      if (std::gcd(u, n_) != 1) continue;
      std::vector<Point> sigma(v_);
      for (const auto& o : orbits)
        for (std::size_t x = 0; x < o.size; ++x)
          sigma[o.offset + x] = Point(o.offset + (o.size == 1 ? 0 : (u * x) % o.size));
      sym_.push_back(std::move(sigma));
    }
  }

  /// Right translations x -> xc of each orbit on which the group acts
  /// regularly, leaving the other orbits alone. They commute with the action,
  /// so they map base-block systems to base-block systems.
  void build_translations() {
    if (s_->space().orbits().size() < 2) return;
    const auto& G = s_->group();
    const auto& orbits = s_->space().orbits();
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      const auto& orb = orbits[o];
      if (orb.size != n_ || (orb.kind != OrbitKind::Regular && orb.kind != OrbitKind::Cyclic)) continue;
      if (orb.kind == OrbitKind::Cyclic && !is_standard_cyclic(G)) continue;
      std::vector<std::vector<Point>> perms;
      // Generators suffice for the closure; the stage-two filter wants them all.
      for (std::size_t c = 1; c < n_; ++c) {
        std::vector<Point> sigma(v_);
        for (std::size_t p = 0; p < v_; ++p) sigma[p] = Point(p);
        for (std::size_t x = 0; x < n_; ++x) {
          const std::size_t y = orb.kind == OrbitKind::Cyclic ? (x + c) % n_ : std::size_t(G.op(Element(x), Element(c)));
          sigma[orb.offset + x] = Point(orb.offset + y);
        }
        perms.push_back(std::move(sigma));
      }
      translations_.emplace_back(o, std::move(perms));
    }
  }

  /// Exchanging the two orbits of a two-orbit cyclic scenario commutes with
  /// the action.
  void build_swap() {
    if (s_->kind() != ScenarioKind::CyclicTwoOrbit && s_->kind() != ScenarioKind::CyclicTwoOrbitPlusFixed) return;
    swap_.resize(v_);
    for (std::size_t p = 0; p < v_; ++p) swap_[p] = Point(p);
    for (std::size_t x = 0; x < n_; ++x) {
      swap_[x] = Point(n_ + x);
      swap_[n_ + x] = Point(x);
    }
  }

  /// A translation family fixing the state: its orbit holds no point of an
  /// open block and every chosen short block is mapped into its own orbit.
  const std::vector<std::vector<Point>>* fixing_translations(const State& st) const {
    for (const auto& [o, perms] : translations_) {
      bool ok = true;
      for (const auto& b : st.open)
        for (Point p : b) ok = ok && orbit_of_[p] != o;
      for (std::size_t i = 0; ok && i < st.shorts.size(); ++i) {
        const Block& blk = shorts_[st.shorts[i]].block;
        for (const auto& sigma : perms) {
          Block t = blk;
          for (auto& p : t) p = sigma[p];
          if (orbit_rep(t) != blk) {
            ok = false;
            break;
          }
        }
      }
      if (ok) return &perms;
    }
    return nullptr;
  }

  /// The first uncovered first-stage class; nothing when it can no longer be
  /// covered. A fixed order beats fewest-options here: counting options at
  /// every node costs more than the branching it saves.
  std::optional<std::uint32_t> choose_class(State& st) {
    for (auto c : order_) {
      if (st.covered[c]) continue;
      bool any = false;
      visit_options<true>(st, c, [&](State*) {
        any = true;
        return false;
      });
      if (!any) return std::nullopt;
      return c;
    }
    return std::nullopt;
  }

  /// Classes still owed to the open full blocks.
  std::size_t need(const State& st) const {
    std::size_t n = 0;
    for (const auto& b : st.open) n += pairs(k_) - pairs(b.size());
    return n;
  }

  /// Marks the classes of pairs {x, b} for b in blk; fails if one is short,
  /// covered, or repeated. The caller releases what was claimed.
  bool claim_point(std::vector<std::uint8_t>& covered, const Block& blk, Point x,
                   std::vector<std::uint32_t>& claimed) const {
    for (Point b : blk) {
      if (b == x) return false;
      const auto c = pc_(x, b);
      if (!full_[c] || covered[c]) return false;
      covered[c] = 1;
      claimed.push_back(c);
    }
    return true;
  }

  static void release(std::vector<std::uint8_t>& covered, std::vector<std::uint32_t>& claimed) {
    for (auto c : claimed) covered[c] = 0;
    claimed.clear();
  }

  /// A completed full block needs a trivial stabilizer; otherwise its orbit
  /// covers differently than claimed (it would be a short block). Blocks
  /// with a point of trivial stabilizer pass at once.
  bool full_block_ok(const Block& b) const {
    if (b.size() != k_) return true;
    for (Point p : b)
      if (regular_pt_[p]) return true;
    Block sorted = b;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t g = 1; g < n_; ++g)
      if (s_->apply_block(Element(g), sorted) == sorted) return false;
    return true;
  }

  /// Calls visit(child) for every way of covering P; with CountOnly the
  /// child is not built and visit receives nullptr. Stops when visit
  /// returns false, and then returns false.
  template <bool CountOnly, class F>
  bool visit_options(State& st, std::uint32_t P, F&& visit) {
    std::vector<std::uint32_t> claimed;
    const std::size_t owed = need(st);
    for (auto idx : short_by_class_[P]) {
      const auto& sb = shorts_[idx];
      bool ok = owed + sb.full_classes <= st.free_full;
      for (auto c : sb.classes)
        if (st.covered[c]) ok = false;
      if (!ok) continue;
      if constexpr (CountOnly) {
        if (!visit(nullptr)) return false;
      } else {
        State child = st;
        for (auto c : sb.classes) child.covered[c] = 1;
        child.free_full -= sb.full_classes;
        child.shorts.push_back(idx);
        if (!visit(&child)) return false;
      }
    }
    if (!full_[P]) return true;
    const auto [p, q] = pc_.representative[P];
    if (owed + pairs(k_) <= st.free_full) {
      if constexpr (CountOnly) {
        if (!visit(nullptr)) return false;
      } else {
        State child = st;
        child.covered[P] = 1;
        child.free_full -= 1;
        child.open.push_back(Block{p, q});
        if (!visit(&child)) return false;
      }
    }
    // claimed holds the classes of the new pairs, currently marked in st.
    auto grow = [&](std::size_t j, std::initializer_list<Point> pts) {
      Block grown = st.open[j];
      grown.insert(grown.end(), pts);
      if (!full_block_ok(grown)) return true;
      if constexpr (CountOnly) {
        return visit(nullptr);
      } else {
        State child = st;
        child.free_full -= claimed.size();
        child.open[j] = std::move(grown);
        return visit(&child);
      }
    };
    const std::size_t C = pc_.count();
    for (std::size_t j = 0; j < st.open.size(); ++j) {
      const Block& blk = st.open[j];
      if (blk.size() >= k_) continue;
      // One new point x with {x, y} in P for some y already in the block.
      for (Point y : blk) {
        for (std::size_t i = part_start_[y * C + P]; i < part_start_[y * C + P + 1]; ++i) {
          const Point x = partners_[i];
          const bool ok = claim_point(st.covered, blk, x, claimed);
          const bool go = !ok || grow(j, {x});
          release(st.covered, claimed);
          if (!go) return false;
        }
      }
      // Two new points forming a pair of P.
      if (blk.size() + 2 > k_) continue;
      for (std::size_t g = 0; g < n_; ++g) {
        const Point x = (*s_)(Element(g), p), y = (*s_)(Element(g), q);
        bool ok = claim_point(st.covered, blk, x, claimed) && claim_point(st.covered, blk, y, claimed);
        if (ok) {
          st.covered[P] = 1;
          claimed.push_back(P);
        }
        const bool go = !ok || grow(j, {x, y});
        release(st.covered, claimed);
        if (!go) return false;
      }
    }
    return true;
  }

  /// Frontier states are compared by their sorted short blocks and the
  /// orbit representatives of their open blocks.
  using FrontierKey = std::pair<std::vector<std::size_t>, std::vector<Block>>;

  FrontierKey frontier_key(const State& st, const std::vector<Point>* sigma) const {
    FrontierKey key;
    for (auto i : st.shorts) key.first.push_back(sigma ? short_image_[sigma - sym_.data()][i] : i);
    for (const auto& b : st.open) {
      if (!sigma) {
        key.second.push_back(orbit_rep(b));
        continue;
      }
      Block t(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) t[i] = (*sigma)[b[i]];
      key.second.push_back(orbit_rep(t));
    }
    std::sort(key.first.begin(), key.first.end());
    std::sort(key.second.begin(), key.second.end());
    return key;
  }

  bool canonical_frontier(const State& st) const {
    if (sym_.empty()) return true;
    const auto own = frontier_key(st, nullptr);
    for (const auto& sigma : sym_)
      if (frontier_key(st, &sigma) < own) return false;
    return true;
  }

  struct Row {
    int block;  // open block index, -1 for a new block, -2 for a short block
    Block points;
  };

  std::size_t type_of(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return a * norbits_ + b;
  }

  /// Counting test: for every pair of orbits, the uncovered full classes
  /// between them must be exactly the pairs the open blocks still gain plus
  /// those of the remaining new blocks, for some choice of how many points
  /// each block takes from each orbit. Not applied while a short block could
  /// still be added.
  bool compositions_feasible(const State& st) const {
    for (const auto& sb : shorts_) {
      bool fits = true;
      for (auto c : sb.classes) fits = fits && !st.covered[c];
      if (fits) return true;
    }
    const std::size_t owed = need(st), per = pairs(k_);
    if (st.free_full < owed || (st.free_full - owed) % per != 0) return false;
    const std::size_t fresh = (st.free_full - owed) / per;
    std::vector<long> left(norbits_ * norbits_, 0);
    for (std::size_t c = 0; c < pc_.count(); ++c)
      if (full_[c] && !st.covered[c]) ++left[ctype_[c]];
    std::vector<std::vector<std::size_t>> cur;
    for (const auto& b : st.open) {
      std::vector<std::size_t> comp(norbits_, 0);
      for (Point p : b) ++comp[orbit_of_[p]];
      cur.push_back(std::move(comp));
    }
    auto delta = [&](const std::vector<std::size_t>& from, const std::vector<std::size_t>& to, long sign) {
      for (std::size_t a = 0; a < norbits_; ++a)
        for (std::size_t b = a; b < norbits_; ++b) {
          const long before = a == b ? long(pairs(from[a])) : long(from[a] * from[b]);
          const long after = a == b ? long(pairs(to[a])) : long(to[a] * to[b]);
          left[type_of(a, b)] -= sign * (after - before);
        }
    };
    auto nonneg = [&] {
      for (auto x : left)
        if (x < 0) return false;
      return true;
    };
    const std::vector<std::size_t> zero(norbits_, 0);
    std::set<std::pair<std::size_t, std::vector<long>>> dead;
    // Blocks 0..open-1 are the open ones, then `fresh` new blocks whose
    // compositions are taken in non-decreasing order.
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t j, std::size_t min_comp) {
      if (j == cur.size() + fresh) {
        for (auto x : left)
          if (x != 0) return false;
        return true;
      }
      if (dead.count({j, left})) return false;
      const bool is_new = j >= cur.size();
      const auto& from = is_new ? zero : cur[j];
      for (std::size_t i = is_new ? min_comp : 0; i < comps_.size(); ++i) {
        const auto& to = comps_[i];
        bool ok = true;
        for (std::size_t o = 0; o < norbits_ && ok; ++o) ok = to[o] >= from[o];
        if (!ok) continue;
        delta(from, to, 1);
        const bool hit = nonneg() && rec(j + 1, is_new ? i : 0);
        delta(from, to, -1);
        if (hit) return true;
      }
      dead.insert({j, left});
      return false;
    };
    return rec(0, 0);
  }

  /// Second stage: exact cover of the remaining classes.
  bool complete(State& st, const std::function<bool(std::vector<Block>)>& emit) {
    ++frontier_;
    if (!canonical_frontier(st)) {
      ++frontier_skipped_;
      return true;
    }
    if (!compositions_feasible(st)) return true;
    const std::size_t C = pc_.count();
    std::vector<std::uint32_t> col_of(C, PairClasses::kNone);
    std::uint32_t ncols = 0;
    for (std::size_t c = 0; c < C; ++c)
      if (!st.covered[c]) col_of[c] = ncols++;
    std::vector<std::uint32_t> block_col(st.open.size(), PairClasses::kNone);
    for (std::size_t j = 0; j < st.open.size(); ++j)
      if (st.open[j].size() < k_) block_col[j] = ncols++;
    if (ncols == 0) return emit(normalized(st));

    ExactCover ec(ncols);
    std::vector<Row> rows;
    std::vector<std::uint32_t> cols;
    auto& covered = st.covered;
    auto add = [&](int block, const Block& pts, const std::vector<std::uint32_t>& classes) {
      cols.clear();
      for (auto c : classes) cols.push_back(col_of[c]);
      if (block >= 0) cols.push_back(block_col[std::size_t(block)]);
      ec.add_row(cols);
      rows.push_back({block, pts});
    };

    // Completions of open blocks. When a family of translations fixes the
    // state it permutes the solutions, so the first incomplete block only
    // needs completions that are smallest among their translates.
    std::vector<std::uint32_t> claimed;
    const auto* shifts = fixing_translations(st);
    std::optional<std::size_t> pinned;
    for (std::size_t j = 0; j < st.open.size() && shifts && !pinned; ++j)
      if (block_col[j] != PairClasses::kNone) pinned = j;
    auto least_translate = [&](Block add) {
      std::sort(add.begin(), add.end());
      Block img(add.size());
      for (const auto& sigma : *shifts) {
        for (std::size_t i = 0; i < add.size(); ++i) img[i] = sigma[add[i]];
        std::sort(img.begin(), img.end());
        if (img < add) return false;
      }
      return true;
    };
    for (std::size_t j = 0; j < st.open.size(); ++j) {
      if (block_col[j] == PairClasses::kNone) continue;
      Block blk = st.open[j];
      const std::size_t base = blk.size();
      std::vector<Point> cand;
      for (std::size_t x = 0; x < v_; ++x) {
        if (claim_point(covered, blk, Point(x), claimed)) cand.push_back(Point(x));
        release(covered, claimed);
      }
      std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (blk.size() == k_) {
          Block extra(blk.begin() + std::ptrdiff_t(base), blk.end());
          if (pinned == j && !least_translate(extra)) return;
          if (full_block_ok(blk)) add(int(j), std::move(extra), claimed);
          return;
        }
        for (std::size_t i = from; i + (k_ - blk.size()) <= cand.size(); ++i) {
          const std::size_t mark = claimed.size();
          std::vector<std::uint32_t> mine;
          const bool ok = claim_point(covered, blk, cand[i], mine);
          claimed.insert(claimed.end(), mine.begin(), mine.end());
          if (ok) {
            blk.push_back(cand[i]);
            extend(i + 1);
            blk.pop_back();
          }
          for (std::size_t t = mark; t < claimed.size(); ++t) covered[claimed[t]] = 0;
          claimed.resize(mark);
        }
      };
      extend(0);
      claimed.clear();
    }

    // New blocks, as canonical orbit representatives: the block contains the
    // first point of the first orbit it meets and is the smallest of its
    // images that do.
    if (need(st) + pairs(k_) <= st.free_full) {
      const auto& orbits = s_->space().orbits();
      for (std::size_t o = 0; o < orbits.size(); ++o) {
        if (orbits[o].kind == OrbitKind::Fixed) continue;
        const Point first = Point(orbits[o].offset);
        Block blk{first};
        std::vector<Point> cand;
        for (std::size_t x = first + 1; x < v_; ++x) {
          if (claim_point(covered, blk, Point(x), claimed)) cand.push_back(Point(x));
          release(covered, claimed);
        }
        std::function<void(std::size_t)> extend = [&](std::size_t from) {
          if (blk.size() == k_) {
            if (!full_block_ok(blk) || orbit_rep(blk) != blk) return;
            add(-1, blk, claimed);
            return;
          }
          for (std::size_t i = from; i + (k_ - blk.size()) <= cand.size(); ++i) {
            const std::size_t mark = claimed.size();
            std::vector<std::uint32_t> mine;
            const bool ok = claim_point(covered, blk, cand[i], mine);
            claimed.insert(claimed.end(), mine.begin(), mine.end());
            if (ok) {
              blk.push_back(cand[i]);
              extend(i + 1);
              blk.pop_back();
            }
            for (std::size_t t = mark; t < claimed.size(); ++t) covered[claimed[t]] = 0;
            claimed.resize(mark);
          }
        };
        extend(0);
        claimed.clear();
      }
    }

    // Short blocks that still fit.
    for (std::size_t i = 0; i < shorts_.size(); ++i) {
      bool ok = true;
      for (auto c : shorts_[i].classes) ok = ok && !covered[c];
      if (ok) add(-2, Block{Point(i)}, shorts_[i].classes);
    }

    const bool go = ec.solve([&](const std::vector<std::uint32_t>& chosen) {
      State done = st;
      for (auto r : chosen) {
        const Row& row = rows[r];
        if (row.block >= 0)
          done.open[std::size_t(row.block)].insert(done.open[std::size_t(row.block)].end(), row.points.begin(),
                                                  row.points.end());
        else if (row.block == -1)
          done.open.push_back(row.points);
        else
          done.shorts.push_back(row.points[0]);
      }
      return emit(normalized(done));
    });
    cover_nodes_ += ec.nodes();
    return go;
  }

  /// Blocks with non-trivial stabilizer: unions of point orbits of a
  /// subgroup of prime order, kept when their orbit covers every touched
  /// class exactly once.
  void enumerate_short_blocks() {
    std::set<Block> seen;
    std::set<std::vector<Element>> subgroups;
    const auto& G = s_->group();
    for (std::size_t g = 1; g < n_; ++g) {
      const std::size_t ord = G.element_order(Element(g));
      bool prime = ord > 1;
      for (std::size_t d = 2; d * d <= ord; ++d)
        if (ord % d == 0) prime = false;
      if (!prime) continue;
      std::vector<Element> sub{0};
      for (Element x = Element(g); x != 0; x = G.op(x, Element(g))) sub.push_back(x);
      std::sort(sub.begin(), sub.end());
      if (!subgroups.insert(sub).second) continue;
      // Orbits of <g> on points.
      std::vector<char> done(v_, 0);
      std::vector<Block> orbits;
      for (std::size_t p = 0; p < v_; ++p) {
        if (done[p]) continue;
        Block o;
        for (auto h : sub) {
          Point img = (*s_)(h, Point(p));
          if (!done[img]) {
            done[img] = 1;
            o.push_back(img);
          }
        }
        if (o.size() <= k_) orbits.push_back(o);
      }
      Block cur;
      std::function<void(std::size_t)> choose = [&](std::size_t from) {
        if (cur.size() == k_) {
          Block b = cur;
          std::sort(b.begin(), b.end());
          if (s_->stabilizer(b).size() == 1) return;
          auto rep = orbit_rep(b);
          if (!seen.insert(rep).second) return;
          if (auto cov = coverage(rep)) {
            std::size_t full = 0;
            for (auto c : *cov) full += full_[c];
            shorts_.push_back({rep, *cov, full});
          }
          return;
        }
        for (std::size_t i = from; i < orbits.size(); ++i) {
          if (cur.size() + orbits[i].size() > k_) continue;
          cur.insert(cur.end(), orbits[i].begin(), orbits[i].end());
          choose(i + 1);
          cur.resize(cur.size() - orbits[i].size());
        }
      };
      choose(0);
    }
    std::sort(shorts_.begin(), shorts_.end(), [](const ShortBlock& a, const ShortBlock& b) { return a.block < b.block; });
    short_by_class_.assign(pc_.count(), {});
    for (std::size_t i = 0; i < shorts_.size(); ++i)
      for (auto c : shorts_[i].classes) short_by_class_[c].push_back(i);
  }

  /// Maps every short block through every symmetry.
  void map_shorts() {
    short_image_.assign(sym_.size(), std::vector<std::size_t>(shorts_.size()));
    for (std::size_t s = 0; s < sym_.size(); ++s)
      for (std::size_t i = 0; i < shorts_.size(); ++i) {
        Block t = shorts_[i].block;
        for (auto& p : t) p = sym_[s][p];
        const Block rep = orbit_rep(t);
        auto it = std::lower_bound(shorts_.begin(), shorts_.end(), rep,
                                   [](const ShortBlock& a, const Block& b) { return a.block < b; });
        if (it == shorts_.end() || it->block != rep) fail(ErrorCode::InvalidScenario, "symmetry does not preserve short blocks");
        short_image_[s][i] = std::size_t(it - shorts_.begin());
      }
  }

 public:
  /// Finishes construction once symmetries are known.
  void prepare() { map_shorts(); }

 private:
  std::shared_ptr<const ActionScenario> s_;
  std::size_t k_, v_ = 0, n_ = 0;
  PairClasses pc_;
  std::vector<std::size_t> orbit_of_;
  std::size_t norbits_ = 0;
  std::vector<std::size_t> ctype_;                // orbit-pair type of each class
  std::vector<std::vector<std::size_t>> comps_;   // splits of k over the orbits
  std::vector<char> full_, stage1_, regular_pt_;
  std::vector<std::uint32_t> order_;
  std::vector<std::size_t> part_start_;
  std::vector<Point> partners_;
  std::vector<std::vector<Element>> to_base_;
  std::vector<ShortBlock> shorts_;
  std::vector<std::vector<std::size_t>> short_by_class_;
  std::vector<std::vector<Point>> sym_;
  // Right translations of single full-size orbits: orbit index and the
  // permutations for every non-identity element.
  std::vector<std::pair<std::size_t, std::vector<std::vector<Point>>>> translations_;
  std::vector<Point> swap_;
  std::vector<std::vector<std::size_t>> short_image_;
  std::uint64_t nodes_ = 0, cover_nodes_ = 0, frontier_ = 0, frontier_skipped_ = 0;
};

/// Collects the first-stage states at branching depth `depth` (nodes with a
/// single child do not count as a level), in depth-first order. States that
/// reach the frontier or die earlier are included as they are.
inline std::vector<CoverSearch::State> branch_prefixes(CoverSearch& search, const CoverSearch::State& root,
                                                       std::size_t depth) {
  std::vector<CoverSearch::State> out;
  std::function<void(const CoverSearch::State&, std::size_t)> walk = [&](const CoverSearch::State& st,
                                                                          std::size_t level) {
    if (level == depth) {
      out.push_back(st);
      return;
    }
    auto copy = st;
    std::vector<CoverSearch::State> kids;
    search.expand_children(copy, kids);
    if (kids.empty()) {
      out.push_back(st);
      return;
    }
    const std::size_t next = kids.size() > 1 ? level + 1 : level;
    for (const auto& c : kids) walk(c, next);
  };
  walk(root, 0);
  return out;
}

inline std::string prefix_key(const CoverSearch::State& st, const CoverSearch& search) {
  std::vector<Block> blocks;
  for (auto i : st.shorts) blocks.push_back(search.short_blocks()[i].block);
  for (const auto& b : st.open) blocks.push_back(b);
  return blocks_key(blocks);
}

/// Two-orbit cyclic scenarios with k >= 4: short blocks are chosen first,
/// then packings of the pure differences of each orbit are paired and the
/// mixed differences matched by translation (see detail/two_orbit.hpp).
class TwoOrbitSearch {
 public:
  struct Plan {
    std::vector<std::size_t> shorts;  // indices into the short-block list
    std::vector<std::size_t> comp;    // orbit-0 part sizes, non-increasing
    ResidueMask mixed = 0;            // mixed differences left to tile
    bool pin = false;                 // the first mixed block may sit at offset 0
    std::vector<Shape> universe;      // orbit-1 shapes; 0 is empty, 1 is {0}
    std::vector<std::uint32_t> b_ids; // comp.size() ids per orbit-1 packing
    std::size_t packings = 0;
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // equal-size ranges of comp
  };
  struct Branch {
    std::size_t plan;
    Packing a;  // orbit-0 shapes of size >= 2
  };

  static bool applicable(const ActionScenario& s, std::size_t k, const std::vector<Block>& forced) {
    const auto kind = s.kind();
    return (kind == ScenarioKind::CyclicTwoOrbit || kind == ScenarioKind::CyclicTwoOrbitPlusFixed) && k >= 4 &&
           forced.empty() && s.group_order() <= 64 && is_standard_cyclic(s.group());
  }

  TwoOrbitSearch(std::shared_ptr<const ActionScenario> s, std::size_t k, const CoverSearch& proto, bool symmetry)
      : s_(std::move(s)), k_(k), n_(s_->group_order()), z_(n_), proto_(proto), symmetry_(symmetry) {
    const PairClasses pc = pair_classes(*s_);
    const auto& shorts = proto_.short_blocks();
    // Classes only short blocks can cover: short classes, and (k >= 4) every
    // class through the fixed point.
    std::vector<bool> required(pc.count(), false);
    for (std::size_t c = 0; c < pc.count(); ++c) {
      const auto [p, q] = pc.representative[c];
      required[c] = pc.size[c] < n_ || p >= 2 * n_ || q >= 2 * n_;
    }
    if (symmetry_)
      for (std::size_t u = 2; u < n_; ++u)
        if (std::gcd(u, n_) == 1) units_.push_back(u);

    std::vector<std::vector<std::size_t>> choices;
    std::vector<std::uint8_t> used(pc.count(), 0);
    std::vector<std::size_t> chosen;
    auto fits = [&](std::size_t i) {
      for (auto c : shorts[i].classes)
        if (used[c]) return false;
      return true;
    };
    auto mark = [&](std::size_t i, std::uint8_t val) {
      for (auto c : shorts[i].classes) used[c] = val;
    };
    // Optional shorts touch only ordinary classes; any disjoint subset goes.
    std::function<void(std::size_t)> optional = [&](std::size_t from) {
      choices.push_back(chosen);
      for (std::size_t i = from; i < shorts.size(); ++i) {
        bool plain = fits(i);
        for (auto c : shorts[i].classes) plain = plain && !required[c];
        if (!plain) continue;
        chosen.push_back(i);
        mark(i, 1);
        optional(i + 1);
        mark(i, 0);
        chosen.pop_back();
      }
    };
    std::function<void()> cover = [&] {
      std::size_t r = pc.count();
      for (std::size_t c = 0; c < pc.count() && r == pc.count(); ++c)
        if (required[c] && !used[c]) r = c;
      if (r == pc.count()) {
        optional(0);
        return;
      }
      for (std::size_t i = 0; i < shorts.size(); ++i) {
        if (std::find(shorts[i].classes.begin(), shorts[i].classes.end(), std::uint32_t(r)) == shorts[i].classes.end() ||
            !fits(i))
          continue;
        chosen.push_back(i);
        mark(i, 1);
        cover();
        mark(i, 0);
        chosen.pop_back();
      }
    };
    cover();

    for (auto& choice : choices) {
      std::sort(choice.begin(), choice.end());
      std::vector<std::size_t> stab;
      bool canonical = true;
      for (auto u : units_) {
        auto img = image_of_choice(choice, [&](Point p) { return scale_point(p, u); });
        if (img < choice) canonical = false;
        if (img == choice) stab.push_back(u);
      }
      if (!canonical) {
        ++skipped_;
        continue;
      }
      const bool swap_fixed = symmetry_ && image_of_choice(choice, [&](Point p) { return swap_point(p); }) == choice;
      add_plans(pc, choice, stab, swap_fixed);
    }
  }

  const std::vector<Branch>& branches() const noexcept { return branches_; }
  const std::vector<Plan>& plans() const noexcept { return plans_; }
  std::uint64_t setup_nodes() const noexcept { return setup_nodes_; }
  std::uint64_t setup_skipped() const noexcept { return skipped_; }

  std::string key(std::size_t j) const {
    const auto& br = branches_[j];
    const auto& pl = plans_[br.plan];
    std::vector<Block> blocks;
    for (auto i : pl.shorts) blocks.push_back(proto_.short_blocks()[i].block);
    std::string out = "comp";
    for (auto a : pl.comp) out += " " + std::to_string(a);
    out += " | ";
    for (const auto& sh : br.a) blocks.push_back(Block(sh.begin(), sh.end()));
    return out + blocks_key(blocks);
  }

  /// Per-worker scratch and counters.
  class Runner {
   public:
    explicit Runner(const TwoOrbitSearch& o) : o_(o), tiler_(o.z_) {}

    bool run(std::size_t j, const std::function<bool(std::vector<Block>)>& emit) {
      const auto& br = o_.branches_[j];
      const auto& pl = o_.plans_[br.plan];
      const std::size_t m = pl.comp.size(), n = o_.n_, k = o_.k_, U = pl.universe.size();
      // Orbit-0 parts aligned with comp (largest first).
      std::vector<Shape> a(br.a.rbegin(), br.a.rend());
      while (a.size() < m) a.push_back(pl.comp[a.size()] == 1 ? Shape{0} : Shape{});
      std::vector<std::size_t> mixed;
      for (std::size_t i = 0; i < m; ++i)
        if (pl.comp[i] >= 1 && pl.comp[i] < k) mixed.push_back(i);

      // Mixed-difference sets B - A of every block with every orbit-1 shape
      // of the right size, and their rotations.
      sets_.assign(m * U, 0);
      rot_.resize(m * U * n);
      for (auto i : mixed) {
        const std::size_t b = k - pl.comp[i];
        for (std::size_t s = 0; s < U; ++s) {
          if (pl.universe[s].size() != b) continue;
          const ResidueMask bm = o_.z_.mask(pl.universe[s]);
          ResidueMask e = 0;
          for (auto x : a[i]) e |= o_.z_.rotate(bm, n - x);
          if (std::size_t(std::popcount(e)) != a[i].size() * b) continue;
          sets_[i * U + s] = e;
          for (std::size_t t = 0; t < n; ++t) rot_[(i * U + s) * n + t] = o_.z_.rotate(e, t);
        }
      }
      std::vector<bool> is_mixed(m, false);
      for (auto i : mixed) is_mixed[i] = true;

      std::vector<std::uint32_t> ids(m);
      std::vector<ResidueMask> tile_sets(mixed.size());
      std::vector<const ResidueMask*> tile_rot(mixed.size());
      bool go = true;
      std::function<void(std::size_t)> assign = [&](std::size_t g) {
        if (!go) return;
        if (g == pl.groups.size()) {
          ++frontier_;
          for (std::size_t q = 0; q < mixed.size(); ++q) {
            tile_sets[q] = sets_[mixed[q] * U + ids[mixed[q]]];
            tile_rot[q] = &rot_[(mixed[q] * U + ids[mixed[q]]) * n];
          }
          go = tiler_.run(tile_sets, tile_rot, pl.mixed, pl.pin, [&](const std::vector<std::size_t>& offset) {
            std::vector<std::size_t> t(m, 0);
            for (std::size_t q = 0; q < mixed.size(); ++q) t[mixed[q]] = offset[q];
            return emit(o_.assemble(pl, a, ids, t));
          });
          return;
        }
        const auto [lo, hi] = pl.groups[g];
        auto first = ids.begin() + std::ptrdiff_t(lo), last = ids.begin() + std::ptrdiff_t(hi);
        std::sort(first, last);
        // Identical orbit-0 parts (sizes 0 and 1) make every order equivalent.
        const bool permute = pl.comp[lo] >= 2;
        do {
          bool ok = true;
          for (std::size_t i = lo; i < hi && ok; ++i) ok = !is_mixed[i] || sets_[i * U + ids[i]] != 0;
          if (ok) assign(g + 1);
        } while (go && permute && std::next_permutation(first, last));
      };
      for (std::size_t p = 0; p < pl.packings && go; ++p) {
        std::copy(pl.b_ids.begin() + std::ptrdiff_t(p * m), pl.b_ids.begin() + std::ptrdiff_t((p + 1) * m), ids.begin());
        assign(0);
      }
      return go;
    }

    std::uint64_t nodes() const noexcept { return tiler_.nodes(); }
    std::uint64_t frontier() const noexcept { return frontier_; }

   private:
    const TwoOrbitSearch& o_;
    MixedTiler tiler_;
    std::vector<ResidueMask> sets_, rot_;
    std::uint64_t frontier_ = 0;
  };

 private:
  Point scale_point(Point p, std::size_t u) const {
    if (p >= 2 * n_) return p;
    const std::size_t off = p >= n_ ? n_ : 0;
    return Point(off + (std::size_t(p) - off) * u % n_);
  }
  Point swap_point(Point p) const {
    if (p >= 2 * n_) return p;
    return Point(p >= n_ ? p - n_ : p + n_);
  }

  template <class Map>
  std::vector<std::size_t> image_of_choice(const std::vector<std::size_t>& choice, Map f) const {
    const auto& shorts = proto_.short_blocks();
    std::vector<std::size_t> out;
    for (auto i : choice) {
      Block b = shorts[i].block;
      for (auto& p : b) p = f(p);
      const Block rep = proto_.orbit_rep(b);
      auto it = std::find_if(shorts.begin(), shorts.end(), [&](const auto& sb) { return sb.block == rep; });
      if (it == shorts.end()) fail(ErrorCode::InvalidScenario, "symmetry does not preserve short blocks");
      out.push_back(std::size_t(it - shorts.begin()));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void add_plans(const PairClasses& pc, const std::vector<std::size_t>& choice, const std::vector<std::size_t>& stab,
                 bool swap_fixed) {
    std::vector<std::uint8_t> covered(pc.count(), 0);
    bool pure_shorts = true;
    for (auto i : choice) {
      const auto& sb = proto_.short_blocks()[i];
      for (auto c : sb.classes) covered[c] = 1;
      bool o0 = false, o1 = false;
      for (Point p : sb.block) {
        o0 = o0 || p < n_;
        o1 = o1 || (p >= n_ && p < 2 * n_);
      }
      pure_shorts = pure_shorts && !(o0 && o1);
    }
    ResidueMask p0 = 0, p1 = 0, mixed = 0;
    for (std::size_t c = 0; c < pc.count(); ++c) {
      if (covered[c]) continue;
      auto [p, q] = pc.representative[c];
      if (pc.size[c] < n_ || q >= 2 * n_) return;  // a class no full block can cover
      if (q < n_)
        p0 |= ResidueMask(1) << z_.cls(q + n_ - p);
      else if (p >= n_)
        p1 |= ResidueMask(1) << z_.cls(q + n_ - p);
      else
        mixed |= ResidueMask(1) << ((q - n_ + n_ - p) % n_);
    }
    const std::size_t per = k_ * (k_ - 1) / 2;
    const std::size_t total = std::size_t(std::popcount(p0) + std::popcount(p1) + std::popcount(mixed));
    if (total % per) return;
    const std::size_t blocks = total / per;
    const auto want0 = std::size_t(std::popcount(p0)), want1 = std::size_t(std::popcount(p1)),
               wantm = std::size_t(std::popcount(mixed));

    // Compositions: non-increasing orbit-0 sizes matching the three counts.
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t, std::size_t, std::size_t)> rec =
        [&](std::size_t maxa, std::size_t s0, std::size_t s1, std::size_t sm) {
          if (cur.size() == blocks) {
            if (s0 == want0 && s1 == want1 && sm == wantm) comps.push_back(cur);
            return;
          }
          for (std::size_t a = maxa + 1; a-- > 0;) {
            const std::size_t b = k_ - a;
            const std::size_t n0 = s0 + a * (a - 1) / 2, n1 = s1 + b * (b - 1) / 2, nm = sm + a * b;
            if (n0 > want0 || n1 > want1 || nm > wantm) continue;
            cur.push_back(a);
            rec(a, n0, n1, nm);
            cur.pop_back();
          }
        };
    rec(k_, 0, 0, 0);

    for (const auto& comp : comps) {
      std::vector<std::size_t> dual;
      for (auto a : comp) dual.push_back(k_ - a);
      std::sort(dual.rbegin(), dual.rend());
      // The orbit swap maps this composition to its dual; keep one of them.
      if (swap_fixed && dual < comp) continue;
      Plan pl;
      pl.shorts = choice;
      pl.comp = comp;
      pl.mixed = mixed;
      pl.pin = symmetry_ && pure_shorts;
      for (std::size_t i = 0; i < comp.size();) {
        std::size_t j = i;
        while (j < comp.size() && comp[j] == comp[i]) ++j;
        pl.groups.emplace_back(i, j);
        i = j;
      }
      std::map<Shape, std::uint32_t> index;
      auto id = [&](const Shape& sh) {
        auto [it, fresh] = index.emplace(sh, std::uint32_t(pl.universe.size()));
        if (fresh) pl.universe.push_back(sh);
        return it->second;
      };
      id(Shape{});
      id(Shape{0});
      std::vector<std::size_t> sizes0, sizes1;
      std::size_t zeros1 = 0, ones1 = 0;
      for (auto a : comp) {
        if (a >= 2) sizes0.push_back(a);
        if (k_ - a >= 2) sizes1.push_back(k_ - a);
        zeros1 += a == k_;
        ones1 += a == k_ - 1;
      }
      setup_nodes_ += difference_packings(z_, p1, sizes1, [&](const Packing& b) {
        ++pl.packings;
        for (std::size_t i = 0; i < zeros1; ++i) pl.b_ids.push_back(0);
        for (std::size_t i = 0; i < ones1; ++i) pl.b_ids.push_back(1);
        for (const auto& sh : b) pl.b_ids.push_back(id(sh));
      });
      if (!pl.packings) continue;
      const std::size_t plan = plans_.size();
      plans_.push_back(std::move(pl));
      setup_nodes_ += difference_packings(z_, p0, sizes0, [&](const Packing& a) {
        for (auto u : stab) {
          Packing img;
          for (const auto& sh : a) img.push_back(z_.scaled(sh, u));
          std::sort(img.begin(), img.end(), shape_less);
          if (img < a) {
            ++skipped_;
            return;
          }
        }
        branches_.push_back({plan, a});
      });
    }
  }

  std::vector<Block> assemble(const Plan& pl, const std::vector<Shape>& a, const std::vector<std::uint32_t>& ids,
                              const std::vector<std::size_t>& t) const {
    std::vector<Block> base;
    for (auto i : pl.shorts) base.push_back(proto_.short_blocks()[i].block);
    for (std::size_t i = 0; i < pl.comp.size(); ++i) {
      Block b;
      for (auto x : a[i]) b.push_back(Point(x));
      for (auto y : pl.universe[ids[i]]) b.push_back(Point(n_ + (y + t[i]) % n_));
      base.push_back(proto_.orbit_rep(b));
    }
    std::sort(base.begin(), base.end());
    return base;
  }

  std::shared_ptr<const ActionScenario> s_;
  std::size_t k_, n_;
  CyclicResidues z_;
  const CoverSearch& proto_;
  bool symmetry_;
  std::vector<std::size_t> units_;
  std::vector<Plan> plans_;
  std::vector<Branch> branches_;
  std::uint64_t setup_nodes_ = 0, skipped_ = 0;
};

struct CheckpointData {
  /// Completed branch keys with the systems found below each.
  std::map<std::string, std::vector<std::vector<Block>>> completed;
};

/// Checkpoint file: each completed branch is written as its "system <key>"
/// lines followed by "branch <key>". Systems not followed by a branch line
/// belong to an interrupted branch and are dropped.
inline CheckpointData read_checkpoint(const std::string& path) {
  CheckpointData d;
  std::ifstream in(path);
  if (!in) return d;
  std::string line;
  std::vector<std::vector<Block>> pending;
  while (std::getline(in, line)) {
    if (line.rfind("branch ", 0) == 0) {
      auto& slot = d.completed[line.substr(7)];
      slot.insert(slot.end(), pending.begin(), pending.end());
      pending.clear();
    } else if (line.rfind("system ", 0) == 0) {
      pending.push_back(parse_blocks_key(line.substr(7)));
    } else if (!line.empty() && line[0] != '#') {
      fail(ErrorCode::Parse, "checkpoint: unrecognized line '" + line + "'");
    }
  }
  return d;
}

}  // namespace detail

/// Exhaustive enumeration of base-block systems for the scenario and block
/// size, up to the choice of orbit representatives.
inline SearchResult enumerate_designs(const SearchConfig& cfg) {
  if (!cfg.scenario) fail(ErrorCode::InvalidArgument, "search needs a scenario");
  const std::size_t v = cfg.scenario->v();
  if (auto a = admissible(v, cfg.k); !a)
    fail(ErrorCode::Inadmissible, "S(2," + std::to_string(cfg.k) + "," + std::to_string(v) + ") is inadmissible: " + a.reason);
  if (cfg.branch_count == 0 || cfg.branch_index >= cfg.branch_count)
    fail(ErrorCode::InvalidArgument, "branch selector must satisfy 0 <= i < N");
  if (cfg.workers == 0) fail(ErrorCode::InvalidArgument, "worker count must be positive");

  // Forced blocks are not closed under the symmetries.
  const bool symmetry = cfg.use_symmetry && cfg.forced.empty();
  detail::CoverSearch proto(cfg.scenario, cfg.k, symmetry);
  proto.prepare();
  SearchResult result;
  result.stats.short_candidates = proto.short_blocks().size();
  result.stats.symmetries = proto.symmetry_count();

  // Two-orbit cyclic scenarios pair difference packings; everything else
  // runs the pair-class search from its depth-2 branch prefixes.
  std::optional<detail::TwoOrbitSearch> pairing;
  std::vector<detail::CoverSearch::State> prefixes;
  std::size_t branch_total = 0;
  std::uint64_t setup_nodes = proto.nodes(), setup_skipped = 0;
  const bool matching_fits = detail::TwoOrbitSearch::applicable(*cfg.scenario, cfg.k, cfg.forced);
  if (cfg.strategy == SearchStrategy::DifferenceMatching && !matching_fits)
    fail(ErrorCode::InvalidArgument,
         "difference matching needs Z_n (n <= 64) on two orbits, k >= 4 and no forced blocks");
  if (matching_fits && cfg.strategy != SearchStrategy::PairClasses) {
    pairing.emplace(cfg.scenario, cfg.k, proto, symmetry);
    branch_total = pairing->branches().size();
    setup_nodes += pairing->setup_nodes();
    setup_skipped = pairing->setup_skipped();
  } else {
    auto root = proto.initial_state(cfg.forced);
    prefixes = detail::branch_prefixes(proto, root, 2);
    branch_total = prefixes.size();
    setup_nodes = proto.nodes();
  }
  result.stats.branches_total = branch_total;

  std::vector<std::size_t> selected;
  for (std::size_t j = 0; j < branch_total; ++j)
    if (j % cfg.branch_count == cfg.branch_index) selected.push_back(j);
  if (cfg.sample && *cfg.sample < selected.size()) {
    std::vector<std::size_t> picked;
    for (std::size_t i = 0; i < *cfg.sample; ++i) picked.push_back(selected[i * selected.size() / *cfg.sample]);
    selected = std::move(picked);
    result.exhaustive = false;
  }
  result.stats.branches_selected = selected.size();

  detail::CheckpointData resumed;
  if (cfg.checkpoint) resumed = detail::read_checkpoint(*cfg.checkpoint);
  std::vector<std::string> keys(branch_total);
  std::vector<std::size_t> todo;
  std::vector<std::vector<Block>> found_resumed;
  for (auto j : selected) {
    keys[j] = pairing ? pairing->key(j) : detail::prefix_key(prefixes[j], proto);
    if (auto it = resumed.completed.find(keys[j]); it != resumed.completed.end()) {
      ++result.stats.branches_resumed;
      found_resumed.insert(found_resumed.end(), it->second.begin(), it->second.end());
    } else
      todo.push_back(j);
  }

  std::mutex mu;
  std::ofstream ckpt;
  if (cfg.checkpoint) {
    ckpt.open(*cfg.checkpoint, std::ios::app);
    if (!ckpt) fail(ErrorCode::Io, "cannot open checkpoint file " + *cfg.checkpoint);
  }
  std::vector<std::vector<std::vector<Block>>> found(branch_total);
  std::atomic<std::size_t> next{0}, done{result.stats.branches_resumed};
  std::atomic<std::size_t> total_found{0};
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> nodes{setup_nodes}, frontier{0}, skipped{setup_skipped};
  std::exception_ptr error;

  using Emit = std::function<bool(std::vector<Block>)>;
  // Runs the worker's share of branches through run_branch(j, emit).
  auto drain = [&](const std::function<bool(std::size_t, const Emit&)>& run_branch) {
    for (;;) {
      const std::size_t t = next++;
      if (t >= todo.size() || stop) break;
      const std::size_t j = todo[t];
      std::vector<std::vector<Block>> local;
      const bool finished = run_branch(j, [&](std::vector<Block> base) {
        // Every emission is checked against the definition.
        if (!verify_steiner(expand(BaseBlockSystem{cfg.scenario, base})).pass)
          fail(ErrorCode::InvalidDesign, "internal error: emitted system does not verify");
        local.push_back(std::move(base));
        const auto n = ++total_found;
        if (cfg.limit && n >= *cfg.limit) {
          stop = true;
          return false;
        }
        return !stop.load();
      });
      std::lock_guard<std::mutex> lock(mu);
      found[j] = std::move(local);
      if (finished && !stop && ckpt.is_open()) {
        for (const auto& sys : found[j]) ckpt << "system " << detail::blocks_key(sys) << '\n';
        ckpt << "branch " << keys[j] << '\n';
        ckpt.flush();
      }
      if (cfg.progress) cfg.progress(++done, selected.size());
    }
  };
  auto worker = [&] {
    try {
      if (pairing) {
        detail::TwoOrbitSearch::Runner runner(*pairing);
        drain([&](std::size_t j, const Emit& emit) { return runner.run(j, emit); });
        nodes += runner.nodes();
        frontier += runner.frontier();
      } else {
        detail::CoverSearch search(cfg.scenario, cfg.k, symmetry);
        search.prepare();
        drain([&](std::size_t j, const Emit& emit) {
          auto st = prefixes[j];
          return search.run(st, emit);
        });
        nodes += search.nodes();
        frontier += search.frontier();
        skipped += search.frontier_skipped();
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
      stop = true;
    }
  };
  const std::size_t nthreads = std::min(cfg.workers, std::max<std::size_t>(1, todo.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  if (stop) result.exhaustive = false;

  std::set<std::vector<Block>> all;
  // Each closure is a whole symmetry orbit, so a seed already present adds
  // nothing.
  auto close = [&](const std::vector<Block>& sys) {
    if (all.count(sys)) return;
    for (auto& img : proto.symmetric_images(sys)) all.insert(std::move(img));
  };
  for (const auto& sys : found_resumed) close(sys);
  for (const auto& f : found)
    for (const auto& sys : f) close(sys);
  result.systems.assign(all.begin(), all.end());
  if (cfg.limit && result.systems.size() > *cfg.limit) result.systems.resize(*cfg.limit);
  result.stats.nodes = nodes;
  result.stats.frontier = frontier;
  result.stats.frontier_skipped = skipped;
  return result;
}

/// Naive enumeration used as an independent check: every k-subset is a
/// candidate, orbits are combined in index order with raw pair counters, and
/// complete systems are checked by expansion. Refuses instances with more
/// than 10^5 candidate blocks.
inline std::vector<std::vector<Block>> brute_force_oracle(const ActionScenario& s, std::size_t k) {
  constexpr std::size_t kCap = 100000;
  const std::size_t v = s.v();
  if (auto a = admissible(v, k); !a)
    fail(ErrorCode::Inadmissible, "S(2," + std::to_string(k) + "," + std::to_string(v) + ") is inadmissible: " + a.reason);
  // C(v, k) with early exit.
  double count = 1;
  for (std::size_t i = 0; i < k; ++i) count = count * double(v - i) / double(i + 1);
  if (count > double(kCap))
    fail(ErrorCode::CapExceeded, "brute force cap exceeded: " + std::to_string(std::size_t(count)) + " candidate blocks");

  std::vector<std::vector<Block>> orbits;
  std::set<Block> seen;
  Block cur;
  std::function<void(std::size_t)> gen = [&](std::size_t from) {
    if (cur.size() == k) {
      auto orbit = s.block_orbit(cur);
      if (seen.insert(orbit.front()).second) orbits.push_back(std::move(orbit));
      return;
    }
    for (std::size_t p = from; p + (k - cur.size()) <= v; ++p) {
      cur.push_back(Point(p));
      gen(p + 1);
      cur.pop_back();
    }
  };
  gen(0);

  std::vector<std::uint8_t> count_pairs(v * v, 0);
  std::size_t covered = 0;
  const std::size_t target = v * (v - 1) / 2;
  std::vector<std::size_t> chosen;
  std::vector<std::vector<Block>> out;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (covered == target) {
      std::vector<Block> base;
      for (auto i : chosen) base.push_back(orbits[i].front());
      std::sort(base.begin(), base.end());
      auto scenario = std::make_shared<const ActionScenario>(s);
      if (verify_steiner(expand(BaseBlockSystem{scenario, base})).pass) out.push_back(base);
      return;
    }
    for (std::size_t i = from; i < orbits.size(); ++i) {
      bool ok = true;
      std::size_t added = 0;
      for (const auto& b : orbits[i]) {
        for (std::size_t x = 0; x < k && ok; ++x)
          for (std::size_t y = x + 1; y < k && ok; ++y) {
            auto& c = count_pairs[std::size_t(b[x]) * v + b[y]];
            if (c) ok = false;
          }
        if (!ok) break;
        for (std::size_t x = 0; x < k; ++x)
          for (std::size_t y = x + 1; y < k; ++y) {
            count_pairs[std::size_t(b[x]) * v + b[y]] = 1;
            ++added;
          }
      }
      if (ok) {
        covered += added;
        chosen.push_back(i);
        rec(i + 1);
        chosen.pop_back();
        covered -= added;
      }
      // Undo whatever was marked by this orbit.
      std::size_t left = added;
      for (const auto& b : orbits[i]) {
        if (!left) break;
        for (std::size_t x = 0; x < k; ++x)
          for (std::size_t y = x + 1; y < k; ++y) {
            count_pairs[std::size_t(b[x]) * v + b[y]] = 0;
            --left;
          }
      }
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

struct IsomorphismClass {
  std::size_t representative;         // index into the input list
  std::vector<std::size_t> members;   // indices, ascending
  Fingerprint fingerprint;
};

/// Partitions designs into isomorphism classes. Fingerprints only decide
/// which pairs need the exact test.
inline std::vector<IsomorphismClass> isomorphism_classes(const std::vector<Design>& designs, std::size_t workers = 1) {
  if (designs.empty()) return {};
  for (const auto& d : designs)
    if (d.v() != designs[0].v() || d.k() != designs[0].k())
      fail(ErrorCode::InvalidArgument, "isomorphism_classes: parameter mismatch within list");
  const std::size_t n = designs.size();
  std::vector<Fingerprint> fps(n);
  std::vector<std::optional<Design>> canon(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) fps[i] = fingerprint(designs[i]);
  };
  auto run_parallel = [&](auto&& fn) {
    next = 0;
    if (workers <= 1) {
      fn();
      return;
    }
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(fn);
    for (auto& t : pool) t.join();
  };
  run_parallel(work);
  std::map<std::string, std::vector<std::size_t>> by_fp;
  for (std::size_t i = 0; i < n; ++i) by_fp[fps[i].to_string()].push_back(i);
  // Canonical forms are only needed where fingerprints collide.
  std::vector<char> need(n, 0);
  for (const auto& [fp, idx] : by_fp)
    if (idx.size() > 1)
      for (auto i : idx) need[i] = 1;
  run_parallel([&] {
    for (std::size_t i = next++; i < n; i = next++)
      if (need[i]) canon[i] = canonical_certificate(designs[i]).canonical;
  });
  std::vector<IsomorphismClass> out;
  for (const auto& [fp, idx] : by_fp) {
    std::vector<IsomorphismClass> local;
    for (auto i : idx) {
      bool placed = false;
      for (auto& cls : local)
        if (!canon[i] || *canon[cls.representative] == *canon[i]) {
          if (!canon[i]) continue;
          cls.members.push_back(i);
          placed = true;
          break;
        }
      if (!placed) local.push_back({i, {i}, fps[i]});
    }
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.representative < b.representative; });
  return out;
}

}  // namespace steiner
