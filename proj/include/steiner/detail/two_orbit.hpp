#pragma once

// Difference matching for Z_n acting on two orbits of size n (plus an
// optional fixed point). A full block splits into an orbit-0 part A and an
// orbit-1 part B; its pure differences depend only on the shapes of A and B
// (sets up to translation) and its mixed differences form B - A, shifted by
// the relative offset of the two parts. The search therefore lists the
// packings of pure orbit-0 differences and of pure orbit-1 differences
// separately, then pairs them and looks for offsets under which the mixed
// differences tile what is left of Z_n. Residues are bits of a 64-bit word,
// so n is limited to 64.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "../action.hpp"
#include "../common.hpp"

namespace steiner::detail {

using ResidueMask = std::uint64_t;
using Shape = std::vector<std::uint8_t>;  // sorted residues
using Packing = std::vector<Shape>;       // sorted by (size, residues)

class CyclicResidues {
 public:
  explicit CyclicResidues(std::size_t n) : n_(n), full_(n == 64 ? ~ResidueMask(0) : (ResidueMask(1) << n) - 1) {}

  std::size_t n() const noexcept { return n_; }
  ResidueMask full() const noexcept { return full_; }

  /// Difference class of d: min(d, n - d).
  std::size_t cls(std::size_t d) const noexcept {
    d %= n_;
    return std::min(d, n_ - d);
  }

  ResidueMask rotate(ResidueMask m, std::size_t t) const noexcept {
    t %= n_;
    if (!t) return m;
    return ((m << t) | (m >> (n_ - t))) & full_;
  }

  ResidueMask mask(const Shape& s) const noexcept {
    ResidueMask m = 0;
    for (auto x : s) m |= ResidueMask(1) << x;
    return m;
  }

  /// Smallest sorted translate among those containing 0.
  Shape canonical(const Shape& s) const {
    Shape best, t(s.size());
    for (auto base : s) {
      for (std::size_t i = 0; i < s.size(); ++i) t[i] = std::uint8_t((s[i] + n_ - base) % n_);
      std::sort(t.begin(), t.end());
      if (best.empty() || t < best) best = t;
    }
    return best;
  }

  Shape scaled(const Shape& s, std::size_t u) const {
    Shape t;
    for (auto x : s) t.push_back(std::uint8_t((x * u) % n_));
    return canonical(t);
  }

 private:
  std::size_t n_;
  ResidueMask full_;
};

inline bool shape_less(const Shape& a, const Shape& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; }

/// Every way to cover each difference class in `classes` (bit d for class d)
/// exactly once by the internal differences of shapes of the given sizes.
/// Each packing is reported once, shapes canonical and sorted.
inline std::uint64_t difference_packings(const CyclicResidues& z, ResidueMask classes, std::vector<std::size_t> sizes,
                                         const std::function<void(const Packing&)>& emit) {
  struct Open {
    Shape pts;
    std::size_t target;
  };
  std::sort(sizes.begin(), sizes.end());
  std::vector<Open> open;
  std::vector<std::size_t> unused = sizes;
  ResidueMask covered = 0;
  std::uint64_t nodes = 0;
  const std::size_t n = z.n();

  // Classes gained by adding x to s; 0 when x is present or a class would
  // repeat, be covered already, or fall outside the target set.
  auto gain = [&](const Shape& s, std::size_t x, ResidueMask extra) -> ResidueMask {
    ResidueMask g = 0;
    for (auto y : s) {
      if (y == x) return 0;
      const ResidueMask bit = ResidueMask(1) << z.cls(x + n - y);
      if (((g | covered | extra) & bit) || !(classes & bit)) return 0;
      g |= bit;
    }
    return g;
  };

  std::function<void()> rec = [&] {
    ++nodes;
    const ResidueMask left = classes & ~covered;
    if (!left) {
      Packing p;
      for (const auto& o : open) p.push_back(z.canonical(o.pts));
      std::sort(p.begin(), p.end(), shape_less);
      emit(p);
      return;
    }
    // The lowest open class is covered by a new shape {0, d}, by one new point
    // at distance d from an existing one, or by a new pair {x, x + d}.
    const std::size_t d = std::size_t(std::countr_zero(left));
    const ResidueMask dbit = ResidueMask(1) << d;
    for (std::size_t i = 0; i < unused.size(); ++i) {
      if (i && unused[i] == unused[i - 1]) continue;
      const std::size_t t = unused[i];
      unused.erase(unused.begin() + std::ptrdiff_t(i));
      open.push_back({Shape{0, std::uint8_t(d)}, t});
      covered |= dbit;
      rec();
      covered &= ~dbit;
      open.pop_back();
      unused.insert(unused.begin() + std::ptrdiff_t(i), t);
    }
    for (std::size_t j = 0; j < open.size(); ++j) {
      const std::size_t room = open[j].target - open[j].pts.size();
      if (room == 0) continue;
      ResidueMask tried = 0;
      for (std::size_t yi = 0; yi < open[j].pts.size(); ++yi)
        for (std::size_t x : {(open[j].pts[yi] + d) % n, (open[j].pts[yi] + n - d) % n}) {
          if (tried >> x & 1) continue;
          tried |= ResidueMask(1) << x;
          const ResidueMask g = gain(open[j].pts, x, 0);
          if (!(g & dbit)) continue;
          open[j].pts.push_back(std::uint8_t(x));
          covered |= g;
          rec();
          covered &= ~g;
          open[j].pts.pop_back();
        }
      if (room < 2) continue;
      for (std::size_t x = 0; x < n; ++x) {
        const ResidueMask g1 = gain(open[j].pts, x, dbit);
        if (!g1) continue;
        Shape with = open[j].pts;
        with.push_back(std::uint8_t(x));
        const ResidueMask g2 = gain(with, (x + d) % n, g1);
        if (!g2) continue;
        with.push_back(std::uint8_t((x + d) % n));
        std::swap(open[j].pts, with);
        covered |= g1 | g2;
        rec();
        covered &= ~(g1 | g2);
        std::swap(open[j].pts, with);
      }
    }
  };
  if (std::accumulate(sizes.begin(), sizes.end(), std::size_t(0),
                      [](std::size_t s, std::size_t a) { return s + a * (a - 1) / 2; }) ==
      std::size_t(std::popcount(classes)))
    rec();
  return nodes;
}

/// Finds every placement of blocks whose mixed-difference sets, each
/// translated, tile a target set of residues. Block 0 may be pinned at 0.
class MixedTiler {
 public:
  static constexpr std::size_t kMaxBlocks = 40;

  MixedTiler(const CyclicResidues& z) : z_(z) {}

  /// `sets[i]` is the mixed-difference set of block i, `rotations[i]` its n
  /// rotations. Calls emit(offsets) for every tiling; stops when it returns
  /// false.
  bool run(const std::vector<ResidueMask>& sets, const std::vector<const ResidueMask*>& rotations, ResidueMask target,
           bool pin_first, const std::function<bool(const std::vector<std::size_t>&)>& emit) {
    m_ = sets.size();
    sets_ = &sets;
    rot_ = &rotations;
    emit_ = &emit;
    offset_.assign(m_, 0);
    placed_.assign(m_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      shifts_[i].clear();
      for (ResidueMask e = sets[i]; e; e &= e - 1) shifts_[i].push_back(std::size_t(std::countr_zero(e)));
    }
    const ResidueMask outside = ~target & z_.full();
    if (m_ == 0) return target == 0 ? emit(offset_) : true;
    if (pin_first) {
      if (sets[0] & outside) return true;
      placed_[0] = true;
      return rec(outside | sets[0], m_ - 1);
    }
    return rec(outside, m_);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool rec(ResidueMask used, std::size_t left) {
    if (!left) return (*emit_)(offset_);
    ++nodes_;
    const std::size_t n = z_.n();
    const ResidueMask free = ~used & z_.full();
    // Feasible offsets per block, and how many placements reach each residue
    // (3-bit saturating counters).
    ResidueMask b0 = 0, b1 = 0, b2 = 0, over = 0;
    std::size_t best_block = m_, best_count = n + 1;
    for (std::size_t i = 0; i < m_; ++i) {
      if (placed_[i]) continue;
      ResidueMask f = z_.full();
      for (std::size_t j = 0; j < shifts_[i].size() && f; ++j) f &= z_.rotate(free, n - shifts_[i][j]);
      if (!f) return true;
      feasible_[i] = f;
      for (auto x : shifts_[i]) {
        const ResidueMask c = z_.rotate(f, x);
        const ResidueMask c0 = b0 & c;
        b0 ^= c;
        const ResidueMask c1 = b1 & c0;
        b1 ^= c0;
        over |= b2 & c1;
        b2 ^= c1;
      }
      const auto cnt = std::size_t(std::popcount(f));
      if (cnt < best_count) {
        best_count = cnt;
        best_block = i;
      }
    }
    if (free & ~(b0 | b1 | b2 | over)) return true;
    ResidueMask pick = 0;
    std::size_t pick_count = 0;
    for (unsigned c = 1; c < 8 && !pick; ++c) {
      pick = free & ~over & (c & 1 ? b0 : ~b0) & (c & 2 ? b1 : ~b1) & (c & 4 ? b2 : ~b2);
      pick_count = c;
    }
    if (!pick) pick_count = 8;
    // Branch on the block with fewest offsets or on the residue with fewest
    // covering placements, whichever is smaller.
    if (best_count <= pick_count) {
      const std::size_t i = best_block;
      placed_[i] = true;
      for (ResidueMask f = feasible_[i]; f; f &= f - 1) {
        const auto t = std::size_t(std::countr_zero(f));
        offset_[i] = t;
        if (!rec(used | (*rot_)[i][t], left - 1)) return false;
      }
      placed_[i] = false;
      return true;
    }
    const auto zc = std::size_t(std::countr_zero(pick ? pick : free));
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (std::size_t i = 0; i < m_; ++i) {
      if (placed_[i]) continue;
      for (auto x : shifts_[i]) {
        const std::size_t t = (zc + n - x) % n;
        if (feasible_[i] >> t & 1) options.emplace_back(i, t);
      }
    }
    for (auto [i, t] : options) {
      placed_[i] = true;
      offset_[i] = t;
      const bool go = rec(used | (*rot_)[i][t], left - 1);
      placed_[i] = false;
      if (!go) return false;
    }
    return true;
  }

  const CyclicResidues& z_;
  std::size_t m_ = 0;
  const std::vector<ResidueMask>* sets_ = nullptr;
  const std::vector<const ResidueMask*>* rot_ = nullptr;
  const std::function<bool(const std::vector<std::size_t>&)>* emit_ = nullptr;
  std::vector<std::size_t> offset_;
  std::vector<bool> placed_;
  std::vector<std::size_t> shifts_[kMaxBlocks];
  ResidueMask feasible_[kMaxBlocks] = {};
  std::uint64_t nodes_ = 0;
};

}  // namespace steiner::detail
