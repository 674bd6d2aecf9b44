#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "common.hpp"
#include "design.hpp"

namespace steiner {

/// For every unordered pair of points, the index of the unique block through
/// it. Only defined for designs that pass verify_steiner.
class PairBlockIndex {
 public:
  static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

  explicit PairBlockIndex(const Design& d) : v_(d.v()), index_(d.v() * d.v(), kNone) {
    const auto& blocks = d.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const Block& b = blocks[i];
      for (std::size_t x = 0; x < b.size(); ++x)
        for (std::size_t y = x + 1; y < b.size(); ++y) {
          auto& a = index_[std::size_t(b[x]) * v_ + b[y]];
          if (a != kNone) fail(ErrorCode::InvalidDesign, "pair covered twice; design is not a Steiner system");
          a = std::uint32_t(i);
          index_[std::size_t(b[y]) * v_ + b[x]] = std::uint32_t(i);
        }
    }
  }

  std::uint32_t operator()(Point p, Point q) const noexcept { return index_[std::size_t(p) * v_ + q]; }

 private:
  std::size_t v_;
  std::vector<std::uint32_t> index_;
};

/// Histogram of the local-configuration census; keys 0..k-2.
struct Fingerprint {
  std::map<std::size_t, std::uint64_t> histogram;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (auto [key, count] : histogram) t += count;
    return t;
  }

  /// "{k1=c1, k2=c2, ...}" with ascending keys and zero counts omitted.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (auto [key, count] : histogram) {
      if (count == 0) continue;
      if (!first) out += ", ";
      first = false;
      out += std::to_string(key) + "=" + std::to_string(count);
    }
    return out + "}";
  }

  static Fingerprint parse(std::string_view text) {
    Fingerprint f;
    std::string s;
    for (char c : text)
      if (c != '{' && c != '}' && c != '\\' && c != ' ' && c != '\t' && c != '\n') s += c;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos) fail(ErrorCode::Parse, "fingerprint item '" + item + "' lacks '='");
      try {
        f.histogram[std::stoul(item.substr(0, eq))] = std::stoull(item.substr(eq + 1));
      } catch (const std::logic_error&) {
        fail(ErrorCode::Parse, "fingerprint item '" + item + "' is not numeric");
      }
    }
    return f;
  }

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    auto strip = [](const Fingerprint& f) {
      std::map<std::size_t, std::uint64_t> m;
      for (auto [k, c] : f.histogram)
        if (c) m[k] = c;
      return m;
    };
    return strip(a) == strip(b);
  }
};

/// Census over configurations (l, y, z, w, x): l a block, (y, z, w) an
/// ordered triple of distinct points on l, x a point off l. With
/// m = block(x, y) and t = block(x, w), the key is the number of
/// u in m \ {x, y} whose line to z misses t.
inline Fingerprint fingerprint(const Design& d) {
  if (!verify_steiner(d).pass) fail(ErrorCode::InvalidDesign, "fingerprint requires a verified Steiner system");
  const std::size_t v = d.v(), k = d.k(), b = d.b();
  const auto& blocks = d.blocks();
  PairBlockIndex line(d);

  // meets[i*b+j]: blocks i and j share a point (true on the diagonal).
  std::vector<std::uint8_t> meets(b * b, 0);
  {
    std::vector<std::vector<std::uint32_t>> through(v);
    for (std::size_t i = 0; i < b; ++i)
      for (Point p : blocks[i]) through[p].push_back(std::uint32_t(i));
    for (const auto& lst : through)
      for (auto i : lst)
        for (auto j : lst) meets[std::size_t(i) * b + j] = 1;
  }

  std::vector<std::uint64_t> hist(k - 1, 0);
  std::vector<std::uint8_t> on_line(v, 0);
  std::vector<std::uint32_t> m_of(k), t_of(k);
  // uz[y][z][j]: line through z and the j-th point of m_y \ {x, y}.
  std::vector<std::uint32_t> uz(k * k * (k - 2));
  for (std::size_t li = 0; li < b; ++li) {
    const Block& l = blocks[li];
    for (Point p : l) on_line[p] = 1;
    for (std::size_t x = 0; x < v; ++x) {
      if (on_line[x]) continue;
      for (std::size_t i = 0; i < k; ++i) m_of[i] = line(Point(x), l[i]);
      for (std::size_t yi = 0; yi < k; ++yi) {
        const Block& m = blocks[m_of[yi]];
        for (std::size_t zi = 0; zi < k; ++zi) {
          if (zi == yi) continue;
          std::uint32_t* dst = &uz[(yi * k + zi) * (k - 2)];
          std::size_t j = 0;
          for (Point u : m)
            if (u != x && u != l[yi]) dst[j++] = line(u, l[zi]);
        }
      }
      for (std::size_t yi = 0; yi < k; ++yi)
        for (std::size_t zi = 0; zi < k; ++zi) {
          if (zi == yi) continue;
          const std::uint32_t* src = &uz[(yi * k + zi) * (k - 2)];
          for (std::size_t wi = 0; wi < k; ++wi) {
            if (wi == yi || wi == zi) continue;
            const std::size_t t = m_of[wi];
            std::size_t key = 0;
            for (std::size_t j = 0; j < k - 2; ++j) key += !meets[std::size_t(src[j]) * b + t];
            ++hist[key];
          }
        }
    }
    for (Point p : l) on_line[p] = 0;
  }
  Fingerprint f;
  for (std::size_t key = 0; key < hist.size(); ++key)
    if (hist[key]) f.histogram[key] = hist[key];
  return f;
}

/// Number of census configurations: b k (k-1) (k-2) (v-k).
inline std::uint64_t fingerprint_total(std::size_t v, std::size_t k, std::size_t b) {
  return std::uint64_t(b) * k * (k - 1) * (k - 2) * (v - k);
}

struct CanonicalCertificate {
  /// The input relabeled into canonical form.
  Design canonical;
  /// relabeling[p] is the canonical label of input point p.
  std::vector<Point> relabeling;

  friend bool operator==(const CanonicalCertificate& a, const CanonicalCertificate& b) {
    return a.canonical == b.canonical;
  }
};

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  h *= 0xBF58476D1CE4E5B9ull;
  return h ^ (h >> 31);
}

/// Ordered partition of the vertices of the point/block incidence graph.
/// Points occupy positions [0, v), blocks [v, v+b).
struct Partition {
  std::vector<int> lab;       // position -> vertex
  std::vector<int> pos;       // vertex -> position
  std::vector<int> cell_of;   // vertex -> start position of its cell
  std::vector<int> cell_end;  // start position -> end position
};

/// Individualization-refinement search over the incidence graph. Computes
/// automorphism generators and order along the first path (stabilizer chain)
/// and the canonical leaf as the minimum of (trace sequence, relabeled block
/// list) over the search tree, pruned by trace comparison and by orbits of
/// known automorphisms fixing the current prefix.
///
/// Equitable refinement alone hardly splits a 2-design (every pair of points
/// looks alike), so for Steiner systems each individualized point also splits
/// the remaining point cells by a census relative to that point.
class Canonizer {
 public:
  explicit Canonizer(const Design& d) : design_(d), v_(int(d.v())), b_(int(d.b())), n_(v_ + b_) {
    adj_.resize(std::size_t(n_));
    for (int j = 0; j < b_; ++j)
      for (Point p : d.blocks()[std::size_t(j)]) {
        adj_[p].push_back(v_ + j);
        adj_[std::size_t(v_ + j)].push_back(p);
      }
    cnt_.assign(std::size_t(n_), 0);
    in_queue_.assign(std::size_t(n_), 0);
    mark_.assign(std::size_t(n_), 0);
    if (d.k() >= 3 && verify_steiner(d).pass) {
      line_.emplace(d);
      meets_.assign(std::size_t(b_) * std::size_t(b_), 0);
      for (int p = 0; p < v_; ++p)
        for (int i : adj_[std::size_t(p)])
          for (int j : adj_[std::size_t(p)]) meets_[std::size_t(i - v_) * std::size_t(b_) + std::size_t(j - v_)] = 1;
    }
  }

  void compute_automorphisms() {
    if (group_done_) return;
    build_first_path();
    const int depth = int(first_path_.size()) - 1;
    order_ = 1;
    for (int i = depth - 1; i >= 0; --i) {
      const Partition& P = first_path_[std::size_t(i)];
      const int start = first_target_[std::size_t(i)];
      const int end = P.cell_end[std::size_t(start)];
      const int vi = first_choice_[std::size_t(i)];
      std::vector<int> prefix(first_choice_.begin(), first_choice_.begin() + i);
      auto orbit = orbits_fixing(prefix);
      std::vector<int> rejected;
      for (int p = start; p < end; ++p) {
        const int x = P.lab[std::size_t(p)];
        if (x == vi || find(orbit, x) == find(orbit, vi)) continue;
        bool known_bad = false;
        for (int r : rejected)
          if (find(orbit, r) == find(orbit, x)) known_bad = true;
        if (known_bad) continue;
        Partition Q = P;
        const std::uint64_t tr = individualize(Q, x);
        prefix.push_back(x);
        const bool found = tr == first_trace_[std::size_t(i) + 1] && search_equivalent(Q, i + 1, prefix);
        prefix.pop_back();
        if (found)
          orbit = orbits_fixing(prefix);
        else
          rejected.push_back(x);
      }
      std::uint64_t size = 0;
      for (int p = start; p < end; ++p) size += find(orbit, P.lab[std::size_t(p)]) == find(orbit, vi);
      if (size && order_ > ~std::uint64_t(0) / size) fail(ErrorCode::InvalidArgument, "automorphism group order overflows 64 bits");
      order_ *= size;
    }
    group_done_ = true;
  }

  std::uint64_t automorphism_order() {
    compute_automorphisms();
    return order_;
  }

  const std::vector<std::vector<Point>>& generators() {
    compute_automorphisms();
    return generators_;
  }

  CanonicalCertificate certificate() {
    compute_automorphisms();
    best_trace_ = first_trace_;
    best_cert_ = first_cert_;
    best_lab_ = first_leaf_lab_;
    std::vector<int> prefix;
    Partition root = first_path_.front();
    best_version_ = 0;
    search_best(root, 0, prefix, false);
    std::vector<Point> relabel(static_cast<std::size_t>(v_));
    for (int p = 0; p < v_; ++p) relabel[std::size_t(best_lab_[std::size_t(p)])] = Point(p);
    return CanonicalCertificate{design_.relabeled(relabel), relabel};
  }

 private:
  // --- refinement -------------------------------------------------------

  Partition root_partition() const {
    Partition P;
    P.lab.resize(std::size_t(n_));
    std::iota(P.lab.begin(), P.lab.end(), 0);
    P.pos = P.lab;
    P.cell_of.resize(std::size_t(n_));
    P.cell_end.assign(std::size_t(n_), 0);
    for (int x = 0; x < n_; ++x) P.cell_of[std::size_t(x)] = x < v_ ? 0 : v_;
    P.cell_end[0] = v_;
    P.cell_end[std::size_t(v_)] = n_;
    return P;
  }

  std::uint64_t refine(Partition& P, std::vector<int>& queue) {
    std::uint64_t h = 0x243F6A8885A308D3ull;
    for (int s : queue) in_queue_[std::size_t(s)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int W = queue[head];
      in_queue_[std::size_t(W)] = 0;
      const int We = P.cell_end[std::size_t(W)];
      touched_.clear();
      for (int i = W; i < We; ++i)
        for (int y : adj_[std::size_t(P.lab[std::size_t(i)])])
          if (cnt_[std::size_t(y)]++ == 0) touched_.push_back(y);
      cells_.clear();
      for (int y : touched_) {
        const int c = P.cell_of[std::size_t(y)];
        if (!mark_[std::size_t(c)]) {
          mark_[std::size_t(c)] = 1;
          cells_.push_back(c);
        }
      }
      std::sort(cells_.begin(), cells_.end());
      h = mix(h, std::uint64_t(W) << 20 | std::uint64_t(We - W));
      for (int X : cells_) {
        mark_[std::size_t(X)] = 0;
        const int Xe = P.cell_end[std::size_t(X)];
        if (Xe - X == 1) {
          h = mix(h, std::uint64_t(X) << 24 | std::uint64_t(cnt_[std::size_t(P.lab[std::size_t(X)])]));
          continue;
        }
        const int c0 = cnt_[std::size_t(P.lab[std::size_t(X)])];
        bool uniform = true;
        for (int i = X + 1; i < Xe && uniform; ++i) uniform = cnt_[std::size_t(P.lab[std::size_t(i)])] == c0;
        if (uniform) {
          h = mix(h, std::uint64_t(X) << 24 | std::uint64_t(c0));
          continue;
        }
        std::sort(P.lab.begin() + X, P.lab.begin() + Xe,
                  [this](int a, int c) { return cnt_[std::size_t(a)] < cnt_[std::size_t(c)]; });
        const bool was_queued = in_queue_[std::size_t(X)];
        int largest = -1, largest_size = 0;
        std::size_t first_new = queue.size();
        for (int gs = X; gs < Xe;) {
          const int key = cnt_[std::size_t(P.lab[std::size_t(gs)])];
          int ge = gs;
          while (ge < Xe && cnt_[std::size_t(P.lab[std::size_t(ge)])] == key) {
            P.pos[std::size_t(P.lab[std::size_t(ge)])] = ge;
            P.cell_of[std::size_t(P.lab[std::size_t(ge)])] = gs;
            ++ge;
          }
          P.cell_end[std::size_t(gs)] = ge;
          h = mix(h, std::uint64_t(gs) << 32 | std::uint64_t(ge - gs) << 12 | std::uint64_t(key));
          if (ge - gs > largest_size) {
            largest_size = ge - gs;
            largest = gs;
          }
          if (gs != X) queue.push_back(gs);
          gs = ge;
        }
        if (!was_queued) {
          // X itself was not queued; queue every part except the largest.
          if (largest != X) {
            queue.push_back(X);
            for (std::size_t q = first_new; q < queue.size(); ++q)
              if (queue[q] == largest) {
                queue.erase(queue.begin() + long(q));
                break;
              }
          }
        }
        for (std::size_t q = first_new; q < queue.size(); ++q) in_queue_[std::size_t(queue[q])] = 1;
        in_queue_[std::size_t(X)] = was_queued || largest != X;
      }
      for (int y : touched_) cnt_[std::size_t(y)] = 0;
    }
    queue.clear();
    return h;
  }

  std::uint64_t individualize(Partition& P, int x) {
    const int s = P.cell_of[std::size_t(x)];
    const int e = P.cell_end[std::size_t(s)];
    const int px = P.pos[std::size_t(x)];
    const int y = P.lab[std::size_t(s)];
    std::swap(P.lab[std::size_t(s)], P.lab[std::size_t(px)]);
    P.pos[std::size_t(x)] = s;
    P.pos[std::size_t(y)] = px;
    P.cell_end[std::size_t(s)] = s + 1;
    P.cell_end[std::size_t(s + 1)] = e;
    for (int i = s + 1; i < e; ++i) P.cell_of[std::size_t(P.lab[std::size_t(i)])] = s + 1;
    std::vector<int> queue{s};
    std::uint64_t h = mix(refine(P, queue), std::uint64_t(s) << 16 | std::uint64_t(e - s));
    if (line_ && x < v_ && target_cell(P) >= 0) h = mix(h, split_by(P, relative_invariant(x)));
    return h;
  }

  /// Census of configurations (l, y, z, w) with l a block missing p and
  /// (y, z, w) an ordered triple on l, keyed as in the fingerprint with p in
  /// the role of the off-line point; each point accumulates a hash of the
  /// keys it sees in each role. Equivariant in p, so it may refine the
  /// partition below a node that individualized p.
  std::vector<std::uint64_t> relative_invariant(int p) {
    const std::size_t k = design_.k();
    const auto& blocks = design_.blocks();
    const PairBlockIndex& line = *line_;
    std::vector<std::uint64_t> inv(std::size_t(v_), 0);
    std::vector<char> through_p(std::size_t(b_), 0);
    for (int blk : adj_[std::size_t(p)]) through_p[std::size_t(blk - v_)] = 1;
    std::vector<std::uint32_t> m_of(k);
    for (std::size_t li = 0; li < blocks.size(); ++li) {
      if (through_p[li]) continue;
      const Block& l = blocks[li];
      for (std::size_t i = 0; i < k; ++i) m_of[i] = line(Point(p), l[i]);
      for (std::size_t yi = 0; yi < k; ++yi) {
        const Block& m = blocks[m_of[yi]];
        for (std::size_t zi = 0; zi < k; ++zi) {
          if (zi == yi) continue;
          for (std::size_t wi = 0; wi < k; ++wi) {
            if (wi == yi || wi == zi) continue;
            const std::size_t t = m_of[wi];
            std::uint64_t key = 0;
            for (Point u : m)
              if (int(u) != p && u != l[yi]) key += !meets_[std::size_t(line(u, l[zi])) * std::size_t(b_) + t];
            inv[l[yi]] += role_hash(1, key);
            inv[l[zi]] += role_hash(2, key);
            inv[l[wi]] += role_hash(3, key);
          }
        }
      }
    }
    return inv;
  }

  static std::uint64_t role_hash(std::uint64_t role, std::uint64_t key) {
    return mix(mix(0x51ED270B27ull, role), key) | 1;
  }

  /// Splits every non-singleton point cell by the given values (ascending),
  /// then restores equitability.
  std::uint64_t split_by(Partition& P, const std::vector<std::uint64_t>& value) {
    std::uint64_t h = 0x3C6EF372FE94F82Bull;
    std::vector<int> queue;
    for (int X = 0; X < v_;) {
      const int Xe = P.cell_end[std::size_t(X)];
      if (Xe - X > 1) {
        std::sort(P.lab.begin() + X, P.lab.begin() + Xe,
                  [&](int a, int c) { return value[std::size_t(a)] < value[std::size_t(c)]; });
        for (int gs = X; gs < Xe;) {
          const std::uint64_t key = value[std::size_t(P.lab[std::size_t(gs)])];
          int ge = gs;
          while (ge < Xe && value[std::size_t(P.lab[std::size_t(ge)])] == key) {
            P.pos[std::size_t(P.lab[std::size_t(ge)])] = ge;
            P.cell_of[std::size_t(P.lab[std::size_t(ge)])] = gs;
            ++ge;
          }
          P.cell_end[std::size_t(gs)] = ge;
          h = mix(mix(h, std::uint64_t(gs) << 20 | std::uint64_t(ge - gs)), key);
          if (ge - gs != Xe - X) queue.push_back(gs);
          gs = ge;
        }
      }
      X = Xe;
    }
    if (queue.empty()) return h;
    return mix(h, refine(P, queue));
  }

  /// First largest non-singleton point cell, or -1 when points are discrete.
  int target_cell(const Partition& P) const {
    int best = -1, best_size = 1;
    for (int s = 0; s < v_; s = P.cell_end[std::size_t(s)]) {
      const int size = P.cell_end[std::size_t(s)] - s;
      if (size > best_size) {
        best = s;
        best_size = size;
      }
    }
    return best;
  }

  std::vector<Point> leaf_certificate(const Partition& P) const {
    std::vector<Block> blocks;
    blocks.reserve(std::size_t(b_));
    for (const auto& blk : design_.blocks()) {
      Block nb(blk.size());
      for (std::size_t i = 0; i < blk.size(); ++i) nb[i] = Point(P.pos[blk[i]]);
      std::sort(nb.begin(), nb.end());
      blocks.push_back(std::move(nb));
    }
    std::sort(blocks.begin(), blocks.end());
    std::vector<Point> flat;
    flat.reserve(std::size_t(b_) * design_.k());
    for (const auto& blk : blocks) flat.insert(flat.end(), blk.begin(), blk.end());
    return flat;
  }

  // --- automorphism bookkeeping ------------------------------------------

  std::vector<int> orbits_fixing(const std::vector<int>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(v_));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& g : generators_) {
      bool fixes = true;
      for (int p : prefix)
        if (g[std::size_t(p)] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int p = 0; p < v_; ++p) {
        int a = find(parent, p), c = find(parent, g[std::size_t(p)]);
        if (a != c) parent[std::size_t(std::max(a, c))] = std::min(a, c);
      }
    }
    return parent;
  }

  static int find(std::vector<int>& parent, int x) {
    while (parent[std::size_t(x)] != x) {
      parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
      x = parent[std::size_t(x)];
    }
    return x;
  }

  void build_first_path() {
    first_path_.clear();
    first_trace_.clear();
    first_target_.clear();
    first_choice_.clear();
    Partition P = root_partition();
    std::vector<int> queue{0, v_};
    first_trace_.push_back(refine(P, queue));
    for (;;) {
      first_path_.push_back(P);
      const int t = target_cell(P);
      if (t < 0) break;
      first_target_.push_back(t);
      const int x = P.lab[std::size_t(t)];
      first_choice_.push_back(x);
      first_trace_.push_back(individualize(P, x));
    }
    first_cert_ = leaf_certificate(P);
    first_leaf_lab_ = P.lab;
  }

  /// Searches below Q (at the given level, trace-equal to the first path) for
  /// a leaf equivalent to the first leaf; records the automorphism if found.
  bool search_equivalent(Partition& Q, int level, std::vector<int>& prefix) {
    const int t = target_cell(Q);
    if (t < 0) {
      if (std::size_t(level) + 1 != first_path_.size()) return false;
      if (leaf_certificate(Q) != first_cert_) return false;
      std::vector<Point> gamma(static_cast<std::size_t>(v_));
      for (int pos = 0; pos < v_; ++pos)
        gamma[std::size_t(first_leaf_lab_[std::size_t(pos)])] = Point(Q.lab[std::size_t(pos)]);
      generators_.push_back(std::move(gamma));
      return true;
    }
    if (std::size_t(level) >= first_target_.size() || t != first_target_[std::size_t(level)] ||
        Q.cell_end[std::size_t(t)] != first_path_[std::size_t(level)].cell_end[std::size_t(t)])
      return false;
    auto orbit = orbits_fixing(prefix);
    std::vector<int> tried;
    const int end = Q.cell_end[std::size_t(t)];
    for (int p = t; p < end; ++p) {
      const int y = Q.lab[std::size_t(p)];
      bool skip = false;
      for (int r : tried)
        if (find(orbit, r) == find(orbit, y)) skip = true;
      if (skip) continue;
      tried.push_back(y);
      Partition R = Q;
      const std::uint64_t tr = individualize(R, y);
      if (tr != first_trace_[std::size_t(level) + 1]) continue;
      prefix.push_back(y);
      const bool found = search_equivalent(R, level + 1, prefix);
      prefix.pop_back();
      if (found) return true;
    }
    return false;
  }

  void search_best(Partition& P, int level, std::vector<int>& prefix, bool better) {
    const int t = target_cell(P);
    if (t < 0) {
      auto cert = leaf_certificate(P);
      if (better || cert < best_cert_) {
        best_cert_ = std::move(cert);
        best_lab_ = P.lab;
        best_trace_.assign(path_trace_.begin(), path_trace_.begin() + level + 1);
        ++best_version_;
      }
      return;
    }
    auto orbit = orbits_fixing(prefix);
    std::vector<int> tried;
    const int end = P.cell_end[std::size_t(t)];
    if (path_trace_.size() < std::size_t(level) + 2) path_trace_.resize(std::size_t(level) + 2);
    path_trace_[0] = first_trace_[0];
    for (int p = t; p < end; ++p) {
      const int y = P.lab[std::size_t(p)];
      bool skip = false;
      for (int r : tried)
        if (find(orbit, r) == find(orbit, y)) skip = true;
      if (skip) continue;
      tried.push_back(y);
      Partition R = P;
      const std::uint64_t tr = individualize(R, y);
      bool child_better = better;
      if (!better) {
        const std::size_t lv = std::size_t(level) + 1;
        if (lv >= best_trace_.size() || tr > best_trace_[lv]) continue;
        if (tr < best_trace_[lv]) child_better = true;
      }
      path_trace_[std::size_t(level) + 1] = tr;
      const auto version = best_version_;
      prefix.push_back(y);
      search_best(R, level + 1, prefix, child_better);
      prefix.pop_back();
      // A new best below this node shares our prefix, so compare afresh.
      if (best_version_ != version) better = false;
    }
  }

  const Design& design_;
  int v_, b_, n_;
  std::vector<std::vector<int>> adj_;
  std::optional<PairBlockIndex> line_;
  std::vector<std::uint8_t> meets_;
  std::vector<int> cnt_;
  std::vector<char> in_queue_, mark_;
  std::vector<int> touched_, cells_;

  std::vector<Partition> first_path_;
  std::vector<std::uint64_t> first_trace_;
  std::vector<int> first_target_, first_choice_;
  std::vector<Point> first_cert_;
  std::vector<int> first_leaf_lab_;

  std::vector<std::vector<Point>> generators_;
  std::uint64_t order_ = 1;
  bool group_done_ = false;

  std::vector<std::uint64_t> best_trace_, path_trace_;
  std::vector<Point> best_cert_;
  std::vector<int> best_lab_;
  std::uint64_t best_version_ = 0;
};

}  // namespace detail

/// Exact canonical form: relabel-invariant and deterministic.
inline CanonicalCertificate canonical_certificate(const Design& d) {
  detail::Canonizer c(d);
  return c.certificate();
}

/// Order of the group of point permutations preserving the block set.
inline std::uint64_t automorphism_count(const Design& d) {
  detail::Canonizer c(d);
  return c.automorphism_order();
}

/// Generators of the automorphism group (as point permutations).
inline std::vector<std::vector<Point>> automorphism_generators(const Design& d) {
  detail::Canonizer c(d);
  return c.generators();
}

struct IsomorphismResult {
  bool isomorphic = false;
  /// map[p] is the image in the second design of point p of the first.
  std::optional<std::vector<Point>> map;
  std::string reason;

  explicit operator bool() const noexcept { return isomorphic; }
};

inline IsomorphismResult isomorphism_from_certificates(const CanonicalCertificate& a, const CanonicalCertificate& b) {
  if (!(a.canonical == b.canonical)) return {false, std::nullopt, "canonical forms differ"};
  std::vector<Point> inv_b(b.relabeling.size());
  for (std::size_t p = 0; p < b.relabeling.size(); ++p) inv_b[b.relabeling[p]] = Point(p);
  std::vector<Point> map(a.relabeling.size());
  for (std::size_t p = 0; p < a.relabeling.size(); ++p) map[p] = inv_b[a.relabeling[p]];
  return {true, std::move(map), "canonical forms agree"};
}

/// Exact isomorphism test; on success returns a point bijection mapping the
/// blocks of d1 onto the blocks of d2.
inline IsomorphismResult are_isomorphic(const Design& d1, const Design& d2) {
  if (d1.v() != d2.v() || d1.k() != d2.k() || d1.b() != d2.b()) return {false, std::nullopt, "parameter mismatch"};
  return isomorphism_from_certificates(canonical_certificate(d1), canonical_certificate(d2));
}

}  // namespace steiner
