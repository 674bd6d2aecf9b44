#pragma once

#include <array>
#include <cctype>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"

namespace steiner {

/// A finite group of order n <= 256 stored as a 0-based Cayley table.
///
/// Row g, column h holds g*h. Element 0 is the two-sided identity. Instances
/// are only produced by validate_group / build_group, so every GroupTable in
/// circulation satisfies the group axioms.
class GroupTable {
 public:
  std::size_t order() const noexcept { return n_; }

  Element op(Element g, Element h) const noexcept { return table_[std::size_t(g) * n_ + h]; }
  Element inverse(Element g) const noexcept { return inverses_[g]; }

  const std::vector<Element>& flat() const noexcept { return table_; }
  const std::vector<Element>& inverses() const noexcept { return inverses_; }

  std::vector<std::vector<Element>> rows() const {
    std::vector<std::vector<Element>> out(n_);
    for (std::size_t g = 0; g < n_; ++g)
      out[g].assign(table_.begin() + long(g * n_), table_.begin() + long((g + 1) * n_));
    return out;
  }

  /// Order of the element g.
  std::size_t element_order(Element g) const {
    std::size_t k = 1;
    for (Element x = g; x != 0; x = op(x, g)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (std::size_t g = 0; g < n_; ++g)
      for (std::size_t h = g + 1; h < n_; ++h)
        if (op(Element(g), Element(h)) != op(Element(h), Element(g))) return false;
    return true;
  }

  friend bool operator==(const GroupTable& a, const GroupTable& b) { return a.table_ == b.table_; }

 private:
  friend struct GroupCheck validate_group_flat(std::size_t n, std::vector<long long> entries);

  GroupTable(std::size_t n, std::vector<Element> table, std::vector<Element> inverses)
      : n_(n), table_(std::move(table)), inverses_(std::move(inverses)) {}

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
};

enum class GroupAxiom { Shape, Range, Identity, LatinRow, LatinColumn, Associativity };

inline const char* to_string(GroupAxiom a) {
  switch (a) {
    case GroupAxiom::Shape: return "shape";
    case GroupAxiom::Range: return "range";
    case GroupAxiom::Identity: return "identity";
    case GroupAxiom::LatinRow: return "latin-row";
    case GroupAxiom::LatinColumn: return "latin-column";
    case GroupAxiom::Associativity: return "associativity";
  }
  return "?";
}

struct GroupDiagnostic {
  GroupAxiom axiom;
  /// Witness indices; meaning depends on the axiom (row/column/value, or x,y,z
  /// for associativity). Unused slots are -1.
  std::array<long long, 3> witness{-1, -1, -1};
  std::string message;
};

struct GroupCheck {
  std::optional<GroupTable> group;
  std::optional<GroupDiagnostic> diagnostic;

  bool ok() const noexcept { return group.has_value(); }
};

/// Checks every group axiom on a row-major n x n table and reports the first
/// failure with a witness.
inline GroupCheck validate_group_flat(std::size_t n, std::vector<long long> e) {
  auto bad = [](GroupAxiom ax, std::array<long long, 3> w, std::string msg) {
    return GroupCheck{std::nullopt, GroupDiagnostic{ax, w, std::move(msg)}};
  };
  if (n == 0 || e.size() != n * n) return bad(GroupAxiom::Shape, {-1, -1, -1}, "table is not a non-empty square");
  if (n > kMaxGroupOrder)
    return bad(GroupAxiom::Shape, {(long long)n, -1, -1}, "order " + std::to_string(n) + " exceeds 256");
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      long long x = e[g * n + h];
      if (x < 0 || x >= (long long)n)
        return bad(GroupAxiom::Range, {(long long)g, (long long)h, x},
                   "entry (" + std::to_string(g) + "," + std::to_string(h) + ") = " + std::to_string(x) +
                       " is out of range");
    }
  for (std::size_t x = 0; x < n; ++x) {
    if (e[x] != (long long)x || e[x * n] != (long long)x)
      return bad(GroupAxiom::Identity, {(long long)x, -1, -1},
                 "element 0 is not a two-sided identity (fails at " + std::to_string(x) + ")");
  }
  std::vector<std::size_t> seen(n, 0);
  std::size_t stamp = 0;
  for (std::size_t g = 0; g < n; ++g) {
    ++stamp;
    for (std::size_t h = 0; h < n; ++h) {
      auto x = std::size_t(e[g * n + h]);
      if (seen[x] == stamp)
        return bad(GroupAxiom::LatinRow, {(long long)g, (long long)h, (long long)x},
                   "row " + std::to_string(g) + " repeats value " + std::to_string(x));
      seen[x] = stamp;
    }
  }
  for (std::size_t h = 0; h < n; ++h) {
    ++stamp;
    for (std::size_t g = 0; g < n; ++g) {
      auto x = std::size_t(e[g * n + h]);
      if (seen[x] == stamp)
        return bad(GroupAxiom::LatinColumn, {(long long)g, (long long)h, (long long)x},
                   "column " + std::to_string(h) + " repeats value " + std::to_string(x));
      seen[x] = stamp;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto xy = std::size_t(e[x * n + y]);
      for (std::size_t z = 0; z < n; ++z) {
        auto yz = std::size_t(e[y * n + z]);
        if (e[xy * n + z] != e[x * n + yz])
          return bad(GroupAxiom::Associativity, {(long long)x, (long long)y, (long long)z},
                     "(x*y)*z != x*(y*z) for x=" + std::to_string(x) + " y=" + std::to_string(y) +
                         " z=" + std::to_string(z));
      }
    }
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n * n; ++i) table[i] = Element(e[i]);
  std::vector<Element> inv(n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (table[g * n + h] == 0) inv[g] = Element(h);
  return GroupCheck{GroupTable(n, std::move(table), std::move(inv)), std::nullopt};
}

inline GroupCheck validate_group(const std::vector<std::vector<long long>>& raw) {
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i].size() != n)
      return GroupCheck{std::nullopt, GroupDiagnostic{GroupAxiom::Shape, {(long long)i, -1, -1},
                                                      "row " + std::to_string(i) + " has wrong length"}};
  std::vector<long long> flat;
  flat.reserve(n * n);
  for (const auto& row : raw) flat.insert(flat.end(), row.begin(), row.end());
  return validate_group_flat(n, std::move(flat));
}

/// Parameterized description of one of the groups this library can build.
struct GroupSpec {
  enum class Kind { Cyclic, DirectProduct, SemidirectCyclic, Heisenberg, SpecialLinear25, Imported };

  Kind kind = Kind::Cyclic;
  std::size_t n = 0;                  // Cyclic order
  std::size_t m = 0, c = 0, t = 0;    // SemidirectCyclic: Z_m x|_t Z_c
  bool row_major = false;             // SemidirectCyclic: index a*c+b even when gcd(m,c) = 1
  std::size_t p = 0;                  // Heisenberg prime
  std::vector<GroupSpec> factors;     // DirectProduct (exactly two)
  std::string path;                   // Imported

  static GroupSpec cyclic(std::size_t n) {
    GroupSpec s;
    s.n = n;
    return s;
  }
  static GroupSpec direct(GroupSpec a, GroupSpec b) {
    GroupSpec s;
    s.kind = Kind::DirectProduct;
    s.factors = {std::move(a), std::move(b)};
    return s;
  }
  static GroupSpec semidirect(std::size_t m, std::size_t c, std::size_t t, bool row_major = false) {
    GroupSpec s;
    s.kind = Kind::SemidirectCyclic;
    s.row_major = row_major;
    s.m = m;
    s.c = c;
    s.t = t;
    return s;
  }
  static GroupSpec heisenberg(std::size_t p) {
    GroupSpec s;
    s.kind = Kind::Heisenberg;
    s.p = p;
    return s;
  }
  static GroupSpec sl25() {
    GroupSpec s;
    s.kind = Kind::SpecialLinear25;
    return s;
  }
  static GroupSpec imported(std::string path) {
    GroupSpec s;
    s.kind = Kind::Imported;
    s.path = std::move(path);
    return s;
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::Cyclic: return "Cyclic(" + std::to_string(n) + ")";
      case Kind::DirectProduct: return "Direct(" + factors.at(0).to_string() + "," + factors.at(1).to_string() + ")";
      case Kind::SemidirectCyclic:
        return "Semidirect(" + std::to_string(m) + "," + std::to_string(c) + "," + std::to_string(t) +
               (row_major ? ",rows)" : ")");
      case Kind::Heisenberg: return "Heisenberg(" + std::to_string(p) + ")";
      case Kind::SpecialLinear25: return "SL(2,5)";
      case Kind::Imported: return "Import(" + path + ")";
    }
    return "?";
  }

  /// Parses the text form produced by to_string(). "Z<n>" is accepted as an
  /// alias for Cyclic(n).
  static GroupSpec parse(std::string_view text);

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view s) : s_(s) {}

  GroupSpec parse_all() {
    GroupSpec g = parse_spec();
    skip_ws();
    if (pos_ != s_.size()) error("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Parse, "group spec '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }
  bool eat(char ch) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char ch) {
    if (!eat(ch)) error(std::string("expected '") + ch + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) ++pos_;
    return std::string(s_.substr(b, pos_ - b));
  }
  std::size_t number() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
    if (b == pos_) error("expected a number");
    return std::stoul(std::string(s_.substr(b, pos_ - b)));
  }
  GroupSpec parse_spec() {
    std::string id = ident();
    if (id.size() > 1 && (id[0] == 'Z' || id[0] == 'C') &&
        id.find_first_not_of("0123456789", 1) == std::string::npos)
      return GroupSpec::cyclic(std::stoul(id.substr(1)));
    if (id == "Cyclic") {
      expect('(');
      auto n = number();
      expect(')');
      return GroupSpec::cyclic(n);
    }
    if (id == "Direct" || id == "DirectProduct") {
      expect('(');
      auto a = parse_spec();
      expect(',');
      auto b = parse_spec();
      expect(')');
      return GroupSpec::direct(std::move(a), std::move(b));
    }
    if (id == "Semidirect" || id == "SemidirectCyclic") {
      expect('(');
      auto m = number();
      expect(',');
      auto c = number();
      expect(',');
      auto t = number();
      bool rows = false;
      if (eat(',')) {
        if (ident() != "rows") error("expected 'rows'");
        rows = true;
      }
      expect(')');
      return GroupSpec::semidirect(m, c, t, rows);
    }
    if (id == "Heisenberg") {
      expect('(');
      auto p = number();
      expect(')');
      return GroupSpec::heisenberg(p);
    }
    if (id == "SL" || id == "SL25" || id == "SpecialLinear25") {
      if (id == "SL") {
        expect('(');
        if (number() != 2) error("only SL(2,5) is supported");
        expect(',');
        if (number() != 5) error("only SL(2,5) is supported");
        expect(')');
      }
      return GroupSpec::sl25();
    }
    if (id == "Import" || id == "Imported") {
      expect('(');
      std::size_t b = pos_;
      int depth = 1;
      while (pos_ < s_.size()) {
        if (s_[pos_] == '(') ++depth;
        if (s_[pos_] == ')' && --depth == 0) break;
        ++pos_;
      }
      if (pos_ >= s_.size()) error("unterminated Import(...)");
      std::string path(s_.substr(b, pos_ - b));
      ++pos_;
      return GroupSpec::imported(path);
    }
    error("unknown group constructor '" + id + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline std::size_t pow_mod(std::size_t base, std::size_t e, std::size_t mod) {
  std::size_t r = 1 % mod;
  base %= mod;
  while (e) {
    if (e & 1) r = r * base % mod;
    base = base * base % mod;
    e >>= 1;
  }
  return r;
}

inline bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline GroupTable must_validate(std::size_t n, std::vector<long long> entries, const std::string& what) {
  auto check = validate_group_flat(n, std::move(entries));
  if (!check.ok()) fail(ErrorCode::InvalidGroup, what + ": " + check.diagnostic->message);
  return std::move(*check.group);
}

}  // namespace detail

inline GroupSpec GroupSpec::parse(std::string_view text) { return detail::SpecParser(text).parse_all(); }

/// Reads a Cayley-table file: first line n, then n rows of n integers.
inline GroupCheck read_cayley_table(std::istream& in) {
  long long n = 0;
  if (!(in >> n) || n <= 0) fail(ErrorCode::Parse, "cayley table: missing or invalid order on line 1");
  if (n > (long long)kMaxGroupOrder) fail(ErrorCode::Parse, "cayley table: order exceeds 256");
  std::vector<long long> entries(std::size_t(n * n));
  for (auto& x : entries)
    if (!(in >> x)) fail(ErrorCode::Parse, "cayley table: expected " + std::to_string(n * n) + " entries");
  std::string rest;
  if (in >> rest) fail(ErrorCode::Parse, "cayley table: trailing data '" + rest + "'");
  return validate_group_flat(std::size_t(n), std::move(entries));
}

inline GroupCheck read_cayley_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  return read_cayley_table(in);
}

inline void write_cayley_table(std::ostream& out, const GroupTable& g) {
  const std::size_t n = g.order();
  out << n << '\n';
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c) out << ' ';
      out << g.op(Element(r), Element(c));
    }
    out << '\n';
  }
}

/// Builds and validates the group described by spec.
///
/// Numbering: Cyclic(n) uses residues. SemidirectCyclic(m,c,t) uses the CRT
/// index of (a,b) when gcd(m,c) = 1 and a*c+b otherwise (or when row_major
/// is requested); the product is
/// (a,b)(x,y) = (a + t^b x mod m, b + y mod c). DirectProduct indexes pairs as
/// iA*|B| + iB. Heisenberg(p) indexes (a,b,c) as a*p^2 + b*p + c with
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'). SL(2,5) lists the identity
/// first and the remaining determinant-one matrices in lexicographic order of
/// (a,b,c,d).
inline GroupTable build_group(const GroupSpec& spec) {
  using K = GroupSpec::Kind;
  switch (spec.kind) {
    case K::Cyclic: {
      const std::size_t n = spec.n;
      if (n == 0 || n > kMaxGroupOrder) fail(ErrorCode::InvalidGroup, "Cyclic(n) requires 1 <= n <= 256");
      std::vector<long long> e(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i * n + j] = (long long)((i + j) % n);
      return detail::must_validate(n, std::move(e), spec.to_string());
    }
    case K::SemidirectCyclic: {
      const std::size_t m = spec.m, c = spec.c, t = spec.t;
      if (m < 1 || c < 1 || m * c > kMaxGroupOrder)
        fail(ErrorCode::InvalidGroup, spec.to_string() + ": order must be between 1 and 256");
      if (!(t >= 1 && t < m) && !(m == 1 && t == 1))
        fail(ErrorCode::InvalidGroup, spec.to_string() + ": multiplier must satisfy 1 <= t < m");
      if (detail::pow_mod(t, c, m) != 1 % m)
        fail(ErrorCode::InvalidGroup, spec.to_string() + ": invalid multiplier, t^c = " +
                                          std::to_string(detail::pow_mod(t, c, m)) + " (mod " + std::to_string(m) +
                                          "), expected 1");
      const std::size_t n = m * c;
      const bool coprime = std::gcd(m, c) == 1 && !spec.row_major;
      std::vector<std::size_t> a_of(n), b_of(n);
      std::vector<std::size_t> index(n);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < c; ++b) {
          std::size_t idx = a * c + b;
          if (coprime) {
            idx = 0;
            while (idx % m != a || idx % c != b) ++idx;
          }
          a_of[idx] = a;
          b_of[idx] = b;
          index[a * c + b] = idx;
        }
      std::vector<std::size_t> tpow(c);
      for (std::size_t b = 0; b < c; ++b) tpow[b] = detail::pow_mod(t, b, m);
      std::vector<long long> e(n * n);
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
          std::size_t a = (a_of[g] + tpow[b_of[g]] * a_of[h]) % m;
          std::size_t b = (b_of[g] + b_of[h]) % c;
          e[g * n + h] = (long long)index[a * c + b];
        }
      return detail::must_validate(n, std::move(e), spec.to_string());
    }
    case K::DirectProduct: {
      if (spec.factors.size() != 2) fail(ErrorCode::InvalidGroup, "DirectProduct needs exactly two factors");
      GroupTable A = build_group(spec.factors[0]);
      GroupTable B = build_group(spec.factors[1]);
      const std::size_t na = A.order(), nb = B.order(), n = na * nb;
      if (n > kMaxGroupOrder) fail(ErrorCode::InvalidGroup, spec.to_string() + ": order exceeds 256");
      std::vector<long long> e(n * n);
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
          auto ia = A.op(Element(g / nb), Element(h / nb));
          auto ib = B.op(Element(g % nb), Element(h % nb));
          e[g * n + h] = (long long)(std::size_t(ia) * nb + ib);
        }
      return detail::must_validate(n, std::move(e), spec.to_string());
    }
    case K::Heisenberg: {
      const std::size_t p = spec.p;
      if (!detail::is_prime(p)) fail(ErrorCode::InvalidGroup, spec.to_string() + ": p must be prime");
      const std::size_t n = p * p * p;
      if (n > kMaxGroupOrder) fail(ErrorCode::InvalidGroup, spec.to_string() + ": order exceeds 256");
      std::vector<long long> e(n * n);
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
          std::size_t a = g / (p * p), b = g / p % p, c = g % p;
          std::size_t a2 = h / (p * p), b2 = h / p % p, c2 = h % p;
          std::size_t ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
          e[g * n + h] = (long long)(ra * p * p + rb * p + rc);
        }
      return detail::must_validate(n, std::move(e), spec.to_string());
    }
    case K::SpecialLinear25: {
      std::vector<std::array<int, 4>> mats{{1, 0, 0, 1}};
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
          for (int c = 0; c < 5; ++c)
            for (int d = 0; d < 5; ++d)
              if (((a * d - b * c) % 5 + 5) % 5 == 1 && !(a == 1 && b == 0 && c == 0 && d == 1))
                mats.push_back({a, b, c, d});
      const std::size_t n = mats.size();
      auto code = [](const std::array<int, 4>& x) { return ((x[0] * 5 + x[1]) * 5 + x[2]) * 5 + x[3]; };
      std::vector<int> index_of(625, -1);
      for (std::size_t i = 0; i < n; ++i) index_of[std::size_t(code(mats[i]))] = int(i);
      std::vector<long long> e(n * n);
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
          const auto& x = mats[g];
          const auto& y = mats[h];
          std::array<int, 4> z{(x[0] * y[0] + x[1] * y[2]) % 5, (x[0] * y[1] + x[1] * y[3]) % 5,
                               (x[2] * y[0] + x[3] * y[2]) % 5, (x[2] * y[1] + x[3] * y[3]) % 5};
          e[g * n + h] = index_of[std::size_t(code(z))];
        }
      return detail::must_validate(n, std::move(e), spec.to_string());
    }
    case K::Imported: {
      auto check = read_cayley_table_file(spec.path);
      if (!check.ok()) fail(ErrorCode::InvalidGroup, "malformed import " + spec.path + ": " + check.diagnostic->message);
      return std::move(*check.group);
    }
  }
  fail(ErrorCode::InvalidGroup, "unknown group kind");
}

/// True when g is exactly the addition table of Z_n.
inline bool is_standard_cyclic(const GroupTable& g) {
  const std::size_t n = g.order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.op(Element(i), Element(j)) != (i + j) % n) return false;
  return true;
}

}  // namespace steiner
