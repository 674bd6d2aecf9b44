#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "action.hpp"
#include "common.hpp"

namespace steiner {

struct ParseOptions {
  /// Expected block size; a mismatch is an error in strict mode and a warning
  /// otherwise.
  std::optional<std::size_t> block_size;
  /// Lenient mode also strips typesetting residue such as \newline, \quad and
  /// \allowbreak, and accepts \infty.
  bool strict = false;
};

struct ParsedBlocks {
  std::vector<Block> blocks;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::string normalize_block_text(std::string_view text, bool strict) {
  std::string s(text);
  auto erase_all = [&s](std::string_view what, std::string_view with) {
    for (std::size_t pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + with.size()))
      s.replace(pos, what.size(), with);
  };
  if (!strict) {
    erase_all("\\newline", " ");
    erase_all("\\allowbreak", " ");
    erase_all("\\quad", " ");
    erase_all("\\,", " ");
    erase_all("\\infty", "inf");
    erase_all("{", " ");
    erase_all("}", " ");
  }
  erase_all("$", " ");
  return s;
}

}  // namespace detail

/// Parses "[[0, 1, 3, 13, 28, 0'], ...]" (or a single block "[0, 15, ∞]")
/// into blocks of global point indices. Points in each block come out sorted.
inline ParsedBlocks parse_blocks(std::string_view text, const PointSpace& space, const ParseOptions& opt = {}) {
  const std::string s = detail::normalize_block_text(text, opt.strict);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r')) ++pos;
  };
  auto error = [&](const std::string& what) -> void {
    fail(ErrorCode::Parse, "block list: " + what + " at offset " + std::to_string(pos));
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (pos >= s.size() || s[pos] != ch) error(std::string("expected '") + ch + "'");
    ++pos;
  };
  auto peek = [&]() -> char {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  };

  ParsedBlocks out;
  auto parse_block = [&] {
    expect('[');
    Block b;
    if (peek() == ']') error("empty block");
    for (;;) {
      skip_ws();
      std::size_t start = pos;
      while (pos < s.size() && s[pos] != ',' && s[pos] != ']' && s[pos] != '[') ++pos;
      std::string item(s.substr(start, pos - start));
      while (!item.empty() && (item.back() == ' ' || item.back() == '\t' || item.back() == '\n' || item.back() == '\r'))
        item.pop_back();
      if (item.empty()) error("empty item");
      b.push_back(space.parse_label(item));
      char c = peek();
      if (c == ',') {
        ++pos;
        continue;
      }
      if (c == ']') {
        ++pos;
        break;
      }
      error("expected ',' or ']'");
    }
    std::sort(b.begin(), b.end());
    for (std::size_t i = 1; i < b.size(); ++i)
      if (b[i] == b[i - 1]) fail(ErrorCode::Parse, "block repeats point '" + space.label(b[i]) + "'");
    if (opt.block_size && b.size() != *opt.block_size) {
      std::string msg = "block of size " + std::to_string(b.size()) + ", expected " + std::to_string(*opt.block_size);
      if (opt.strict) fail(ErrorCode::Parse, msg);
      out.warnings.push_back(msg);
    }
    out.blocks.push_back(std::move(b));
  };

  expect('[');
  std::size_t after_open = pos;
  char c = peek();
  if (c == ']') {
    ++pos;
  } else if (c == '[') {
    for (;;) {
      parse_block();
      char d = peek();
      if (d == ',') {
        ++pos;
        continue;
      }
      expect(']');
      break;
    }
  } else {
    pos = after_open - 1;
    parse_block();
  }
  skip_ws();
  if (pos != s.size()) error("trailing characters");
  return out;
}

inline std::string emit_block(const Block& block, const PointSpace& space) {
  Block b = block;
  std::sort(b.begin(), b.end());
  std::string out = "[";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) out += ", ";
    out += space.label(b[i]);
  }
  return out + "]";
}

/// Canonical text for a block list: points sorted, ", " separators, "∞" for
/// the fixed point. Block order is preserved.
inline std::string emit_blocks(const std::vector<Block>& blocks, const PointSpace& space) {
  std::string out = "[";
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ", ";
    out += emit_block(blocks[i], space);
  }
  return out + "]";
}

}  // namespace steiner
