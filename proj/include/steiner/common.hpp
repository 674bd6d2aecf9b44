#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace steiner {

/// Index of a group element. Element 0 is always the identity.
using Element = std::uint16_t;
/// Global index of a point in a point space.
using Point = std::uint16_t;
/// A block is a sorted list of distinct points.
using Block = std::vector<Point>;

inline constexpr std::size_t kMaxGroupOrder = 256;

enum class ErrorCode {
  InvalidArgument,
  InvalidGroup,
  InvalidScenario,
  InvalidDesign,
  Parse,
  Io,
  Inadmissible,
  CapExceeded,
  NotFound,
  ImportRequired,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline std::string join_points(const Block& block, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(block[i]);
  }
  return out;
}

}  // namespace steiner
