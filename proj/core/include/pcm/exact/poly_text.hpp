#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pcm/exact/poly.hpp"

namespace pcm::exact {

/// Lexical or syntactic error in polynomial text. `offset` is the 0-based
/// character position inside the parsed string.
class PolySyntaxError : public std::runtime_error {
 public:
  PolySyntaxError(const std::string& what, std::size_t offset, bool lexical = false)
      : std::runtime_error(what), offset_(offset), lexical_(lexical) {}
  std::size_t offset() const { return offset_; }
  bool lexical() const { return lexical_; }

 private:
  std::size_t offset_;
  bool lexical_;
};

struct PolyParseOptions {
  /// Only `sqrt<radicand>` literals with this radicand are accepted; 0 accepts any.
  std::int64_t radicand = 0;
};

/// Parses integers, `a/b` rationals, `sqrtD`, variable names from `vars`,
/// `+ - * ^` and parentheses. A numeric literal may directly prefix a name
/// ("2y"); any other juxtaposition is rejected.
Poly parse_poly(std::string_view text, const VarList& vars, PolyParseOptions options = {});

/// Parses a variable-free expression.
Scalar parse_scalar(std::string_view text, PolyParseOptions options = {});

}  // namespace pcm::exact
