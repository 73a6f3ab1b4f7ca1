#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcm/structure.hpp"

namespace pcm::io {

/// Positioned diagnostic; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { kLexical, kSyntax, kSemantic };
  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

enum class Mode { kLieAlgebra, kCoordinates };

/// Parsed contents of a structure file.
///
///   mode lie_algebra | coordinates
///   radical 2                        (optional, default 2)
///   dim 3
///   names e1 e2 xi
///   coords x y z                     (coordinates mode)
///   field e1 = 1, x*z, -2*y          (coordinates mode, one per frame element)
///   bracket xi X1 = 0, 0, 1          (lie_algebra mode; omitted brackets are zero)
///   phi                              (followed by dim rows; row k holds the
///     ...                             E_k-components of phi E_0 .. phi E_{dim-1})
///   xi = 0, 0, 1
///   eta = 0, 0, 1
///   metric                           (followed by dim rows of scalars)
///     ...
///
/// '#' starts a comment.
struct StructureFile {
  Mode mode = Mode::kLieAlgebra;
  std::int64_t radicand = 2;
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::vector<std::string> coords;
  std::vector<FieldVec> fields;          // coordinates mode
  StructureConstants brackets;           // lie_algebra mode
  PolyMatrix phi;
  FieldVec xi;
  std::vector<Poly> eta;
  ConstMatrix metric;

  /// Source lines of the sections, used to position build diagnostics.
  std::size_t frame_line = 1;
  std::size_t metric_line = 1;
  std::size_t phi_line = 1;
};

/// Syntactic and semantic validation. Throws ParseError.
StructureFile parse_structure(std::string_view text);

/// Builds the frame and structure; construction failures (Jacobi identity,
/// non-constant frame determinant, degenerate metric) become positioned ParseErrors.
ParacontactData build_structure(const StructureFile& file);

/// parse_structure followed by build_structure.
ParacontactData load_structure(std::string_view text);

StructureFile to_file(const ParacontactData& s);

/// Canonical text; parse_structure(emit(f)) reproduces f.
std::string emit(const StructureFile& file);
std::string emit(const ParacontactData& s);

}  // namespace pcm::io
