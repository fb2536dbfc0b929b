#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "fibfull/degeneration.hpp"
#include "fibfull/groebner.hpp"
#include "fibfull/order.hpp"

namespace fibfull::cli {

/// Parsed ideal or family file. Generators are kept in nx + 1 variables with
/// the parameter t last; `intersect` lines split them into blocks.
struct InputFile {
  std::string path;
  Field field = Field::rationals();
  std::size_t nx = 0;
  std::optional<std::string> order;
  std::vector<std::vector<Poly>> blocks;
  bool uses_t = false;

  /// Intersection of the blocks; rejects files that mention t.
  Ideal ideal() const;
  /// Family over k[t]; a file without t gives the constant family.
  FamilyIdeal family() const;
  MonomialOrder monomial_order(const std::string& fallback) const;
};

/// Header lines: `field Q` or `field F p`, `ring x0..xN`, optional
/// `order ...`; then one generator per line. `#` starts a comment.
/// Errors are InputError with "path:line:" prefixes.
InputFile parse_input(std::istream& in, const std::string& path);
InputFile read_input(const std::string& path);

}  // namespace fibfull::cli
