#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcm/structure.hpp"

namespace pcm::catalog {

class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (2n+1)-dimensional Lie algebra with basis xi, X_1, Y_1, ..., X_n, Y_n and
/// nonzero brackets
///   [xi, X_i] = Y_i                                        i <= m
///   [X_i, Y_j] = d_ij (2 xi + sqrt2 (1 + d_im) Y_m)
///                + (1 - d_ij) sqrt2 (d_im Y_j + d_jm Y_i)  i, j <= m
///   [X_i, Y_j] = d_ij (2 xi + sqrt2 Y_i)                   i, j > m
///   [X_i, Y_j] = sqrt2 Y_i                                 i <= m < j
/// with phi X_i = X_i, phi Y_i = -Y_i, eta = xi^*, g(xi,xi) = g(X_i,Y_i) = 1.
/// A (-1, 2)-space with rank h = m. m = 0 gives the K-paracontact variant.
ParacontactData example_lie(std::size_t n, std::size_t m);

/// R^3 with e1 = d/dx + xz d/dy - 2y d/dz, e2 = d/dy, xi = d/dz,
/// eta = 2y dx + dz, g(e1,e2) = g(xi,xi) = 1, phi e1 = e1, phi e2 = -e2.
/// A (-1, 2)-space whose h has rank 1 off the plane x = 0 and 0 on it.
ParacontactData example_r3();

/// Three-dimensional (-1, 0)-space with h != 0:
/// [xi, X] = X + Y, [xi, Y] = -Y, [X, Y] = 2 xi, same phi, eta and g as example_lie.
ParacontactData example_lie_mu0();

struct Entry {
  std::string name;
  std::string description;
  /// True for specimens added on top of the standard (-1,2) family and r3.
  bool extension = false;
};

/// Resolves "lie:n=<n>,m=<m>", "r3" or "lie3-mu0".
ParacontactData lookup(std::string_view name);
Entry describe(std::string_view name);

/// Named entries used by the test and acceptance suites.
std::vector<std::string> standard_names();

}  // namespace pcm::catalog
