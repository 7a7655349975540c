#ifndef HTCP_TYPES_HPP
#define HTCP_TYPES_HPP

#include <cstdint>
#include <string>

#include "htcp/tensor.hpp"

namespace htcp {

/// Complementarity support split of the index set: bit i set means y_i = 0
/// with x_i free (>= 0); bit clear means x_i = 0 with y_i free.
struct Pattern {
  std::uint32_t mask = 0;
  int dim = 0;

  bool x_free(int i) const { return (mask >> i) & 1u; }

  std::string to_string() const {
    std::string s(dim, 'y');
    for (int i = 0; i < dim; ++i)
      if (x_free(i)) s[i] = 'x';
    return s;
  }

  bool operator==(const Pattern&) const = default;
};

/// Derives the support split from a near-complementary point: coordinate i is
/// x-free when x_i >= y_i (so the y side is the ~zero one).
inline Pattern pattern_from_point(const VectorN& x, const VectorN& y) {
  Pattern p{0, static_cast<int>(x.size())};
  for (int i = 0; i < p.dim; ++i)
    if (x[i] >= y[i]) p.mask |= (1u << i);
  return p;
}

/// Candidate solution with residual diagnostics.
struct SolutionPair {
  VectorN x;
  VectorN y;
  double residual_complementarity = 0.0;  // ||x ^ y||_inf
  double residual_equation = 0.0;         // ||A x^{m-1} - B y^{m-1} - q||_inf
  Pattern pattern;
};

}  // namespace htcp

#endif  // HTCP_TYPES_HPP
