#ifndef HTCP_HLCP_HPP
#define HTCP_HLCP_HPP

#include <vector>

#include "htcp/types.hpp"

namespace htcp {

/// Horizontal LCP data: find x ^ y = 0 with A x - B y = q.
struct HLCPInstance {
  MatrixN A;
  MatrixN B;
  VectorN q;

  HLCPInstance(MatrixN a, MatrixN b, VectorN rhs);
  int dim() const { return static_cast<int>(q.size()); }
};

struct HLCPResult {
  std::vector<SolutionPair> solutions;          // canonical order: by pattern mask
  std::vector<Pattern> degenerate_patterns;     // singular M(alpha) with a consistent system
  long patterns_scanned = 0;
};

/// Exact solver by complementary-pattern enumeration: for each support split
/// the sign-fixed system M(alpha) w = q is solved directly; solutions with
/// w >= -tol are kept (then clamped to restore exact complementarity).
/// Singular-but-consistent patterns carry whole solution subspaces and are
/// reported as degenerate instead of being searched. Guard: n <= 24.
HLCPResult solve_hlcp_enumerate(const HLCPInstance& inst, double tol = 1e-9);

struct HLCPUniqueness {
  bool unique = false;
  std::vector<SolutionPair> witnesses;
  std::vector<Pattern> degenerate_patterns;
};

/// True only when enumeration finds exactly one solution and no degenerate
/// pattern; degeneracy is treated as "not unique".
HLCPUniqueness hlcp_is_unique(const HLCPInstance& inst, double tol = 1e-9);

}  // namespace htcp

#endif  // HTCP_HLCP_HPP
