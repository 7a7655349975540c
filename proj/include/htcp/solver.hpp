#ifndef HTCP_SOLVER_HPP
#define HTCP_SOLVER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "htcp/hlcp.hpp"
#include "htcp/types.hpp"

namespace htcp {

/// One problem: find x ^ y = 0 with A x^{m-1} - B y^{m-1} = q.
struct HTCPInstance {
  Tensor A;
  Tensor B;
  VectorN q;

  HTCPInstance(Tensor a, Tensor b, VectorN rhs);
  int order() const { return A.order(); }
  int dim() const { return A.dim(); }
};

struct SolverConfig {
  double tol_residual = 1e-9;
  double tol_dedup = 1e-7;
  int max_newton_iters = 100;
  int multistart_count = 64;
  std::uint64_t rng_seed = 0;
  int homotopy_steps = 50;
  double search_radius = 10.0;
  int worker_count = 1;  // execution hint only; results do not depend on it
};

enum class SolveStatus { Found, NoneFound, ProvenEmpty, GuardExceeded };

std::string to_string(SolveStatus s);

struct SolveEffort {
  long iterations = 0;
  long starts = 0;
  long patterns = 0;
  long homotopy_steps_taken = 0;
  std::uint64_t grid_cells = 0;
};

struct SolveReport {
  SolveStatus status = SolveStatus::NoneFound;
  std::vector<SolutionPair> solutions;
  SolveEffort effort;
  // homotopy only: last successfully corrected path point when the path stalls
  double last_path_t = -1.0;
  VectorN last_path_point;
};

/// Stacked residual of dimension 2n: rows 0..n-1 are x ^ y, rows n..2n-1 are
/// A x^{m-1} - B y^{m-1} - q. Zero exactly at solutions.
VectorN residual(const HTCPInstance& inst, const VectorN& x, const VectorN& y);

/// Clarke-selection Jacobian of the residual: row i of the top block picks
/// d/dx_i when x_i <= y_i (ties go to x) and d/dy_i otherwise; the bottom
/// blocks are the power-map Jacobians of A and -B.
MatrixN generalized_jacobian(const HTCPInstance& inst, const VectorN& x, const VectorN& y);

/// Semismooth Newton from one start.
SolveReport solve_newton(const HTCPInstance& inst, const VectorN& x0, const VectorN& y0,
                         const SolverConfig& cfg);

/// Semismooth Newton from cfg.multistart_count starts drawn uniformly from
/// [-r, r]^{2n}, r = cfg.search_radius.
SolveReport solve_newton_multistart(const HTCPInstance& inst, const SolverConfig& cfg);

/// Predictor-corrector continuation in t for A x^{m-1} - B y^{m-1} = t q,
/// starting from the homogeneous solution (0, 0) at t = 0. Step halving on
/// corrector failure; aborts below step 1/(100 * homotopy_steps) with the last
/// good path point in the report.
SolveReport solve_homotopy(const HTCPInstance& inst, const SolverConfig& cfg);

/// Enumerates all 2^n complementarity patterns and solves each reduced square
/// polynomial system by multistart Newton. ProvenEmpty is claimed only when
/// every pattern exhausted its budget with no root, n <= 2, and a dense grid
/// scan over [0, search_radius]^n per pattern stayed above 10 * tol.
/// Guards: n <= 12, m <= 6.
SolveReport solve_pattern_enumeration(const HTCPInstance& inst, const SolverConfig& cfg);

/// Both residuals <= tol and min(x, y) >= -tol componentwise.
bool verify_solution(const HTCPInstance& inst, const SolutionPair& pair, double tol);

/// Recomputes both residuals and the pattern for (x, y) on this instance.
SolutionPair make_solution(const HTCPInstance& inst, const VectorN& x, const VectorN& y);

/// (x, y) solves (A, B, q)  =>  (mu x, mu y) solves (A, B, mu^{m-1} q).
HTCPInstance scale_instance(const HTCPInstance& inst, double mu);
SolutionPair scale_solution(const SolutionPair& pair, double mu, int order);

/// TCP(B, q) bridge: y solves the TCP iff ((B y^{m-1} + q)^{[1/(m-1)]}, y)
/// solves HTCP(I, B, q). Requires even order and B y^{m-1} + q >= 0.
SolutionPair tcp_bridge_to_htcp(const Tensor& B, const VectorN& q, const VectorN& y);
VectorN tcp_bridge_from_htcp(const SolutionPair& pair);

}  // namespace htcp

#endif  // HTCP_SOLVER_HPP
