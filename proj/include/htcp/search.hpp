#ifndef HTCP_SEARCH_HPP
#define HTCP_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "htcp/rng.hpp"
#include "htcp/tensor.hpp"

namespace htcp {

using ResidualFn = std::function<VectorN(const VectorN&)>;
using JacobianFn = std::function<MatrixN(const VectorN&)>;

struct RootOptions {
  double tol = 1e-9;        // infinity-norm residual for acceptance
  int max_iters = 100;
  int max_halvings = 30;
  double blowup = 1e9;      // abandon when the iterate norm passes this
  bool renormalize = false; // project iterates back to the unit sphere (cone-shaped zero sets)
};

/// Damped Newton on a square system; falls back to a gradient step when the
/// Newton system is singular. Returns the root only if the residual meets tol.
std::optional<VectorN> newton_root(const ResidualFn& f, const JacobianFn& jac, VectorN z,
                                   const RootOptions& opt, long* iters_out = nullptr);

/// Levenberg-Marquardt root finding for (possibly non-square) residual
/// stacks. Accepts only zero-residual limits, not mere local minima.
std::optional<VectorN> lm_root(const ResidualFn& f, const JacobianFn& jac, VectorN z,
                               const RootOptions& opt, long* iters_out = nullptr);

/// Appends v unless an existing entry is within inf-distance tol.
bool dedup_append(std::vector<VectorN>& list, const VectorN& v, double tol);

VectorN random_box_point(Rng& rng, int dim, double radius);      // uniform in [-r, r]^dim
VectorN random_unit_vector(Rng& rng, int dim);                   // uniform on the sphere

struct MultistartOptions {
  int count = 64;
  double radius = 10.0;
  std::uint64_t seed = 0;
  std::uint64_t stream_tag = 0;  // decorrelates phases sharing one seed
  int workers = 1;
  double dedup_tol = 1e-7;
  RootOptions root;
  bool sphere_starts = false;    // draw starts on the unit sphere instead of the box
  bool use_lm = false;           // LM instead of square Newton
};

struct MultistartResult {
  std::vector<VectorN> roots;  // deduplicated, in first-found (start-index) order
  long starts = 0;
  long iterations = 0;
};

/// Runs newton_root/lm_root from deterministic pseudo-random starts. The
/// result is independent of the worker count: roots are merged in start-index
/// order.
MultistartResult multistart_roots(int dim, const ResidualFn& f, const JacobianFn& jac,
                                  const MultistartOptions& opt,
                                  const std::vector<VectorN>& extra_starts = {});

/// Minimum of f over a dense spherical-coordinate grid on the unit sphere of
/// R^dim. f receives the ambient point. Used for the exhaustive n <= 2
/// certificates; the caller compares against a Lipschitz margin.
struct GridScanResult {
  double min_value = 0.0;
  VectorN argmin;
  std::uint64_t cells = 0;
  double covering_radius = 0.0;  // bound on distance from any sphere point to the grid
};
GridScanResult sphere_grid_scan(int ambient_dim, double step,
                                const std::function<double(std::span<const double>)>& f);

/// Minimum of f over the axis-aligned grid [0, radius]^dim with the given step.
GridScanResult box_grid_scan(int dim, double radius, double step,
                             const std::function<double(std::span<const double>)>& f);

/// Row-wise Lipschitz bound (2-norm, on the unit ball) for x -> T x^{m-1}:
/// (m-1) * max_i sum_j |t_{i,j...}|.
double power_map_lipschitz(const Tensor& t);

}  // namespace htcp

#endif  // HTCP_SEARCH_HPP
