#include "htcp/search.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "htcp/parallel.hpp"

namespace htcp {

namespace {

bool finite(const VectorN& v) { return v.allFinite(); }

double inf_norm(const VectorN& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

void maybe_renormalize(VectorN& z, bool on) {
  if (!on) return;
  double nrm = z.norm();
  if (nrm > 1e-14) z /= nrm;
}

}  // namespace

std::optional<VectorN> newton_root(const ResidualFn& f, const JacobianFn& jac, VectorN z,
                                   const RootOptions& opt, long* iters_out) {
  maybe_renormalize(z, opt.renormalize);
  VectorN r = f(z);
  if (!finite(r)) return std::nullopt;
  double rn = r.norm();
  long iters = 0;
  for (int it = 0; it < opt.max_iters; ++it) {
    ++iters;
    if (inf_norm(r) <= opt.tol) break;
    MatrixN J = jac(z);
    Eigen::FullPivLU<MatrixN> lu(J);
    VectorN step;
    bool have_newton = lu.isInvertible();
    if (have_newton) {
      step = lu.solve(-r);
    } else {
      // gradient of 0.5||f||^2; scaled to a unit-ish move
      VectorN g = J.transpose() * r;
      double gn = g.norm();
      if (gn < 1e-16) break;
      step = -g * (std::min(1.0, rn) / gn);
    }
    if (!finite(step)) break;
    double t = 1.0;
    bool accepted = false;
    for (int h = 0; h <= opt.max_halvings; ++h) {
      VectorN zc = z + t * step;
      maybe_renormalize(zc, opt.renormalize);
      VectorN rc = f(zc);
      if (finite(rc) && rc.norm() < rn) {
        z = zc;
        r = rc;
        rn = rc.norm();
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;
    if (z.norm() > opt.blowup) break;
  }
  if (iters_out) *iters_out += iters;
  if (inf_norm(r) <= opt.tol && finite(z)) return z;
  return std::nullopt;
}

std::optional<VectorN> lm_root(const ResidualFn& f, const JacobianFn& jac, VectorN z,
                               const RootOptions& opt, long* iters_out) {
  maybe_renormalize(z, opt.renormalize);
  VectorN r = f(z);
  if (!finite(r)) return std::nullopt;
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  long iters = 0;
  const int dim = static_cast<int>(z.size());
  for (int it = 0; it < opt.max_iters; ++it) {
    ++iters;
    if (inf_norm(r) <= opt.tol) break;
    MatrixN J = jac(z);
    MatrixN JtJ = J.transpose() * J;
    VectorN g = J.transpose() * r;
    if (g.norm() < 1e-15) break;  // stationary but nonzero residual: reject later
    bool moved = false;
    for (int attempt = 0; attempt < 25; ++attempt) {
      MatrixN M = JtJ + lambda * MatrixN::Identity(dim, dim);
      VectorN step = M.ldlt().solve(-g);
      VectorN zc = z + step;
      maybe_renormalize(zc, opt.renormalize);
      VectorN rc = f(zc);
      if (finite(rc) && rc.squaredNorm() < cost) {
        z = zc;
        r = rc;
        cost = rc.squaredNorm();
        lambda = std::max(lambda * 0.3, 1e-12);
        moved = true;
        break;
      }
      lambda *= 4.0;
      if (lambda > 1e12) break;
    }
    if (!moved) break;
    if (z.norm() > opt.blowup) break;
  }
  if (iters_out) *iters_out += iters;
  if (inf_norm(r) <= opt.tol && finite(z)) return z;
  return std::nullopt;
}

bool dedup_append(std::vector<VectorN>& list, const VectorN& v, double tol) {
  for (const auto& u : list)
    if (u.size() == v.size() && inf_norm(u - v) <= tol) return false;
  list.push_back(v);
  return true;
}

VectorN random_box_point(Rng& rng, int dim, double radius) {
  VectorN v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.uniform(-radius, radius);
  return v;
}

VectorN random_unit_vector(Rng& rng, int dim) {
  VectorN v(dim);
  double nrm = 0.0;
  do {
    for (int i = 0; i < dim; ++i) v[i] = rng.normal();
    nrm = v.norm();
  } while (nrm < 1e-12);
  return v / nrm;
}

MultistartResult multistart_roots(int dim, const ResidualFn& f, const JacobianFn& jac,
                                  const MultistartOptions& opt,
                                  const std::vector<VectorN>& extra_starts) {
  const std::size_t total = extra_starts.size() + static_cast<std::size_t>(opt.count);
  struct StartOutcome {
    std::optional<VectorN> root;
    long iters = 0;
  };
  std::function<StartOutcome(std::size_t)> run = [&](std::size_t i) {
    VectorN z0;
    if (i < extra_starts.size()) {
      z0 = extra_starts[i];
    } else {
      Rng rng(derive_seed(opt.seed, opt.stream_tag, i - extra_starts.size()));
      z0 = opt.sphere_starts ? random_unit_vector(rng, dim) : random_box_point(rng, dim, opt.radius);
    }
    StartOutcome oc;
    oc.root = opt.use_lm ? lm_root(f, jac, z0, opt.root, &oc.iters)
                         : newton_root(f, jac, z0, opt.root, &oc.iters);
    return oc;
  };
  auto outcomes = parallel_map<StartOutcome>(total, opt.workers, run);
  MultistartResult res;
  res.starts = static_cast<long>(total);
  for (const auto& oc : outcomes) {
    res.iterations += oc.iters;
    if (oc.root) dedup_append(res.roots, *oc.root, opt.dedup_tol);
  }
  return res;
}

GridScanResult sphere_grid_scan(int ambient_dim, double step,
                                const std::function<double(std::span<const double>)>& f) {
  if (ambient_dim < 1) throw std::invalid_argument("sphere_grid_scan: dim >= 1 required");
  GridScanResult out;
  if (ambient_dim == 1) {
    const double plus = 1.0, minus = -1.0;
    double fp = f(std::span<const double>(&plus, 1));
    double fm = f(std::span<const double>(&minus, 1));
    out.cells = 2;
    out.min_value = std::min(fp, fm);
    out.argmin = VectorN::Constant(1, fp <= fm ? 1.0 : -1.0);
    out.covering_radius = 0.0;
    return out;
  }
  const int nang = ambient_dim - 1;
  const double pi = 3.14159265358979323846;
  std::vector<int> counts(nang);
  for (int a = 0; a < nang; ++a) {
    double range = (a == nang - 1) ? 2.0 * pi : pi;
    counts[a] = static_cast<int>(std::ceil(range / step)) + 1;
  }
  std::vector<int> it(nang, 0);
  std::vector<double> theta(nang, 0.0), point(ambient_dim, 0.0);
  double best = std::numeric_limits<double>::infinity();
  VectorN argmin = VectorN::Zero(ambient_dim);
  std::uint64_t cells = 0;
  for (;;) {
    for (int a = 0; a < nang; ++a) theta[a] = it[a] * step;
    // spherical coordinates: x_k = (prod_{j<k} sin t_j) * cos t_k, last uses sin
    double prod = 1.0;
    for (int k = 0; k < nang; ++k) {
      point[k] = prod * std::cos(theta[k]);
      prod *= std::sin(theta[k]);
    }
    point[nang] = prod;
    double v = f(std::span<const double>(point.data(), point.size()));
    ++cells;
    if (v < best) {
      best = v;
      for (int k = 0; k < ambient_dim; ++k) argmin[k] = point[k];
    }
    int pos = nang - 1;
    while (pos >= 0 && ++it[pos] == counts[pos]) it[pos--] = 0;
    if (pos < 0) break;
  }
  out.min_value = best;
  out.argmin = argmin;
  out.cells = cells;
  // each angle is within step/2 of a node and the chart is 1-Lipschitz per angle
  out.covering_radius = nang * step * 0.5;
  return out;
}

GridScanResult box_grid_scan(int dim, double radius, double step,
                             const std::function<double(std::span<const double>)>& f) {
  GridScanResult out;
  const int count = static_cast<int>(std::floor(radius / step)) + 1;
  std::vector<int> it(dim, 0);
  std::vector<double> point(dim, 0.0);
  double best = std::numeric_limits<double>::infinity();
  VectorN argmin = VectorN::Zero(dim);
  std::uint64_t cells = 0;
  for (;;) {
    for (int a = 0; a < dim; ++a) point[a] = it[a] * step;
    double v = f(std::span<const double>(point.data(), point.size()));
    ++cells;
    if (v < best) {
      best = v;
      for (int k = 0; k < dim; ++k) argmin[k] = point[k];
    }
    int pos = dim - 1;
    while (pos >= 0 && ++it[pos] == count) it[pos--] = 0;
    if (pos < 0) break;
  }
  out.min_value = best;
  out.argmin = argmin;
  out.cells = cells;
  out.covering_radius = dim * step * 0.5;
  return out;
}

double power_map_lipschitz(const Tensor& t) {
  const int n = t.dim();
  const std::size_t rowlen = t.size() / n;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    const double* row = t.entries().data() + static_cast<std::size_t>(i) * rowlen;
    for (std::size_t j = 0; j < rowlen; ++j) s += std::abs(row[j]);
    worst = std::max(worst, s);
  }
  return (t.order() - 1) * worst;
}

}  // namespace htcp
