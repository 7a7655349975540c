#include "htcp/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace htcp {

namespace {

constexpr int kMaxProductOrder = 12;
constexpr std::size_t kMaxProductEntries = std::size_t{1} << 27;  // ~134M doubles

std::size_t pow_size(int dim, int order) {
  std::size_t s = 1;
  for (int i = 0; i < order; ++i) {
    if (s > kMaxProductEntries / static_cast<std::size_t>(dim))
      throw std::length_error("tensor too large: " + std::to_string(dim) + "^" + std::to_string(order));
    s *= static_cast<std::size_t>(dim);
  }
  return s;
}

void check_dims(const Tensor& t, const VectorN& x) {
  if (x.size() != t.dim())
    throw std::invalid_argument("vector dim " + std::to_string(x.size()) + " != tensor dim " +
                                std::to_string(t.dim()));
}

}  // namespace

Tensor::Tensor(int order, int dim) : order_(order), dim_(dim) {
  if (order < 2) throw std::invalid_argument("tensor order must be >= 2");
  if (dim < 1) throw std::invalid_argument("tensor dim must be >= 1");
  entries_.assign(pow_size(dim, order), 0.0);
}

Tensor::Tensor(int order, int dim, std::vector<double> entries) : Tensor(order, dim) {
  if (entries.size() != entries_.size())
    throw std::invalid_argument("entry count " + std::to_string(entries.size()) + " != dim^order");
  entries_ = std::move(entries);
  if (!all_finite()) throw std::invalid_argument("tensor entries must be finite");
}

Tensor Tensor::identity(int order, int dim) {
  Tensor t(order, dim);
  for (int i = 0; i < dim; ++i) {
    std::size_t flat = 0;
    for (int k = 0; k < order; ++k) flat = flat * dim + i;
    t.entries_[flat] = 1.0;
  }
  return t;
}

Tensor Tensor::from_matrix(const MatrixN& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  int n = static_cast<int>(m.rows());
  Tensor t(2, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.entries_[static_cast<std::size_t>(i) * n + j] = m(i, j);
  return t;
}

std::size_t Tensor::flat_index(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != order_) throw std::invalid_argument("index arity != tensor order");
  std::size_t flat = 0;
  for (int k = 0; k < order_; ++k) {
    if (idx[k] < 0 || idx[k] >= dim_) throw std::out_of_range("tensor index out of range");
    flat = flat * dim_ + static_cast<std::size_t>(idx[k]);
  }
  return flat;
}

void Tensor::unflatten(std::size_t flat, std::span<int> idx) const {
  for (int k = order_ - 1; k >= 0; --k) {
    idx[k] = static_cast<int>(flat % dim_);
    flat /= dim_;
  }
}

bool Tensor::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](double v) { return std::isfinite(v); });
}

MatrixN Tensor::as_matrix() const {
  if (order_ != 2) throw std::invalid_argument("as_matrix requires an order-2 tensor");
  MatrixN m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = entries_[static_cast<std::size_t>(i) * dim_ + j];
  return m;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
  if (a.order() != b.order() || a.dim() != b.dim())
    throw std::invalid_argument("tensor shape mismatch in addition");
  Tensor out(a.order(), a.dim());
  for (std::size_t i = 0; i < a.size(); ++i) out.mutable_entries()[i] = a.entries()[i] + b.entries()[i];
  return out;
}

Tensor operator-(const Tensor& a, const Tensor& b) { return a + (-1.0 * b); }

Tensor operator*(double s, const Tensor& t) {
  Tensor out(t.order(), t.dim());
  for (std::size_t i = 0; i < t.size(); ++i) out.mutable_entries()[i] = s * t.entries()[i];
  return out;
}

Tensor identity_tensor(int order, int dim) { return Tensor::identity(order, dim); }

VectorN apply_power(const Tensor& t, const VectorN& x) {
  check_dims(t, x);
  const int n = t.dim();
  // contract the trailing mode m-1 times; each pass shrinks the buffer by n
  std::vector<double> cur(t.entries());
  std::size_t rows = t.size() / n;
  for (int pass = 0; pass < t.order() - 1; ++pass) {
    for (std::size_t r = 0; r < rows; ++r) {
      double acc = 0.0;
      const double* row = cur.data() + r * n;
      for (int j = 0; j < n; ++j) acc += row[j] * x[j];
      cur[r] = acc;
    }
    rows /= n;
  }
  VectorN out(n);
  for (int i = 0; i < n; ++i) out[i] = cur[i];
  return out;
}

VectorN power_vector(const VectorN& x, int k) {
  if (k < 1) throw std::invalid_argument("power_vector requires k >= 1");
  VectorN out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = std::pow(x[i], k);
  return out;
}

VectorN inverse_power_vector(const VectorN& x, int k) {
  if (k < 1) throw std::invalid_argument("inverse_power_vector requires k >= 1");
  VectorN out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (k % 2 == 0) {
      if (x[i] < 0.0)
        throw std::domain_error("negative component under even root: x[" + std::to_string(i) + "]");
      out[i] = std::pow(x[i], 1.0 / k);
    } else {
      out[i] = x[i] < 0.0 ? -std::pow(-x[i], 1.0 / k) : std::pow(x[i], 1.0 / k);
    }
  }
  return out;
}

VectorN hadamard(const VectorN& x, const VectorN& y) {
  if (x.size() != y.size()) throw std::invalid_argument("hadamard: dimension mismatch");
  return x.cwiseProduct(y);
}

VectorN pointwise_min(const VectorN& x, const VectorN& y) {
  if (x.size() != y.size()) throw std::invalid_argument("pointwise_min: dimension mismatch");
  return x.cwiseMin(y);
}

namespace detail {

Tensor shao_product_generic(const Tensor& a, const Tensor& b) {
  const int n = a.dim();
  const int m = a.order();
  const int k = b.order();
  const long result_order = static_cast<long>(m - 1) * (k - 1) + 1;
  if (result_order > kMaxProductOrder)
    throw std::length_error("shao product order " + std::to_string(result_order) + " exceeds guard");
  Tensor c(static_cast<int>(result_order), n);
  if (c.size() > kMaxProductEntries) throw std::length_error("shao product result exceeds entry guard");

  const std::size_t block = b.size() / n;  // n^{k-1}, trailing block of B per leading index
  const std::size_t inner = a.size() / n;  // n^{m-1}, trailing multi-indices of A
  std::vector<std::size_t> alpha(m - 1, 0);
  std::vector<int> digits(m - 1, 0);
  const auto& ae = a.entries();
  const auto& be = b.entries();
  auto& ce = c.mutable_entries();

  std::size_t out_flat = 0;
  for (int i = 0; i < n; ++i) {
    // iterate alpha = (a1,...,a_{m-1}), each a_j in [0, n^{k-1})
    std::fill(alpha.begin(), alpha.end(), 0);
    for (;;) {
      double acc = 0.0;
      for (std::size_t t = 0; t < inner; ++t) {
        double term = ae[static_cast<std::size_t>(i) * inner + t];
        if (term == 0.0) continue;
        std::size_t rest = t;
        for (int j = m - 2; j >= 0; --j) {
          digits[j] = static_cast<int>(rest % n);
          rest /= n;
        }
        for (int j = 0; j < m - 1 && term != 0.0; ++j)
          term *= be[static_cast<std::size_t>(digits[j]) * block + alpha[j]];
        acc += term;
      }
      ce[out_flat++] = acc;
      int pos = m - 2;
      while (pos >= 0 && ++alpha[pos] == block) alpha[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return c;
}

// c_{i ...} = sum_j m_{ij} t_{j ...}: contract the leading mode with M.
Tensor matrix_times_tensor(const MatrixN& m, const Tensor& t) {
  const int n = t.dim();
  Tensor out(t.order(), n);
  const std::size_t block = t.size() / n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double w = m(i, j);
      if (w == 0.0) continue;
      const double* src = t.entries().data() + static_cast<std::size_t>(j) * block;
      double* dst = out.mutable_entries().data() + static_cast<std::size_t>(i) * block;
      for (std::size_t s = 0; s < block; ++s) dst[s] += w * src[s];
    }
  return out;
}

// Transforms every trailing mode by M: repeatedly contract the last mode and
// rotate it to the front of the trailing block; after m-1 rounds the original
// mode order is restored with each trailing mode contracted exactly once.
Tensor tensor_times_matrix(const Tensor& t, const MatrixN& m) {
  const int n = t.dim();
  const int order = t.order();
  std::vector<double> cur(t.entries());
  std::vector<double> tmp(cur.size());
  const std::size_t rows = cur.size() / n;
  const std::size_t lead = static_cast<std::size_t>(n);            // size of mode 0
  const std::size_t trail_block = cur.size() / lead;               // n^{m-1}
  for (int round = 0; round < order - 1; ++round) {
    // contract last mode: tmp[r*n + a] = sum_t cur[r*n + t] * m(t, a)
    for (std::size_t r = 0; r < rows; ++r) {
      const double* row = cur.data() + r * n;
      double* orow = tmp.data() + r * n;
      for (int a = 0; a < n; ++a) {
        double acc = 0.0;
        for (int tt = 0; tt < n; ++tt) acc += row[tt] * m(tt, a);
        orow[a] = acc;
      }
    }
    // rotate trailing modes: (i1 | i2 ... im) -> (i1 | im i2 ... i_{m-1})
    const std::size_t sub = trail_block / n;  // n^{m-2}
    for (std::size_t l = 0; l < lead; ++l) {
      const double* src = tmp.data() + l * trail_block;
      double* dst = cur.data() + l * trail_block;
      for (std::size_t rest = 0; rest < sub; ++rest)
        for (int last = 0; last < n; ++last)
          dst[static_cast<std::size_t>(last) * sub + rest] = src[rest * n + last];
    }
  }
  return Tensor(order, n, std::move(cur));
}

}  // namespace detail

Tensor shao_product(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("shao_product: dimension mismatch");
  if (a.order() == 2) return detail::matrix_times_tensor(a.as_matrix(), b);
  if (b.order() == 2) return detail::tensor_times_matrix(a, b.as_matrix());
  return detail::shao_product_generic(a, b);
}

Tensor shao_product(const MatrixN& m, const Tensor& a) {
  if (m.rows() != a.dim() || m.cols() != a.dim())
    throw std::invalid_argument("shao_product: dimension mismatch");
  return detail::matrix_times_tensor(m, a);
}

Tensor shao_product(const Tensor& a, const MatrixN& m) {
  if (m.rows() != a.dim() || m.cols() != a.dim())
    throw std::invalid_argument("shao_product: dimension mismatch");
  return detail::tensor_times_matrix(a, m);
}

Tensor partial_symmetrize(const Tensor& t) {
  const int m = t.order();
  const int n = t.dim();
  if (m - 1 > 6) throw std::invalid_argument("partial_symmetrize limited to order <= 7");
  if (m == 2) return t;

  // all permutations of trailing positions 0..m-2
  std::vector<int> pos(m - 1);
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(pos);
  } while (std::next_permutation(pos.begin(), pos.end()));

  Tensor out(m, n);
  std::vector<int> idx(m), pidx(m);
  const double inv = 1.0 / static_cast<double>(perms.size());
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    t.unflatten(flat, idx);
    double acc = 0.0;
    pidx[0] = idx[0];
    for (const auto& p : perms) {
      for (int j = 0; j < m - 1; ++j) pidx[1 + j] = idx[1 + p[j]];
      acc += t(pidx);
    }
    out.mutable_entries()[flat] = acc * inv;
  }
  return out;
}

MatrixN contract_to_matrix(const Tensor& tbar, const VectorN& x) {
  check_dims(tbar, x);
  const int n = tbar.dim();
  std::vector<double> cur(tbar.entries());
  std::size_t rows = tbar.size() / n;
  for (int pass = 0; pass < tbar.order() - 2; ++pass) {
    for (std::size_t r = 0; r < rows; ++r) {
      double acc = 0.0;
      const double* row = cur.data() + r * n;
      for (int j = 0; j < n; ++j) acc += row[j] * x[j];
      cur[r] = acc;
    }
    rows /= n;
  }
  MatrixN out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = cur[static_cast<std::size_t>(i) * n + j];
  return out;
}

MatrixN jacobian_matrix(const Tensor& t, const VectorN& x) {
  if (t.order() == 2) return t.as_matrix();
  return (t.order() - 1) * contract_to_matrix(partial_symmetrize(t), x);
}

}  // namespace htcp
