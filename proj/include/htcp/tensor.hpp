#ifndef HTCP_TENSOR_HPP
#define HTCP_TENSOR_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

namespace htcp {

using VectorN = Eigen::VectorXd;
using MatrixN = Eigen::MatrixXd;

/// Dense real tensor of order m >= 2 and dimension n, stored row-major with
/// the first index slowest. Indices are 0-based everywhere, including files.
class Tensor {
 public:
  Tensor(int order, int dim);                                // zero tensor
  Tensor(int order, int dim, std::vector<double> entries);   // validates size and finiteness

  static Tensor identity(int order, int dim);                // 1 on the main diagonal
  static Tensor from_matrix(const MatrixN& m);               // order-2 view of a square matrix

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }

  double operator()(std::span<const int> idx) const { return entries_[flat_index(idx)]; }
  double& at(std::span<const int> idx) { return entries_[flat_index(idx)]; }
  double& at(std::initializer_list<int> idx) { return at(std::span<const int>(idx.begin(), idx.size())); }

  const std::vector<double>& entries() const { return entries_; }
  std::vector<double>& mutable_entries() { return entries_; }

  std::size_t flat_index(std::span<const int> idx) const;
  void unflatten(std::size_t flat, std::span<int> idx) const;

  bool all_finite() const;

  MatrixN as_matrix() const;  // order 2 only

  bool operator==(const Tensor& other) const {
    return order_ == other.order_ && dim_ == other.dim_ && entries_ == other.entries_;
  }

 private:
  int order_;
  int dim_;
  std::vector<double> entries_;
};

Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);
Tensor operator*(double s, const Tensor& t);

/// identity_tensor(m, n): apply_power(I, x) == power_vector(x, m-1) for all x.
Tensor identity_tensor(int order, int dim);

/// (T x^{m-1})_i = sum over trailing indices of t_{i i2...im} x_{i2}...x_{im}.
VectorN apply_power(const Tensor& t, const VectorN& x);

/// Componentwise x_i^k (sign-preserving for odd k).
VectorN power_vector(const VectorN& x, int k);

/// Componentwise real k-th root; for even k every component must be >= 0.
/// Odd k uses sign(x_i)|x_i|^{1/k}.
VectorN inverse_power_vector(const VectorN& x, int k);

VectorN hadamard(const VectorN& x, const VectorN& y);
VectorN pointwise_min(const VectorN& x, const VectorN& y);

/// Tensor-tensor product: for A of order m and B of order k (equal dims) the
/// result C has order (m-1)(k-1)+1 with
///   c_{i a1...a_{m-1}} = sum a_{i i2...im} b_{i2 a1} ... b_{im a_{m-1}},
/// each a_j a (k-1)-multi-index. Specializes to matrix*tensor and
/// tensor*matrix when either factor has order 2.
Tensor shao_product(const Tensor& a, const Tensor& b);
Tensor shao_product(const MatrixN& m, const Tensor& a);
Tensor shao_product(const Tensor& a, const MatrixN& m);

namespace detail {
// Reference definition-sum implementation; the public entry dispatches to
// faster mode-contraction paths when either factor is a matrix.
Tensor shao_product_generic(const Tensor& a, const Tensor& b);
}  // namespace detail

/// Averages the entries over all permutations of the trailing m-1 indices.
/// Preserves apply_power and makes contract_to_matrix/jacobian valid.
/// Rejects m-1 > 6 (factorial blowup; guard matches the solver scale).
Tensor partial_symmetrize(const Tensor& t);

/// (Tbar x^{m-2})_{ij} contracted over indices 3..m. Requires a partially
/// symmetric input for the Jacobian identities to hold; satisfies
/// contract_to_matrix(Tbar, x) * x == apply_power(Tbar, x).
MatrixN contract_to_matrix(const Tensor& tbar, const VectorN& x);

/// Jacobian of x -> T x^{m-1}, equal to (m-1) * (Tbar x^{m-2}).
MatrixN jacobian_matrix(const Tensor& t, const VectorN& x);

}  // namespace htcp

#endif  // HTCP_TENSOR_HPP
