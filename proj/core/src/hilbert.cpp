#include "qtherm/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qtherm {

namespace {

void check_finite(const Matrix& m, const char* who) {
  if (!m.allFinite()) throw domain_error(std::string(who) + ": non-finite entries");
}

void check_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw dimension_error(std::string(who) + ": matrix must be square and non-empty");
}

}  // namespace

Operator::Operator(Matrix m) : m_(std::move(m)) {
  check_square(m_, "Operator");
  check_finite(m_, "Operator");
}

bool Operator::hermitian(double tol) const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Operator Operator::identity(int dim) { return Operator(Matrix::Identity(dim, dim)); }

Operator Operator::diagonal(const std::vector<double>& energies) {
  Matrix m = Matrix::Zero(static_cast<int>(energies.size()), static_cast<int>(energies.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = energies[static_cast<size_t>(i)];
  return Operator(std::move(m));
}

Operator operator+(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw dimension_error("Operator+: dimension mismatch");
  return Operator(a.m_ + b.m_);
}
Operator operator-(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw dimension_error("Operator-: dimension mismatch");
  return Operator(a.m_ - b.m_);
}
Operator operator*(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw dimension_error("Operator*: dimension mismatch");
  return Operator(a.m_ * b.m_);
}
Operator operator*(Complex c, const Operator& a) { return Operator(c * a.m_); }
Operator operator*(double c, const Operator& a) { return Operator(c * a.m_); }

DensityMatrix::DensityMatrix(Matrix m) : m_(std::move(m)) {
  check_square(m_, "DensityMatrix");
  check_finite(m_, "DensityMatrix");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
    throw domain_error("DensityMatrix: not hermitian within 1e-12");
  if (std::abs(m_.trace().real() - 1.0) > kTraceTol || std::abs(m_.trace().imag()) > kTraceTol)
    throw domain_error("DensityMatrix: trace != 1 within 1e-10");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kPositivityTol)
    throw domain_error("DensityMatrix: negative eigenvalue below -1e-10");
}

DensityMatrix DensityMatrix::pure(const Vector& state) {
  double n = state.norm();
  if (n == 0.0) throw domain_error("DensityMatrix::pure: zero vector");
  Vector psi = state / n;
  return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

int HilbertFactorization::total_dim() const {
  int d = 1;
  for (int k : dims) {
    if (k <= 0) throw dimension_error("HilbertFactorization: non-positive factor dim");
    d *= k;
  }
  return d;
}

void HilbertFactorization::check_against(int dim) const {
  if (total_dim() != dim)
    throw dimension_error("HilbertFactorization: product of factor dims != total dim");
}

Operator pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return Operator(m);
}
Operator pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return Operator(m);
}
Operator pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return Operator(m);
}
Operator sigma_plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 0) = 1;
  return Operator(m);
}
Operator sigma_minus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1;
  return Operator(m);
}
Operator tls_hamiltonian(double gap) {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 1) = gap;
  return Operator(m);
}

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Operator tensor_product(const Operator& a, const Operator& b) {
  return Operator(tensor_product(a.mat(), b.mat()));
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(tensor_product(a.mat(), b.mat()));
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const HilbertFactorization& fact,
                            const std::vector<int>& keep) {
  fact.check_against(rho.dim());
  const int nfac = static_cast<int>(fact.dims.size());
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= nfac)
      throw dimension_error("partial_trace: keep index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw dimension_error("partial_trace: keep indices must be strictly increasing");
  }

  int dkeep = 1;
  for (int k : keep) dkeep *= fact.dims[static_cast<size_t>(k)];

  // strides of each factor in the full index
  std::vector<int> stride(static_cast<size_t>(nfac), 1);
  for (int f = nfac - 2; f >= 0; --f)
    stride[static_cast<size_t>(f)] =
        stride[static_cast<size_t>(f + 1)] * fact.dims[static_cast<size_t>(f + 1)];

  std::vector<int> traced;
  for (int f = 0; f < nfac; ++f)
    if (std::find(keep.begin(), keep.end(), f) == keep.end()) traced.push_back(f);

  auto full_index = [&](const std::vector<int>& kept_idx, const std::vector<int>& tr_idx) {
    int idx = 0;
    for (size_t i = 0; i < keep.size(); ++i)
      idx += kept_idx[i] * stride[static_cast<size_t>(keep[i])];
    for (size_t i = 0; i < traced.size(); ++i)
      idx += tr_idx[i] * stride[static_cast<size_t>(traced[i])];
    return idx;
  };

  auto advance = [&](std::vector<int>& idx, const std::vector<int>& which) {
    for (int i = static_cast<int>(which.size()) - 1; i >= 0; --i) {
      if (++idx[static_cast<size_t>(i)] <
          fact.dims[static_cast<size_t>(which[static_cast<size_t>(i)])])
        return true;
      idx[static_cast<size_t>(i)] = 0;
    }
    return false;
  };

  Matrix out = Matrix::Zero(dkeep, dkeep);
  std::vector<int> ki(keep.size(), 0), kj(keep.size(), 0);
  int row = 0;
  do {
    std::fill(kj.begin(), kj.end(), 0);
    int col = 0;
    do {
      Complex sum = 0;
      std::vector<int> ti(traced.size(), 0);
      if (traced.empty()) {
        sum = rho.mat()(full_index(ki, {}), full_index(kj, {}));
      } else {
        do {
          sum += rho.mat()(full_index(ki, ti), full_index(kj, ti));
        } while (advance(ti, traced));
      }
      out(row, col) = sum;
      ++col;
    } while (advance(kj, keep));
    ++row;
  } while (advance(ki, keep));

  return DensityMatrix(std::move(out));
}

HermitianEigensystem eigh(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
  if (es.info() != Eigen::Success) throw error("eigh: eigendecomposition failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

DensityMatrix gibbs_state(const Operator& h, double beta) {
  if (!h.hermitian()) throw domain_error("gibbs_state: Hamiltonian not hermitian");
  if (!std::isfinite(beta)) throw domain_error("gibbs_state: beta must be finite; use ground_state for beta -> inf");
  auto es = eigh(h.mat());
  const double emin = es.values.minCoeff();
  Eigen::VectorXd w = (-beta * (es.values.array() - emin)).exp();
  w /= w.sum();
  Matrix rho = es.vectors * w.asDiagonal() * es.vectors.adjoint();
  rho = 0.5 * (rho + rho.adjoint().eval());
  return DensityMatrix(std::move(rho));
}

DensityMatrix ground_state(const Operator& h) {
  if (!h.hermitian()) throw domain_error("ground_state: Hamiltonian not hermitian");
  auto es = eigh(h.mat());
  const double emin = es.values.minCoeff();
  const double scale = std::max(1.0, es.values.cwiseAbs().maxCoeff());
  Matrix rho = Matrix::Zero(h.dim(), h.dim());
  int count = 0;
  for (int i = 0; i < h.dim(); ++i) {
    if (es.values(i) - emin <= kHermitianTol * scale) {
      rho += es.vectors.col(i) * es.vectors.col(i).adjoint();
      ++count;
    }
  }
  rho /= static_cast<double>(count);
  return DensityMatrix(std::move(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  auto es = eigh(rho.mat());
  double s = 0;
  for (int i = 0; i < rho.dim(); ++i) {
    double p = es.values(i);
    if (p > 0) s -= p * std::log(p);
  }
  return s;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                        bool* support_violation) {
  if (rho.dim() != sigma.dim()) throw dimension_error("relative_entropy: dimension mismatch");
  if (support_violation) *support_violation = false;

  auto er = eigh(rho.mat());
  auto es = eigh(sigma.mat());

  // support check: weight of rho on sigma's null space
  double null_weight = 0;
  for (int j = 0; j < sigma.dim(); ++j) {
    if (es.values(j) <= 1e-12) {
      Vector v = es.vectors.col(j);
      null_weight += (v.adjoint() * rho.mat() * v)(0, 0).real();
    }
  }
  if (null_weight > 1e-12) {
    if (support_violation) *support_violation = true;
    return std::numeric_limits<double>::infinity();
  }

  double tr_rho_ln_rho = 0;
  for (int i = 0; i < rho.dim(); ++i) {
    double p = er.values(i);
    if (p > 0) tr_rho_ln_rho += p * std::log(p);
  }
  double tr_rho_ln_sigma = 0;
  for (int j = 0; j < sigma.dim(); ++j) {
    double q = es.values(j);
    if (q > 1e-12) {
      Vector v = es.vectors.col(j);
      tr_rho_ln_sigma += std::log(q) * (v.adjoint() * rho.mat() * v)(0, 0).real();
    }
  }
  return tr_rho_ln_rho - tr_rho_ln_sigma;
}

Complex expectation(const DensityMatrix& rho, const Operator& obs) {
  if (rho.dim() != obs.dim()) throw dimension_error("expectation: dimension mismatch");
  return (rho.mat() * obs.mat()).trace();
}

}  // namespace qtherm
