#ifndef QTHERM_HILBERT_HPP
#define QTHERM_HILBERT_HPP

// Dense complex linear algebra and quantum-state primitives on small
// Hilbert spaces (dim <= ~64). Units: hbar = k_B = 1 throughout.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qtherm/errors.hpp"

namespace qtherm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// One numerical contract for all modules.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-10;

/// Square complex matrix acting on a Hilbert space.
class Operator {
public:
  explicit Operator(Matrix m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& mat() const { return m_; }

  Operator adjoint() const { return Operator(m_.adjoint()); }
  Complex trace() const { return m_.trace(); }
  bool hermitian(double tol = kHermitianTol) const;

  static Operator identity(int dim);
  /// diag(e_0, ..., e_{n-1})
  static Operator diagonal(const std::vector<double>& energies);

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(Complex c, const Operator& a);
  friend Operator operator*(double c, const Operator& a);

private:
  Matrix m_;
};

/// Unit-trace positive hermitian matrix. Validated at construction:
/// hermitian within 1e-12, trace 1 within 1e-10, eigenvalues >= -1e-10.
class DensityMatrix {
public:
  explicit DensityMatrix(Matrix m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& mat() const { return m_; }
  Operator as_operator() const { return Operator(m_); }

  static DensityMatrix pure(const Vector& state);
  static DensityMatrix maximally_mixed(int dim);

private:
  Matrix m_;
};

/// Ordered subsystem dimensions whose product is the total dimension.
struct HilbertFactorization {
  std::vector<int> dims;

  int total_dim() const;
  void check_against(int dim) const;  // throws dimension_error on mismatch
};

// Qubit conventions: basis index 0 = ground, 1 = excited,
// sigma_z = diag(+1,-1) so sigma_z|1> = -|1>, sigma_minus = |0><1|.
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();
Operator sigma_plus();
Operator sigma_minus();
/// H = delta |1><1| for a two-level system with gap delta.
Operator tls_hamiltonian(double gap);

/// Kronecker product a (x) b.
Operator tensor_product(const Operator& a, const Operator& b);
Matrix tensor_product(const Matrix& a, const Matrix& b);
DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// Trace out every factor not listed in `keep` (0-based, strictly increasing).
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const HilbertFactorization& fact,
                            const std::vector<int>& keep);

/// exp(-beta H)/Z via eigendecomposition. Requires hermitian H, finite beta.
/// The beta -> infinity limit is ground_state().
DensityMatrix gibbs_state(const Operator& h, double beta);

/// Uniform mixture over the lowest-eigenvalue eigenspace of H.
DensityMatrix ground_state(const Operator& h);

/// -tr[rho ln rho] in nats, with 0 ln 0 := 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// tr[rho (ln rho - ln sigma)] in nats. Support violation (support(rho)
/// not inside support(sigma), eigenvalue threshold 1e-12) returns +infinity
/// and sets *support_violation when provided.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                        bool* support_violation = nullptr);

/// tr[rho obs]; real part is the physical value for hermitian obs.
Complex expectation(const DensityMatrix& rho, const Operator& obs);

// Eigendecomposition is the single backend for functions of hermitian
// operators. Degenerate eigenvalues need no tie-breaking: entropy and
// matrix functions are basis-independent.
struct HermitianEigensystem {
  Eigen::VectorXd values;   // ascending
  Matrix vectors;           // columns
};
HermitianEigensystem eigh(const Matrix& hermitian);

}  // namespace qtherm

#endif
