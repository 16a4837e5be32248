#ifndef QTHERM_ERRORS_HPP
#define QTHERM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qtherm {

// Base for every library error.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched or inconsistent operator/state dimensions.
class dimension_error : public error {
public:
  explicit dimension_error(const std::string& what) : error(what) {}
};

// Input outside the mathematical domain of an operation
// (non-hermitian Hamiltonian, invalid probability, bad spec fields).
class domain_error : public error {
public:
  explicit domain_error(const std::string& what) : error(what) {}
};

// An integral or limit that does not exist for the given inputs.
class divergence_error : public error {
public:
  explicit divergence_error(const std::string& what) : error(what) {}
};

// Numerics converged worse than the requested tolerance.
// Carries the best estimate that was achieved.
class accuracy_error : public error {
public:
  accuracy_error(const std::string& what, double achieved)
      : error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

private:
  double achieved_;
};

// A steady-state solve found more than one stationary state.
class degenerate_steady_state_error : public error {
public:
  degenerate_steady_state_error(const std::string& what, int null_dimension)
      : error(what), null_dimension_(null_dimension) {}
  int null_dimension() const { return null_dimension_; }

private:
  int null_dimension_;
};

// Requested quantity is undefined in the machine's current operating mode
// (e.g. efficiency outside the engine regime).
class regime_error : public error {
public:
  explicit regime_error(const std::string& what) : error(what) {}
};

// Enumeration would exceed a hard size limit.
class size_error : public error {
public:
  explicit size_error(const std::string& what) : error(what) {}
};

}  // namespace qtherm

#endif
