#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace ucoulomb {

using cplx = std::complex<double>;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct pole_at_nonpositive_integer : error {
  cplx z;
  explicit pole_at_nonpositive_integer(cplx z_)
      : error("gamma pole at non-positive integer, z = (" +
              std::to_string(z_.real()) + ", " + std::to_string(z_.imag()) + ")"),
        z(z_) {}
};

struct b_nonpositive_integer : error {
  using error::error;
};

struct no_convergence : error {
  int max_terms;
  explicit no_convergence(int n)
      : error("series did not converge within " + std::to_string(n) + " terms"),
        max_terms(n) {}
};

struct non_positive_epsilon : error {
  using error::error;
};

struct integer_two_l : error {
  using error::error;
};

struct zero_wavenumber : error {
  zero_wavenumber() : error("wavenumber k must be nonzero") {}
};

struct at_bound_state_pole : error {
  using error::error;
};

struct wrong_side : error {
  using error::error;
};

struct empty_family : error {
  using error::error;
};

struct step_underflow : error {
  using error::error;
};

struct ill_conditioned_matching : error {
  using error::error;
};

struct invalid_config : error {
  using error::error;
};

}  // namespace ucoulomb
