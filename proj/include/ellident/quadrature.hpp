#ifndef ELLIDENT_QUADRATURE_HPP
#define ELLIDENT_QUADRATURE_HPP

#include <functional>
#include <stdexcept>

namespace ellident {

struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    int evaluations = 0;
};

class quadrature_error : public std::runtime_error {
public:
    explicit quadrature_error(const std::string& w) : std::runtime_error(w) {}
};

// Tanh-sinh (double-exponential) quadrature on a finite interval with level
// halving; falls back to interval bisection when a level cap is reached.
// The oracle only ever samples the integrand pointwise, so closed-form checks
// built on it cannot be circular.
QuadratureResult quad_oracle(const std::function<double(double)>& f, double lo, double hi,
                             double tol = 1e-11);

}  // namespace ellident

#endif
