#include "udngc/quadrature.hpp"

#include <sstream>

#include "udngc/core/error.hpp"

namespace udngc::quadrature {

void require_converged(const Result& r, const std::string& what, const Options& opts) {
  if (r.converged && std::isfinite(r.value)) return;
  std::ostringstream msg;
  msg.precision(6);
  msg << what << ": quadrature did not converge (value=" << r.value
      << ", abs_error=" << r.abs_error << ", rel_tol=" << opts.rel_tol
      << ", intervals=" << r.intervals << ", evaluations=" << r.evaluations << ")";
  throw NumericalError(msg.str());
}

}  // namespace udngc::quadrature
