#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "xop/context.hpp"
#include "xop/moments.hpp"
#include "xop/polynomial.hpp"

namespace xop {

struct ExceptionalResiduals {
  Real at_r;  ///< r p'(r) + alpha p(r)
  Real at_s;  ///< s p'(s) + alpha p(s)
};

/// Both exceptional-condition residuals, divided by max(1, max |coeff p|).
ExceptionalResiduals exceptional_residuals(const MonomialPoly& p, const ParameterContext& ctx);

/// Checks the eigenvalue equation l[p] = (n - 2) p as a polynomial identity.
///
/// With N = L_2^{alpha-1}(-x), multiplying the operator through by N gives
///   R = -x N p'' + [(x - alpha - 1) N + 2 x N'] p' + [2 alpha N' - 2 N] p
///       - (n - 2) N p,
/// which vanishes identically exactly when p is an eigenpolynomial. Returns
/// max|coeff R| / max|coeff (n-2) N p| (denominator 1 when that is zero).
/// Throws DomainError unless n equals the degree of p.
Real operator_identity_residual(const MonomialPoly& p, int n, const ParameterContext& ctx);

/// |<p,q>| / (||p|| ||q||) under the moment inner product.
Real orthogonality_residual(const MonomialPoly& p, const MonomialPoly& q, const MomentTable& table);

struct CheckRecord {
  std::string check;
  std::string parameters;
  std::optional<Real> residual;  ///< empty if the check raised an error
  Real tolerance;
  bool pass;
  std::string error;
};

class VerificationReport {
 public:
  void add(std::string check, std::string parameters, Real residual, Real tolerance);
  void add_failure(std::string check, std::string parameters, Real tolerance, std::string error);
  void append(const VerificationReport& other);

  const std::vector<CheckRecord>& records() const { return records_; }
  std::size_t passed() const;
  std::size_t failed() const;
  bool all_passed() const { return failed() == 0; }

 private:
  std::vector<CheckRecord> records_;
};

struct SuiteOptions {
  long precision_bits = kDefaultPrecisionBits;
  /// 0 selects adjusted_node_count().
  std::size_t quad_nodes = 0;
  /// Include the node-doubling convergence check (builds a second rule
  /// with twice as many nodes).
  bool node_doubling = true;
};

/// Runs every module invariant for each alpha over degrees 2..n_max. Errors
/// become failing records. Deterministic for fixed inputs.
VerificationReport run_suite(const std::vector<std::string>& alphas, int n_max,
                             const SuiteOptions& options = {});

}  // namespace xop
