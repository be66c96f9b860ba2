#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "xop/basis.hpp"
#include "xop/context.hpp"
#include "xop/numerics.hpp"
#include "xop/real.hpp"

namespace xop {

/// How a moment table entry was obtained.
enum class Provenance { initial, three_term, four_term_a, four_term_b, quadrature };

std::string_view to_string(Provenance p);

/// Adjusted moments
///   mu_{i,j} = integral_0^inf (x-r)^i (x-s)^j W(x) dx,
///   W(x) = x^alpha e^(-x) / L_2^{alpha-1}(-x)^2,
/// for 0 <= i <= max_i, 0 <= j <= max_j, each tagged with its provenance.
class MomentTable {
 public:
  MomentTable(ParameterContext ctx, int max_i, int max_j);

  int max_i() const { return max_i_; }
  int max_j() const { return max_j_; }
  const ParameterContext& context() const { return ctx_; }

  /// True if (i, j) lies inside the table and has been populated.
  bool contains(int i, int j) const;
  /// Throws CoverageError if (i, j) is missing.
  const Real& operator()(int i, int j) const;
  Provenance provenance(int i, int j) const;

  /// Throws CoverageError outside the table bounds and NumericError for a
  /// non-finite value.
  void set(int i, int j, Real value, Provenance provenance);

 private:
  struct Entry {
    Real value;
    Provenance provenance;
  };
  std::size_t index(int i, int j) const;
  const Entry& entry(int i, int j) const;

  ParameterContext ctx_;
  int max_i_;
  int max_j_;
  std::vector<std::optional<Entry>> entries_;
};

struct InitialMoments {
  Real mu22;  ///< 4 Gamma(1+alpha)
  Real mu12;  ///< 4 e^(-r) (-r)^alpha Gamma(1+alpha) Gamma(-alpha, -r)
  Real mu21;  ///< 4 e^(-s) (-s)^alpha Gamma(1+alpha) Gamma(-alpha, -s)
};

/// The three seed values from which every other adjusted moment follows.
InitialMoments initial_moments(const ParameterContext& ctx);

// Three-term relation, from (x - r) = (x - s) + 2 beta:
//   mu_{i+1,j} = mu_{i,j+1} + 2 beta mu_{i,j}
// Each function returns one member of the L-shaped triple given the other two.

/// mu_{i+1,j}
Real three_term(const Real& mu_ij, const Real& mu_i_jp1, const ParameterContext& ctx);
/// mu_{i,j+1}
Real three_term_solve_right(const Real& mu_ip1_j, const Real& mu_ij, const ParameterContext& ctx);
/// mu_{i,j}
Real three_term_solve_center(const Real& mu_ip1_j, const Real& mu_i_jp1, const ParameterContext& ctx);

/// target = front * mu_front + center * mu_{i,j} + back * mu_back
struct FourTermCoefficients {
  Real front;
  Real center;
  Real back;
};

/// Coefficients of the four-term relation that gives (x - r) priority:
///   mu_{i+1,j+1} = [i+j-1+2a+b] mu_{i+1,j}
///                + [(1-i-j)(a+1) + (3-3i-j-4a) b] mu_{i,j}
///                + [(2i-4)(a+1)(b+1)] mu_{i-1,j},       i >= 1, j >= 0,
/// with a = alpha, b = beta.
FourTermCoefficients four_term_a_coefficients(int i, int j, const ParameterContext& ctx);

/// Coefficients of the mirrored relation that gives (x - s) priority:
///   mu_{i+1,j+1} = [i+j-1+2a-b] mu_{i,j+1}
///                + [(1-i-j)(a+1) + (-3+i+3j+4a) b] mu_{i,j}
///                + [(4-2j)(a+1)(b-1)] mu_{i,j-1},       i >= 0, j >= 1.
FourTermCoefficients four_term_b_coefficients(int i, int j, const ParameterContext& ctx);

/// mu_{i+1,j+1} from mu_{i+1,j}, mu_{i,j}, mu_{i-1,j}.
Real four_term_a(const Real& mu_ip1_j, const Real& mu_ij, const Real& mu_im1_j, int i, int j,
                 const ParameterContext& ctx);
/// mu_{i-1,j}; throws SingularError at i = 2 where its coefficient vanishes.
Real four_term_a_solve_back(const Real& mu_ip1_jp1, const Real& mu_ip1_j, const Real& mu_ij, int i,
                            int j, const ParameterContext& ctx);
/// mu_{i+1,j}; throws SingularError if its coefficient vanishes.
Real four_term_a_solve_front(const Real& mu_ip1_jp1, const Real& mu_ij, const Real& mu_im1_j, int i,
                             int j, const ParameterContext& ctx);

/// mu_{i+1,j+1} from mu_{i,j+1}, mu_{i,j}, mu_{i,j-1}.
Real four_term_b(const Real& mu_i_jp1, const Real& mu_ij, const Real& mu_i_jm1, int i, int j,
                 const ParameterContext& ctx);
/// mu_{i,j-1}; throws SingularError at j = 2 where its coefficient vanishes.
Real four_term_b_solve_back(const Real& mu_ip1_jp1, const Real& mu_i_jp1, const Real& mu_ij, int i,
                            int j, const ParameterContext& ctx);
/// mu_{i,j+1}; throws SingularError if its coefficient vanishes (at j = 1,
/// i = 0 this happens for 4 alpha^2 = alpha + 1).
Real four_term_b_solve_front(const Real& mu_ip1_jp1, const Real& mu_ij, const Real& mu_i_jm1, int i,
                             int j, const ParameterContext& ctx);

enum class SeedFormula { four_term_a, four_term_b };

struct FillOptions {
  /// Which four-term relation starts each anti-diagonal beyond the seed block.
  SeedFormula seed = SeedFormula::four_term_a;
  /// Compute mu_{0,2} and mu_{2,0} from the four-term relations instead of
  /// the three-term relation.
  bool corners_by_four_term = false;
};

/// Fills mu_{i,j}, 0 <= i <= max_i, 0 <= j <= max_j, from the three initial
/// moments and the recursions only. Order:
///   1. mu_{2,2}, mu_{1,2}, mu_{2,1} from initial_moments;
///   2. mu_{1,1} by the three-term relation;
///   3. mu_{0,1} and mu_{1,0} by solving the four-term relations at (1,1);
///   4. mu_{0,0} by the three-term relation;
///   5. mu_{0,2}, mu_{2,0} by the three-term relation (or four-term, see options);
///   6. every further anti-diagonal i + j = d gets one entry from a four-term
///      relation and is completed along the diagonal by the three-term one.
/// Works internally with 32 guard bits. Requires max_i, max_j >= 2.
MomentTable fill_table(const ParameterContext& ctx, int max_i, int max_j, FillOptions options = {});

/// Same extent, every entry from integrate_adjusted with the given rule.
MomentTable quadrature_table(const QuadratureRule& rule, const ParameterContext& ctx, int max_i,
                             int max_j);

/// <p, q> under the exceptional weight, expanded bilinearly in adjusted
/// moments: <B_j, B_k> = mu_{ceil(j/2)+ceil(k/2), floor(j/2)+floor(k/2)}.
Real moment_inner_product(const ShiftedPoly& p, const ShiftedPoly& q, const MomentTable& table);

}  // namespace xop
