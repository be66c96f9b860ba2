#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "xop/basis.hpp"
#include "xop/context.hpp"
#include "xop/linalg.hpp"
#include "xop/moments.hpp"

namespace xop {

/// The linear system M a = b whose solution gives the shifted-basis
/// coefficients of the degree-n exceptional polynomial.
///
/// Rows 1-2 encode the exceptional conditions at r and s, row 3 the
/// orthogonality against v_2, row 4 against v_3, and rows l+1 (l >= 4)
/// against v_l = B_l. b = (0, ..., 0, K_n).
struct MomentMatrix {
  int n;
  Matrix m;
  std::vector<Real> b;
  Real k_n;
  ParameterContext ctx;
};

/// Smallest (max_i, max_j) a moment table needs for build_matrix(n) and
/// gram_schmidt_flag(n). Never below (2, 2).
std::pair<int, int> required_extent(int n);

/// Throws DomainError for n < 2 or k_n == 0 and CoverageError naming the
/// first missing moment.
MomentMatrix build_matrix(int n, const MomentTable& table, const Real& k_n);
MomentMatrix build_matrix(int n, const MomentTable& table);

enum class LinearRoute { cramer, elimination };

/// a_k = det(M_k) / det(M), where M_k has column k replaced by b (cramer),
/// or the same vector from one elimination (elimination). Throws
/// SingularError if M is singular at working precision.
ShiftedPoly solve_representation_a(const MomentMatrix& mm, LinearRoute route = LinearRoute::cramer);

/// Bordered determinant: the first n rows of M over the row of basis
/// functions, expanded along that last row. Coefficient k is
/// (-1)^(n+k) times the minor dropping column k, which equals
/// det(M_k) / K_n, so the result is representation A scaled by det(M) / K_n.
ShiftedPoly solve_representation_b(const MomentMatrix& mm);

/// Gram-Schmidt on the flag v_2, ..., v_n_max under the moment inner
/// product (classical, one re-orthogonalization pass). Element l - 2 of the
/// result has degree l and the leading coefficient of v_l. Throws
/// NumericError on a non-positive norm.
std::vector<ShiftedPoly> gram_schmidt_sequence(int n_max, const MomentTable& table);

/// The degree-n Gram-Schmidt element scaled to the closed-form leading
/// coefficient.
ShiftedPoly gram_schmidt_flag(int n, const MomentTable& table);

/// Rescales p (degree n) so that its leading coefficient matches that of
/// closed_form_xop(n).
ShiftedPoly normalize_to_closed_form(const ShiftedPoly& p);

}  // namespace xop

namespace xop {

/// The four independent constructions of the degree-n polynomial.
enum class Method { det_a, det_b, gram_schmidt, closed_form };

inline constexpr Method kAllMethods[] = {Method::det_a, Method::det_b, Method::gram_schmidt,
                                         Method::closed_form};

/// "det-a", "det-b", "gram-schmidt", "closed-form".
std::string_view to_string(Method m);
/// Throws DomainError for an unknown name.
Method parse_method(std::string_view name);

/// Degree-n polynomial by the given method, in its native normalization:
/// det-a with K_n = 1, det-b as det(M)/K_n times det-a, Gram-Schmidt and the
/// closed form with the closed-form leading coefficient.
ShiftedPoly construct(Method method, int n, const MomentTable& table);

}  // namespace xop
