#pragma once

#include <ostream>
#include <string_view>

#include "xop/basis.hpp"
#include "xop/determinantal.hpp"
#include "xop/moments.hpp"
#include "xop/polynomial.hpp"
#include "xop/verify.hpp"

namespace xop {

// Numbers are written as JSON/CSV number literals at full working precision
// (shortest form that round-trips at the value's precision).

/// CSV with header `i,j,value,provenance`, row-major in i then j.
void write_moments_csv(std::ostream& os, const MomentTable& table);
/// {"alpha","precision_bits","r","s","entries":[{"i","j","value","provenance"}...]}
void write_moments_json(std::ostream& os, const MomentTable& table);

enum class Basis { shifted, monomial };
std::string_view to_string(Basis b);
Basis parse_basis(std::string_view name);

/// {"alpha","n","method","basis","coefficients","precision_bits","r","s"}
void write_polynomial_json(std::ostream& os, const ShiftedPoly& p, Method method, Basis basis);

/// {"alpha","n","precision_bits","r","s","M":[[...]...],"b":[...]}
void write_matrix_json(std::ostream& os, const MomentMatrix& mm);
/// CSV rows of M followed by a final row holding b.
void write_matrix_csv(std::ostream& os, const MomentMatrix& mm);

/// JSON array of records {"check","parameters","residual","tolerance","pass"[, "error"]}.
void write_report_json(std::ostream& os, const VerificationReport& report);
/// CSV with header `check,parameters,residual,tolerance,pass,error`.
void write_report_csv(std::ostream& os, const VerificationReport& report);

}  // namespace xop
