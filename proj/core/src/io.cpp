#include "xop/io.hpp"

#include "json.hpp"

#include <string>

#include "xop/errors.hpp"

namespace xop {

namespace {

std::string quoted(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

// CSV field quoting for free text.
std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_context_fields(std::ostream& os, const ParameterContext& ctx) {
  os << "\"alpha\":" << ctx.alpha().to_string() << ",\"precision_bits\":" << ctx.precision()
     << ",\"r\":" << ctx.r().to_string() << ",\"s\":" << ctx.s().to_string();
}

void write_array(std::ostream& os, const std::vector<Real>& values) {
  os << '[';
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) os << ',';
    os << values[k].to_string();
  }
  os << ']';
}

}  // namespace

void write_moments_csv(std::ostream& os, const MomentTable& table) {
  os << "i,j,value,provenance\n";
  for (int i = 0; i <= table.max_i(); ++i) {
    for (int j = 0; j <= table.max_j(); ++j) {
      if (!table.contains(i, j)) continue;
      os << i << ',' << j << ',' << table(i, j).to_string() << ',' << to_string(table.provenance(i, j)) << '\n';
    }
  }
}

void write_moments_json(std::ostream& os, const MomentTable& table) {
  os << '{';
  write_context_fields(os, table.context());
  os << ",\"entries\":[";
  bool first = true;
  for (int i = 0; i <= table.max_i(); ++i) {
    for (int j = 0; j <= table.max_j(); ++j) {
      if (!table.contains(i, j)) continue;
      if (!first) os << ',';
      first = false;
      os << "{\"i\":" << i << ",\"j\":" << j << ",\"value\":" << table(i, j).to_string()
         << ",\"provenance\":" << quoted(to_string(table.provenance(i, j))) << '}';
    }
  }
  os << "]}\n";
}

std::string_view to_string(Basis b) { return b == Basis::shifted ? "shifted" : "monomial"; }

Basis parse_basis(std::string_view name) {
  if (name == "shifted") return Basis::shifted;
  if (name == "monomial") return Basis::monomial;
  throw DomainError("unknown basis '" + std::string(name) + "'");
}

void write_polynomial_json(std::ostream& os, const ShiftedPoly& p, Method method, Basis basis) {
  os << "{\"alpha\":" << p.ctx.alpha().to_string() << ",\"n\":" << p.degree()
     << ",\"method\":" << quoted(to_string(method)) << ",\"basis\":" << quoted(to_string(basis))
     << ",\"coefficients\":";
  if (basis == Basis::shifted) {
    write_array(os, p.coefficients);
  } else {
    // Keep explicit zeros so coefficient k always sits at index k.
    const MonomialPoly m = to_monomial(p);
    std::vector<Real> c;
    for (int k = 0; k <= p.degree(); ++k) c.push_back(m.coefficient(k));
    write_array(os, c);
  }
  os << ",\"precision_bits\":" << p.ctx.precision() << ",\"r\":" << p.ctx.r().to_string()
     << ",\"s\":" << p.ctx.s().to_string() << "}\n";
}

void write_matrix_json(std::ostream& os, const MomentMatrix& mm) {
  os << '{';
  write_context_fields(os, mm.ctx);
  os << ",\"n\":" << mm.n << ",\"M\":[";
  for (std::size_t i = 0; i < mm.m.rows(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < mm.m.cols(); ++j) {
      if (j) os << ',';
      os << mm.m(i, j).to_string();
    }
    os << ']';
  }
  os << "],\"b\":";
  write_array(os, mm.b);
  os << "}\n";
}

void write_matrix_csv(std::ostream& os, const MomentMatrix& mm) {
  for (std::size_t i = 0; i < mm.m.rows(); ++i) {
    for (std::size_t j = 0; j < mm.m.cols(); ++j) {
      if (j) os << ',';
      os << mm.m(i, j).to_string();
    }
    os << '\n';
  }
  for (std::size_t j = 0; j < mm.b.size(); ++j) {
    if (j) os << ',';
    os << mm.b[j].to_string();
  }
  os << '\n';
}

void write_report_json(std::ostream& os, const VerificationReport& report) {
  os << '[';
  bool first = true;
  for (const auto& r : report.records()) {
    os << (first ? "\n" : ",\n");
    first = false;
    os << "  {\"check\":" << quoted(r.check) << ",\"parameters\":" << quoted(r.parameters)
       << ",\"residual\":" << (r.residual ? r.residual->to_string() : "null")
       << ",\"tolerance\":" << r.tolerance.to_string() << ",\"pass\":" << (r.pass ? "true" : "false");
    if (!r.error.empty()) os << ",\"error\":" << quoted(r.error);
    os << '}';
  }
  os << (first ? "]\n" : "\n]\n");
}

void write_report_csv(std::ostream& os, const VerificationReport& report) {
  os << "check,parameters,residual,tolerance,pass,error\n";
  for (const auto& r : report.records()) {
    os << csv_field(r.check) << ',' << csv_field(r.parameters) << ','
       << (r.residual ? r.residual->to_string() : "") << ',' << r.tolerance.to_string() << ','
       << (r.pass ? "true" : "false") << ',' << csv_field(r.error) << '\n';
  }
}

}  // namespace xop
