#include "etf/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

namespace etf {
namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::kInvalidArgument, "complex value must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const char* convention_name(NormConvention c) {
  return c == NormConvention::kUnit ? "unit" : "raw";
}

NormConvention convention_from_name(const std::string& name) {
  if (name == "unit") return NormConvention::kUnit;
  if (name == "raw") return NormConvention::kRaw;
  throw Error(ErrorCode::kInvalidArgument, "unknown norm convention: " + name);
}

}  // namespace

Json frame_to_json(const Frame& f) {
  Json vectors = Json::array();
  for (int j = 0; j < f.count; ++j) {
    Json column = Json::array();
    for (int i = 0; i < f.dim; ++i) column.push_back(complex_to_json(f.vectors(i, j)));
    vectors.push_back(std::move(column));
  }
  return Json{{"d", f.dim},
              {"n", f.count},
              {"vectors", std::move(vectors)},
              {"labels", f.labels},
              {"norm_convention", convention_name(f.norm_convention)}};
}

Frame frame_from_json(const Json& j) {
  const int d = j.at("d").get<int>();
  const int n = j.at("n").get<int>();
  const Json& vectors = j.at("vectors");
  if (!vectors.is_array() || static_cast<int>(vectors.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "frame file: 'vectors' must hold n columns");
  }
  MatrixXc m(d, n);
  for (int col = 0; col < n; ++col) {
    const Json& column = vectors[static_cast<size_t>(col)];
    if (!column.is_array() || static_cast<int>(column.size()) != d) {
      throw Error(ErrorCode::kInvalidArgument, "frame file: column has wrong length");
    }
    for (int row = 0; row < d; ++row) {
      m(row, col) = complex_from_json(column[static_cast<size_t>(row)]);
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return make_frame(std::move(m), std::move(labels),
                    convention_from_name(j.at("norm_convention").get<std::string>()));
}

Json cyclo_to_json(const Cyclotomic& z) {
  Json coeffs = Json::array();
  for (const Rational& c : z.coeffs()) {
    coeffs.push_back(Json::array({c.numerator(), c.denominator()}));
  }
  return Json{{"order", z.order()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclo_from_json(const Json& j) {
  const long order = j.at("order").get<long>();
  std::vector<Rational> coeffs;
  for (const Json& pair : j.at("coeffs")) {
    coeffs.emplace_back(pair.at(0).get<long long>(), pair.at(1).get<long long>());
  }
  return Cyclotomic::from_coeffs(order, std::move(coeffs));
}

Json signature_to_json(const SignatureMatrix& s) {
  const MatrixXc floating = s.entries.to_floating();
  Json entries = Json::array();
  for (int r = 0; r < s.n; ++r) {
    Json row = Json::array();
    for (int c = 0; c < s.n; ++c) row.push_back(complex_to_json(floating(r, c)));
    entries.push_back(std::move(row));
  }
  Json out{{"n", s.n},
           {"entries", std::move(entries)},
           {"normalized", s.normalized},
           {"provenance", provenance_name(s.provenance)}};
  if (s.entries.backend() == Backend::kExact) {
    const MatrixXcy& exact = s.entries.exact();
    Json cyclo_rows = Json::array();
    for (int r = 0; r < s.n; ++r) {
      Json row = Json::array();
      for (int c = 0; c < s.n; ++c) row.push_back(cyclo_to_json(exact(r, c)));
      cyclo_rows.push_back(std::move(row));
    }
    out["entries_cyclo"] = std::move(cyclo_rows);
  }
  if (s.shape) out["shape"] = s.shape->to_string();
  return out;
}

SignatureMatrix signature_from_json(const Json& j) {
  SignatureMatrix s;
  s.n = j.at("n").get<int>();
  s.normalized = j.at("normalized").get<bool>();
  s.provenance = provenance_from_name(j.at("provenance").get<std::string>());
  if (j.contains("shape")) s.shape = GroupShape::parse(j.at("shape").get<std::string>());

  if (j.contains("entries_cyclo")) {
    MatrixXcy m(s.n, s.n);
    const Json& rows = j.at("entries_cyclo");
    for (int r = 0; r < s.n; ++r)
      for (int c = 0; c < s.n; ++c)
        m(r, c) = cyclo_from_json(rows.at(static_cast<size_t>(r)).at(static_cast<size_t>(c)));
    s.entries = CMatrix(std::move(m));
    return s;
  }
  MatrixXc m(s.n, s.n);
  const Json& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != s.n) {
    throw Error(ErrorCode::kInvalidArgument, "signature file: 'entries' must be n x n");
  }
  for (int r = 0; r < s.n; ++r) {
    const Json& row = rows[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != s.n) {
      throw Error(ErrorCode::kInvalidArgument, "signature file: row has wrong length");
    }
    for (int c = 0; c < s.n; ++c) m(r, c) = complex_from_json(row[static_cast<size_t>(c)]);
  }
  s.entries = CMatrix(std::move(m));
  return s;
}

Json verdict_to_json(const EtfVerdict& v) {
  return Json{{"is_tight", v.is_tight},
              {"is_equal_norm", v.is_equal_norm},
              {"is_equiangular", v.is_equiangular},
              {"coherence", v.coherence},
              {"welch_bound", v.welch_bound},
              {"saturates_welch", v.saturates_welch},
              {"gerzon_ok", v.gerzon_ok},
              {"tolerance", v.tolerance},
              {"degenerate", v.degenerate}};
}

Json spectrum_to_json(const SpectrumReport& r) {
  Json eigenvalues = Json::array();
  for (const auto& cluster : r.eigenvalues) {
    eigenvalues.push_back(Json{{"value", cluster.value}, {"multiplicity", cluster.multiplicity}});
  }
  Json out{{"distinct_count", r.distinct_count},
           {"eigenvalues", std::move(eigenvalues)},
           {"method", r.method == SpectrumMethod::kQuadraticIdentityExact
                          ? "quadratic-identity-exact"
                          : "dense-eig-float"}};
  if (r.tolerance_used) {
    out["tolerance_used"] = *r.tolerance_used;
  } else {
    out["tolerance_used"] = nullptr;
  }
  return out;
}

Json axioms_to_json(const SignatureAxiomsReport& r) {
  Json out{{"hermitian", r.hermitian},
           {"zero_diagonal", r.zero_diagonal},
           {"unimodular", r.unimodular},
           {"two_eigenvalues", r.two_eigenvalues},
           {"multiplicity_matches", r.multiplicity_matches},
           {"pass", r.all_pass()},
           {"spectrum", spectrum_to_json(r.spectrum)}};
  if (r.expected_dim) out["expected_dim"] = *r.expected_dim;
  return out;
}

Json check_to_json(const CheckReport& r) {
  Json out{{"name", r.name},
           {"pass", r.pass},
           {"max_violation", r.max_violation},
           {"details", r.details}};
  for (const auto& [key, value] : r.metrics) out[key] = value;
  return out;
}

Json roux_to_json(const RouxReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.per_power) {
    rows.push_back(Json{{"N", row.power},
                        {"distinct_eigenvalue_count", row.distinct_eigenvalues},
                        {"pass", row.pass}});
  }
  Json out{{"is_roux", r.is_roux}, {"per_power", std::move(rows)}};
  out["root_order"] = r.root_order ? Json(*r.root_order) : Json(nullptr);
  out["failure_reason"] = r.failure_reason ? Json(*r.failure_reason) : Json(nullptr);
  return out;
}

Json roux_harness_to_json(const RouxHarnessReport& r) {
  return Json{{"detector", roux_to_json(r.detector)},
              {"patterns_ok", r.patterns_ok},
              {"notes", r.notes},
              {"pass", r.pass()}};
}

Json group_to_json(const PermGroup& g) {
  Json out{{"degree", g.degree},
           {"order", g.order()},
           {"elements", g.elements},
           {"closure_verified", g.closure_verified}};
  if (!g.antiunitary_elements.empty()) out["antiunitary_elements"] = g.antiunitary_elements;
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write file: " + path);
  out << content;
  if (!out) throw Error(ErrorCode::kInvalidArgument, "write failed: " + path);
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char byte : bytes) {
    hash ^= byte;
    hash *= 1099511628211ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buffer);
}

}  // namespace etf
