#include "tokendom/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tokendom/errors.hpp"
#include "tokendom/known_values.hpp"
#include "tokendom/solvers.hpp"

namespace tokendom {

namespace {

using nlohmann::json;

int span_d(int n) { return n >= 4 ? d_of(n) : 0; }
int span_a(int n) { return n >= 7 ? lower_bound(n) : 0; }

void append_grid_pairs(std::string& out, const std::vector<GridPoint>& v) {
  out += '[';
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += '[';
    out += std::to_string(v[k].i);
    out += ',';
    out += std::to_string(v[k].j);
    out += ']';
  }
  out += ']';
}

void append_token_pairs(std::string& out, const std::vector<TokenPair>& v) {
  out += '[';
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ',';
    out += '[';
    out += std::to_string(v[k].a);
    out += ',';
    out += std::to_string(v[k].b);
    out += ']';
  }
  out += ']';
}

int require_int(const json& j, const std::string& key) {
  if (!j.contains(key)) throw CertificateError("missing field: " + key);
  const json& v = j.at(key);
  if (!v.is_number_integer())
    throw CertificateError("field " + key + " must be an integer");
  return v.get<int>();
}

std::string require_string(const json& j, const std::string& key) {
  if (!j.contains(key)) throw CertificateError("missing field: " + key);
  const json& v = j.at(key);
  if (!v.is_string())
    throw CertificateError("field " + key + " must be a string");
  return v.get<std::string>();
}

bool require_bool(const json& j, const std::string& key) {
  if (!j.contains(key)) throw CertificateError("missing field: " + key);
  const json& v = j.at(key);
  if (!v.is_boolean())
    throw CertificateError("field " + key + " must be a boolean");
  return v.get<bool>();
}

std::vector<std::pair<int, int>> require_pair_list(const json& j,
                                                   const std::string& key) {
  if (!j.contains(key)) throw CertificateError("missing field: " + key);
  const json& v = j.at(key);
  if (!v.is_array())
    throw CertificateError("field " + key + " must be a list of pairs");
  std::vector<std::pair<int, int>> out;
  out.reserve(v.size());
  for (const json& e : v) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw CertificateError("field " + key +
                             " must contain [int,int] pairs only");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

std::string fail_msg(const std::string& what) { return what; }

}  // namespace

const char* method_name(CertificateMethod m) {
  switch (m) {
    case CertificateMethod::Construction: return "construction";
    case CertificateMethod::TablePaper: return "table_paper";
    default: return "exact_solver";
  }
}

CertificateMethod method_from_name(const std::string& name) {
  if (name == "construction") return CertificateMethod::Construction;
  if (name == "table_paper") return CertificateMethod::TablePaper;
  if (name == "exact_solver") return CertificateMethod::ExactSolver;
  throw CertificateError("unknown method: " + name);
}

CertificateFile certificate_file_from(const Certificate& cert) {
  CertificateFile out;
  out.n = cert.n;
  out.method = CertificateMethod::Construction;
  out.selection = cert.selection;
  out.grid_set = cert.grid_set;
  out.token_set = cert.token_set;
  out.size = cert.size;
  out.d_of_n = span_d(cert.n);
  out.a_of_n_minus_1 = span_a(cert.n);
  out.verified = cert.verified;
  return out;
}

CertificateFile table_certificate(int n) {
  const auto gamma = known_gamma(n);
  if (!gamma)
    throw std::invalid_argument("table_certificate: no published value for n=" +
                                std::to_string(n));
  CertificateFile out;
  out.n = n;
  out.method = CertificateMethod::TablePaper;
  out.size = *gamma;
  out.d_of_n = span_d(n);
  out.a_of_n_minus_1 = span_a(n);
  out.verified = false;
  return out;
}

CertificateFile solver_certificate(int n, const std::vector<TokenPair>& tokens,
                                   bool verified) {
  CertificateFile out;
  out.n = n;
  out.method = CertificateMethod::ExactSolver;
  out.token_set = tokens;
  std::sort(out.token_set.begin(), out.token_set.end(), lex_less);
  out.grid_set.reserve(tokens.size());
  for (TokenPair t : out.token_set) out.grid_set.push_back(token_to_grid(t));
  std::sort(out.grid_set.begin(), out.grid_set.end(), row_major_less);
  out.size = static_cast<int>(tokens.size());
  out.d_of_n = span_d(n);
  out.a_of_n_minus_1 = span_a(n);
  out.verified = verified;
  return out;
}

std::string write_certificate(const CertificateFile& cert) {
  std::string out = "{\n";
  out += "  \"schema_version\": \"" + cert.schema_version + "\",\n";
  out += "  \"n\": " + std::to_string(cert.n) + ",\n";
  out += std::string("  \"method\": \"") + method_name(cert.method) + "\",\n";
  if (cert.method == CertificateMethod::Construction) {
    out += "  \"case\": {\"residue\": " + std::to_string(cert.selection.residue) +
           ", \"h\": \"" + coloring_name(cert.selection.h) +
           "\", \"r\": " + std::to_string(cert.selection.color) + "},\n";
  }
  out += "  \"grid_set\": ";
  append_grid_pairs(out, cert.grid_set);
  out += ",\n  \"token_set\": ";
  append_token_pairs(out, cert.token_set);
  out += ",\n  \"size\": " + std::to_string(cert.size);
  out += ",\n  \"d_of_n\": " + std::to_string(cert.d_of_n);
  out += ",\n  \"a_of_n_minus_1\": " + std::to_string(cert.a_of_n_minus_1);
  out += std::string(",\n  \"verified\": ") + (cert.verified ? "true" : "false");
  out += "\n}\n";
  return out;
}

void save_certificate(const CertificateFile& cert, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CertificateError("cannot open " + path + " for writing");
  f << write_certificate(cert);
  if (!f) throw CertificateError("write failed: " + path);
}

CertificateFile parse_certificate(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw CertificateError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw CertificateError("certificate must be one object");

  CertificateFile cert;
  cert.schema_version = require_string(j, "schema_version");
  if (cert.schema_version != "1")
    throw CertificateError("unknown schema_version: " + cert.schema_version);
  cert.n = require_int(j, "n");
  cert.method = method_from_name(require_string(j, "method"));

  const bool wants_case = cert.method == CertificateMethod::Construction;
  if (wants_case) {
    if (!j.contains("case") || !j.at("case").is_object())
      throw CertificateError("construction certificate needs a case object");
    const json& c = j.at("case");
    for (const auto& item : c.items())
      if (item.key() != "residue" && item.key() != "h" && item.key() != "r")
        throw CertificateError("unexpected case field: " + item.key());
    cert.selection.residue = require_int(c, "residue");
    const std::string h = require_string(c, "h");
    if (h != "f" && h != "g")
      throw CertificateError("case field h must be f or g");
    cert.selection.h = coloring_from_name(h[0]);
    cert.selection.color = require_int(c, "r");
  } else if (j.contains("case")) {
    throw CertificateError("case object is only valid for construction");
  }

  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "schema_version" && key != "n" && key != "method" &&
        key != "case" && key != "grid_set" && key != "token_set" &&
        key != "size" && key != "d_of_n" && key != "a_of_n_minus_1" &&
        key != "verified")
      throw CertificateError("unexpected field: " + key);
  }

  for (auto [a, b] : require_pair_list(j, "grid_set"))
    cert.grid_set.push_back({a, b});
  for (auto [a, b] : require_pair_list(j, "token_set"))
    cert.token_set.push_back({a, b});
  cert.size = require_int(j, "size");
  cert.d_of_n = require_int(j, "d_of_n");
  cert.a_of_n_minus_1 = require_int(j, "a_of_n_minus_1");
  cert.verified = require_bool(j, "verified");
  return cert;
}

CertificateFile load_certificate(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CertificateError("cannot read " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_certificate(buf.str());
}

namespace {

VerifyOutcome verify_vertex_lists(const CertificateFile& cert) {
  VerifyOutcome out;
  if (cert.size != static_cast<int>(cert.grid_set.size()) ||
      cert.size != static_cast<int>(cert.token_set.size())) {
    out.message = fail_msg("size does not match the vertex lists");
    return out;
  }
  for (std::size_t k = 1; k < cert.grid_set.size(); ++k)
    if (!row_major_less(cert.grid_set[k - 1], cert.grid_set[k])) {
      out.message = "grid_set is not strictly row-major sorted";
      return out;
    }
  for (std::size_t k = 1; k < cert.token_set.size(); ++k)
    if (!lex_less(cert.token_set[k - 1], cert.token_set[k])) {
      out.message = "token_set is not strictly sorted";
      return out;
    }
  const Region triangle = Region::inner_triangle(cert.n);
  for (GridPoint p : cert.grid_set)
    if (!triangle.contains(p)) {
      out.message = "grid point outside the triangle";
      return out;
    }
  std::vector<TokenPair> image;
  image.reserve(cert.grid_set.size());
  for (GridPoint p : cert.grid_set) image.push_back(grid_to_token(p));
  std::sort(image.begin(), image.end(), lex_less);
  if (image != cert.token_set) {
    out.message = "token_set does not match grid_set";
    return out;
  }
  for (TokenPair t : cert.token_set)
    if (t.a < 1 || t.a >= t.b || t.b > cert.n) {
      out.message = "token pair out of range";
      return out;
    }

  const FiniteGraph tokens = token_graph_of_path(cert.n);
  VertexSet mask(tokens.order());
  for (TokenPair t : cert.token_set) mask.set(token_index(t));
  if (!is_dominating(tokens, mask)) {
    out.message = "token_set is not a dominating set";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace

VerifyOutcome verify_certificate(const CertificateFile& cert) {
  VerifyOutcome out;
  if (cert.n < 2) {
    out.message = "n out of range";
    return out;
  }
  if (cert.d_of_n != span_d(cert.n)) {
    out.message = "d_of_n field is inconsistent";
    return out;
  }
  if (cert.a_of_n_minus_1 != span_a(cert.n)) {
    out.message = "a_of_n_minus_1 field is inconsistent";
    return out;
  }

  switch (cert.method) {
    case CertificateMethod::TablePaper: {
      if (!cert.grid_set.empty() || !cert.token_set.empty()) {
        out.message = "table certificate must not carry vertex lists";
        return out;
      }
      const auto gamma = known_gamma(cert.n);
      if (!gamma) {
        out.message = "no published value for this n";
        return out;
      }
      if (cert.size != *gamma) {
        out.message = "size does not match the published value";
        return out;
      }
      break;
    }
    case CertificateMethod::Construction: {
      if (cert.n < 4) {
        out.message = "construction certificate needs n >= 4";
        return out;
      }
      if (!(cert.selection == select_case(cert.n))) {
        out.message = "case does not match n";
        return out;
      }
      VerifyOutcome lists = verify_vertex_lists(cert);
      if (!lists.ok) return lists;
      if (cert.size != d_of(cert.n)) {
        out.message = "size does not equal the closed form";
        return out;
      }
      break;
    }
    case CertificateMethod::ExactSolver: {
      VerifyOutcome lists = verify_vertex_lists(cert);
      if (!lists.ok) return lists;
      break;
    }
  }

  out.ok = true;
  std::ostringstream os;
  os << "certificate for n=" << cert.n << " verified (" << method_name(cert.method)
     << ", size " << cert.size << ")";
  out.message = os.str();
  return out;
}

}  // namespace tokendom
