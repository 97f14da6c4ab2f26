#pragma once

#include <string>
#include <vector>

#include "tokendom/construction.hpp"
#include "tokendom/token_graph.hpp"

namespace tokendom {

enum class CertificateMethod { Construction, TablePaper, ExactSolver };

const char* method_name(CertificateMethod m);
CertificateMethod method_from_name(const std::string& name);  // CertificateError

// on-disk form of a dominating-set claim; round-trips byte-identically
struct CertificateFile {
  std::string schema_version = "1";
  int n = 0;
  CertificateMethod method = CertificateMethod::Construction;
  CaseSelection selection;  // meaningful only when method == Construction
  std::vector<GridPoint> grid_set;   // row-major sorted
  std::vector<TokenPair> token_set;  // lexicographic
  int size = 0;
  int d_of_n = 0;           // d_of(n) when n >= 4, else 0
  int a_of_n_minus_1 = 0;   // lower_bound(n) when n >= 7, else 0
  bool verified = false;
};

CertificateFile certificate_file_from(const Certificate& cert);

// value-only certificate quoting the published table; lists stay empty
CertificateFile table_certificate(int n);

// witness found by the exact solver; tokens must be sorted lexicographically
CertificateFile solver_certificate(int n, const std::vector<TokenPair>& tokens,
                                   bool verified);

// canonical text form: fixed field order, one top-level field per line,
// compact pair lists, trailing newline
std::string write_certificate(const CertificateFile& cert);
void save_certificate(const CertificateFile& cert, const std::string& path);

// throws CertificateError on anything that is not a well-formed certificate
CertificateFile parse_certificate(const std::string& text);
CertificateFile load_certificate(const std::string& path);

// semantic re-check of the certificate's claims (domination, sizes, sorted
// lists, closed-form consistency); format problems belong to parsing
struct VerifyOutcome {
  bool ok = false;
  std::string message;
};

VerifyOutcome verify_certificate(const CertificateFile& cert);

}  // namespace tokendom
