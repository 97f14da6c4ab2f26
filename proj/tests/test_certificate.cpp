#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <tokendom/certificate.hpp>
#include <tokendom/construction.hpp>
#include <tokendom/errors.hpp>

using namespace tokendom;

namespace {

std::string replace_once(std::string text, const std::string& from,
                         const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_SUITE("certificate") {

TEST_CASE("method names round-trip") {
  for (auto m : {CertificateMethod::Construction, CertificateMethod::TablePaper,
                 CertificateMethod::ExactSolver})
    CHECK(method_from_name(method_name(m)) == m);
  CHECK_THROWS_AS(method_from_name("solver"), CertificateError);
}

TEST_CASE("table certificate canonical bytes") {
  const std::string expect =
      "{\n"
      "  \"schema_version\": \"1\",\n"
      "  \"n\": 13,\n"
      "  \"method\": \"table_paper\",\n"
      "  \"grid_set\": [],\n"
      "  \"token_set\": [],\n"
      "  \"size\": 20,\n"
      "  \"d_of_n\": 20,\n"
      "  \"a_of_n_minus_1\": 17,\n"
      "  \"verified\": false\n"
      "}\n";
  CHECK(write_certificate(table_certificate(13)) == expect);
  CHECK_THROWS_AS(table_certificate(1), std::invalid_argument);
  CHECK_THROWS_AS(table_certificate(26), std::invalid_argument);
}

TEST_CASE("construction certificate header bytes") {
  const CertificateFile cert =
      certificate_file_from(construct_dominating_set(20));
  const std::string text = write_certificate(cert);
  CHECK(text.substr(0, text.find("\"grid_set\"")) ==
        "{\n"
        "  \"schema_version\": \"1\",\n"
        "  \"n\": 20,\n"
        "  \"method\": \"construction\",\n"
        "  \"case\": {\"residue\": 0, \"h\": \"f\", \"r\": 4},\n"
        "  ");
  CHECK(text.back() == '\n');
  CHECK(text.find("\"size\": 47") != std::string::npos);
  CHECK(text.find("\"verified\": true") != std::string::npos);
}

TEST_CASE("round trip is byte-identical") {
  for (int n : {20, 21, 22, 23, 24}) {
    const CertificateFile cert =
        certificate_file_from(construct_dominating_set(n));
    const std::string once = write_certificate(cert);
    const std::string twice = write_certificate(parse_certificate(once));
    CHECK(once == twice);
  }
  const std::string table = write_certificate(table_certificate(14));
  CHECK(write_certificate(parse_certificate(table)) == table);
}

TEST_CASE("save and load through a file") {
  const auto path = std::filesystem::temp_directory_path() /
                    "tokendom_cert_roundtrip.json";
  const CertificateFile cert =
      certificate_file_from(construct_dominating_set(21));
  save_certificate(cert, path.string());
  const CertificateFile back = load_certificate(path.string());
  CHECK(write_certificate(back) == write_certificate(cert));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_certificate(path.string()), CertificateError);
}

TEST_CASE("parser rejects malformed documents") {
  const std::string good =
      write_certificate(certificate_file_from(construct_dominating_set(20)));

  CHECK_THROWS_AS(parse_certificate(""), CertificateError);
  CHECK_THROWS_AS(parse_certificate("{"), CertificateError);
  CHECK_THROWS_AS(parse_certificate("[1,2]"), CertificateError);
  CHECK_THROWS_AS(parse_certificate(good.substr(0, good.size() / 2)),
                  CertificateError);

  // schema, method, and field-type errors
  CHECK_THROWS_AS(
      parse_certificate(replace_once(good, "\"schema_version\": \"1\"",
                                     "\"schema_version\": \"2\"")),
      CertificateError);
  CHECK_THROWS_AS(parse_certificate(replace_once(
                      good, "\"method\": \"construction\"",
                      "\"method\": \"guesswork\"")),
                  CertificateError);
  CHECK_THROWS_AS(
      parse_certificate(replace_once(good, "\"n\": 20", "\"n\": \"20\"")),
      CertificateError);
  CHECK_THROWS_AS(
      parse_certificate(replace_once(good, "\"verified\": true",
                                     "\"verified\": \"yes\"")),
      CertificateError);

  // unknown fields are rejected, both top-level and inside the case object
  CHECK_THROWS_AS(
      parse_certificate(replace_once(good, "\"n\": 20", "\"n\": 20,\n  \"x\": 1")),
      CertificateError);
  CHECK_THROWS_AS(
      parse_certificate(replace_once(good, "\"r\": 4", "\"r\": 4, \"s\": 1")),
      CertificateError);

  // the case object must appear exactly for construction certificates
  CHECK_THROWS_AS(
      parse_certificate(replace_once(
          good, "  \"case\": {\"residue\": 0, \"h\": \"f\", \"r\": 4},\n", "")),
      CertificateError);
  const std::string table = write_certificate(table_certificate(13));
  CHECK_THROWS_AS(
      parse_certificate(replace_once(
          table, "\"method\": \"table_paper\"",
          "\"method\": \"table_paper\",\n  \"case\": {\"residue\": 0, "
          "\"h\": \"f\", \"r\": 4}")),
      CertificateError);

  // pair lists must hold [int,int] entries
  CHECK_THROWS_AS(
      parse_certificate(replace_once(table, "\"grid_set\": []",
                                     "\"grid_set\": [[1]]")),
      CertificateError);
  CHECK_THROWS_AS(
      parse_certificate(replace_once(table, "\"token_set\": []",
                                     "\"token_set\": [[1,2,3]]")),
      CertificateError);
}

TEST_CASE("verification accepts sound certificates") {
  for (int n : {20, 24}) {
    const VerifyOutcome out =
        verify_certificate(certificate_file_from(construct_dominating_set(n)));
    CHECK(out.ok);
    CHECK(out.message.find("verified") != std::string::npos);
  }
  CHECK(verify_certificate(table_certificate(13)).ok);
  CHECK(verify_certificate(table_certificate(25)).ok);
}

TEST_CASE("verification rejects semantic tampering") {
  auto cert = certificate_file_from(construct_dominating_set(20));

  SUBCASE("wrong size claim") {
    cert.size = 46;
    CHECK_FALSE(verify_certificate(cert).ok);
  }
  SUBCASE("vertex removed from both lists") {
    cert.grid_set.pop_back();
    cert.token_set.pop_back();
    cert.size = static_cast<int>(cert.grid_set.size());
    CHECK_FALSE(verify_certificate(cert).ok);
  }
  SUBCASE("wrong closed-form echo") {
    cert.d_of_n = 48;
    CHECK_FALSE(verify_certificate(cert).ok);
  }
  SUBCASE("wrong case selection") {
    cert.selection.color = 3;
    CHECK_FALSE(verify_certificate(cert).ok);
  }
  SUBCASE("unsorted grid list") {
    std::swap(cert.grid_set[0], cert.grid_set[1]);
    std::swap(cert.token_set[0], cert.token_set[1]);
    CHECK_FALSE(verify_certificate(cert).ok);
  }
  SUBCASE("token list out of step with the grid list") {
    cert.token_set[0] = TokenPair{1, 20};
    CHECK_FALSE(verify_certificate(cert).ok);
  }
}

TEST_CASE("verification rejects a padded table certificate") {
  auto cert = table_certificate(13);
  cert.grid_set = {{1, 1}};
  cert.token_set = {{1, 2}};
  CHECK_FALSE(verify_certificate(cert).ok);
}

TEST_CASE("solver certificates carry their witness") {
  const std::vector<TokenPair> witness = {{1, 3}, {2, 4}};
  const CertificateFile cert = solver_certificate(4, witness, true);
  CHECK(cert.method == CertificateMethod::ExactSolver);
  CHECK(cert.size == 2);
  const VerifyOutcome out = verify_certificate(cert);
  CHECK(out.ok);

  const CertificateFile bad = solver_certificate(4, {{1, 2}}, true);
  CHECK_FALSE(verify_certificate(bad).ok);  // one pair cannot dominate
}

}  // TEST_SUITE
