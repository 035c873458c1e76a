#include <doctest.h>

#include <nlohmann/json.hpp>

#include "cellrook/analysis.hpp"
#include "cellrook/errors.hpp"
#include "helpers.hpp"

using namespace cellrook;
using test::shape;

TEST_CASE("palindromicity of coefficient lists") {
  CHECK(is_palindromic(SwitchingPolynomial{{1, 4, 1}}));
  CHECK_FALSE(is_palindromic(SwitchingPolynomial{{1, 8, 19, 14, 3}}));
  CHECK(is_palindromic(SwitchingPolynomial{{1}}));
  CHECK(is_palindromic(SwitchingPolynomial{{1, 1}}));
  CHECK_FALSE(is_palindromic(SwitchingPolynomial{{1, 2}}));
}

TEST_CASE("verify on the 3x3 square passes everything applicable") {
  const VerificationReport r = verify(shape("###\n###\n###\n"));
  CHECK(r.domino_stable);
  CHECK(r.palindromic);
  CHECK(r.poly.coeffs == std::vector<std::uint64_t>{1, 9, 9, 1});
  CHECK(r.checks.at("theorem").status == CheckStatus::Pass);
  CHECK(r.checks.at("top_class_unique").status == CheckStatus::Pass);
  CHECK(r.checks.at("rook_number_formula").status == CheckStatus::Pass);
  CHECK(r.checks.at("strict_inequality").status == CheckStatus::Skipped);
  CHECK(r.checks.at("coverage_lemma").status == CheckStatus::Pass);
  CHECK(r.checks.at("attack_pair").status == CheckStatus::Pass);
  CHECK(r.checks.at("residue_existence").status == CheckStatus::Pass);
  CHECK(r.all_passed());
}

TEST_CASE("verify on the domino: theorem holds with both flags false") {
  const VerificationReport r = verify(shape("##\n"));
  CHECK_FALSE(r.domino_stable);
  CHECK_FALSE(r.palindromic);
  CHECK(r.poly.coeffs == std::vector<std::uint64_t>{1, 2});
  CHECK(r.checks.at("theorem").status == CheckStatus::Pass);
  CHECK(r.checks.at("top_class_unique").status == CheckStatus::Skipped);
  // d = 1 leaves no room for the strict inequality.
  CHECK(r.checks.at("strict_inequality").status == CheckStatus::Skipped);
  CHECK(r.all_passed());
}

TEST_CASE("verify on the plus pentomino") {
  const VerificationReport r = verify(shape(".#.\n###\n.#.\n"));
  CHECK_FALSE(r.domino_stable);
  CHECK_FALSE(r.palindromic);
  CHECK(r.poly.coeffs == std::vector<std::uint64_t>{1, 5, 4});
  CHECK(r.checks.at("theorem").status == CheckStatus::Pass);
  // r_d = 4, so the top-class-dependent checks are skipped.
  CHECK(r.checks.at("strict_inequality").status == CheckStatus::Skipped);
  CHECK(r.checks.at("coverage_lemma").status == CheckStatus::Skipped);
  CHECK(r.checks.at("attack_pair").status == CheckStatus::Skipped);
  CHECK(r.all_passed());
}

TEST_CASE("report serializes to one JSON line") {
  const VerificationReport r = verify(shape("##\n##\n"));
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["rank"] == 4);
  CHECK(j["poly"] == nlohmann::json::parse("[1,4,1]"));
  CHECK(j["stable"] == true);
  CHECK(j["palindromic"] == true);
  CHECK(j["checks"]["theorem"] == "pass");
  CHECK(j["id"].is_string());
  CHECK(r.to_json().find('\n') == std::string::npos);
}

TEST_CASE("corpus verification of small ranks finds no failures") {
  CorpusOptions options;
  options.audit_alignment = true;

  const CorpusSummary poly4 = verify_corpus(4, Universe::Polyomino, options);
  CHECK(poly4.total == 5);
  CHECK(poly4.failed_shapes == 0);
  CHECK(poly4.alignment_disagreements == 0);

  const CorpusSummary coll4 = verify_corpus(4, Universe::Collection, options);
  CHECK(coll4.total == 22);
  CHECK(coll4.failed_shapes == 0);
  CHECK(coll4.nongrid_residue_shapes == 0);
}

TEST_CASE("corpus verification over an explicit shape list") {
  const CorpusSummary empty = verify_corpus(std::vector<CellCollection>{});
  CHECK(empty.total == 0);
  CHECK(empty.failed_shapes == 0);

  std::vector<CellCollection> shapes;
  shapes.push_back(shape("##\n##\n"));
  shapes.push_back(shape("##\n"));
  const CorpusSummary two = verify_corpus(shapes);
  CHECK(two.total == 2);
  CHECK(two.stable == 1);
  CHECK(two.palindromic == 1);
  CHECK(two.failed_shapes == 0);
}

TEST_CASE("parallel corpus runs aggregate deterministically") {
  CorpusOptions serial;
  CorpusOptions parallel;
  parallel.jobs = 4;
  const CorpusSummary a = verify_corpus(5, Universe::Collection, serial);
  const CorpusSummary b = verify_corpus(5, Universe::Collection, parallel);
  CHECK(a.total == b.total);
  CHECK(a.total == 94);
  CHECK(a.stable == b.stable);
  CHECK(a.palindromic == b.palindromic);
  CHECK(a.failed_shapes == b.failed_shapes);
}

TEST_CASE("check selection restricts which failures count") {
  CorpusOptions options;
  options.checks = {"theorem"};
  const CorpusSummary s = verify_corpus(3, Universe::Collection, options);
  CHECK(s.total == 5);
  CHECK(s.failed_shapes == 0);
}
