#include <doctest.h>

#include "chamber/composer.hpp"
#include "chamber/dsl.hpp"
#include "chamber/errors.hpp"
#include "chamber/index_engine.hpp"
#include "fixtures.hpp"

using namespace chamber;

TEST_CASE("algebraic_index") {
  CHECK(algebraic_index(corpus_link("whitehead"), 0) == 0);
  CHECK(algebraic_index(corpus_link("algebraic2"), 0) == 2);
  CHECK(algebraic_index(ChamberLink({ChamberContent({Span{0, 0}})}), 0) == 1);
  CHECK_THROWS_AS(algebraic_index(corpus_link("whitehead"), 1), UnknownComponent);
}

TEST_CASE("chamber_index_bounds") {
  const Clasp wh{ClaspKind::whitehead, SlotPair{0, 1}, SlotPair{0, 1}};
  CHECK(chamber_index_bounds(ChamberContent({wh})) == ChamberIndexBound{2, 2});
  CHECK(chamber_index_bounds(ChamberContent({wh})).exact());

  const ChamberContent gabai = corpus_link("gabai").chamber(0);
  CHECK(chamber_index_bounds(gabai) == ChamberIndexBound{6, 6});

  const ChamberContent turns({Turn{Side::bottom, SlotPair{0, 1}}, Turn{Side::bottom, SlotPair{2, 3}},
                              Turn{Side::top, SlotPair{0, 1}}, Turn{Side::top, SlotPair{2, 3}}});
  CHECK(chamber_index_bounds(turns) == ChamberIndexBound{0, 4});
  CHECK_FALSE(chamber_index_bounds(turns).exact());
}

TEST_CASE("geometric_index certifies the Antoine chambering") {
  const auto report = geometric_index(corpus_link("antoine"));
  REQUIRE(report.is_exact());
  CHECK(std::get<ExactIndex>(report.geometric).value == 2);
  REQUIRE(report.certificates.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(report.certificates[i] == ChamberCertificate{i, CertificateRule::clasp_corollary, 1, 0, 2});
  }
  CHECK(report.refusals.empty());
  CHECK(describe(report.certificates[0]) == "chamber 0: Clasp Corollary, k=1, l=0, n=2");
}

TEST_CASE("geometric_index on knotted3 and complicated") {
  const auto knotted = geometric_index(corpus_link("knotted3"));
  REQUIRE(knotted.is_exact());
  CHECK(knotted.lower() == 3);
  for (const auto& c : knotted.certificates) {
    CHECK(c.clasps == 1);
    CHECK(c.spans == 1);
  }
  const auto complicated = geometric_index(corpus_link("complicated"));
  REQUIRE(complicated.is_exact());
  CHECK(complicated.lower() == 8);
}

TEST_CASE("geometric_index abstains when disc counts disagree") {
  const ChamberLink link = testing::fig1_mismatch();
  CHECK(chamber_index_bounds(link.chamber(0)).lower == 4);
  CHECK(chamber_index_bounds(link.chamber(1)).lower == 2);
  CHECK(chamber_index_bounds(link.chamber(2)).lower == 2);

  const auto report = geometric_index(link);
  CHECK_FALSE(report.is_exact());
  CHECK(std::get<IndexBounds>(report.geometric) == IndexBounds{0, 2});
  REQUIRE(report.refusals.size() == 1);
  CHECK(report.refusals[0].kind == RefusalKind::non_uniform_disc_counts);
  CHECK(report.certificates.empty());
  // Both possible overall indices lie inside the interval.
  CHECK(report.lower() <= 0);
  CHECK(report.upper() >= 2);
}

TEST_CASE("geometric_index never certifies index 0") {
  const auto empty = geometric_index(ChamberLink({ChamberContent{}}));
  CHECK_FALSE(empty.is_exact());
  CHECK(std::get<IndexBounds>(empty.geometric) == IndexBounds{0, 0});
  REQUIRE(empty.refusals.size() == 1);
  CHECK(empty.refusals[0].kind == RefusalKind::zero_index);

  const auto circle = geometric_index(ChamberLink({ChamberContent({Circle{}})}));
  CHECK_FALSE(circle.is_exact());
}

TEST_CASE("uniform but uncertified chambers give bounds and name the chambers") {
  // Uniform n = 2: chamber 0 is a clasp, chamber 1 two turn-backs.
  ChamberLink link({ChamberContent({Clasp{ClaspKind::whitehead, SlotPair{0, 1}, SlotPair{0, 1}}}),
                    ChamberContent({Turn{Side::bottom, SlotPair{0, 1}}, Turn{Side::top, SlotPair{0, 1}}})});
  const auto report = geometric_index(link);
  CHECK_FALSE(report.is_exact());
  CHECK(std::get<IndexBounds>(report.geometric) == IndexBounds{0, 2});
  REQUIRE(report.refusals.size() == 1);
  CHECK(report.refusals[0] == Refusal{RefusalKind::uncertified_chamber, 1});
}

TEST_CASE("circles next to spans certify under the chamber rule") {
  ChamberLink link({ChamberContent({Span{0, 0}, Circle{}})});
  const auto report = geometric_index(link);
  REQUIRE(report.is_exact());
  CHECK(report.lower() == 1);
  CHECK(report.certificates[0].rule == CertificateRule::chamber_corollary);
}

TEST_CASE("geometric_index rejects invalid links") {
  CHECK_THROWS_AS(geometric_index(ChamberLink({ChamberContent({Span{0, 0}}), ChamberContent{}})), InvalidLink);
}

TEST_CASE("check_geq_algebraic") {
  CHECK(check_geq_algebraic(geometric_index(corpus_link("whitehead"))));
  const auto alg2 = geometric_index(corpus_link("algebraic2"));
  CHECK(std::labs(alg2.algebraic_total_signed) == 2);
  CHECK(check_geq_algebraic(alg2));

  IndexReport corrupted;
  corrupted.geometric = ExactIndex{1};
  corrupted.algebraic_total_signed = 2;
  CHECK_FALSE(check_geq_algebraic(corrupted));
}

TEST_CASE("even_index_audit") {
  for (const char* name : {"bing", "gabai", "whitehead", "mcmillan4", "knotted3"}) {
    CAPTURE(name);
    const auto link = corpus_link(name);
    CHECK(even_index_audit(link, geometric_index(link)));
  }
  // Lemma applies: windings all zero, a forged odd value fails the audit.
  IndexReport forged = geometric_index(corpus_link("bing"));
  forged.geometric = ExactIndex{3};
  CHECK_FALSE(even_index_audit(corpus_link("bing"), forged));
  // Lemma inapplicable: knotted3 has a component of winding 1.
  IndexReport odd = geometric_index(corpus_link("knotted3"));
  CHECK(odd.lower() % 2 == 1);
  CHECK(even_index_audit(corpus_link("knotted3"), odd));
}

TEST_CASE("separating_torus_conclusions") {
  SUBCASE("total 2: inner or outer parallel") {
    const auto c = separating_torus_conclusions(2);
    CHECK_FALSE(c.zero_total);
    REQUIRE(c.factors.size() == 2);
    CHECK(c.factors[0] == FactorConclusion{1, 2, true, false});
    CHECK(c.factors[1] == FactorConclusion{2, 1, false, true});
  }
  SUBCASE("total 1: doubly parallel") {
    const auto c = separating_torus_conclusions(1);
    REQUIRE(c.factors.size() == 1);
    CHECK(c.factors[0] == FactorConclusion{1, 1, true, true});
  }
  SUBCASE("total 0") {
    const auto c = separating_torus_conclusions(0);
    CHECK(c.zero_total);
    CHECK(c.factors.empty());
  }
  SUBCASE("divisor enumeration oracle") {
    for (unsigned total = 1; total <= 60; ++total) {
      std::vector<FactorConclusion> expected;
      for (unsigned a = 1; a <= total; ++a) {
        for (unsigned b = 1; b <= total; ++b) {
          if (a * b == total) expected.push_back({a, b, a == 1, b == 1});
        }
      }
      CHECK(separating_torus_conclusions(total).factors == expected);
    }
  }
}
