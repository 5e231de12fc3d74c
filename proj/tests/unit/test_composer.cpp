#include <doctest.h>

#include <algorithm>
#include <random>

#include "chamber/composer.hpp"
#include "chamber/errors.hpp"

using namespace chamber;

namespace {

IndexExpr whitehead_leaf() { return IndexExpr::leaf({IndexRange::exactly(2), 0, 1}, "whitehead"); }

// All products of interval endpoints; the product interval is [min, max].
IndexRange enumerate_product(IndexRange a, IndexRange b) {
  unsigned lo = ~0u, hi = 0;
  for (unsigned x = a.lower; x <= a.upper; ++x) {
    for (unsigned y = b.lower; y <= b.upper; ++y) {
      lo = std::min(lo, x * y);
      hi = std::max(hi, x * y);
    }
  }
  return {lo, hi};
}

}  // namespace

TEST_CASE("nest multiplies geometric and algebraic facts") {
  const auto facts = evaluate(nest(whitehead_leaf(), whitehead_leaf()));
  CHECK(facts.geometric == IndexRange::exactly(4));
  CHECK(facts.algebraic == 0);
}

TEST_CASE("identity companion is a no-op") {
  const IndexExpr knotted = IndexExpr::leaf({IndexRange::exactly(3), 1, 1}, "knotted3");
  CHECK(evaluate(nest(knotted, IndexExpr::identity())) == evaluate(knotted));
  CHECK(evaluate(nest(IndexExpr::identity(), knotted)).geometric == IndexRange::exactly(3));
}

TEST_CASE("4-deep Whitehead chain against direct exponentiation") {
  std::vector<IndexExpr> chain(4, whitehead_leaf());
  const auto facts = evaluate(nest_chain(chain));
  unsigned power = 1;
  for (int i = 0; i < 4; ++i) power *= 2;
  CHECK(facts.geometric == IndexRange::exactly(power));
  CHECK(power == 16);
  CHECK(facts.algebraic == 0);
}

TEST_CASE("evaluate") {
  SUBCASE("leaf from a report") {
    const auto leaf = IndexExpr::leaf(geometric_index(corpus_link("antoine")), "antoine");
    const auto facts = evaluate(leaf);
    CHECK(facts.geometric == IndexRange::exactly(2));
    CHECK(facts.algebraic == 0);
    CHECK(facts.components == 4);
  }
  SUBCASE("exact product") {
    const auto facts = evaluate(nest(IndexExpr::leaf({IndexRange::exactly(3), 1, 1}, "a"),
                                     IndexExpr::leaf({IndexRange::exactly(2), 0, 1}, "b")));
    CHECK(facts.geometric == IndexRange::exactly(6));
    CHECK(facts.algebraic == 0);
  }
  SUBCASE("interval product against enumeration") {
    const auto facts = evaluate(nest(IndexExpr::leaf({{0, 2}, 0, 1}, "a"), IndexExpr::leaf({IndexRange::exactly(2), 0, 1}, "b")));
    CHECK(facts.geometric == IndexRange{0, 4});
    CHECK(facts.geometric == enumerate_product({0, 2}, {2, 2}));
    std::mt19937 rng(7);
    std::uniform_int_distribution<unsigned> d(0, 6);
    for (int i = 0; i < 200; ++i) {
      unsigned a0 = d(rng), a1 = d(rng), b0 = d(rng), b1 = d(rng);
      IndexRange a{std::min(a0, a1), std::max(a0, a1)};
      IndexRange b{std::min(b0, b1), std::max(b0, b1)};
      CHECK(a * b == enumerate_product(a, b));
    }
  }
}

TEST_CASE("multi-component companions are rejected") {
  const auto bing = IndexExpr::leaf(geometric_index(corpus_link("bing")), "bing");
  CHECK(bing.components() == 2);
  CHECK_THROWS_AS(nest(whitehead_leaf(), bing), MultiComponentCompanion);
  // As the inner operand a multi-component link is fine.
  CHECK(evaluate(nest(bing, whitehead_leaf())).geometric == IndexRange::exactly(4));
}

TEST_CASE("nest is commutative and associative on facts") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<unsigned> d(0, 5);
  for (int i = 0; i < 100; ++i) {
    auto make = [&](const char* name) { return IndexExpr::leaf({IndexRange::exactly(d(rng) + 1), d(rng), 1}, name); };
    const auto a = make("a"), b = make("b"), c = make("c");
    CHECK(evaluate(nest(a, b)) == evaluate(nest(b, a)));
    CHECK(evaluate(nest(nest(a, b), c)) == evaluate(nest(a, nest(b, c))));
  }
}

TEST_CASE("generate_complicated") {
  SUBCASE("all spans") {
    std::array<Pattern, 8> all{};
    all.fill(Pattern::spans_only);
    const auto link = generate_complicated(all);
    const auto report = geometric_index(link);
    REQUIRE(report.is_exact());
    CHECK(report.lower() == 8);
    for (const auto& c : report.certificates) {
      CHECK(c.spans == 8);
      CHECK(c.clasps == 0);
    }
  }
  SUBCASE("pattern choices by slot") {
    std::vector<PatternChoice> choices;
    for (std::size_t i = 0; i < 8; ++i) choices.push_back({7 - i, static_cast<Pattern>(i % 4)});
    const auto link = generate_complicated(choices);
    CHECK(geometric_index(link).lower() == 8);
    CHECK(std::holds_alternative<Clasp>(link.chamber(6).pieces()[0]));
  }
  SUBCASE("bad choices") {
    std::vector<PatternChoice> seven(7);
    CHECK_THROWS_AS(generate_complicated(seven), std::invalid_argument);
    std::vector<PatternChoice> repeated(8);
    CHECK_THROWS_AS(generate_complicated(repeated), std::invalid_argument);
  }
}

TEST_CASE("pattern names") {
  for (auto p : {Pattern::spans_only, Pattern::whitehead_plus_spans, Pattern::square_knot_plus_spans,
                 Pattern::antoine_plus_spans}) {
    CHECK(parse_pattern(to_string(p)) == p);
  }
  CHECK(parse_pattern("antoine") == Pattern::antoine_plus_spans);
  CHECK_FALSE(parse_pattern("bogus"));
}

TEST_CASE("corpus constructors") {
  CHECK(corpus_link("antoine").chamber_count() == 4);
  CHECK(corpus_link("gabai").chamber_count() == 5);
  const auto knotted = corpus_link("knotted3");
  CHECK(std::get<Clasp>(knotted.chamber(0).pieces()[0]).kind == ClaspKind::whitehead);
  CHECK(std::get<Clasp>(knotted.chamber(1).pieces()[0]).kind == ClaspKind::square_knot);
  CHECK_THROWS_AS(corpus_link("nosuch"), UnknownName);
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const auto link = corpus_link(name);
    const auto v = validate(link);
    CHECK(v.accepted());
    CHECK(v.uniform);
    CHECK(geometric_index(link).is_exact());
  }
}
