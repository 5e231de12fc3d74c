#include <doctest.h>

#include "chamber/errors.hpp"
#include "chamber/tangle_catalog.hpp"

using namespace chamber;

namespace {

Clasp clasp(ClaspKind kind, Slot t0, Slot t1, Slot b0, Slot b1) {
  return Clasp{kind, SlotPair::of(t0, t1), SlotPair::of(b0, b1)};
}

bool has_code(const std::vector<ContentViolation>& vs, const std::string& code) {
  for (const auto& v : vs) {
    if (v.code == code) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("endpoint profile of catalog pieces") {
  CHECK(endpoint_profile(ChamberContent({clasp(ClaspKind::whitehead, 0, 1, 0, 1)})) == EndpointProfile{2, 2});

  ChamberContent gabai_chamber({clasp(ClaspKind::whitehead, 0, 1, 2, 3), Span{0, 4}, Span{1, 5}, Span{4, 2},
                                Span{5, 3}});
  CHECK(endpoint_profile(gabai_chamber) == EndpointProfile{6, 6});

  ChamberContent turns({Turn{Side::bottom, SlotPair{0, 1}}, Turn{Side::bottom, SlotPair{2, 3}}, Circle{}});
  CHECK(endpoint_profile(turns) == EndpointProfile{4, 0});

  CHECK(endpoint_profile(ChamberContent{}) == EndpointProfile{0, 0});
}

TEST_CASE("index contribution per piece") {
  CHECK(index_contribution(Span{0, 0}) == 1);
  CHECK(index_contribution(clasp(ClaspKind::whitehead, 0, 1, 0, 1)) == 2);
  CHECK(index_contribution(clasp(ClaspKind::square_knot, 0, 1, 0, 1)) == 2);
  CHECK(index_contribution(clasp(ClaspKind::antoine, 0, 1, 0, 1)) == 2);
  CHECK(index_contribution(Turn{Side::top, SlotPair{0, 1}}) == 0);
  CHECK(index_contribution(Circle{}) == 0);
}

TEST_CASE("content canonicalizes piece order and pair order") {
  ChamberContent a({Circle{}, Span{1, 1}, Turn{Side::top, SlotPair{3, 2}}, Span{0, 0},
                    Clasp{ClaspKind::whitehead, SlotPair{1, 0}, SlotPair{3, 2}}});
  ChamberContent b({clasp(ClaspKind::whitehead, 0, 1, 2, 3), Span{0, 0}, Span{1, 1}, Turn{Side::top, SlotPair{2, 3}},
                    Circle{}});
  CHECK(a == b);
  REQUIRE(a.pieces().size() == 5);
  CHECK(std::holds_alternative<Clasp>(a.pieces()[0]));
  CHECK(std::get<Span>(a.pieces()[1]).bottom == 0);
  CHECK(std::holds_alternative<Circle>(a.pieces()[4]));
}

TEST_CASE("content violations") {
  SUBCASE("valid content has none") {
    CHECK(check_content(ChamberContent({clasp(ClaspKind::whitehead, 0, 1, 0, 1), Span{2, 2}})).empty());
  }
  SUBCASE("pair using one slot twice") {
    auto vs = check_content(ChamberContent({Turn{Side::bottom, SlotPair{1, 1}}}));
    CHECK(has_code(vs, "E_PAIR_SAME_SLOT"));
    CHECK_FALSE(has_code(vs, "E_DUPLICATE_SLOT"));
  }
  SUBCASE("two pieces on one slot") {
    auto vs = check_content(ChamberContent({Span{0, 0}, Span{0, 1}}));
    CHECK(has_code(vs, "E_DUPLICATE_SLOT"));
  }
  SUBCASE("sparse slots") {
    auto vs = check_content(ChamberContent({Span{0, 0}, Span{2, 1}}));
    CHECK(has_code(vs, "E_SPARSE_SLOTS"));
  }
}

TEST_CASE("split_antoine on a bare Antoine clasp") {
  const auto split = split_antoine(ChamberContent({clasp(ClaspKind::antoine, 0, 1, 0, 1)}));
  CHECK(split.lower == ChamberContent({clasp(ClaspKind::whitehead, 0, 1, 0, 1)}));
  CHECK(split.upper == ChamberContent({clasp(ClaspKind::whitehead, 0, 1, 0, 1)}));
  CHECK(split.middle_disc_count == 2);
}

TEST_CASE("split_antoine routes spans through fresh middle slots") {
  // Hand bookkeeping: clasp arcs cross the middle disc at 0 and 1; spans
  // (canonical order 0->2, 3->3) are cut once each at 2 and 3.
  const ChamberContent original({clasp(ClaspKind::antoine, 0, 1, 1, 2), Span{0, 2}, Span{3, 3}});
  const auto split = split_antoine(original);
  CHECK(split.middle_disc_count == 4);
  CHECK(split.lower == ChamberContent({clasp(ClaspKind::whitehead, 0, 1, 1, 2), Span{0, 2}, Span{3, 3}}));
  CHECK(split.upper == ChamberContent({clasp(ClaspKind::whitehead, 0, 1, 0, 1), Span{2, 2}, Span{3, 3}}));

  CHECK(endpoint_profile(split.lower).bottom == endpoint_profile(original).bottom);
  CHECK(endpoint_profile(split.upper).top == endpoint_profile(original).top);
  CHECK(endpoint_profile(split.lower).top == split.middle_disc_count);
  CHECK(endpoint_profile(split.upper).bottom == split.middle_disc_count);
  CHECK(certified_contribution(split.lower) == certified_contribution(original));
  CHECK(certified_contribution(split.upper) == certified_contribution(original));
  CHECK(check_content(split.lower).empty());
  CHECK(check_content(split.upper).empty());
}

TEST_CASE("split_antoine rejects everything else") {
  CHECK_THROWS_AS(split_antoine(ChamberContent({clasp(ClaspKind::whitehead, 0, 1, 0, 1)})), NotSplittable);
  CHECK_THROWS_AS(split_antoine(ChamberContent({Span{0, 0}})), NotSplittable);
  CHECK_THROWS_AS(split_antoine(ChamberContent({clasp(ClaspKind::antoine, 0, 1, 0, 1),
                                                clasp(ClaspKind::antoine, 2, 3, 2, 3)})),
                  NotSplittable);
  CHECK_THROWS_AS(split_antoine(ChamberContent({clasp(ClaspKind::antoine, 0, 1, 0, 1), Circle{}})), NotSplittable);
  CHECK_THROWS_AS(split_antoine(ChamberContent({clasp(ClaspKind::antoine, 0, 1, 0, 1),
                                                Turn{Side::top, SlotPair{2, 3}}})),
                  NotSplittable);
}
