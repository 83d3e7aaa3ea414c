#include <doctest.h>

#include <functional>
#include <set>
#include <string>

#include "shadowcalc/contributions.hpp"
#include "shadowcalc/errors.hpp"

using namespace shadow;

namespace {

using T = PortionType;

struct Solution {
  int twice_x;
  int64_t q;
  int64_t q2;
  int64_t det;
};

// Enumerates joins x in half steps and torsions 1 <= |q| <= 8 for an
// H-portion with no middle piece, collecting those with det in {-1,0,1}.
std::vector<Solution> solve(Portion left, Portion right, bool left_q, bool right_q) {
  std::vector<Solution> out;
  for (int tx = -16; tx <= 16; ++tx)
    for (int64_t q = -8; q <= 8; ++q)
      for (int64_t q2 = -8; q2 <= 8; ++q2) {
        if (left_q ? q == 0 : q != 1) continue;
        if (right_q ? q2 == 0 : q2 != 1) continue;
        left.q = q;
        right.q = q2;
        HPortion h{left, {}, right, {HalfInteger::from_twice(tx)}};
        PlumbingExtraction ex;
        try {
          ex = extract_plumbing(h);
        } catch (const DomainError&) {
          continue;  // join not integral at this x
        }
        const int64_t d = plumbing_det(ex.line);
        if (d >= -1 && d <= 1) out.push_back({tx, left_q ? q : 0, right_q ? q2 : 0, d});
      }
  return out;
}

PlumbingLine line_of(Portion left, std::vector<Portion> mid, Portion right, int twice_x) {
  std::vector<HalfInteger> joins(mid.size() + 1, HalfInteger::from_twice(twice_x));
  return extract_plumbing({left, mid, right, joins}).line;
}

}  // namespace

TEST_CASE("table entries") {
  CHECK(portion_entries({T::d, 3, 1}, PortionRole::left) == PlumbingLine{2, -3, -2});
  CHECK(portion_entries({T::f, 3, 1}, PortionRole::right) == PlumbingLine{-2, -3, 2});
  CHECK(portion_entries({T::j, 2, 1}, PortionRole::left) == PlumbingLine{3, -2, -3});
  CHECK(portion_entries({T::l, 2, 1}, PortionRole::right) == PlumbingLine{-3, -2, 3});
  CHECK(portion_entries({T::i, 0, 1}, PortionRole::left) == PlumbingLine{-3});
  CHECK(portion_entries({T::F, 0, 1}, PortionRole::middle) == PlumbingLine{4});
  CHECK(portion_entries({T::J1, 0, 1}, PortionRole::middle) == PlumbingLine{4, -2});
  CHECK(portion_entries({T::J2, 0, 1}, PortionRole::middle) == PlumbingLine{-2, 4});
  CHECK(portion_entries({T::E, 5, -1}, PortionRole::middle) == PlumbingLine{-2, 5, 2});
  CHECK(portion_entries({T::a, 0, 1}, PortionRole::left).empty());
  CHECK_THROWS_AS(portion_entries({T::k, 0, 1}, PortionRole::left), DomainError);
  CHECK_THROWS_AS(portion_entries({T::F, 0, 1}, PortionRole::right), DomainError);
}

TEST_CASE("sequences of the two-piece cases") {
  CHECK(line_of({T::c}, {}, {T::k}, 0) == PlumbingLine{2, 1, 2});      // (2, x+1, 2)
  CHECK(line_of({T::i}, {}, {T::k}, 4) == PlumbingLine{-3, 2, 2});     // (-3, x, 2)
  CHECK(line_of({T::g}, {}, {T::e}, 1) == PlumbingLine{2, 1});         // (2, x+1/2)
  CHECK(line_of({T::i}, {}, {T::e}, 1) == PlumbingLine{-3, 0});        // (-3, x-1/2)
  CHECK(line_of({T::g}, {}, {T::f, 3}, 2) == PlumbingLine{2, 1, -2, -3, 2});
  CHECK(line_of({T::i}, {}, {T::f, 3}, 2) == PlumbingLine{-3, 0, -2, -3, 2});
  CHECK(line_of({T::i, 0, 1}, {}, {T::l, 2, -1}, 0) == PlumbingLine{-3, 0, 3, 2, -3});
  CHECK(line_of({T::j, 1, 1}, {}, {T::l, 2, 1}, 2) == PlumbingLine{3, -1, -3, 0, -3, -2, 3});
}

TEST_CASE("sequences at a first middle piece") {
  CHECK(line_of({T::g}, {{T::F}}, {T::k}, 1) == PlumbingLine{2, 1, 4});          // (2, x+1/2, 4)
  CHECK(line_of({T::c}, {{T::D}}, {T::k}, -1) == PlumbingLine{2, 1, 2});         // (2, x+3/2, 2)
  CHECK(line_of({T::a}, {{T::E, 3}}, {T::k}, 1) == PlumbingLine{1, 2, -3, -2});  // (x+1/2, 2, -q, -2)
  CHECK(line_of({T::d, 2}, {{T::J1}}, {T::k}, 1) == PlumbingLine{2, -2, -2, 0, 4, -2});
  CHECK(line_of({T::c}, {{T::J2}}, {T::k}, 0) == PlumbingLine{2, 0, -2, 4});
  const auto ex = extract_plumbing({{T::g}, {{T::F}}, {T::k}, {HalfInteger::from_twice(1), HalfInteger()}});
  CHECK_FALSE(ex.complete);
  CHECK_FALSE(ex.stop_reason.empty());
}

TEST_CASE("two-piece case analysis") {
  auto xs = [](const std::vector<Solution>& s) {
    std::set<int> out;
    for (const auto& x : s) out.insert(x.twice_x);
    return out;
  };
  // (eg), (kb): x = +-1/2
  CHECK(xs(solve({T::g}, {T::e}, false, false)) == std::set<int>{-1, 1});
  CHECK(xs(solve({T::b}, {T::k}, false, false)) == std::set<int>{-1, 1});
  // (ei): x = 1/2
  CHECK(xs(solve({T::i}, {T::e}, false, false)) == std::set<int>{1});
  // never S3 nor S2xS1
  CHECK(solve({T::j}, {T::e}, true, false).empty());
  CHECK(solve({T::g}, {T::f}, false, true).empty());
  CHECK(solve({T::b}, {T::l}, false, true).empty());
  CHECK(solve({T::i}, {T::l, 0, -1}, false, true).empty());
  CHECK(solve({T::i}, {T::l}, false, true).empty());
  CHECK(solve({T::j}, {T::l}, true, true).empty());
  // (fi): x = 0 and q in {1, 2}
  const auto fi = solve({T::i}, {T::f}, false, true);
  REQUIRE_FALSE(fi.empty());
  std::set<int64_t> fq;
  for (const auto& s : fi) {
    CHECK(s.twice_x == 0);
    fq.insert(s.q2);
  }
  CHECK(fq == std::set<int64_t>{1, 2});
  // (fj): x = 0 and q = 1 or q' in {1, 2}
  const auto fj = solve({T::j}, {T::f}, true, true);
  REQUIRE_FALSE(fj.empty());
  for (const auto& s : fj) {
    CHECK(s.twice_x == 0);
    CHECK((s.q == 1 || s.q2 == 1 || s.q2 == 2));
  }
  // (kc), (kh): only x = 0, and that is S2xS1, never S3
  for (T left : {T::c, T::h}) {
    const auto kc = solve({left}, {T::k}, false, false);
    REQUIRE(kc.size() == 1);
    CHECK(kc[0].twice_x == 0);
    CHECK(kc[0].det == 0);
  }
  // (ki), (kj): x = 0
  CHECK(xs(solve({T::i}, {T::k}, false, false)) == std::set<int>{0});
  const auto kj = solve({T::j}, {T::k}, true, false);
  REQUIRE_FALSE(kj.empty());
  CHECK(xs(kj) == std::set<int>{0});
  // (lc): x = 0 and q = 1
  const auto lc = solve({T::c}, {T::l}, false, true);
  REQUIRE(lc.size() == 1);
  CHECK(lc[0].twice_x == 0);
  CHECK(lc[0].q2 == 1);
  // (lj) positive: x = 0
  const auto ljp = solve({T::j}, {T::l, 0, -1}, true, true);
  REQUIRE_FALSE(ljp.empty());
  CHECK(xs(ljp) == std::set<int>{0});
}

TEST_CASE("simplifiable torsions are flagged") {
  auto ex = extract_plumbing({{T::d, 0}, {}, {T::k}, {HalfInteger()}});
  CHECK(ex.flags.size() == 1);
  ex = extract_plumbing({{T::a}, {{T::E, 1}}, {T::k}, {HalfInteger::from_twice(1), HalfInteger()}});
  CHECK(ex.flags.size() == 1);
  ex = extract_plumbing({{T::a}, {{T::E, 3}}, {T::k}, {HalfInteger::from_twice(1), HalfInteger()}});
  CHECK(ex.flags.empty());
}

TEST_CASE("malformed H-portions") {
  CHECK_THROWS_AS(extract_plumbing({{T::c}, {}, {T::k}, {}}), DomainError);
  CHECK_THROWS_AS(extract_plumbing({{T::c}, {}, {T::k}, {HalfInteger::from_twice(1)}}), DomainError);
  CHECK_THROWS_AS(extract_plumbing({{T::c}, {{T::k}}, {T::k}, {HalfInteger(), HalfInteger()}}), DomainError);
}
