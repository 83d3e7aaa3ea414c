#include <doctest.h>

#include <random>

#include "shadowcalc/errors.hpp"
#include "shadowcalc/int_matrix.hpp"
#include "shadowcalc/plumbing.hpp"

using namespace shadow;

namespace {

// Oracle: the full tridiagonal matrix through the general determinant.
int64_t tridiagonal_det(const PlumbingLine& e) {
  const int n = static_cast<int>(e.size());
  if (n == 0) return 1;
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = e[i];
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = 1;
  }
  return m.determinant();
}

}  // namespace

TEST_CASE("determinant examples") {
  CHECK(plumbing_det({}) == 1);
  CHECK(plumbing_det({0}) == 0);
  CHECK(plumbing_det({1}) == 1);
  CHECK(plumbing_det({2, 2, 2}) == 4);
  CHECK(plumbing_det({2, 1, 3}) == 1);
  CHECK(plumbing_det({0, 7}) == -1);
}

TEST_CASE("determinant matches the matrix oracle") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> len(0, 7), val(-6, 6);
  for (int t = 0; t < 2000; ++t) {
    PlumbingLine e(len(rng));
    for (auto& x : e) x = val(rng);
    CHECK(plumbing_det(e) == tridiagonal_det(e));
  }
}

TEST_CASE("moves from the displayed list") {
  CHECK(apply_plumbing_move({3, 0, 5}, {MoveKind::zero_interior, 1}) == PlumbingLine{8});
  CHECK(apply_plumbing_move({0, 4, 7}, {MoveKind::zero_leading, 0}) == PlumbingLine{7});
  CHECK(apply_plumbing_move({7, 4, 0}, {MoveKind::zero_trailing, 2}) == PlumbingLine{7});
  CHECK(apply_plumbing_move({2, 1, 3}, {MoveKind::unit_interior, 1}) == PlumbingLine{1, 2});
  CHECK(apply_plumbing_move({2, -1, 3}, {MoveKind::unit_interior, 1}) == PlumbingLine{3, 4});
  CHECK(apply_plumbing_move({1, 5}, {MoveKind::unit_leading, 0}) == PlumbingLine{4});
  CHECK(apply_plumbing_move({-1}, {MoveKind::unit_leading, 0}).empty());
  CHECK(apply_plumbing_move({5, -1}, {MoveKind::unit_trailing, 1}) == PlumbingLine{6});
}

TEST_CASE("inapplicable moves are refused") {
  CHECK_THROWS_AS(apply_plumbing_move({3, 2, 5}, {MoveKind::zero_interior, 1}), DomainError);
  CHECK_THROWS_AS(apply_plumbing_move({3, 0, 5}, {MoveKind::zero_interior, 0}), DomainError);
  CHECK_THROWS_AS(apply_plumbing_move({2, 3}, {MoveKind::unit_leading, 0}), DomainError);
  CHECK_THROWS_AS(apply_plumbing_move({1}, {MoveKind::unit_interior, 5}), DomainError);
}

TEST_CASE("reduction verdicts") {
  CHECK(reduce_plumbing({}).tag == BoundaryTag::S3);
  CHECK(reduce_plumbing({0}).tag == BoundaryTag::S2xS1);
  CHECK(reduce_plumbing({1}).tag == BoundaryTag::S3);
  CHECK(reduce_plumbing({0, 9}).tag == BoundaryTag::S3);
  const auto v = reduce_plumbing({2, 2});
  CHECK(v.tag == BoundaryTag::Other);
  CHECK(v.det == 3);
  const auto w = reduce_plumbing({2, 1, 3});
  CHECK(w.tag == BoundaryTag::S3);
  CHECK(w.trace.front().kind == MoveKind::unit_interior);
}

TEST_CASE("reduction is deterministic and replayable") {
  const PlumbingLine start{3, 1, 2, 0, -4, 1, 1};
  const auto v = reduce_plumbing(start);
  PlumbingLine cur = start;
  for (const auto& m : v.trace) cur = apply_plumbing_move(cur, m);
  CHECK(cur == v.reduced);
  CHECK(reduce_plumbing(start).trace.size() == v.trace.size());
}

TEST_CASE("symmetries") {
  CHECK(apply_symmetry({1, 2, 3}, Symmetry::reversal) == PlumbingLine{3, 2, 1});
  CHECK(apply_symmetry({1, -2}, Symmetry::sign_change) == PlumbingLine{-1, 2});
  CHECK(apply_symmetry({1, -2}, Symmetry::reversal_and_sign) == PlumbingLine{2, -1});
  for (auto s : {Symmetry::identity, Symmetry::reversal, Symmetry::sign_change, Symmetry::reversal_and_sign}) {
    const PlumbingLine e{4, -1, 0, 2};
    CHECK(std::llabs(plumbing_det(apply_symmetry(e, s))) == std::llabs(plumbing_det(e)));
  }
}

TEST_CASE("line parsing") {
  CHECK(parse_plumbing_line("2,-1,3") == PlumbingLine{2, -1, 3});
  CHECK(parse_plumbing_line("(2, +1, 3)") == PlumbingLine{2, 1, 3});
  CHECK(parse_plumbing_line("").empty());
  CHECK_THROWS_AS(parse_plumbing_line("2,,3"), DomainError);
  CHECK_THROWS_AS(parse_plumbing_line("2,x"), DomainError);
  CHECK(format_plumbing_line({2, -1}) == "2,-1");
}
