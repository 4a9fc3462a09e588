#include "doctest.h"

#include "icx/io.hpp"
#include "icx/minrank.hpp"

#include "oracle.hpp"
#include "util.hpp"

using namespace icx;

namespace {
const Field gf2(2);
const std::filesystem::path kData = ICX_DATA_DIR;
}

TEST_CASE("subspace counts") {
  CHECK(subspace_count(12, 1, gf2) == 4095);
  CHECK(subspace_count(12, 2, gf2) == 2794155);
  CHECK(subspace_count(4, 2, gf2) == 35);
  CHECK(subspace_count(3, 1, Field(3)) == 13);
  CHECK(subspace_count(4, 2, Field(3)) == 130);
  CHECK(subspace_count(5, 0, gf2) == 1);
  CHECK(subspace_count(5, 5, gf2) == 1);
  CHECK(subspace_count(200, 100, gf2) == ~0ULL);  // saturates
}

TEST_CASE("enumeration visits each subspace exactly once") {
  for (auto [K, r, p] : {std::tuple{4, 2, 2}, {5, 3, 2}, {3, 2, 3}}) {
    Field f(p);
    std::uint64_t seen = 0;
    std::vector<Mat> all;
    enumerate_rref_bases(K, r, f, [&](const Mat& b) {
      ++seen;
      CHECK(rank(b) == r);
      all.push_back(b);
      return true;
    });
    CHECK(seen == subspace_count(K, r, f));
    for (size_t i = 0; i < all.size(); ++i)
      for (size_t j = i + 1; j < all.size(); ++j)
        CHECK(all[i] != all[j]);
  }
}

TEST_CASE("is_achievable basics") {
  // No side information: only the full rank works.
  FittingMatrix eye3 = fitting_from_text("3 3\n1 0 0\n0 1 0\n0 0 1\n");
  CHECK_FALSE(is_achievable(eye3, 1, gf2).has_value());
  CHECK_FALSE(is_achievable(eye3, 2, gf2).has_value());
  auto w = is_achievable(eye3, 3, gf2);
  REQUIRE(w.has_value());
  CHECK(*w == Mat::identity(3, gf2));

  // All off-diagonal side information: one transmission suffices.
  FittingMatrix full = fitting_from_text("3 3\n1 X X\nX 1 X\nX X 1\n");
  auto one = is_achievable(full, 1, gf2);
  REQUIRE(one.has_value());
  CHECK(*one == Mat::from_rows({{1, 1, 1}}, gf2));

  CHECK_THROWS_AS(is_achievable(eye3, 0, gf2), Error);
  CHECK_THROWS_AS(is_achievable(eye3, 4, gf2), Error);
}

TEST_CASE("minrank of patterns without stars is K") {
  FittingMatrix eye3 = fitting_from_text("3 3\n1 0 0\n0 1 0\n0 0 1\n");
  MinrankResult res = minrank(eye3, gf2);
  CHECK(res.value == 3);
  CHECK(res.refuted_counts == std::vector<std::uint64_t>{7, 7});
}

TEST_CASE("minrank agrees with completion brute force") {
  SplitMix64 rng(41);
  for (int it = 0; it < 40; ++it) {
    FittingMatrix f = testutil::random_fitting_bounded_stars(rng, 4, 4, 10);
    MinrankResult res = minrank(f, gf2);
    CHECK(res.value == oracle::brute_minrank_completions(f, gf2));
    CHECK(verify_code(res.witness, f));
    CHECK(res.witness.rows() == res.value);
    CHECK(res.value >= 1);
    CHECK(res.value <= f.cols());
  }
}

TEST_CASE("removing side information never lowers minrank") {
  SplitMix64 rng(43);
  for (int it = 0; it < 25; ++it) {
    FittingMatrix f = testutil::random_fitting(rng, 4, 4, 40);
    int before = minrank(f, gf2).value;
    // Turn one star to zero, if any.
    bool changed = false;
    for (int i = 0; i < f.rows() && !changed; ++i)
      for (int j = 0; j < f.cols() && !changed; ++j)
        if (f.at(i, j) == PatternEntry::Star) {
          f.set(i, j, PatternEntry::Zero);
          changed = true;
        }
    if (!changed) continue;
    CHECK(minrank(f, gf2).value >= before);
  }
}

TEST_CASE("witness is the canonical first feasible basis") {
  SplitMix64 rng(47);
  for (int it = 0; it < 10; ++it) {
    FittingMatrix f = testutil::random_fitting(rng, 4, 4, 35);
    MinrankResult a = minrank(f, gf2);
    MinrankResult b = minrank(f, gf2);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("resource guard rejects oversized enumerations") {
  FittingMatrix f = fitting_from_text("3 3\n1 0 0\n0 1 0\n0 0 1\n");
  try {
    minrank(f, gf2, 5);
    FAIL("expected ResourceGuard");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceGuard);
  }
}

TEST_CASE("submatrix containment check") {
  FittingMatrix f = load_fitting(kData / "abbc12.fx");
  CHECK(minrank_lower_bound_submatrix(f, f));

  FittingMatrix small = fitting_from_text("2 2\n1 X\nX 1\n");
  FittingMatrix big = fitting_from_text("3 3\n1 X 0\nX 1 0\n0 0 1\n");
  CHECK(minrank_lower_bound_submatrix(big, small));

  FittingMatrix other = fitting_from_text("2 2\n1 0\n0 1\n");
  try {
    minrank_lower_bound_submatrix(big, other);
    FAIL("expected ContainmentViolation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ContainmentViolation);
  }
}
