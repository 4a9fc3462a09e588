#include "doctest.h"

#include "icx/io.hpp"
#include "icx/verifier.hpp"

#include "oracle.hpp"
#include "util.hpp"

using namespace icx;

namespace {
const Field gf2(2);
const std::filesystem::path kData = ICX_DATA_DIR;
}

TEST_CASE("identity code decodes every valid problem with unit rows") {
  SplitMix64 rng(2);
  for (int it = 0; it < 20; ++it) {
    int K = 1 + rng.next_below(4);
    FittingMatrix f = testutil::random_fitting(rng, K + rng.next_below(3), K, 30);
    auto d = find_decoding(Mat::identity(K, gf2), f);
    REQUIRE(d.has_value());
    for (int t = 0; t < f.rows(); ++t)
      for (int k = 0; k < K; ++k)
        CHECK((*d)(t, k) == (k == f.demand_col(t) ? 1 : 0));
  }
}

TEST_CASE("the shipped 12-message code solves the shipped problem") {
  FittingMatrix f = load_fitting(kData / "abbc12.fx");
  Mat g = load_mat(kData / "abbc12_code.g");
  CHECK(verify_code(g, f));
  auto d = find_decoding(g, f);
  REQUIRE(d.has_value());
  CHECK(fits(*d * g, f));  // soundness
}

TEST_CASE("zero code never decodes") {
  FittingMatrix f = fitting_from_text("2 2\n1 0\n0 1\n");
  CHECK_FALSE(verify_code(Mat(2, 2, gf2), f));
  CHECK_FALSE(find_decoding(Mat(1, 2, gf2), f).has_value());
}

TEST_CASE("single-transmission code cannot serve an uncovered demand") {
  FittingMatrix f = fitting_from_text("2 2\n1 0\n0 1\n");
  Mat g = Mat::from_rows({{1, 0}}, gf2);
  CHECK_FALSE(verify_code(g, f));
}

TEST_CASE("dimension mismatch is rejected") {
  FittingMatrix f = fitting_from_text("2 2\n1 0\n0 1\n");
  CHECK_THROWS_AS(verify_code(Mat(1, 3, gf2), f), Error);
}

TEST_CASE("verification agrees with brute force over all decoders") {
  SplitMix64 rng(17);
  int checked = 0;
  for (int it = 0; it < 120; ++it) {
    int K = 2 + rng.next_below(3);          // K in [2,4]
    int L = K + rng.next_below(2);          // L in [K, K+1]
    int r = 1 + rng.next_below(3);          // r in [1,3]
    if (L * r > 14) continue;
    FittingMatrix f = testutil::random_fitting(rng, L, K, 35);
    Mat g = testutil::random_mat(rng, r, K, gf2);
    CHECK(verify_code(g, f) == oracle::brute_code_check(g, f));
    ++checked;
  }
  CHECK(checked > 60);
}

TEST_CASE("encode basics") {
  Mat g = load_mat(kData / "abbc12_code.g");
  std::vector<Elem> zero(12, 0);
  CHECK(encode(g, zero) == std::vector<Elem>{0, 0, 0});
  std::vector<Elem> e1(12, 0);
  e1[0] = 1;
  CHECK(encode(g, e1) == std::vector<Elem>{1, 0, 0});

  Mat eye = Mat::identity(3, gf2);
  std::vector<Elem> x{1, 0, 1};
  CHECK(encode(eye, x) == x);
  CHECK_THROWS_AS(encode(eye, std::vector<Elem>{1}), Error);
}

TEST_CASE("receivers recover their demands through decode") {
  FittingMatrix f = load_fitting(kData / "abbc12.fx");
  Mat g = load_mat(kData / "abbc12_code.g");
  auto d = find_decoding(g, f);
  REQUIRE(d.has_value());

  SplitMix64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Elem> x(12);
    for (auto& v : x) v = static_cast<Elem>(rng.next_below(2));
    std::vector<Elem> y = encode(g, x);
    for (int t = 0; t < f.rows(); ++t) {
      std::map<int, Elem> side;
      for (int j = 0; j < f.cols(); ++j)
        if (f.at(t, j) == PatternEntry::Star) side[j + 1] = x[j];
      Elem got = receiver_decode(d->row_span(t), g, y, side, f, t);
      CHECK(got == x[f.demand_col(t)]);
    }
  }
}

TEST_CASE("decode without side information returns the symbol directly") {
  FittingMatrix f = fitting_from_text("2 2\n1 0\n0 1\n");
  Mat g = Mat::identity(2, gf2);
  std::vector<Elem> x{1, 0};
  std::vector<Elem> y = encode(g, x);
  std::vector<Elem> d0{1, 0};
  CHECK(receiver_decode(d0, g, y, {}, f, 0) == 1);
  std::vector<Elem> zero{0, 0};
  CHECK(receiver_decode(d0, g, encode(g, zero), {}, f, 0) == 0);
}

TEST_CASE("decode requires the side values it uses") {
  FittingMatrix f = fitting_from_text("1 2\n1 X\n");
  Mat g = Mat::from_rows({{1, 1}}, gf2);
  auto d = find_decoding(g, f);
  REQUIRE(d.has_value());
  std::vector<Elem> y = encode(g, std::vector<Elem>{1, 1});
  CHECK_THROWS_AS(receiver_decode(d->row_span(0), g, y, {}, f, 0), Error);
}
