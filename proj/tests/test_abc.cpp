#include "doctest.h"

#include "icx/abc.hpp"
#include "icx/io.hpp"

#include "util.hpp"

using namespace icx;

namespace {
const Field gf2(2);
const std::filesystem::path kData = ICX_DATA_DIR;

AbcSpec abbc12_spec() {
  return make_abc_spec(3, parse_types("ABBC"),
                       Involution(parse_cycles("(13)(2)", 3)), gf2,
                       {{4, 1}, {4, 3}});
}

// Predicted nonzero columns of code row k: k in every A block, image(k)
// in every B block, and both k and image(k) in every C block.
std::set<int> row_support(const AbcSpec& spec, int k) {
  std::set<int> cols;
  for (int j = 1; j <= spec.block_count(); ++j) {
    int base = (j - 1) * spec.block_size;
    switch (spec.types[j - 1]) {
      case BlockType::A: cols.insert(base + k); break;
      case BlockType::B: cols.insert(base + spec.sigma.image(k)); break;
      case BlockType::C:
        cols.insert(base + k);
        cols.insert(base + spec.sigma.image(k));
        break;
    }
  }
  return cols;
}
}  // namespace

TEST_CASE("single message spec") {
  AbcSpec spec = make_abc_spec(1, parse_types("A"), Involution::identity(1), gf2);
  FittingMatrix f = abc_problem(spec);
  CHECK(to_text(f) == "1 1\n1\n");
  CHECK(abc_code(spec) == Mat::from_rows({{1}}, gf2));
  ExtensionResult res = abc_extension(spec, f);
  CHECK(to_text(res.f_ext) == "2 2\n1 X\nX 1\n");
  CHECK(res.g_ext == Mat::from_rows({{1, 1}}, gf2));
}

TEST_CASE("two A blocks give cross-block side information only") {
  AbcSpec spec = make_abc_spec(2, parse_types("AA"),
                               Involution(parse_cycles("(12)", 2)), gf2);
  FittingMatrix f = abc_problem(spec);
  CHECK(to_text(f) == "4 4\n1 0 X 0\n0 1 0 X\nX 0 1 0\n0 X 0 1\n");
}

TEST_CASE("single B block is the swap code") {
  AbcSpec spec = make_abc_spec(2, parse_types("B"),
                               Involution(parse_cycles("(12)", 2)), gf2);
  CHECK(abc_code(spec) == Mat::from_rows({{0, 1}, {1, 0}}, gf2));
}

TEST_CASE("all-A specs produce repeated identities") {
  AbcSpec spec = make_abc_spec(3, parse_types("AAA"), Involution::identity(3), gf2);
  Mat eye = Mat::identity(3, gf2);
  CHECK(abc_code(spec) == hconcat(hconcat(eye, eye), eye));
}

TEST_CASE("the shipped instance comes from the ABBC spec") {
  AbcSpec spec = abbc12_spec();
  CHECK(abc_code(spec) == load_mat(kData / "abbc12_code.g"));
  CHECK(abc_problem(spec) == load_fitting(kData / "abbc12_min.fx"));

  // The full shipped problem is the minimal one plus extra side
  // information; widening keeps the code valid.
  FittingMatrix minimal = abc_problem(spec);
  FittingMatrix full = load_fitting(kData / "abbc12.fx");
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      if (minimal.at(i, j) != PatternEntry::Zero)
        CHECK(minimal.at(i, j) == full.at(i, j));
  CHECK(verify_code(abc_code(spec), minimal));
  CHECK(verify_code(abc_code(spec), full));
}

TEST_CASE("choice of decoding route changes the C-block side sets") {
  AbcSpec cond1 = make_abc_spec(3, parse_types("ABBC"),
                                Involution(parse_cycles("(13)(2)", 3)), gf2);
  FittingMatrix f1 = abc_problem(cond1);
  // Receiver of message 1 in the C block, route via its own transmission:
  // side includes message 1 of the A block (column 1).
  CHECK(f1.at(9, 0) == PatternEntry::Star);

  FittingMatrix f2 = abc_problem(abbc12_spec());
  // Route via the swapped transmission instead: column 3, not column 1.
  CHECK(f2.at(9, 0) == PatternEntry::Zero);
  CHECK(f2.at(9, 2) == PatternEntry::Star);
}

TEST_CASE("abc extension reproduces the shipped off-diagonal pattern") {
  AbcSpec spec = abbc12_spec();
  FittingMatrix full = load_fitting(kData / "abbc12.fx");
  ExtensionResult res = abc_extension(spec, full);
  REQUIRE(res.off_diag.has_value());
  CHECK(*res.off_diag == load_xpattern(kData / "abbc12_bxx.xp"));
  CHECK(verify_code(res.g_ext, res.f_ext));
}

TEST_CASE("randomized sweep over small specs") {
  SplitMix64 rng(83);
  int done = 0;
  for (int it = 0; it < 60; ++it) {
    int r = 1 + rng.next_below(3);
    int T = 1 + rng.next_below(3);
    std::vector<BlockType> types;
    for (int b = 0; b < T; ++b)
      types.push_back(static_cast<BlockType>(rng.next_below(3)));
    Involution sigma = testutil::random_involution(rng, r);
    std::set<std::pair<int, int>> cond2;
    for (int b = 1; b <= T; ++b)
      if (types[b - 1] == BlockType::C)
        for (int k = 1; k <= r; ++k)
          if (!sigma.is_fixed(k) && rng.next_below(2)) cond2.insert({b, k});
    AbcSpec spec = make_abc_spec(r, types, sigma, gf2, cond2);

    FittingMatrix f = abc_problem(spec);
    Mat g = abc_code(spec);
    CHECK_NOTHROW(f.validate());
    CHECK(verify_code(g, f));

    Mat cm = to_matrix(sigma.perm(), gf2);
    for (int b = 0; b < T; ++b) {
      std::vector<int> cols;
      for (int k = 0; k < r; ++k) cols.push_back(b * r + k);
      CHECK(commutes(select_cols(g, cols), cm));
    }

    for (int k = 1; k <= r; ++k) {
      std::set<int> support;
      for (int j = 0; j < g.cols(); ++j)
        if (g(k - 1, j) != 0) support.insert(j + 1);
      CHECK(support == row_support(spec, k));
    }

    ExtensionResult res = abc_extension(spec, f);
    CHECK(verify_code(res.g_ext, res.f_ext));
    ++done;
  }
  CHECK(done == 60);
}

TEST_CASE("widening with extra side information keeps codes valid") {
  SplitMix64 rng(89);
  AbcSpec spec = abbc12_spec();
  FittingMatrix f = abc_problem(spec);
  Mat g = abc_code(spec);
  for (int extra = 0; extra < 10; ++extra) {
    int i = static_cast<int>(rng.next_below(12));
    int j = static_cast<int>(rng.next_below(12));
    if (f.at(i, j) == PatternEntry::Zero) f.set(i, j, PatternEntry::Star);
    CHECK(verify_code(g, f));
  }
}

TEST_CASE("spec JSON round trip") {
  AbcSpec spec = abbc12_spec();
  std::string text = to_json(spec);
  AbcSpec back = abc_spec_from_json(text);
  CHECK(back.block_size == 3);
  CHECK(format_types(back.types) == "ABBC");
  CHECK(back.sigma == spec.sigma);
  CHECK(back.typec_choice == spec.typec_choice);
  CHECK(abc_problem(back) == abc_problem(spec));

  CHECK_THROWS_AS(abc_spec_from_json("{}"), Error);
  CHECK_THROWS_AS(
      abc_spec_from_json("{\"r\":2,\"types\":\"D\",\"sigma\":\"\",\"p\":2}"),
      Error);
}

TEST_CASE("invalid specs are rejected") {
  CHECK_THROWS_AS(make_abc_spec(2, parse_types("A"), Involution::identity(3), gf2),
                  Error);
  // cond2 naming an A block.
  CHECK_THROWS_AS(make_abc_spec(2, parse_types("A"),
                                Involution(parse_cycles("(12)", 2)), gf2,
                                {{1, 1}}),
                  Error);
  // cond2 naming a fixed point.
  CHECK_THROWS_AS(make_abc_spec(2, parse_types("C"), Involution::identity(2),
                                gf2, {{1, 1}}),
                  Error);
}
