// icx: fitting matrices over small prime fields, scalar linear index
// codes, exact minrank, and rank-invariant extensions.

#include <iostream>

#include "CLI11.hpp"

#include "icx/abc.hpp"
#include "icx/io.hpp"
#include "icx/rng.hpp"

namespace {

using namespace icx;

// Problem inputs are either fitting-matrix text or receiver-list JSON;
// JSON is detected by a leading '{'.
FittingMatrix load_problem(const std::string& path) {
  std::string text = read_file(path);
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return from_problem(problem_from_json(text));
  return fitting_from_text(text);
}

// Block spec "1-3,4-6,7-9,10-12": comma-separated inclusive ranges, one
// block per range.
std::vector<std::vector<int>> parse_blocks(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ',')) {
    size_t dash = part.find('-');
    int lo, hi;
    try {
      if (dash == std::string::npos) {
        lo = hi = std::stoi(part);
      } else {
        lo = std::stoi(part.substr(0, dash));
        hi = std::stoi(part.substr(dash + 1));
      }
    } catch (const std::exception&) {
      raise(ErrorKind::Parse, "bad block range \"" + part + "\"");
    }
    if (lo > hi) raise(ErrorKind::Parse, "bad block range \"" + part + "\"");
    std::vector<int> blk;
    for (int c = lo; c <= hi; ++c) blk.push_back(c);
    blocks.push_back(std::move(blk));
  }
  if (blocks.empty()) raise(ErrorKind::Parse, "empty block spec");
  return blocks;
}

// "4:1,4:3" -> {(4,1), (4,3)}.
std::set<std::pair<int, int>> parse_cond2(const std::string& text) {
  std::set<std::pair<int, int>> out;
  if (text.empty()) return out;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ',')) {
    size_t colon = part.find(':');
    if (colon == std::string::npos)
      raise(ErrorKind::Parse, "cond2 entries look like BLOCK:MESSAGE");
    try {
      out.insert({std::stoi(part.substr(0, colon)),
                  std::stoi(part.substr(colon + 1))});
    } catch (const std::exception&) {
      raise(ErrorKind::Parse, "bad cond2 entry \"" + part + "\"");
    }
  }
  return out;
}

void write_extension(const ExtensionResult& res, const std::string& prefix) {
  save_fitting(prefix + ".fx", res.f_ext);
  save_mat(prefix + ".g", res.g_ext);
  std::cout << "wrote " << prefix << ".fx\n";
  std::cout << "wrote " << prefix << ".g\n";
  if (res.off_diag) {
    save_xpattern(prefix + ".bxx", *res.off_diag);
    std::cout << "wrote " << prefix << ".bxx\n";
  }
  std::cout << "verified: yes\n";
}

std::string default_prefix(const std::string& problem_path,
                           const std::string& suffix) {
  return std::filesystem::path(problem_path).stem().string() + suffix;
}

int cmd_validate(const std::string& file) {
  FittingMatrix f = load_problem(file);
  try {
    f.validate();
  } catch (const Error& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return 1;
  }
  std::cout << "valid fitting matrix: L=" << f.rows() << " K=" << f.cols()
            << "\n";
  return 0;
}

int cmd_minrank(const std::string& file, int p, int max_rank,
                std::uint64_t guard) {
  FittingMatrix f = load_problem(file);
  f.validate();
  Field field(p);
  if (max_rank == 0) {
    MinrankResult res = minrank(f, field, guard);
    std::cout << "minrank = " << res.value << "\n";
    for (size_t i = 0; i < res.refuted_counts.size(); ++i)
      std::cout << "rank " << i + 1 << ": infeasible ("
                << res.refuted_counts[i] << " subspaces)\n";
    std::cout << "witness:\n" << to_text(res.witness);
    return 0;
  }
  for (int r = 1; r <= std::min(max_rank, f.cols()); ++r) {
    if (auto w = is_achievable(f, r, field, guard)) {
      std::cout << "minrank = " << r << "\n";
      std::cout << "witness:\n" << to_text(*w);
      return 0;
    }
    std::cout << "rank " << r << ": infeasible ("
              << subspace_count(f.cols(), r, field) << " subspaces)\n";
  }
  std::cout << "minrank > " << std::min(max_rank, f.cols()) << "\n";
  return 1;
}

int cmd_verify(const std::string& problem, const std::string& codefile) {
  FittingMatrix f = load_problem(problem);
  f.validate();
  Mat g = load_mat(codefile);
  auto d = find_decoding(g, f);
  if (!d) {
    std::cout << "index code: no\n";
    return 1;
  }
  std::cout << "index code: yes\ndecoding matrix:\n" << to_text(*d);
  return 0;
}

int cmd_extend_replicate(const std::string& problem, const std::string& codefile,
                         int m, std::string prefix) {
  FittingMatrix f = load_problem(problem);
  Mat g = load_mat(codefile);
  if (prefix.empty()) prefix = default_prefix(problem, "_x" + std::to_string(m));
  write_extension(replicate_extension(f, g, m), prefix);
  return 0;
}

int cmd_extend_involutory(const std::string& problem, const std::string& codefile,
                          const std::string& perm, const std::string& blocks,
                          std::string prefix) {
  FittingMatrix f = load_problem(problem);
  Mat g = load_mat(codefile);
  Involution c(parse_cycles(perm, g.rows()));
  BlockLayout layout(f.cols(), g.rows(), parse_blocks(blocks));
  if (prefix.empty()) prefix = default_prefix(problem, "_inv");
  write_extension(involutory_block_extension(f, g, layout, c), prefix);
  return 0;
}

int cmd_extend_systematic(const std::string& problem, const std::string& codefile,
                          const std::string& perm, std::string prefix) {
  FittingMatrix f = load_problem(problem);
  Mat g = load_mat(codefile);
  Involution c(parse_cycles(perm, g.rows()));
  if (prefix.empty()) prefix = default_prefix(problem, "_sys");
  write_extension(systematic_extension(f, g, c), prefix);
  return 0;
}

int cmd_extend_general(const std::string& problem, const std::string& codefile,
                       const std::string& perm, std::string prefix) {
  FittingMatrix f = load_problem(problem);
  Mat g = load_mat(codefile);
  Involution c(parse_cycles(perm, g.rows()));
  if (prefix.empty()) prefix = default_prefix(problem, "_gen");
  write_extension(derive_bxx(f, g, to_matrix(c.perm(), g.field())), prefix);
  return 0;
}

int cmd_gen_abc(int r, const std::string& types, const std::string& perm, int p,
                const std::string& cond2, const std::string& prefix) {
  AbcSpec spec = make_abc_spec(r, parse_types(types),
                               Involution(parse_cycles(perm, r)), Field(p),
                               parse_cond2(cond2));
  FittingMatrix f = abc_problem(spec);
  Mat g = abc_code(spec);
  if (prefix.empty()) {
    std::cout << to_text(f) << to_text(g);
  } else {
    save_fitting(prefix + ".fx", f);
    save_mat(prefix + ".g", g);
    std::cout << "wrote " << prefix << ".fx\n";
    std::cout << "wrote " << prefix << ".g\n";
  }
  return 0;
}

int cmd_simulate(const std::string& problem, const std::string& codefile,
                 std::uint64_t trials, std::uint64_t seed) {
  FittingMatrix f = load_problem(problem);
  f.validate();
  Mat g = load_mat(codefile);
  auto d = find_decoding(g, f);
  if (!d) {
    std::cout << "index code: no\n";
    return 1;
  }
  const int p = g.field().modulus();
  SplitMix64 rng(seed);
  std::uint64_t failures = 0;
  std::vector<Elem> x(f.cols());
  for (std::uint64_t t = 0; t < trials; ++t) {
    for (auto& v : x) v = static_cast<Elem>(rng.next_below(p));
    std::vector<Elem> y = encode(g, x);
    for (int row = 0; row < f.rows(); ++row) {
      std::map<int, Elem> side;
      for (int j = 0; j < f.cols(); ++j)
        if (f.at(row, j) == PatternEntry::Star) side[j + 1] = x[j];
      if (receiver_decode(d->row_span(row), g, y, side, f, row) !=
          x[f.demand_col(row)])
        ++failures;
    }
  }
  std::cout << "trials: " << trials << "\nfailures: " << failures << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"index coding toolkit: fitting matrices, code verification, "
               "exact minrank, rank-invariant extensions"};
  app.require_subcommand(1);

  std::string problem, codefile, perm, blocks, prefix, types, cond2;
  int field_p = 2, m = 2, r = 0, max_rank = 0;
  std::uint64_t guard = kDefaultSubspaceGuard, trials = 1000, seed = 1;

  auto* validate = app.add_subcommand("validate", "check the demand structure");
  validate->add_option("file", problem, "fitting matrix or problem JSON")
      ->required();

  auto* mr = app.add_subcommand("minrank", "exact minrank with witness");
  mr->add_option("file", problem)->required();
  mr->add_option("--field", field_p, "prime modulus")->capture_default_str();
  mr->add_option("--max-rank", max_rank, "stop after this rank");
  mr->add_option("--guard", guard, "largest subspace count to enumerate")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "is the code an index code?");
  verify->add_option("problem", problem)->required();
  verify->add_option("--code", codefile)->required();

  auto* rep = app.add_subcommand("extend-replicate", "m-order replication");
  rep->add_option("problem", problem)->required();
  rep->add_option("--code", codefile)->required();
  rep->add_option("-m,--order", m, "number of copies")->capture_default_str();
  rep->add_option("-o,--out", prefix, "output prefix");

  auto* inv = app.add_subcommand("extend-involutory",
                                 "structured two-order extension");
  inv->add_option("problem", problem)->required();
  inv->add_option("--code", codefile)->required();
  inv->add_option("--perm", perm, "involution in cycle notation")->required();
  inv->add_option("--blocks", blocks, "column blocks, e.g. 1-3,4-6")->required();
  inv->add_option("-o,--out", prefix, "output prefix");

  auto* sys = app.add_subcommand("extend-systematic",
                                 "two-order extension via systematic form");
  sys->add_option("problem", problem)->required();
  sys->add_option("--code", codefile)->required();
  sys->add_option("--perm", perm, "involution in cycle notation")->required();
  sys->add_option("-o,--out", prefix, "output prefix");

  auto* gen = app.add_subcommand("extend-general",
                                 "two-order extension with minimal pattern");
  gen->add_option("problem", problem)->required();
  gen->add_option("--code", codefile)->required();
  gen->add_option("--perm", perm, "involution in cycle notation")->required();
  gen->add_option("-o,--out", prefix, "output prefix");

  auto* abc = app.add_subcommand("gen-abc", "generate a block-typed problem");
  abc->add_option("--r", r, "block size")->required();
  abc->add_option("--types", types, "block types, e.g. ABBC")->required();
  abc->add_option("--perm", perm, "involution in cycle notation")->required();
  abc->add_option("--field", field_p, "prime modulus")->capture_default_str();
  abc->add_option("--cond2", cond2, "BLOCK:MESSAGE pairs using the swapped route");
  abc->add_option("-o,--out", prefix, "output prefix");

  auto* sim = app.add_subcommand("simulate", "encode/decode round trips");
  sim->add_option("problem", problem)->required();
  sim->add_option("--code", codefile)->required();
  sim->add_option("--trials", trials)->capture_default_str();
  sim->add_option("--seed", seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (validate->parsed()) return cmd_validate(problem);
    if (mr->parsed()) return cmd_minrank(problem, field_p, max_rank, guard);
    if (verify->parsed()) return cmd_verify(problem, codefile);
    if (rep->parsed())
      return cmd_extend_replicate(problem, codefile, m, prefix);
    if (inv->parsed())
      return cmd_extend_involutory(problem, codefile, perm, blocks, prefix);
    if (sys->parsed())
      return cmd_extend_systematic(problem, codefile, perm, prefix);
    if (gen->parsed()) return cmd_extend_general(problem, codefile, perm, prefix);
    if (abc->parsed())
      return cmd_gen_abc(r, types, perm, field_p, cond2, prefix);
    if (sim->parsed()) return cmd_simulate(problem, codefile, trials, seed);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ResourceGuard ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 3;
}
