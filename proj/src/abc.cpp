#include "icx/abc.hpp"

#include "json.hpp"

namespace icx {

void AbcSpec::validate() const {
  if (block_size < 1) raise(ErrorKind::InvalidSpec, "block size must be >= 1");
  if (types.empty()) raise(ErrorKind::InvalidSpec, "at least one block required");
  if (sigma.size() != block_size)
    raise(ErrorKind::InvalidSpec, "involution size must equal the block size");
  for (const auto& [key, cond] : typec_choice) {
    auto [blk, msg] = key;
    if (blk < 1 || blk > block_count() || types[blk - 1] != BlockType::C)
      raise(ErrorKind::InvalidSpec,
            "choice given for block " + std::to_string(blk) + ", not a C block");
    if (msg < 1 || msg > block_size || sigma.is_fixed(msg))
      raise(ErrorKind::InvalidSpec,
            "choice given for fixed or out-of-range message " + std::to_string(msg));
  }
  for (int b = 1; b <= block_count(); ++b) {
    if (types[b - 1] != BlockType::C) continue;
    for (int k = 1; k <= block_size; ++k)
      if (!sigma.is_fixed(k) && !typec_choice.count({b, k}))
        raise(ErrorKind::InvalidSpec,
              "missing choice for block " + std::to_string(b) + ", message " +
                  std::to_string(k));
  }
}

AbcSpec make_abc_spec(int block_size, std::vector<BlockType> types,
                      Involution sigma, Field field,
                      const std::set<std::pair<int, int>>& cond2) {
  AbcSpec spec{block_size, std::move(types), std::move(sigma), field, {}};
  for (int b = 1; b <= spec.block_count(); ++b) {
    if (spec.types[b - 1] != BlockType::C) continue;
    for (int k = 1; k <= block_size; ++k)
      if (!spec.sigma.is_fixed(k))
        spec.typec_choice[{b, k}] =
            cond2.count({b, k}) ? TypeCCond::Cond2 : TypeCCond::Cond1;
  }
  for (const auto& key : cond2)
    if (!spec.typec_choice.count(key) ||
        spec.typec_choice.at(key) != TypeCCond::Cond2)
      raise(ErrorKind::InvalidSpec,
            "cond2 entry " + std::to_string(key.first) + ":" +
                std::to_string(key.second) +
                " does not name a C-block non-fixed message");
  spec.validate();
  return spec;
}

std::vector<BlockType> parse_types(const std::string& text) {
  std::vector<BlockType> out;
  for (char ch : text) {
    switch (ch) {
      case 'A': out.push_back(BlockType::A); break;
      case 'B': out.push_back(BlockType::B); break;
      case 'C': out.push_back(BlockType::C); break;
      default:
        raise(ErrorKind::Parse, std::string("block type must be A, B or C, got '") +
                                    ch + "'");
    }
  }
  if (out.empty()) raise(ErrorKind::Parse, "empty type string");
  return out;
}

std::string format_types(const std::vector<BlockType>& types) {
  std::string s;
  for (BlockType t : types)
    s += t == BlockType::A ? 'A' : t == BlockType::B ? 'B' : 'C';
  return s;
}

FittingMatrix abc_problem(const AbcSpec& spec) {
  spec.validate();
  const int r = spec.block_size;
  const int T = spec.block_count();
  const int K = spec.message_count();
  FittingMatrix f(K, K);

  // Column of message m in block j, both 1-based.
  auto col = [r](int j, int m) { return (j - 1) * r + m; };

  for (int i = 1; i <= T; ++i) {
    BlockType ti = spec.types[i - 1];
    for (int k = 1; k <= r; ++k) {
      int row = col(i, k);
      f.set(row - 1, row - 1, PatternEntry::One);
      auto add = [&](int c) {
        if (c != row) f.set(row - 1, c - 1, PatternEntry::Star);
      };
      int sk = spec.sigma.image(k);
      bool fixed = sk == k;

      if (ti == BlockType::A || ti == BlockType::B) {
        BlockType same = ti;
        BlockType other = ti == BlockType::A ? BlockType::B : BlockType::A;
        for (int j = 1; j <= T; ++j) {
          BlockType tj = spec.types[j - 1];
          if (tj == same && j != i) add(col(j, k));
          if (tj == other) add(col(j, sk));
          if (tj == BlockType::C) {
            add(col(j, k));
            if (!fixed) add(col(j, sk));
          }
        }
      } else {
        for (int j = 1; j <= T; ++j) {
          BlockType tj = spec.types[j - 1];
          if (tj == BlockType::C && j != i) add(col(j, k));
        }
        if (!fixed) {
          for (int j = 1; j <= T; ++j)
            if (spec.types[j - 1] == BlockType::C) add(col(j, sk));
          TypeCCond cond = spec.typec_choice.at({i, k});
          for (int j = 1; j <= T; ++j) {
            BlockType tj = spec.types[j - 1];
            if (tj == BlockType::A)
              add(col(j, cond == TypeCCond::Cond1 ? k : sk));
            if (tj == BlockType::B)
              add(col(j, cond == TypeCCond::Cond1 ? sk : k));
          }
        } else {
          for (int j = 1; j <= T; ++j) {
            BlockType tj = spec.types[j - 1];
            if (tj == BlockType::A) add(col(j, k));
            if (tj == BlockType::B) add(col(j, sk));
          }
        }
      }
    }
  }
  return f;
}

Mat abc_code(const AbcSpec& spec) {
  spec.validate();
  Mat identity = Mat::identity(spec.block_size, spec.field);
  Mat cm = to_matrix(spec.sigma.perm(), spec.field);
  Mat y = commuting_y(spec.sigma, spec.field);
  std::optional<Mat> g;
  for (BlockType t : spec.types) {
    const Mat& blk = t == BlockType::A ? identity : t == BlockType::B ? cm : y;
    g = g ? hconcat(*g, blk) : blk;
  }
  return *g;
}

ExtensionResult abc_extension(const AbcSpec& spec, const FittingMatrix& f) {
  spec.validate();
  if (f.cols() != spec.message_count())
    raise(ErrorKind::DimensionMismatch,
          "fitting matrix does not match the spec's message count");
  BlockLayout layout =
      BlockLayout::consecutive(spec.block_size, spec.block_count());
  return involutory_block_extension(f, abc_code(spec), layout, spec.sigma);
}

std::string to_json(const AbcSpec& spec) {
  nlohmann::ordered_json j;
  j["r"] = spec.block_size;
  j["types"] = format_types(spec.types);
  j["sigma"] = format_cycles(spec.sigma.perm());
  j["p"] = spec.field.modulus();
  nlohmann::ordered_json cond2 = nlohmann::ordered_json::object();
  for (const auto& [key, cond] : spec.typec_choice)
    if (cond == TypeCCond::Cond2)
      cond2[std::to_string(key.first)].push_back(key.second);
  if (!cond2.empty()) j["cond2"] = cond2;
  return j.dump(2) + "\n";
}

AbcSpec abc_spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::Parse, std::string("bad spec JSON: ") + e.what());
  }
  try {
    int r = j.at("r").get<int>();
    std::vector<BlockType> types = parse_types(j.at("types").get<std::string>());
    Involution sigma(parse_cycles(j.at("sigma").get<std::string>(), r));
    Field field(j.at("p").get<int>());
    std::set<std::pair<int, int>> cond2;
    if (j.contains("cond2"))
      for (const auto& [blk, msgs] : j.at("cond2").items())
        for (const auto& m : msgs) cond2.insert({std::stoi(blk), m.get<int>()});
    return make_abc_spec(r, std::move(types), std::move(sigma), field, cond2);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorKind::Parse, std::string("bad spec JSON: ") + e.what());
  }
}

}  // namespace icx
