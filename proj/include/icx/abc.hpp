#pragma once

#include <map>
#include <set>

#include "icx/extension.hpp"

namespace icx {

enum class BlockType : std::uint8_t { A, B, C };

// Which decoding route a non-fixed receiver in a C block is given side
// information for: Cond1 decodes from transmission k, Cond2 from
// transmission image(k).
enum class TypeCCond : std::uint8_t { Cond1, Cond2 };

struct AbcSpec {
  int block_size = 0;                   // r
  std::vector<BlockType> types;         // one per block
  Involution sigma;
  Field field;
  // Keyed by (1-based block index, 1-based message within the block);
  // defined exactly for the C blocks and the non-fixed messages.
  std::map<std::pair<int, int>, TypeCCond> typec_choice;

  int block_count() const noexcept { return static_cast<int>(types.size()); }
  int message_count() const noexcept { return block_size * block_count(); }

  void validate() const;
};

// Builds a spec with every Type-C choice defaulting to Cond1; entries in
// `cond2` switch the named (block, message) pairs to Cond2.
AbcSpec make_abc_spec(int block_size, std::vector<BlockType> types,
                      Involution sigma, Field field,
                      const std::set<std::pair<int, int>>& cond2 = {});

std::vector<BlockType> parse_types(const std::string& text);
std::string format_types(const std::vector<BlockType>& types);

// The rT x rT fitting matrix with one receiver per message and the minimal
// side-information sets satisfying the block rules. Blocks occupy
// consecutive column ranges.
FittingMatrix abc_problem(const AbcSpec& spec);

// The r x rT code whose block i is I, C, or I + C - C1 for types A, B, C.
Mat abc_code(const AbcSpec& spec);

// Structured two-order extension of f (which must be abc_problem(spec),
// possibly widened with extra Xs) using the consecutive block layout.
ExtensionResult abc_extension(const AbcSpec& spec, const FittingMatrix& f);

// JSON format: {"r": int, "types": "ABBC", "sigma": "(13)(2)", "p": int,
// "cond2": {"4": [1, 3]}} with cond2 optional.
std::string to_json(const AbcSpec& spec);
AbcSpec abc_spec_from_json(const std::string& text);

}  // namespace icx
