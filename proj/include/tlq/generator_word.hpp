#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tlq/tl_morphism.hpp"

namespace tlq {

/// One horizontal slice of a diagram. `strands` counts the strands entering
/// from below; `pos` is 1-based (unused for identity layers).
struct Layer {
  enum class Kind { kId, kCup, kCap, kPositive, kNegative };
  Kind kind = Kind::kId;
  int pos = 0;
  int strands = 0;

  int outputs() const;
  std::string to_string() const;
  bool operator==(const Layer&) const = default;
};

/// Layers listed bottom to top.
class GeneratorWord {
 public:
  GeneratorWord() = default;
  /// Validates consecutive arities and positions; throws InvalidArgument.
  explicit GeneratorWord(std::vector<Layer> layers);

  /// One layer per line: `id n`, `cup i of n`, `cap i of n`, `x+ i of n`,
  /// `x- i of n`. Blank lines and `#` comments are skipped. Errors carry the
  /// line number.
  static GeneratorWord parse(std::string_view text);

  const std::vector<Layer>& layers() const { return layers_; }
  bool empty() const { return layers_.empty(); }
  int inputs() const { return layers_.empty() ? 0 : layers_.front().strands; }
  int outputs() const { return layers_.empty() ? 0 : layers_.back().outputs(); }
  int crossings() const;

  /// Lines in the parse syntax.
  std::string to_string() const;

 private:
  std::vector<Layer> layers_;
};

/// Kauffman resolution: x+ -> a*id + a^-1*e_i, x- -> a^-1*id + a*e_i, loops
/// removed via delta.
TLMorphism resolve(const GeneratorWord& word, const Field& field);
TLMorphism resolve_layer(const Layer& layer, const Field& field);

/// Bracket of a closed word (0 -> 0). Throws InvalidArgument otherwise.
Scalar bracket(const GeneratorWord& word, const Field& field);

/// Sum of crossing signs after orienting every component of a closed word.
/// A crossing whose two strands run in the same vertical direction counts +1
/// for x+ and -1 for x-; opposite directions flip the sign.
int writhe(const GeneratorWord& word);

/// A word for a simple diagram: its caps (innermost first), then its cups.
GeneratorWord presentation(const SimpleDiagram& d);

}  // namespace tlq
