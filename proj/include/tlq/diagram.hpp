#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace tlq {

/// A planar noncrossing perfect matching between k bottom points (inputs) and
/// l top points (outputs), with no closed loops.
///
/// Points are numbered 0..k-1 for the inputs left to right, then k..k+l-1 for
/// the outputs left to right. `match[p]` is the partner of p.
class SimpleDiagram {
 public:
  SimpleDiagram() = default;
  /// Validates the involution and planarity; throws InvalidArgument.
  SimpleDiagram(int inputs, int outputs, std::vector<std::uint8_t> match);

  static SimpleDiagram identity(int n);
  static SimpleDiagram cup();  // 0 -> 2
  static SimpleDiagram cap();  // 2 -> 0
  /// e_i on n strands, 1 <= i <= n-1.
  static SimpleDiagram e(int i, int n);

  int inputs() const { return k_; }
  int outputs() const { return l_; }
  int size() const { return k_ + l_; }
  int partner(int p) const { return match_[static_cast<std::size_t>(p)]; }
  const std::vector<std::uint8_t>& matching() const { return match_; }
  bool is_identity() const;
  /// Number of arcs joining an input to an output.
  int through_strands() const;

  /// Upside-down reflection (l -> k).
  SimpleDiagram flipped() const;

  /// Matching with 1-based point labels, as exported.
  std::vector<int> export_matching() const;
  /// e.g. `[2,1,4,3]`
  std::string to_string() const;

  auto operator<=>(const SimpleDiagram&) const = default;

 private:
  int k_ = 0;
  int l_ = 0;
  std::vector<std::uint8_t> match_;
};

/// True if `match` (0-based involution on k+l points) is planar.
bool is_planar(int inputs, int outputs, const std::vector<std::uint8_t>& match);

struct Stacked {
  SimpleDiagram diagram;
  int loops = 0;
};

/// Places `top` (l -> m) over `bottom` (k -> l). Throws ArityMismatch.
Stacked stack(const SimpleDiagram& top, const SimpleDiagram& bottom);

/// Places x to the left of y.
SimpleDiagram juxtapose(const SimpleDiagram& x, const SimpleDiagram& y);

/// All simple diagrams k -> l, sorted by matching array. Cached.
const std::vector<SimpleDiagram>& enumerate_simple(int inputs, int outputs);

}  // namespace tlq
