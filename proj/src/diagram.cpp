#include "tlq/diagram.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "tlq/errors.hpp"

namespace tlq {

namespace {

// Position of point p when walking the boundary circle: inputs left to right,
// then outputs right to left.
int circle_pos(int k, int l, int p) { return p < k ? p : k + (l - 1 - (p - k)); }

int circle_point(int k, int l, int pos) { return pos < k ? pos : k + (l - 1 - (pos - k)); }

// All noncrossing matchings of n points on a line (positions 0..n-1).
void matchings(int n, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back({});
    return;
  }
  // 0 is matched with an odd position j; the parts inside and outside are
  // matched independently.
  for (int j = 1; j < n; j += 2) {
    std::vector<std::vector<int>> inner, outer;
    matchings(j - 1, inner);
    matchings(n - j - 1, outer);
    for (const auto& a : inner) {
      for (const auto& b : outer) {
        std::vector<int> m(static_cast<std::size_t>(n));
        m[0] = j;
        m[static_cast<std::size_t>(j)] = 0;
        for (int t = 0; t < j - 1; ++t) m[static_cast<std::size_t>(t + 1)] = a[static_cast<std::size_t>(t)] + 1;
        for (int t = 0; t < n - j - 1; ++t) {
          m[static_cast<std::size_t>(t + j + 1)] = b[static_cast<std::size_t>(t)] + j + 1;
        }
        out.push_back(std::move(m));
      }
    }
  }
}

}  // namespace

bool is_planar(int k, int l, const std::vector<std::uint8_t>& match) {
  const int n = k + l;
  std::vector<int> stack;
  for (int pos = 0; pos < n; ++pos) {
    int p = circle_point(k, l, pos);
    int other = circle_pos(k, l, match[static_cast<std::size_t>(p)]);
    if (other > pos) {
      stack.push_back(other);
    } else {
      if (stack.empty() || stack.back() != pos) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

SimpleDiagram::SimpleDiagram(int inputs, int outputs, std::vector<std::uint8_t> match)
    : k_(inputs), l_(outputs), match_(std::move(match)) {
  const int n = k_ + l_;
  if (k_ < 0 || l_ < 0 || static_cast<int>(match_.size()) != n) {
    throw InvalidArgument("matching size does not equal inputs + outputs");
  }
  for (int p = 0; p < n; ++p) {
    int q = match_[static_cast<std::size_t>(p)];
    if (q >= n || q == p || match_[static_cast<std::size_t>(q)] != p) {
      throw InvalidArgument("matching is not a fixed-point-free involution");
    }
  }
  if (!is_planar(k_, l_, match_)) throw InvalidArgument("matching is not planar");
}

SimpleDiagram SimpleDiagram::identity(int n) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    m[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(n + i);
    m[static_cast<std::size_t>(n + i)] = static_cast<std::uint8_t>(i);
  }
  return SimpleDiagram(n, n, std::move(m));
}

SimpleDiagram SimpleDiagram::cup() { return SimpleDiagram(0, 2, {1, 0}); }
SimpleDiagram SimpleDiagram::cap() { return SimpleDiagram(2, 0, {1, 0}); }

SimpleDiagram SimpleDiagram::e(int i, int n) {
  if (i < 1 || i > n - 1) {
    throw InvalidArgument("e_" + std::to_string(i) + " out of range on " + std::to_string(n) + " strands");
  }
  std::vector<std::uint8_t> m(static_cast<std::size_t>(2 * n));
  for (int j = 0; j < n; ++j) {
    m[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(n + j);
    m[static_cast<std::size_t>(n + j)] = static_cast<std::uint8_t>(j);
  }
  const auto a = static_cast<std::uint8_t>(i - 1), b = static_cast<std::uint8_t>(i);
  m[a] = b;
  m[b] = a;
  m[n + a] = static_cast<std::uint8_t>(n + b);
  m[n + b] = static_cast<std::uint8_t>(n + a);
  return SimpleDiagram(n, n, std::move(m));
}

bool SimpleDiagram::is_identity() const {
  if (k_ != l_) return false;
  for (int i = 0; i < k_; ++i) {
    if (match_[static_cast<std::size_t>(i)] != k_ + i) return false;
  }
  return true;
}

int SimpleDiagram::through_strands() const {
  int t = 0;
  for (int i = 0; i < k_; ++i) t += match_[static_cast<std::size_t>(i)] >= k_;
  return t;
}

SimpleDiagram SimpleDiagram::flipped() const {
  // New inputs are old outputs and vice versa.
  auto to_new = [&](int p) { return p < k_ ? l_ + p : p - k_; };
  std::vector<std::uint8_t> m(match_.size());
  for (int p = 0; p < size(); ++p) {
    m[static_cast<std::size_t>(to_new(p))] = static_cast<std::uint8_t>(to_new(match_[static_cast<std::size_t>(p)]));
  }
  SimpleDiagram d;
  d.k_ = l_;
  d.l_ = k_;
  d.match_ = std::move(m);
  return d;
}

std::vector<int> SimpleDiagram::export_matching() const {
  std::vector<int> out;
  out.reserve(match_.size());
  for (auto q : match_) out.push_back(q + 1);
  return out;
}

std::string SimpleDiagram::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < match_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(match_[i] + 1);
  }
  return out + "]";
}

Stacked stack(const SimpleDiagram& top, const SimpleDiagram& bottom) {
  const int k = bottom.inputs();
  const int l = bottom.outputs();
  const int m = top.outputs();
  if (top.inputs() != l) {
    throw ArityMismatch("cannot stack a " + std::to_string(top.inputs()) + "-input diagram on a " +
                        std::to_string(l) + "-output diagram");
  }
  std::vector<std::uint8_t> res(static_cast<std::size_t>(k + m));
  std::vector<bool> seen(static_cast<std::size_t>(l), false);
  // Follows the path leaving external point `start`; returns the external
  // point where it ends (in result numbering).
  auto follow = [&](bool in_bottom, int p) {
    while (true) {
      if (in_bottom) {
        int q = bottom.partner(p);
        if (q < k) return q;
        int mid = q - k;
        seen[static_cast<std::size_t>(mid)] = true;
        p = mid;
        in_bottom = false;
      } else {
        int q = top.partner(p);
        if (q >= l) return k + (q - l);
        seen[static_cast<std::size_t>(q)] = true;
        p = k + q;
        in_bottom = true;
      }
    }
  };
  for (int i = 0; i < k; ++i) res[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(follow(true, i));
  for (int j = 0; j < m; ++j) res[static_cast<std::size_t>(k + j)] = static_cast<std::uint8_t>(follow(false, l + j));
  int loops = 0;
  for (int mid = 0; mid < l; ++mid) {
    if (seen[static_cast<std::size_t>(mid)]) continue;
    ++loops;
    int cur = mid;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = true;
      int t = top.partner(cur);  // another middle point
      seen[static_cast<std::size_t>(t)] = true;
      cur = bottom.partner(k + t) - k;
    }
  }
  Stacked out;
  out.loops = loops;
  out.diagram = SimpleDiagram(k, m, std::move(res));
  return out;
}

SimpleDiagram juxtapose(const SimpleDiagram& x, const SimpleDiagram& y) {
  const int kx = x.inputs(), lx = x.outputs(), ky = y.inputs(), ly = y.outputs();
  const int k = kx + ky;
  auto from_x = [&](int p) { return p < kx ? p : k + (p - kx); };
  auto from_y = [&](int p) { return p < ky ? kx + p : k + lx + (p - ky); };
  std::vector<std::uint8_t> m(static_cast<std::size_t>(k + lx + ly));
  for (int p = 0; p < x.size(); ++p) m[static_cast<std::size_t>(from_x(p))] = static_cast<std::uint8_t>(from_x(x.partner(p)));
  for (int p = 0; p < y.size(); ++p) m[static_cast<std::size_t>(from_y(p))] = static_cast<std::uint8_t>(from_y(y.partner(p)));
  return SimpleDiagram(k, lx + ly, std::move(m));
}

const std::vector<SimpleDiagram>& enumerate_simple(int k, int l) {
  if (k < 0 || l < 0) throw InvalidArgument("negative arity");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<SimpleDiagram>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{k, l}];
  if (slot) return *slot;
  auto out = std::make_unique<std::vector<SimpleDiagram>>();
  if ((k + l) % 2 == 0) {
    std::vector<std::vector<int>> ms;
    matchings(k + l, ms);
    for (const auto& cm : ms) {
      std::vector<std::uint8_t> m(cm.size());
      for (int pos = 0; pos < k + l; ++pos) {
        m[static_cast<std::size_t>(circle_point(k, l, pos))] =
            static_cast<std::uint8_t>(circle_point(k, l, cm[static_cast<std::size_t>(pos)]));
      }
      out->emplace_back(k, l, std::move(m));
    }
    std::sort(out->begin(), out->end());
  }
  slot = std::move(out);
  return *slot;
}

}  // namespace tlq
