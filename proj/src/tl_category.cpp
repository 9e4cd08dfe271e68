#include "tlq/tl_category.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

#include "tlq/errors.hpp"

namespace tlq {

namespace {

std::mutex cache_mu;

template <class Key>
using MorphismCache = std::map<Key, std::unique_ptr<TLMorphism>>;

}  // namespace

GeneratorWord braiding_word(int n, int m) {
  if (n < 0 || m < 0) throw InvalidArgument("negative block size");
  std::vector<Layer> layers;
  for (int j = n; j >= 1; --j) {
    for (int p = j; p <= j + m - 1; ++p) layers.push_back({Layer::Kind::kPositive, p, n + m});
  }
  if (layers.empty()) layers.push_back({Layer::Kind::kId, 0, n + m});
  return GeneratorWord(std::move(layers));
}

TLMorphism braiding_tl(int n, int m, const Field& field) {
  static MorphismCache<std::tuple<int, int, int>> cache;
  const auto key = std::make_tuple(field.r(), n, m);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto value = std::make_unique<TLMorphism>(resolve(braiding_word(n, m), field));
  TLMorphism out = *value;
  std::lock_guard<std::mutex> lock(cache_mu);
  cache.try_emplace(key, std::move(value));
  return out;
}

TLMorphism coev_tl(int n, const Field& field) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) m[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(2 * n - 1 - i);
  return TLMorphism(SimpleDiagram(0, 2 * n, std::move(m)), field);
}

TLMorphism ev_tl(int n, const Field& field) {
  std::vector<std::uint8_t> m(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) m[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(2 * n - 1 - i);
  return TLMorphism(SimpleDiagram(2 * n, 0, std::move(m)), field);
}

TLMorphism curl_tl(int n, const Field& field) {
  const TLMorphism id = TLMorphism::identity(n, field);
  TLMorphism lower = tensor(id, coev_tl(n, field));
  TLMorphism middle = tensor(braiding_tl(n, n, field), id);
  TLMorphism upper = tensor(id, ev_tl(n, field));
  return compose(upper, compose(middle, lower));
}

TLMorphism twist_tl(int n, const Field& field) {
  static MorphismCache<std::pair<int, int>> cache;
  const auto key = std::make_pair(field.r(), n);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  TLMorphism t = curl_tl(n, field);
  if (n % 2 == 1) t = -t;
  std::lock_guard<std::mutex> lock(cache_mu);
  cache.try_emplace(key, std::make_unique<TLMorphism>(t));
  return t;
}

Scalar chebyshev_delta(int j, const Field& field) {
  Scalar s = field.quantum_int(j + 1);
  return j % 2 == 0 ? s : -s;
}

const TLMorphism& jones_wenzl(int k, const Field& field) {
  if (k < 0) throw InvalidArgument("negative Jones-Wenzl index");
  static std::mutex mu;
  static std::map<int, std::vector<std::unique_ptr<TLMorphism>>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto& table = memo[field.r()];
  if (table.empty()) {
    table.push_back(std::make_unique<TLMorphism>(TLMorphism::identity(0, field)));
    table.push_back(std::make_unique<TLMorphism>(TLMorphism::identity(1, field)));
  }
  while (static_cast<int>(table.size()) <= k) {
    const int j = static_cast<int>(table.size()) - 1;  // build f_{j+1} from f_j
    Scalar dj = chebyshev_delta(j, field);
    if (dj.is_zero()) {
      throw PoleAtRoot("Jones-Wenzl f_" + std::to_string(k) + " does not exist in " + field.to_string() +
                       ": Delta_" + std::to_string(j) + " = " + (j % 2 ? "-" : "") + "[" + std::to_string(j + 1) +
                       "]_q vanishes");
    }
    Scalar ratio = chebyshev_delta(j - 1, field) / dj;
    TLMorphism fj1 = tensor(*table[static_cast<std::size_t>(j)], TLMorphism::identity(1, field));
    TLMorphism ej = TLMorphism::e_generator(j, j + 1, field);
    TLMorphism next = fj1 - compose(fj1, compose(ej, fj1)) * ratio;
    table.push_back(std::make_unique<TLMorphism>(std::move(next)));
  }
  return *table[static_cast<std::size_t>(k)];
}

TLMorphism jw_tensor(const std::vector<int>& colors, const Field& field) {
  TLMorphism out = TLMorphism::identity(0, field);
  for (int c : colors) out = tensor(out, jones_wenzl(c, field));
  return out;
}

int closure_loops(const SimpleDiagram& d) {
  if (d.inputs() != d.outputs()) throw ArityMismatch("closure of a non-endomorphism");
  const int n = d.inputs();
  std::vector<int> parent(static_cast<std::size_t>(2 * n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };
  for (int p = 0; p < 2 * n; ++p) unite(p, d.partner(p));
  for (int i = 0; i < n; ++i) unite(i, n + i);
  int loops = 0;
  for (int p = 0; p < 2 * n; ++p) loops += find(p) == p;
  return loops;
}

Scalar closure_trace(const TLMorphism& f) {
  if (f.inputs() != f.outputs()) throw ArityMismatch("trace of a non-endomorphism");
  const Field& field = f.field();
  Scalar total = field.zero();
  std::vector<Scalar> delta_pow{field.one()};
  for (const auto& [d, c] : f.terms()) {
    int loops = closure_loops(d);
    while (static_cast<int>(delta_pow.size()) <= loops) delta_pow.push_back(delta_pow.back() * field.delta());
    total += c * delta_pow[static_cast<std::size_t>(loops)];
  }
  return f.inputs() % 2 == 0 ? total : -total;
}

Scalar closure_trace_composite(const TLMorphism& f) {
  if (f.inputs() != f.outputs()) throw ArityMismatch("trace of a non-endomorphism");
  const int n = f.inputs();
  const Field& field = f.field();
  TLMorphism x = tensor(compose(twist_tl(n, field), f), TLMorphism::identity(n, field));
  TLMorphism full = compose(ev_tl(n, field), compose(braiding_tl(n, n, field), compose(x, coev_tl(n, field))));
  return full.coefficient(SimpleDiagram::identity(0));
}

}  // namespace tlq
