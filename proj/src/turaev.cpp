#include "tlq/turaev.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tlq/errors.hpp"

namespace tlq {

ObjectSeq::ObjectSeq(std::vector<int> colors) {
  for (int c : colors) {
    if (c < 0) throw InvalidArgument("negative color " + std::to_string(c));
    if (c > 0) colors_.push_back(c);
  }
}

ObjectSeq ObjectSeq::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s += ch;
  }
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  std::vector<int> colors;
  if (s.empty()) return ObjectSeq();
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("invalid color '" + tok + "' in object '" + std::string(text) + "'");
    }
    colors.push_back(std::stoi(tok));
  }
  if (!s.empty() && s.back() == ',') throw ParseError("trailing comma in object '" + std::string(text) + "'");
  return ObjectSeq(std::move(colors));
}

int ObjectSeq::strands() const { return std::accumulate(colors_.begin(), colors_.end(), 0); }

std::vector<int> ObjectSeq::block_of_strand() const {
  std::vector<int> out;
  for (std::size_t b = 0; b < colors_.size(); ++b) out.insert(out.end(), static_cast<std::size_t>(colors_[b]), static_cast<int>(b));
  return out;
}

ObjectSeq ObjectSeq::dual() const { return ObjectSeq(std::vector<int>(colors_.rbegin(), colors_.rend())); }

void ObjectSeq::validate(const Field& field) const {
  if (field.is_generic()) return;
  for (int c : colors_) {
    if (c > field.r() - 2) {
      throw InvalidArgument("color " + std::to_string(c) + " outside J = {1.." + std::to_string(field.r() - 2) +
                            "} at " + field.to_string());
    }
  }
}

std::string ObjectSeq::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(colors_[i]);
  }
  return out + ")";
}

ObjectSeq concat(const ObjectSeq& s, const ObjectSeq& t) {
  std::vector<int> c = s.colors();
  c.insert(c.end(), t.colors().begin(), t.colors().end());
  return ObjectSeq(std::move(c));
}

HattedMorphism hat(const TLMorphism& g, const ObjectSeq& s, const ObjectSeq& t) {
  if (g.inputs() != s.strands() || g.outputs() != t.strands()) {
    throw ArityMismatch("morphism " + std::to_string(g.inputs()) + "->" + std::to_string(g.outputs()) +
                        " does not match objects " + s.to_string() + " -> " + t.to_string());
  }
  const Field& f = g.field();
  return {s, t, compose(jw_tensor(t.colors(), f), compose(g, jw_tensor(s.colors(), f)))};
}

std::vector<SimpleDiagram> good_type_diagrams(const ObjectSeq& s, const ObjectSeq& t) {
  const int k = s.strands();
  const int l = t.strands();
  std::vector<int> block = s.block_of_strand();
  std::vector<int> out_block = t.block_of_strand();
  // Output blocks are numbered after input blocks so the two never collide.
  for (int& b : out_block) b += s.length();
  block.insert(block.end(), out_block.begin(), out_block.end());
  std::vector<SimpleDiagram> out;
  for (const SimpleDiagram& d : enumerate_simple(k, l)) {
    bool good = true;
    for (int p = 0; p < k + l && good; ++p) {
      good = block[static_cast<std::size_t>(p)] != block[static_cast<std::size_t>(d.partner(p))];
    }
    if (good) out.push_back(d);
  }
  return out;
}

std::vector<HattedMorphism> hom_basis(const ObjectSeq& s, const ObjectSeq& t, const Field& field) {
  s.validate(field);
  t.validate(field);
  std::vector<HattedMorphism> out;
  const TLMorphism fs = jw_tensor(s.colors(), field);
  const TLMorphism ft = jw_tensor(t.colors(), field);
  for (const SimpleDiagram& d : good_type_diagrams(s, t)) {
    out.push_back({s, t, compose(ft, compose(TLMorphism(d, field), fs))});
  }
  return out;
}

SimpleDiagram d_nmj(int n, int m, int j) {
  if (n < 0 || m < 0 || j < 0 || j > std::min(n, m)) {
    throw InvalidArgument("d_nmj: need 0 <= j <= min(n, m)");
  }
  const int k = n + m;
  const int l = k - 2 * j;
  std::vector<std::uint8_t> match(static_cast<std::size_t>(k + l));
  for (int i = 1; i <= j; ++i) {
    const int a = n - i, b = n + i - 1;
    match[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
    match[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(a);
  }
  int out = k;
  for (int p = 0; p < k; ++p) {
    if (p >= n - j && p < n + j) continue;
    match[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(out);
    match[static_cast<std::size_t>(out)] = static_cast<std::uint8_t>(p);
    ++out;
  }
  return SimpleDiagram(k, l, std::move(match));
}

RibbonData ribbon_data(const ObjectSeq& s, const ObjectSeq& t, const Field& field) {
  const int n = s.strands(), m = t.strands();
  const TLMorphism fs = jw_tensor(s.colors(), field);
  const TLMorphism ft = jw_tensor(t.colors(), field);
  const TLMorphism fsd = jw_tensor(s.dual().colors(), field);
  RibbonData out;
  out.braiding = compose(tensor(ft, fs), compose(braiding_tl(n, m, field), tensor(fs, ft)));
  out.twist = compose(fs, compose(twist_tl(n, field), fs));
  out.coev = compose(tensor(fs, fsd), coev_tl(n, field));
  out.ev = compose(ev_tl(n, field), tensor(fsd, fs));
  return out;
}

Scalar trace_pairing(const SimpleDiagram& d, const TLMorphism& x) {
  if (x.inputs() != d.outputs() || x.outputs() != d.inputs()) throw ArityMismatch("trace pairing arity mismatch");
  const Field& field = x.field();
  // Trace of d ∘ x on the target object of d.
  Scalar total = field.zero();
  std::vector<Scalar> delta_pow{field.one()};
  for (const auto& [dx, c] : x.terms()) {
    Stacked st = stack(d, dx);
    int loops = st.loops + closure_loops(st.diagram);
    while (static_cast<int>(delta_pow.size()) <= loops) delta_pow.push_back(delta_pow.back() * field.delta());
    total += c * delta_pow[static_cast<std::size_t>(loops)];
  }
  return d.outputs() % 2 == 0 ? total : -total;
}

Matrix gram_matrix(const ObjectSeq& s, const ObjectSeq& t, const Field& field) {
  s.validate(field);
  t.validate(field);
  // tr(f_t D_i f_s f_s C_j f_t) = tr(D_i Ĉ_j) by cyclicity and idempotence.
  const std::vector<SimpleDiagram> left = good_type_diagrams(s, t);
  const std::vector<HattedMorphism> right = hom_basis(t, s, field);
  Matrix g(static_cast<int>(left.size()), static_cast<int>(right.size()));
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      g(static_cast<int>(i), static_cast<int>(j)) = trace_pairing(left[i], right[j].value);
    }
  }
  return g;
}

int purified_hom_dim(const ObjectSeq& s, const ObjectSeq& t, const Field& field) {
  return rank(gram_matrix(s, t, field));
}

}  // namespace tlq
