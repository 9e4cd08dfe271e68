#include "tlq/generator_word.hpp"

#include <algorithm>
#include <sstream>

#include "tlq/errors.hpp"

namespace tlq {

namespace {

const char* kind_name(Layer::Kind k) {
  switch (k) {
    case Layer::Kind::kId: return "id";
    case Layer::Kind::kCup: return "cup";
    case Layer::Kind::kCap: return "cap";
    case Layer::Kind::kPositive: return "x+";
    case Layer::Kind::kNegative: return "x-";
  }
  return "?";
}

std::string check_layer(const Layer& l) {
  if (l.strands < 0) return "negative strand count";
  switch (l.kind) {
    case Layer::Kind::kId:
      return "";
    case Layer::Kind::kCup:
      if (l.pos < 1 || l.pos > l.strands + 1) return "cup position out of range";
      return "";
    case Layer::Kind::kCap:
    case Layer::Kind::kPositive:
    case Layer::Kind::kNegative:
      if (l.pos < 1 || l.pos > l.strands - 1) return std::string(kind_name(l.kind)) + " position out of range";
      return "";
  }
  return "unknown layer";
}

int parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw ParseError("bad integer '" + tok + "'", line);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError("bad integer '" + tok + "'", line);
  }
}

}  // namespace

int Layer::outputs() const {
  switch (kind) {
    case Kind::kCup: return strands + 2;
    case Kind::kCap: return strands - 2;
    default: return strands;
  }
}

std::string Layer::to_string() const {
  if (kind == Kind::kId) return "id " + std::to_string(strands);
  return std::string(kind_name(kind)) + " " + std::to_string(pos) + " of " + std::to_string(strands);
}

GeneratorWord::GeneratorWord(std::vector<Layer> layers) : layers_(std::move(layers)) {
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    std::string err = check_layer(layers_[i]);
    if (!err.empty()) throw InvalidArgument("layer " + std::to_string(i + 1) + ": " + err);
    if (i > 0 && layers_[i - 1].outputs() != layers_[i].strands) {
      throw InvalidArgument("layer " + std::to_string(i + 1) + ": expects " +
                            std::to_string(layers_[i].strands) + " strands, previous layer gives " +
                            std::to_string(layers_[i - 1].outputs()));
    }
  }
}

GeneratorWord GeneratorWord::parse(std::string_view text) {
  std::vector<Layer> layers;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    Layer l;
    if (tok[0] == "id") {
      if (tok.size() != 2) throw ParseError("expected 'id n'", line);
      l.kind = Layer::Kind::kId;
      l.strands = parse_int(tok[1], line);
    } else {
      if (tok[0] == "cup") {
        l.kind = Layer::Kind::kCup;
      } else if (tok[0] == "cap") {
        l.kind = Layer::Kind::kCap;
      } else if (tok[0] == "x+") {
        l.kind = Layer::Kind::kPositive;
      } else if (tok[0] == "x-") {
        l.kind = Layer::Kind::kNegative;
      } else {
        throw ParseError("unknown layer '" + tok[0] + "'", line);
      }
      if (tok.size() != 4 || tok[2] != "of") throw ParseError("expected '" + tok[0] + " i of n'", line);
      l.pos = parse_int(tok[1], line);
      l.strands = parse_int(tok[3], line);
    }
    std::string err = check_layer(l);
    if (!err.empty()) throw ParseError(err, line);
    if (!layers.empty() && layers.back().outputs() != l.strands) {
      throw ParseError("layer expects " + std::to_string(l.strands) + " strands, previous layer gives " +
                           std::to_string(layers.back().outputs()),
                       line);
    }
    layers.push_back(l);
  }
  return GeneratorWord(std::move(layers));
}

int GeneratorWord::crossings() const {
  return static_cast<int>(std::count_if(layers_.begin(), layers_.end(), [](const Layer& l) {
    return l.kind == Layer::Kind::kPositive || l.kind == Layer::Kind::kNegative;
  }));
}

std::string GeneratorWord::to_string() const {
  std::string out;
  for (const auto& l : layers_) out += l.to_string() + "\n";
  return out;
}

TLMorphism resolve_layer(const Layer& layer, const Field& field) {
  const int n = layer.strands;
  const int i = layer.pos;
  switch (layer.kind) {
    case Layer::Kind::kId:
      return TLMorphism::identity(n, field);
    case Layer::Kind::kCup:
      return TLMorphism(
          juxtapose(juxtapose(SimpleDiagram::identity(i - 1), SimpleDiagram::cup()), SimpleDiagram::identity(n - i + 1)),
          field);
    case Layer::Kind::kCap:
      return TLMorphism(
          juxtapose(juxtapose(SimpleDiagram::identity(i - 1), SimpleDiagram::cap()), SimpleDiagram::identity(n - i - 1)),
          field);
    case Layer::Kind::kPositive:
    case Layer::Kind::kNegative: {
      const int s = layer.kind == Layer::Kind::kPositive ? 1 : -1;
      TLMorphism out(SimpleDiagram::identity(n), field, field.a_pow(s));
      out.add_term(SimpleDiagram::e(i, n), field.a_pow(-s));
      return out;
    }
  }
  throw InvalidArgument("unknown layer");
}

TLMorphism resolve(const GeneratorWord& word, const Field& field) {
  TLMorphism acc = TLMorphism::identity(word.inputs(), field);
  for (const auto& layer : word.layers()) acc = compose(resolve_layer(layer, field), acc);
  return acc;
}

Scalar bracket(const GeneratorWord& word, const Field& field) {
  if (word.inputs() != 0 || word.outputs() != 0) {
    throw InvalidArgument("bracket needs a closed diagram, got " + std::to_string(word.inputs()) + " -> " +
                          std::to_string(word.outputs()));
  }
  return resolve(word, field).coefficient(SimpleDiagram::identity(0));
}

int writhe(const GeneratorWord& word) {
  if (word.inputs() != 0 || word.outputs() != 0) throw InvalidArgument("writhe needs a closed diagram");
  const auto& layers = word.layers();
  const int levels = static_cast<int>(layers.size()) + 1;
  // Slot (t, p): strand position p on the boundary between layer t-1 and t.
  std::vector<int> offset(static_cast<std::size_t>(levels) + 1, 0);
  for (int t = 0; t < levels; ++t) {
    int width = t < levels - 1 ? layers[static_cast<std::size_t>(t)].strands : word.outputs();
    offset[static_cast<std::size_t>(t) + 1] = offset[static_cast<std::size_t>(t)] + width;
  }
  const int nodes = offset.back();
  auto id = [&](int t, int p) { return offset[static_cast<std::size_t>(t)] + p; };
  // up[v]: neighbour reached through the layer above v; down[v]: through the layer below.
  std::vector<int> up(static_cast<std::size_t>(nodes), -1), down(static_cast<std::size_t>(nodes), -1);
  auto link_up = [&](int u, int v) {  // u at level t, v at level t+1, via layer t
    up[static_cast<std::size_t>(u)] = v;
    down[static_cast<std::size_t>(v)] = u;
  };
  for (int t = 0; t + 1 < levels; ++t) {
    const Layer& l = layers[static_cast<std::size_t>(t)];
    const int n = l.strands;
    const int i = l.pos - 1;
    switch (l.kind) {
      case Layer::Kind::kId:
        for (int p = 0; p < n; ++p) link_up(id(t, p), id(t + 1, p));
        break;
      case Layer::Kind::kCup:
        for (int p = 0; p < n; ++p) link_up(id(t, p), id(t + 1, p < i ? p : p + 2));
        down[static_cast<std::size_t>(id(t + 1, i))] = id(t + 1, i + 1);
        down[static_cast<std::size_t>(id(t + 1, i + 1))] = id(t + 1, i);
        break;
      case Layer::Kind::kCap:
        for (int p = 0; p < n; ++p) {
          if (p == i || p == i + 1) continue;
          link_up(id(t, p), id(t + 1, p < i ? p : p - 2));
        }
        up[static_cast<std::size_t>(id(t, i))] = id(t, i + 1);
        up[static_cast<std::size_t>(id(t, i + 1))] = id(t, i);
        break;
      case Layer::Kind::kPositive:
      case Layer::Kind::kNegative:
        for (int p = 0; p < n; ++p) {
          int q = p == i ? i + 1 : (p == i + 1 ? i : p);
          link_up(id(t, p), id(t + 1, q));
        }
        break;
    }
  }
  std::vector<int> level(static_cast<std::size_t>(nodes));
  for (int t = 0; t < levels; ++t) {
    for (int v = offset[static_cast<std::size_t>(t)]; v < offset[static_cast<std::size_t>(t) + 1]; ++v) {
      level[static_cast<std::size_t>(v)] = t;
    }
  }
  // going_up[v] == 1: the traversal leaves v through its upper edge. A step
  // between levels keeps the direction; a cup or cap reverses it.
  std::vector<int> going_up(static_cast<std::size_t>(nodes), -1);
  for (int start = 0; start < nodes; ++start) {
    if (going_up[static_cast<std::size_t>(start)] != -1) continue;
    int v = start;
    bool leave_up = true;
    while (going_up[static_cast<std::size_t>(v)] == -1) {
      going_up[static_cast<std::size_t>(v)] = leave_up ? 1 : 0;
      int next = leave_up ? up[static_cast<std::size_t>(v)] : down[static_cast<std::size_t>(v)];
      if (level[static_cast<std::size_t>(next)] == level[static_cast<std::size_t>(v)]) leave_up = !leave_up;
      v = next;
    }
  }
  int w = 0;
  for (int t = 0; t + 1 < levels; ++t) {
    const Layer& l = layers[static_cast<std::size_t>(t)];
    if (l.kind != Layer::Kind::kPositive && l.kind != Layer::Kind::kNegative) continue;
    const int i = l.pos - 1;
    bool a_up = going_up[static_cast<std::size_t>(id(t, i))] == 1;
    bool b_up = going_up[static_cast<std::size_t>(id(t, i + 1))] == 1;
    int sign = (a_up == b_up) ? 1 : -1;
    w += l.kind == Layer::Kind::kPositive ? sign : -sign;
  }
  return w;
}

GeneratorWord presentation(const SimpleDiagram& d) {
  const int k = d.inputs();
  const int l = d.outputs();
  std::vector<Layer> layers;
  // Caps: repeatedly remove an adjacent matched pair of remaining inputs.
  std::vector<int> rem;
  for (int i = 0; i < k; ++i) rem.push_back(i);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t j = 0; j + 1 < rem.size(); ++j) {
      if (d.partner(rem[j]) == rem[j + 1]) {
        layers.push_back({Layer::Kind::kCap, static_cast<int>(j) + 1, static_cast<int>(rem.size())});
        rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(j), rem.begin() + static_cast<std::ptrdiff_t>(j) + 2);
        progress = true;
        break;
      }
    }
  }
  // Cups: the same on the outputs, then replayed in reverse as cups.
  std::vector<Layer> cups;
  std::vector<int> out;
  for (int j = 0; j < l; ++j) out.push_back(k + j);
  progress = true;
  while (progress) {
    progress = false;
    for (std::size_t j = 0; j + 1 < out.size(); ++j) {
      if (d.partner(out[j]) == out[j + 1]) {
        cups.push_back({Layer::Kind::kCup, static_cast<int>(j) + 1, static_cast<int>(out.size()) - 2});
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(j), out.begin() + static_cast<std::ptrdiff_t>(j) + 2);
        progress = true;
        break;
      }
    }
  }
  layers.insert(layers.end(), cups.rbegin(), cups.rend());
  if (layers.empty()) layers.push_back({Layer::Kind::kId, 0, k});
  return GeneratorWord(std::move(layers));
}

}  // namespace tlq
