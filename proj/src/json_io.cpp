#include "infotrade/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "infotrade/errors.hpp"

namespace infotrade {

namespace {

template <typename T>
json as_matrix(std::size_t rows, std::size_t cols, std::span<const T> flat) {
  json m = json::array();
  for (std::size_t x = 0; x < rows; ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < cols; ++y) row.push_back(flat[x * cols + y]);
    m.push_back(std::move(row));
  }
  return m;
}

template <typename T>
std::vector<T> flatten(const json& j, std::size_t rows, std::size_t cols, const char* what) {
  if (!j.is_array() || j.size() != rows) throw DimensionError(std::string(what) + ": expected " + std::to_string(rows) + " rows");
  std::vector<T> flat;
  flat.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols)
      throw DimensionError(std::string(what) + ": expected " + std::to_string(cols) + " columns");
    for (const auto& v : row) flat.push_back(v.get<T>());
  }
  return flat;
}

std::size_t size_field(const json& j, const char* key) {
  if (!j.contains(key)) throw Error(std::string("missing field '") + key + "'");
  return j.at(key).get<std::size_t>();
}

}  // namespace

json to_json(const Measure& mu) {
  return {{"rows", mu.rows()}, {"cols", mu.cols()}, {"mass", as_matrix(mu.rows(), mu.cols(), mu.mass())}};
}

json to_json(const FunctionTable& f) {
  return {{"rows", f.rows()},
          {"cols", f.cols()},
          {"alphabet", f.alphabet()},
          {"outputs", as_matrix(f.rows(), f.cols(), f.outputs())}};
}

Measure measure_from_json(const json& j) {
  const auto rows = size_field(j, "rows"), cols = size_field(j, "cols");
  auto mass = flatten<double>(j.at("mass"), rows, cols, "mass");
  double total = 0.0;
  for (double m : mass) {
    if (!(m >= 0.0) || !std::isfinite(m)) throw DomainError("mass entries must be finite and nonnegative");
    total += m;
  }
  if (std::abs(total - 1.0) > kLoadTolerance)
    throw DomainError("mass sums to " + std::to_string(total) + ", not 1 within tolerance");
  return Measure::normalized(rows, cols, std::move(mass));
}

FunctionTable function_from_json(const json& j) {
  const auto rows = size_field(j, "rows"), cols = size_field(j, "cols");
  auto out = flatten<int>(j.at("outputs"), rows, cols, "outputs");
  return FunctionTable(rows, cols, j.at("alphabet").get<int>(), std::move(out));
}

json to_json(const ProtocolTree& pi) {
  auto emit = [&](auto&& self, std::size_t i) -> json {
    const Node& n = pi.node(i);
    json j{{"kind", to_string(n.kind)}};
    switch (n.kind) {
      case NodeKind::Leaf: j["output"] = n.output; return j;
      case NodeKind::Coin: j["bias"] = n.bias; break;
      case NodeKind::Alice:
      case NodeKind::Bob: j["send_one_prob"] = n.send_one_prob; break;
    }
    j["children"] = json::array({self(self, n.children[0]), self(self, n.children[1])});
    return j;
  };
  return emit(emit, 0);
}

ProtocolTree protocol_from_json(const json& root) {
  // Iterative preorder flattening; kinds and arities are checked here, the rest by validate().
  std::vector<Node> nodes;
  struct Pending {
    const json* subtree;
    std::size_t parent;
    int slot;  // -1 for the root
  };
  std::vector<Pending> stack{{&root, 0, -1}};
  while (!stack.empty()) {
    const auto [subtree, parent, slot] = stack.back();
    stack.pop_back();
    const json& j = *subtree;
    if (!j.is_object() || !j.contains("kind")) throw InvalidProtocol("protocol node must be an object with 'kind'");
    const auto kind = j.at("kind").get<std::string>();
    Node n;
    if (kind == "LEAF") {
      n.kind = NodeKind::Leaf;
      n.output = j.at("output").get<int>();
    } else if (kind == "COIN") {
      n.kind = NodeKind::Coin;
      n.bias = j.at("bias").get<double>();
    } else if (kind == "ALICE" || kind == "BOB") {
      n.kind = kind == "ALICE" ? NodeKind::Alice : NodeKind::Bob;
      n.send_one_prob = j.at("send_one_prob").get<std::vector<double>>();
    } else {
      throw InvalidProtocol("unknown node kind '" + kind + "'");
    }
    const std::size_t index = nodes.size();
    if (slot >= 0) nodes[parent].children[static_cast<std::size_t>(slot)] = index;
    if (n.kind != NodeKind::Leaf) {
      const auto& kids = j.at("children");
      if (!kids.is_array() || kids.size() != 2) throw InvalidProtocol("internal nodes need exactly two children");
      n.children = {0, 0};
      // Push one-child first so the zero-child is numbered next (preorder).
      stack.push_back({&kids[1], index, 1});
      stack.push_back({&kids[0], index, 0});
    } else if (j.contains("children") && !j.at("children").empty()) {
      throw InvalidProtocol("leaves have no children");
    }
    nodes.push_back(std::move(n));
  }
  auto pi = ProtocolTree::from_nodes(std::move(nodes));
  const auto problems = validate(pi);
  if (!problems.empty()) throw InvalidProtocol(problems.front().message);
  return pi;
}

std::string canonical_text(const ProtocolTree& pi) { return to_json(pi).dump(); }

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {
std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << v;
  return os.str();
}
}  // namespace

std::string digest(const Measure& mu) { return hex(fnv1a(to_json(mu).dump())); }
std::string digest(const FunctionTable& f) { return hex(fnv1a(to_json(f).dump())); }
std::string digest(const ProtocolTree& pi) { return hex(fnv1a(canonical_text(pi))); }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace infotrade
