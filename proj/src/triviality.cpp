#include "infotrade/triviality.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "infotrade/errors.hpp"

namespace infotrade {

SupportGraph support_graph(const Measure& mu) {
  const std::size_t rows = mu.rows(), cols = mu.cols();
  SupportGraph g;
  g.num_rows = rows;
  g.num_cols = cols;
  g.component_of.assign(rows * cols, -1);

  for (std::size_t start = 0; start < rows * cols; ++start) {
    if (mu.mass()[start] == 0.0 || g.component_of[start] >= 0) continue;
    const int id = static_cast<int>(g.components.size());
    SupportComponent comp;
    std::set<std::size_t> comp_rows, comp_cols;
    std::deque<std::size_t> queue{start};
    g.component_of[start] = id;
    while (!queue.empty()) {
      const std::size_t cell = queue.front();
      queue.pop_front();
      const std::size_t x = cell / cols, y = cell % cols;
      comp.members.push_back({x, y});
      comp_rows.insert(x);
      comp_cols.insert(y);
      auto visit = [&](std::size_t nx, std::size_t ny) {
        const std::size_t c = nx * cols + ny;
        if (mu.mass()[c] > 0.0 && g.component_of[c] < 0) {
          g.component_of[c] = id;
          queue.push_back(c);
        }
      };
      for (std::size_t ny = 0; ny < cols; ++ny) visit(x, ny);
      for (std::size_t nx = 0; nx < rows; ++nx) visit(nx, y);
    }
    std::sort(comp.members.begin(), comp.members.end());
    comp.rows.assign(comp_rows.begin(), comp_rows.end());
    comp.cols.assign(comp_cols.begin(), comp_cols.end());
    g.components.push_back(std::move(comp));
  }
  return g;
}

std::optional<std::vector<InputPair>> shortest_support_path(const Measure& mu, InputPair a, InputPair b) {
  const std::size_t rows = mu.rows(), cols = mu.cols();
  if (a.x >= rows || b.x >= rows || a.y >= cols || b.y >= cols) throw DomainError("input pair out of range");
  if (!mu.in_support(a.x, a.y) || !mu.in_support(b.x, b.y)) return std::nullopt;

  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> prev(rows * cols, kUnseen);
  const std::size_t source = a.x * cols + a.y, target = b.x * cols + b.y;
  prev[source] = source;
  std::deque<std::size_t> queue{source};
  while (!queue.empty() && prev[target] == kUnseen) {
    const std::size_t cell = queue.front();
    queue.pop_front();
    const std::size_t x = cell / cols, y = cell % cols;
    auto visit = [&](std::size_t c) {
      if (mu.mass()[c] > 0.0 && prev[c] == kUnseen) {
        prev[c] = cell;
        queue.push_back(c);
      }
    };
    for (std::size_t ny = 0; ny < cols; ++ny) visit(x * cols + ny);
    for (std::size_t nx = 0; nx < rows; ++nx) visit(nx * cols + y);
  }
  if (prev[target] == kUnseen) return std::nullopt;
  std::vector<InputPair> path;
  for (std::size_t c = target;; c = prev[c]) {
    path.push_back({c / cols, c % cols});
    if (c == source) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

bool constant_on_rectangle(const FunctionTable& f, const SupportComponent& c, int& value) {
  value = f(c.rows.front(), c.cols.front());
  for (std::size_t x : c.rows)
    for (std::size_t y : c.cols)
      if (f(x, y) != value) return false;
  return true;
}

}  // namespace

InternalTriviality is_internal_trivial(const FunctionTable& f, const Measure& mu) {
  require_same_space(f, mu);
  const SupportGraph g = support_graph(mu);
  InternalTriviality out;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    int value = 0;
    if (!constant_on_rectangle(f, g.components[i], value)) {
      out.violating_component = i;
      out.component_labels.clear();
      return out;
    }
    out.component_labels.push_back(value);
  }
  out.trivial = true;
  return out;
}

DistributionalTriviality is_distributional_trivial(const FunctionTable& f, const Measure& mu) {
  require_same_space(f, mu);
  const auto z_count = static_cast<std::size_t>(f.alphabet());
  std::vector<std::set<std::size_t>> rows(z_count), cols(z_count);
  for (const auto& p : mu.support()) {
    const auto z = static_cast<std::size_t>(f(p.x, p.y));
    rows[z].insert(p.x);
    cols[z].insert(p.y);
  }
  DistributionalTriviality out;
  std::vector<int> row_hits(f.rows(), 0), col_hits(f.cols(), 0);
  for (std::size_t z = 0; z < z_count; ++z) {
    out.row_classes.emplace_back(rows[z].begin(), rows[z].end());
    out.col_classes.emplace_back(cols[z].begin(), cols[z].end());
    for (std::size_t x : rows[z]) ++row_hits[x];
    for (std::size_t y : cols[z]) ++col_hits[y];
  }
  for (std::size_t x = 0; x < f.rows(); ++x)
    if (row_hits[x] > 1) out.row_overlap.push_back(x);
  for (std::size_t y = 0; y < f.cols(); ++y)
    if (col_hits[y] > 1) out.col_overlap.push_back(y);
  // Rows and columns of zero marginal belong to no class and are unconstrained.
  out.trivial = out.row_overlap.empty() && out.col_overlap.empty();
  return out;
}

ProtocolTree zero_ic_protocol(const FunctionTable& f, const Measure& mu) {
  const auto triv = is_distributional_trivial(f, mu);
  if (!triv.trivial) throw DomainError("the row or column classes of f on supp mu are not partitions");

  std::vector<int> used;
  std::vector<int> row_class(f.rows(), -1);
  for (std::size_t z = 0; z < triv.row_classes.size(); ++z) {
    if (triv.row_classes[z].empty()) continue;
    used.push_back(static_cast<int>(z));
    for (std::size_t x : triv.row_classes[z]) row_class[x] = static_cast<int>(used.size() - 1);
  }
  if (used.size() <= 1) return ProtocolTree::leaf(used.empty() ? 0 : used.front());
  for (int& c : row_class)
    if (c < 0) c = 0;  // zero-marginal rows never occur

  // Balanced deterministic announcement of the class index.
  auto build = [&](auto&& self, std::size_t lo, std::size_t hi) -> ProtocolTree {
    if (hi - lo == 1) return ProtocolTree::leaf(used[lo]);
    const std::size_t mid = lo + (hi - lo) / 2;
    std::vector<double> send(f.rows());
    for (std::size_t x = 0; x < f.rows(); ++x) send[x] = static_cast<std::size_t>(row_class[x]) >= mid ? 1.0 : 0.0;
    return ProtocolTree::alice(std::move(send), self(self, lo, mid), self(self, mid, hi));
  };
  return build(build, 0, used.size());
}

std::optional<AndBlock> find_and_block(const FunctionTable& f, const Measure& mu, const SupportGraph& graph,
                                       std::size_t component) {
  require_same_space(f, mu);
  if (component >= graph.components.size()) throw DomainError("component index out of range");
  const auto& comp = graph.components[component];
  const int id = static_cast<int>(component);
  auto in_comp = [&](std::size_t x, std::size_t y) { return graph.component({x, y}) == id; };
  for (std::size_t x : comp.rows)
    for (std::size_t x2 : comp.rows) {
      if (x2 == x) continue;
      for (std::size_t y : comp.cols)
        for (std::size_t y2 : comp.cols) {
          if (y2 == y) continue;
          if (!in_comp(x, y) || !in_comp(x, y2) || !in_comp(x2, y)) continue;
          if (mu.in_support(x2, y2)) continue;
          const int z0 = f(x, y);
          if (f(x, y2) != z0 || f(x2, y) != z0 || f(x2, y2) == z0) continue;
          return AndBlock{x, x2, y, y2, z0, f(x2, y2)};
        }
    }
  return std::nullopt;
}

const char* to_string(HalfErrorCase c) {
  switch (c) {
    case HalfErrorCase::NotApplicable: return "not_applicable";
    case HalfErrorCase::NonConstantOnComponent: return "non_constant_on_component";
    case HalfErrorCase::AndBlockPresent: return "and_block";
    case HalfErrorCase::Uncovered: return "uncovered";
  }
  return "?";
}

HalfErrorPrecondition half_error_precondition(const FunctionTable& f, const Measure& mu) {
  require_same_space(f, mu);
  const SupportGraph g = support_graph(mu);
  HalfErrorPrecondition out;
  std::optional<std::size_t> first_violating;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    const auto& comp = g.components[i];
    int value = 0;
    if (constant_on_rectangle(f, comp, value)) continue;
    if (!first_violating) first_violating = i;
    const InputPair a = comp.members.front();
    for (const auto& b : comp.members) {
      if (f(b.x, b.y) != f(a.x, a.y)) {
        out.status = HalfErrorCase::NonConstantOnComponent;
        out.component = i;
        out.a = a;
        out.b = b;
        return out;
      }
    }
  }
  if (!first_violating) return out;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    if (auto block = find_and_block(f, mu, g, i)) {
      out.status = HalfErrorCase::AndBlockPresent;
      out.component = i;
      out.block = block;
      out.a = InputPair{block->x, block->y};
      out.b = InputPair{block->x, block->y2};
      return out;
    }
  }
  out.status = HalfErrorCase::Uncovered;
  out.component = first_violating;
  return out;
}

}  // namespace infotrade
