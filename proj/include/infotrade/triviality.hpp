#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "infotrade/measures.hpp"
#include "infotrade/protocol.hpp"

namespace infotrade {

struct SupportComponent {
  std::vector<InputPair> members;  // row-major order
  std::vector<std::size_t> rows;   // C_A, ascending
  std::vector<std::size_t> cols;   // C_B, ascending
};

/// G_mu: supported input pairs, adjacent when they share a row or a column.
struct SupportGraph {
  std::size_t num_rows = 0;
  std::size_t num_cols = 0;
  std::vector<SupportComponent> components;
  std::vector<int> component_of;  // row-major, -1 outside the support

  int component(InputPair p) const { return component_of[p.x * num_cols + p.y]; }
};

SupportGraph support_graph(const Measure& mu);

/// Shortest path from a to b in G_mu (both endpoints included), if one exists.
std::optional<std::vector<InputPair>> shortest_support_path(const Measure& mu, InputPair a, InputPair b);

struct InternalTriviality {
  bool trivial = false;
  std::optional<std::size_t> violating_component;
  std::vector<int> component_labels;  // constant value of f on C_A x C_B, filled when trivial
};

/// True iff f is constant on C_A x C_B for every component C of G_mu.
InternalTriviality is_internal_trivial(const FunctionTable& f, const Measure& mu);

struct DistributionalTriviality {
  bool trivial = false;
  // row_classes[z] = X_z = {x : some supported (x,y) has f(x,y) = z}; col_classes likewise.
  std::vector<std::vector<std::size_t>> row_classes;
  std::vector<std::vector<std::size_t>> col_classes;
  // Inputs lying in two or more classes, the overlap witness.
  std::vector<std::size_t> row_overlap;
  std::vector<std::size_t> col_overlap;
};

DistributionalTriviality is_distributional_trivial(const FunctionTable& f, const Measure& mu);

/// Protocol with zero internal information and zero distributional error.
/// Alice announces the class of x when more than one class occurs; a single
/// leaf otherwise. Throws DomainError if the precondition fails.
ProtocolTree zero_ic_protocol(const FunctionTable& f, const Measure& mu);

/// 2x2 pattern with (x,y), (x,y2), (x2,y) supported in the component with
/// value z0 and (x2,y2) unsupported with a different value.
struct AndBlock {
  std::size_t x = 0, x2 = 0, y = 0, y2 = 0;
  int z0 = 0;
  int z1 = 0;
};

std::optional<AndBlock> find_and_block(const FunctionTable& f, const Measure& mu, const SupportGraph& graph,
                                       std::size_t component);

enum class HalfErrorCase {
  NotApplicable,       // mu is internal-trivial for f
  NonConstantOnComponent,
  AndBlockPresent,
  Uncovered,           // f constant on C without an AND block; no bound asserted
};

const char* to_string(HalfErrorCase c);

struct HalfErrorPrecondition {
  HalfErrorCase status = HalfErrorCase::NotApplicable;
  std::optional<std::size_t> component;
  std::optional<InputPair> a;  // witness pair for the lower bound
  std::optional<InputPair> b;
  std::optional<AndBlock> block;
};

/// Which case of the error-1/2-eps lower bound applies to (f, mu).
HalfErrorPrecondition half_error_precondition(const FunctionTable& f, const Measure& mu);

}  // namespace infotrade
