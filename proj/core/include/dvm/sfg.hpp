// Copyright 2026 The dvm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dvm/transform.hpp"

namespace dvm {

enum class SfgNodeKind { Input, Output, Adder, Gain, Delay };

struct SfgNode {
  std::size_t id;
  SfgNodeKind kind;
  std::string label;
  cplx value{};           // multiplier of Gain/Delay nodes
  std::size_t index = 0;  // vector position of Input/Output nodes
};

struct EdgeWeight {
  enum class Kind { Plus1, Minus1, Complex };
  Kind kind = Kind::Plus1;
  cplx value{1.0, 0.0};

  static EdgeWeight plus() { return {Kind::Plus1, {1.0, 0.0}}; }
  static EdgeWeight minus() { return {Kind::Minus1, {-1.0, 0.0}}; }
  static EdgeWeight gain(cplx v) { return {Kind::Complex, v}; }
};

struct SfgEdge {
  std::size_t from;
  std::size_t to;
  EdgeWeight weight;
};

/// Nodes created by one factor stage.
struct SfgStage {
  std::string name;
  std::vector<std::size_t> nodes;
};

/// Dataflow graph of a clockwise transform. Node ids equal their position
/// in `nodes`, and creation order is a topological order. Adder in-edges
/// are stored upper operand first.
struct SfgGraph {
  std::size_t n = 0;
  std::vector<SfgNode> nodes;
  std::vector<SfgEdge> edges;
  std::vector<SfgStage> stages;

  std::size_t count(SfgNodeKind kind) const;
};

/// Builds the graph for VanC or VanCR. Weights that are exactly 1 are
/// omitted and weights of exactly -1 become dashed (Minus1) edges.
/// Throws NotRealizable for the counterclockwise kinds, whose stages would
/// need time advances.
SfgGraph build_sfg(TransformKind kind, const VanSpec& spec);

/// Runs the graph as a dataflow program. The arithmetic matches
/// FastTransform::apply operation for operation.
cvec evaluate_sfg(const SfgGraph& graph, std::span<const cplx> z);

/// Checks degree rules and acyclicity; returns an empty string when valid,
/// otherwise a description of the first violation.
std::string check_sfg(const SfgGraph& graph);

/// Graphviz text with stable ordering; -1 edges are dashed.
/// Throws EmptyGraph for a graph without nodes.
std::string export_dot(const SfgGraph& graph);

/// JSON mirror {"nodes", "edges", "stages"}.
std::string export_json(const SfgGraph& graph);

}  // namespace dvm
