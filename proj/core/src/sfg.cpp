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

#include "dvm/sfg.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "dvm/error.hpp"
#include "json.hpp"

namespace dvm {

namespace {

const char* kind_name(SfgNodeKind k) {
  switch (k) {
    case SfgNodeKind::Input: return "input";
    case SfgNodeKind::Output: return "output";
    case SfgNodeKind::Adder: return "adder";
    case SfgNodeKind::Gain: return "gain";
    case SfgNodeKind::Delay: return "delay";
  }
  return "unknown";
}

std::string format_complex(cplx v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gj", v.real(), v.imag());
  return buf;
}

// A wire in the graph under construction: the node driving it and whether
// the value on the wire is that node's output negated.
struct Signal {
  std::size_t node;
  bool negated = false;
};

class Builder {
 public:
  explicit Builder(std::size_t n) { graph_.n = n; }

  void begin_stage(std::string name) { graph_.stages.push_back({std::move(name), {}}); }

  std::size_t add_node(SfgNodeKind kind, std::string label, cplx value = {}, std::size_t index = 0) {
    const std::size_t id = graph_.nodes.size();
    graph_.nodes.push_back({id, kind, std::move(label), value, index});
    graph_.stages.back().nodes.push_back(id);
    return id;
  }

  void add_edge(std::size_t from, std::size_t to, EdgeWeight w) { graph_.edges.push_back({from, to, w}); }

  static EdgeWeight sign_weight(bool negated) { return negated ? EdgeWeight::minus() : EdgeWeight::plus(); }

  Signal multiply(Signal s, cplx value, SfgNodeKind kind, const std::string& label) {
    if (value == cplx{1.0, 0.0}) return s;
    if (value == cplx{-1.0, 0.0}) return {s.node, !s.negated};
    if (s.negated) {
      // Stage order guarantees a negated wire only ever feeds adders.
      throw std::logic_error("negated signal routed into a multiplier");
    }
    const std::size_t id = add_node(kind, label, value);
    add_edge(s.node, id, EdgeWeight::gain(value));
    return {id, false};
  }

  Signal add(Signal a, Signal b, bool subtract) {
    const std::size_t id = add_node(SfgNodeKind::Adder, subtract ? "-" : "+");
    add_edge(a.node, id, sign_weight(a.negated));
    add_edge(b.node, id, sign_weight(b.negated != subtract));
    return {id, false};
  }

  SfgGraph take() { return std::move(graph_); }

 private:
  SfgGraph graph_;
};

}  // namespace

std::size_t SfgGraph::count(SfgNodeKind kind) const {
  std::size_t c = 0;
  for (const auto& node : nodes) c += node.kind == kind;
  return c;
}

SfgGraph build_sfg(TransformKind kind, const VanSpec& spec) {
  if (direction_of(kind) != Direction::Clockwise) {
    throw Error(ErrorKind::NotRealizable,
                std::string(to_string(kind)) + " needs time advances and has no delay realization");
  }
  check_compatible(kind, spec);

  const std::size_t n = spec.n();
  Builder b(n);
  std::vector<Signal> sig(n);

  b.begin_stage("input");
  for (std::size_t i = 0; i < n; ++i) {
    sig[i] = {b.add_node(SfgNodeKind::Input, "z" + std::to_string(i), {}, i)};
  }

  for (const Factor& f : build_factors(spec)) {
    const std::size_t m = f.size;
    const std::size_t h = m / 2;
    const std::string level = "[" + std::to_string(f.level) + "]";
    switch (f.kind) {
      case FactorKind::RadiusDiagonal:
        b.begin_stage("radius");
        for (std::size_t l = 0; l < n; ++l) {
          sig[l] = b.multiply(sig[l], f.payload[l], SfgNodeKind::Gain,
                              "r^" + std::to_string(l) + "=" + format_complex(f.payload[l]));
        }
        break;
      case FactorKind::ScalarBlock:
        b.begin_stage("scalar" + level);
        for (std::size_t base = 0; base < n; base += m) {
          for (std::size_t i = 0; i < h; ++i) {
            sig[base + h + i] = b.multiply(sig[base + h + i], f.payload[0], SfgNodeKind::Delay,
                                           format_complex(f.payload[0]));
          }
        }
        break;
      case FactorKind::Butterfly:
        b.begin_stage("butterfly" + level);
        for (std::size_t base = 0; base < n; base += m) {
          for (std::size_t i = 0; i < h; ++i) {
            const Signal top = sig[base + i];
            const Signal bottom = sig[base + h + i];
            sig[base + i] = b.add(top, bottom, false);
            sig[base + h + i] = b.add(top, bottom, true);
          }
        }
        break;
      case FactorKind::DelayDiagonal:
        b.begin_stage("delay" + level);
        for (std::size_t base = 0; base < n; base += m) {
          for (std::size_t i = 1; i < h; ++i) {
            sig[base + h + i] = b.multiply(sig[base + h + i], f.payload[i], SfgNodeKind::Delay,
                                           format_complex(f.payload[i]));
          }
        }
        break;
      case FactorKind::BaseBlock:
        b.begin_stage("base");
        for (std::size_t base = 0; base < n; base += 2) {
          const Signal top = sig[base];
          const Signal bottom =
              b.multiply(sig[base + 1], f.payload[0], SfgNodeKind::Delay, format_complex(f.payload[0]));
          sig[base] = b.add(top, bottom, false);
          sig[base + 1] = b.add(top, bottom, true);
        }
        break;
      case FactorKind::EvenOddPermutationTranspose: {
        b.begin_stage("permutation" + level);
        std::vector<Signal> tmp(m);
        for (std::size_t base = 0; base < n; base += m) {
          for (std::size_t i = 0; i < h; ++i) {
            tmp[2 * i] = sig[base + i];
            tmp[2 * i + 1] = sig[base + h + i];
          }
          std::copy(tmp.begin(), tmp.end(), sig.begin() + static_cast<std::ptrdiff_t>(base));
        }
        break;
      }
    }
  }

  b.begin_stage("output");
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t id = b.add_node(SfgNodeKind::Output, "y" + std::to_string(k), {}, k);
    b.add_edge(sig[k].node, id, Builder::sign_weight(sig[k].negated));
  }
  return b.take();
}

cvec evaluate_sfg(const SfgGraph& g, std::span<const cplx> z) {
  if (z.size() != g.n) throw Error(ErrorKind::LengthMismatch, "input length does not match graph");
  std::vector<std::vector<const SfgEdge*>> in(g.nodes.size());
  for (const auto& e : g.edges) in[e.to].push_back(&e);

  const auto negated = [](const SfgEdge* e) { return e->weight.kind == EdgeWeight::Kind::Minus1; };

  cvec val(g.nodes.size());
  cvec y(g.n);
  for (const auto& node : g.nodes) {
    const auto& ins = in[node.id];
    switch (node.kind) {
      case SfgNodeKind::Input:
        val[node.id] = z[node.index];
        break;
      case SfgNodeKind::Adder: {
        const cplx a = val[ins[0]->from];
        const cplx b = val[ins[1]->from];
        const bool na = negated(ins[0]);
        const bool nb = negated(ins[1]);
        if (!na) {
          val[node.id] = nb ? a - b : a + b;
        } else {
          val[node.id] = nb ? -(a + b) : b - a;
        }
        break;
      }
      case SfgNodeKind::Gain:
        // Radius gains are real; scale both parts as the transform does.
        val[node.id] = val[ins[0]->from] * node.value.real();
        break;
      case SfgNodeKind::Delay:
        val[node.id] = node.value * val[ins[0]->from];
        break;
      case SfgNodeKind::Output: {
        const cplx v = val[ins[0]->from];
        val[node.id] = negated(ins[0]) ? -v : v;
        y[node.index] = val[node.id];
        break;
      }
    }
  }
  return y;
}

std::string check_sfg(const SfgGraph& g) {
  const std::size_t count = g.nodes.size();
  std::vector<std::size_t> indeg(count, 0);
  std::vector<std::size_t> outdeg(count, 0);
  for (const auto& e : g.edges) {
    if (e.from >= count || e.to >= count) return "edge references a missing node";
    ++indeg[e.to];
    ++outdeg[e.from];
  }
  for (const auto& node : g.nodes) {
    std::size_t want = 0;
    switch (node.kind) {
      case SfgNodeKind::Input: want = 0; break;
      case SfgNodeKind::Adder: want = 2; break;
      case SfgNodeKind::Gain:
      case SfgNodeKind::Delay:
      case SfgNodeKind::Output: want = 1; break;
    }
    if (indeg[node.id] != want) {
      return "node " + std::to_string(node.id) + " (" + kind_name(node.kind) + ") has in-degree " +
             std::to_string(indeg[node.id]);
    }
    if (node.kind == SfgNodeKind::Output && outdeg[node.id] != 0) {
      return "output node " + std::to_string(node.id) + " has outgoing edges";
    }
  }

  // Kahn's algorithm: every node must be removable.
  std::vector<std::vector<std::size_t>> succ(count);
  for (const auto& e : g.edges) succ[e.from].push_back(e.to);
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < count; ++i) {
    if (indeg[i] == 0) ready.push_back(i);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t w : succ[v]) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  if (removed != count) return "graph contains a cycle";
  return {};
}

std::string export_dot(const SfgGraph& g) {
  if (g.nodes.empty()) throw Error(ErrorKind::EmptyGraph, "graph has no nodes");
  std::ostringstream os;
  os << "digraph sfg {\n";
  os << "  rankdir=LR;\n";
  os << "  node [fontname=\"Helvetica\"];\n";
  std::size_t cluster = 0;
  for (const auto& stage : g.stages) {
    if (stage.nodes.empty()) continue;
    os << "  subgraph cluster_" << cluster++ << " {\n";
    os << "    label=\"" << stage.name << "\";\n";
    for (std::size_t id : stage.nodes) {
      const SfgNode& node = g.nodes[id];
      os << "    n" << id << " [label=\"" << node.label << "\"";
      switch (node.kind) {
        case SfgNodeKind::Input:
        case SfgNodeKind::Output: os << ", shape=plaintext"; break;
        case SfgNodeKind::Adder: os << ", shape=circle"; break;
        case SfgNodeKind::Gain: os << ", shape=triangle, orientation=270"; break;
        case SfgNodeKind::Delay: os << ", shape=box"; break;
      }
      os << "];\n";
    }
    os << "  }\n";
  }
  for (const auto& e : g.edges) {
    os << "  n" << e.from << " -> n" << e.to;
    if (e.weight.kind == EdgeWeight::Kind::Minus1) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const SfgGraph& g) {
  if (g.nodes.empty()) throw Error(ErrorKind::EmptyGraph, "graph has no nodes");
  using nlohmann::json;
  json nodes = json::array();
  for (const auto& node : g.nodes) {
    json j = {{"id", node.id}, {"kind", kind_name(node.kind)}, {"label", node.label}};
    if (node.kind == SfgNodeKind::Gain || node.kind == SfgNodeKind::Delay) {
      j["value"] = {node.value.real(), node.value.imag()};
    }
    if (node.kind == SfgNodeKind::Input || node.kind == SfgNodeKind::Output) j["index"] = node.index;
    nodes.push_back(std::move(j));
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    json w;
    switch (e.weight.kind) {
      case EdgeWeight::Kind::Plus1: w = "+1"; break;
      case EdgeWeight::Kind::Minus1: w = "-1"; break;
      case EdgeWeight::Kind::Complex: w = {e.weight.value.real(), e.weight.value.imag()}; break;
    }
    edges.push_back({{"from", e.from}, {"to", e.to}, {"weight", w}});
  }
  json stages = json::array();
  for (const auto& s : g.stages) stages.push_back({{"name", s.name}, {"nodes", s.nodes}});
  return json{{"n", g.n}, {"nodes", nodes}, {"edges", edges}, {"stages", stages}}.dump(2) + "\n";
}

}  // namespace dvm
