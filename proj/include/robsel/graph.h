// Copyright 2026 The Robsel Authors.
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

#ifndef ROBSEL_GRAPH_H_
#define ROBSEL_GRAPH_H_

#include <istream>
#include <span>
#include <string>
#include <vector>

namespace robsel {

struct Edge {
  int source = 0;
  int target = 0;
  double weight = 1.0;
};

// Immutable directed graph with dense node ids [0, n). Self-loops are
// dropped and parallel edges collapsed (weights summed) at construction;
// edge order is first appearance.
class DirectedGraph {
 public:
  DirectedGraph(int num_nodes, const std::vector<Edge>& edges,
                std::vector<std::string> labels = {});

  int num_nodes() const { return num_nodes_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  // Edge indices leaving / entering a node, ascending.
  std::span<const int> out_edges(int u) const {
    return {out_index_.data() + out_offset_[u], out_index_.data() + out_offset_[u + 1]};
  }
  std::span<const int> in_edges(int v) const {
    return {in_index_.data() + in_offset_[v], in_index_.data() + in_offset_[v + 1]};
  }
  int out_degree(int u) const { return out_offset_[u + 1] - out_offset_[u]; }
  int in_degree(int v) const { return in_offset_[v + 1] - in_offset_[v]; }

  // Original node names; defaults to "0".."n-1".
  const std::vector<std::string>& labels() const { return labels_; }
  int dropped_self_loops() const { return dropped_self_loops_; }
  int collapsed_parallel_edges() const { return collapsed_parallel_; }

 private:
  int num_nodes_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<int> out_offset_, out_index_, in_offset_, in_index_;
  int dropped_self_loops_ = 0;
  int collapsed_parallel_ = 0;
};

// Parses a SNAP-style edge list: "u v [weight]" per line, whitespace
// separated, '#' comment lines and blank lines skipped. Node ids are
// non-negative integers, re-indexed densely in order of first appearance.
// Throws ParseError (with line number) on malformed lines and
// EmptyGraphError when no edge survives. Warnings (self-loops, parallel
// edges) are appended to `warnings` when given.
DirectedGraph LoadEdgeList(std::istream& in,
                           std::vector<std::string>* warnings = nullptr);
DirectedGraph LoadEdgeListFile(const std::string& path,
                               std::vector<std::string>* warnings = nullptr);

// Induced subgraph on the `limit` nodes of highest total degree
// (in + out, unweighted); ties go to the lower node id. Kept nodes retain
// their relative order and labels.
DirectedGraph TopActiveSubgraph(const DirectedGraph& graph, int limit);

}  // namespace robsel

#endif  // ROBSEL_GRAPH_H_
