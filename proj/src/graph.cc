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

#include "robsel/graph.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "robsel/errors.h"

namespace robsel {
namespace {

void BuildIndex(int n, const std::vector<Edge>& edges, bool by_source,
                std::vector<int>& offset, std::vector<int>& index) {
  offset.assign(n + 1, 0);
  for (const Edge& e : edges) ++offset[(by_source ? e.source : e.target) + 1];
  std::partial_sum(offset.begin(), offset.end(), offset.begin());
  index.assign(edges.size(), 0);
  std::vector<int> cursor(offset.begin(), offset.end() - 1);
  for (size_t i = 0; i < edges.size(); ++i) {
    const int node = by_source ? edges[i].source : edges[i].target;
    index[cursor[node]++] = static_cast<int>(i);
  }
}

bool ParseNodeId(std::string_view token, long long& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end && out >= 0;
}

}  // namespace

DirectedGraph::DirectedGraph(int num_nodes, const std::vector<Edge>& edges,
                             std::vector<std::string> labels)
    : num_nodes_(num_nodes), labels_(std::move(labels)) {
  if (num_nodes < 0) throw std::invalid_argument("negative node count");
  if (labels_.empty()) {
    for (int i = 0; i < num_nodes; ++i) labels_.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != num_nodes) {
    throw std::invalid_argument("label count must equal node count");
  }
  std::map<std::pair<int, int>, int> position;
  for (const Edge& e : edges) {
    if (e.source < 0 || e.source >= num_nodes || e.target < 0 ||
        e.target >= num_nodes) {
      throw std::invalid_argument("edge endpoint outside [0, n)");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw std::invalid_argument("edge weights must be positive");
    }
    if (e.source == e.target) {
      ++dropped_self_loops_;
      continue;
    }
    auto [it, fresh] =
        position.emplace(std::make_pair(e.source, e.target), num_edges());
    if (fresh) {
      edges_.push_back(e);
    } else {
      edges_[it->second].weight += e.weight;
      ++collapsed_parallel_;
    }
  }
  BuildIndex(num_nodes_, edges_, true, out_offset_, out_index_);
  BuildIndex(num_nodes_, edges_, false, in_offset_, in_index_);
}

DirectedGraph LoadEdgeList(std::istream& in, std::vector<std::string>* warnings) {
  std::unordered_map<long long, int> dense;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto node_index = [&](long long id) {
    auto [it, fresh] = dense.emplace(id, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(std::to_string(id));
    return it->second;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.size() < 2 || tokens.size() > 3) {
      throw ParseError(line_no, "expected 'u v [weight]', got " +
                                    std::to_string(tokens.size()) + " fields");
    }
    long long u = 0;
    long long v = 0;
    if (!ParseNodeId(tokens[0], u)) {
      throw ParseError(line_no, "bad node id '" + tokens[0] + "'");
    }
    if (!ParseNodeId(tokens[1], v)) {
      throw ParseError(line_no, "bad node id '" + tokens[1] + "'");
    }
    double weight = 1.0;
    if (tokens.size() == 3) {
      size_t used = 0;
      try {
        weight = std::stod(tokens[2], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tokens[2].size() || !(weight > 0.0) || !std::isfinite(weight)) {
        throw ParseError(line_no, "bad edge weight '" + tokens[2] + "'");
      }
    }
    const int su = node_index(u);
    const int sv = node_index(v);
    if (su == sv && warnings) {
      warnings->push_back("line " + std::to_string(line_no) +
                          ": self-loop on node " + tokens[0] + " ignored");
    }
    edges.push_back({su, sv, weight});
  }
  if (labels.empty()) throw EmptyGraphError("edge list contains no edges");

  const int n = static_cast<int>(labels.size());
  DirectedGraph graph(n, edges, std::move(labels));
  if (graph.num_edges() == 0) {
    throw EmptyGraphError("edge list contains only self-loops");
  }
  if (warnings && graph.collapsed_parallel_edges() > 0) {
    warnings->push_back(std::to_string(graph.collapsed_parallel_edges()) +
                        " parallel edge(s) collapsed by summing weights");
  }
  return graph;
}

DirectedGraph LoadEdgeListFile(const std::string& path,
                               std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list '" + path + "'");
  return LoadEdgeList(in, warnings);
}

DirectedGraph TopActiveSubgraph(const DirectedGraph& graph, int limit) {
  const int n = graph.num_nodes();
  if (limit < 1 || limit > n) {
    throw std::invalid_argument("node limit must lie in [1, n]");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return graph.in_degree(a) + graph.out_degree(a) >
           graph.in_degree(b) + graph.out_degree(b);
  });
  std::vector<int> kept(order.begin(), order.begin() + limit);
  std::sort(kept.begin(), kept.end());

  std::vector<int> remap(n, -1);
  std::vector<std::string> labels;
  for (int i = 0; i < limit; ++i) {
    remap[kept[i]] = i;
    labels.push_back(graph.labels()[kept[i]]);
  }
  std::vector<Edge> edges;
  for (const Edge& e : graph.edges()) {
    if (remap[e.source] >= 0 && remap[e.target] >= 0) {
      edges.push_back({remap[e.source], remap[e.target], e.weight});
    }
  }
  return DirectedGraph(limit, edges, std::move(labels));
}

}  // namespace robsel
