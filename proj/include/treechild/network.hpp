#pragma once

// Rooted binary leaf-labeled phylogenetic networks and the tree-child
// property: validation, structural queries, canonical codes, serialization.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace treechild {

enum class NodeKind : uint8_t { Root, Leaf, Tree, Reticulation };

struct Node {
  NodeKind kind = NodeKind::Tree;
  int label = 0;  // leaf label (1-based); 0 for non-leaves
};

using Edge = std::pair<int, int>;  // (parent, child)

struct PhyloNetwork {
  std::vector<Node> nodes;  // ids are dense indices into this vector
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(nodes.size()); }

  int add_node(NodeKind kind, int label = 0) {
    nodes.push_back({kind, label});
    return size() - 1;
  }
  void add_edge(int parent, int child) { edges.emplace_back(parent, child); }
};

// Child/parent adjacency, built once per query.
struct Adjacency {
  std::vector<std::vector<int>> children;
  std::vector<std::vector<int>> parents;

  explicit Adjacency(const PhyloNetwork& net)
      : children(net.nodes.size()), parents(net.nodes.size()) {
    for (const auto& [p, c] : net.edges) {
      children[p].push_back(c);
      parents[c].push_back(p);
    }
  }
};

struct NetworkProfile {
  int leaves = 0;        // n
  int reticulations = 0; // k
  int tree_nodes = 0;    // t
};

struct Violation {
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

inline bool is_acyclic(const PhyloNetwork& net, const Adjacency& adj) {
  std::vector<int> indeg(net.nodes.size());
  for (const auto& [p, c] : net.edges) ++indeg[c];
  std::vector<int> stack;
  for (int v = 0; v < net.size(); ++v)
    if (indeg[v] == 0) stack.push_back(v);
  size_t seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int c : adj.children[v])
      if (--indeg[c] == 0) stack.push_back(c);
  }
  return seen == net.nodes.size();
}

inline ValidationReport validate_network(const PhyloNetwork& net) {
  ValidationReport rep;
  auto fail = [&](std::string rule, std::string detail) {
    rep.violations.push_back({std::move(rule), std::move(detail)});
  };
  if (net.nodes.empty()) {
    fail("nonempty", "network has no nodes");
    return rep;
  }
  for (const auto& [p, c] : net.edges) {
    if (p < 0 || p >= net.size() || c < 0 || c >= net.size()) {
      fail("edge-endpoints", "edge references unknown node id");
      return rep;
    }
  }
  {
    std::map<Edge, int> seen;
    for (const auto& e : net.edges)
      if (++seen[e] > 1) {
        fail("no-parallel-edges",
             "duplicate edge " + std::to_string(e.first) + "->" + std::to_string(e.second));
        break;
      }
  }
  Adjacency adj(net);
  int roots = 0;
  std::vector<int> labels;
  for (int v = 0; v < net.size(); ++v) {
    const auto in = static_cast<int>(adj.parents[v].size());
    const auto out = static_cast<int>(adj.children[v].size());
    switch (net.nodes[v].kind) {
      case NodeKind::Root:
        ++roots;
        if (in != 0 || out != 1)
          fail("root-degree", "root " + std::to_string(v) + " must have indegree 0, outdegree 1");
        break;
      case NodeKind::Leaf:
        if (in != 1 || out != 0)
          fail("leaf-degree", "leaf " + std::to_string(v) + " must have indegree 1, outdegree 0");
        labels.push_back(net.nodes[v].label);
        break;
      case NodeKind::Tree:
        if (in != 1 || out != 2)
          fail("tree-degree", "tree node " + std::to_string(v) + " must have indegree 1, outdegree 2");
        break;
      case NodeKind::Reticulation:
        if (in != 2 || out != 1)
          fail("reticulation-degree",
               "reticulation " + std::to_string(v) + " must have indegree 2, outdegree 1");
        break;
    }
  }
  if (roots != 1) fail("unique-root", "expected exactly one root, found " + std::to_string(roots));
  std::sort(labels.begin(), labels.end());
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != static_cast<int>(i) + 1) {
      fail("leaf-labels", "leaf labels must be a bijection onto 1..n");
      break;
    }
  if (!is_acyclic(net, adj)) fail("acyclicity", "directed cycle present");
  // Connectivity of the underlying undirected graph.
  {
    std::vector<char> seen(net.nodes.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    size_t cnt = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++cnt;
      for (int u : adj.children[v])
        if (!seen[u]) seen[u] = 1, stack.push_back(u);
      for (int u : adj.parents[v])
        if (!seen[u]) seen[u] = 1, stack.push_back(u);
    }
    if (cnt != net.nodes.size()) fail("connectivity", "underlying graph is disconnected");
  }
  return rep;
}

inline bool is_tree_child(const PhyloNetwork& net) {
  if (!validate_network(net).ok()) throw std::invalid_argument("is_tree_child: invalid network");
  Adjacency adj(net);
  for (int v = 0; v < net.size(); ++v) {
    if (net.nodes[v].kind == NodeKind::Leaf) continue;
    bool witness = false;
    for (int c : adj.children[v])
      if (net.nodes[c].kind != NodeKind::Reticulation) witness = true;
    if (!witness) return false;
  }
  return true;
}

inline NetworkProfile profile(const PhyloNetwork& net) {
  NetworkProfile p;
  for (const auto& nd : net.nodes) {
    if (nd.kind == NodeKind::Leaf) ++p.leaves;
    if (nd.kind == NodeKind::Reticulation) ++p.reticulations;
    if (nd.kind == NodeKind::Tree) ++p.tree_nodes;
  }
  if (p.leaves + p.reticulations != p.tree_nodes + 1)
    throw std::logic_error("profile: n + k = t + 1 violated; malformed network");
  return p;
}

// A tree node is free iff each of its children is a tree node or a leaf.
inline std::vector<int> free_tree_nodes(const PhyloNetwork& net) {
  Adjacency adj(net);
  std::vector<int> out;
  for (int v = 0; v < net.size(); ++v) {
    if (net.nodes[v].kind != NodeKind::Tree) continue;
    bool free = true;
    for (int c : adj.children[v])
      if (net.nodes[c].kind != NodeKind::Tree && net.nodes[c].kind != NodeKind::Leaf) free = false;
    if (free) out.push_back(v);
  }
  return out;
}

inline std::vector<Edge> free_edges(const PhyloNetwork& net) {
  Adjacency adj(net);
  std::vector<char> free(net.nodes.size(), 0);
  for (int v : free_tree_nodes(net)) free[v] = 1;
  std::vector<Edge> out;
  for (const auto& e : net.edges)
    if (free[e.first]) out.push_back(e);
  return out;
}

// The injective growth map: a tree node between the root and its child, plus
// a reticulation inserted into the picked free edge.
inline PhyloNetwork insert_reticulation(const PhyloNetwork& net, const Edge& free_edge) {
  {
    auto fe = free_edges(net);
    if (std::find(fe.begin(), fe.end(), free_edge) == fe.end())
      throw std::invalid_argument("insert_reticulation: edge is not free");
  }
  PhyloNetwork out = net;
  int root = -1;
  for (int v = 0; v < out.size(); ++v)
    if (out.nodes[v].kind == NodeKind::Root) root = v;
  int u = out.add_node(NodeKind::Tree);
  int r = out.add_node(NodeKind::Reticulation);
  for (auto& e : out.edges) {
    if (e.first == root) e = {u, e.second};       // root -> child becomes u -> child
    else if (e == free_edge) e = {r, e.second};   // bottom half of the subdivided free edge
  }
  out.add_edge(root, u);
  out.add_edge(free_edge.first, r);
  out.add_edge(u, r);
  return out;
}

// True iff the tree-path (all intermediate nodes are tree nodes) from every
// node to a leaf is unique; characterizes k = n-1.
inline bool has_unique_tree_paths(const PhyloNetwork& net) {
  Adjacency adj(net);
  // count[v] = number of tree-paths from v to a leaf
  std::vector<long> cnt(net.nodes.size(), -1);
  // process in reverse topological order
  std::vector<int> order;
  {
    std::vector<int> indeg(net.nodes.size());
    for (const auto& [p, c] : net.edges) ++indeg[c];
    std::vector<int> stack;
    for (int v = 0; v < net.size(); ++v)
      if (indeg[v] == 0) stack.push_back(v);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      order.push_back(v);
      for (int c : adj.children[v])
        if (--indeg[c] == 0) stack.push_back(c);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (net.nodes[v].kind == NodeKind::Leaf) {
      cnt[v] = 1;
      continue;
    }
    long s = 0;
    for (int c : adj.children[v]) {
      // the path may pass through c only if c is a tree node or ends at a leaf
      if (net.nodes[c].kind == NodeKind::Leaf)
        s += 1;
      else if (net.nodes[c].kind == NodeKind::Tree)
        s += cnt[c];
      // reticulation children do not extend a tree-path from v... except the
      // path may START at a reticulation; handled because we ask per-node.
    }
    cnt[v] = s;
  }
  // For a reticulation v the path starts at v and continues through its child.
  for (int v = 0; v < net.size(); ++v) {
    if (net.nodes[v].kind == NodeKind::Leaf) continue;
    long paths = 0;
    if (net.nodes[v].kind == NodeKind::Reticulation) {
      int c = adj.children[v][0];
      paths = net.nodes[c].kind == NodeKind::Leaf ? 1
              : net.nodes[c].kind == NodeKind::Tree ? cnt[c]
                                                    : 0;
    } else {
      paths = cnt[v];
    }
    if (paths != 1) return false;
  }
  return true;
}

inline uint64_t descendant_mask(const PhyloNetwork& net, const Adjacency& adj, int v,
                                std::vector<uint64_t>& memo, std::vector<char>& done) {
  if (done[v]) return memo[v];
  uint64_t m = 0;
  if (net.nodes[v].kind == NodeKind::Leaf) m = uint64_t{1} << (net.nodes[v].label - 1);
  for (int c : adj.children[v]) m |= descendant_mask(net, adj, c, memo, done);
  memo[v] = m;
  done[v] = 1;
  return m;
}

// Leaf-label set reachable from `node` (labels are <= 64 at desk scale).
inline std::vector<int> descendant_set(const PhyloNetwork& net, int node) {
  Adjacency adj(net);
  std::vector<uint64_t> memo(net.nodes.size());
  std::vector<char> done(net.nodes.size(), 0);
  uint64_t m = descendant_mask(net, adj, node, memo, done);
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (m >> i & 1) out.push_back(i + 1);
  return out;
}

// Canonical code: recursive structural encoding, children sorted by code,
// memoized per node. Injective on tree-child networks with fixed leaf labels
// (two distinct nodes of a tree-child network always have distinct codes, so
// the code determines the network up to isomorphism). Note that encoding by
// descendant sets instead would NOT be injective: distinct nodes can share a
// descendant set.
inline std::string canonical_code(const PhyloNetwork& net) {
  Adjacency adj(net);
  std::vector<std::string> memo(net.nodes.size());
  std::vector<char> done(net.nodes.size(), 0);
  auto rec = [&](auto&& self, int v) -> const std::string& {
    if (done[v]) return memo[v];
    std::string s;
    switch (net.nodes[v].kind) {
      case NodeKind::Leaf:
        s = "L" + std::to_string(net.nodes[v].label);
        break;
      case NodeKind::Root:
      case NodeKind::Tree:
      case NodeKind::Reticulation: {
        std::vector<std::string> cs;
        for (int c : adj.children[v]) cs.push_back(self(self, c));
        std::sort(cs.begin(), cs.end());
        s = net.nodes[v].kind == NodeKind::Root ? "N(" : net.nodes[v].kind == NodeKind::Tree ? "T(" : "R(";
        for (size_t i = 0; i < cs.size(); ++i) {
          if (i) s += ',';
          s += cs[i];
        }
        s += ')';
        break;
      }
    }
    memo[v] = std::move(s);
    done[v] = 1;
    return memo[v];
  };
  for (int v = 0; v < net.size(); ++v)
    if (net.nodes[v].kind == NodeKind::Root) return rec(rec, v);
  throw std::invalid_argument("canonical_code: no root");
}

// Canonical code modulo leaf labeling: minimum over all leaf relabelings.
// Desk scale only (n! relabelings).
inline std::string canonical_code_unlabeled(const PhyloNetwork& net) {
  int n = 0;
  for (const auto& nd : net.nodes)
    if (nd.kind == NodeKind::Leaf) ++n;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::string best;
  PhyloNetwork tmp = net;
  do {
    for (int v = 0; v < tmp.size(); ++v)
      if (tmp.nodes[v].kind == NodeKind::Leaf)
        tmp.nodes[v].label = perm[net.nodes[v].label - 1];
    std::string c = canonical_code(tmp);
    if (best.empty() || c < best) best = std::move(c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// ---------------------------------------------------------------------------
// Serialization. Text format:
//   network <V> <E>
//   node <id> root|tree|retic|leaf [label]
//   ...
//   edge <parent> <child>
//   ...
// ---------------------------------------------------------------------------

inline void write_network(std::ostream& os, const PhyloNetwork& net) {
  os << "network " << net.size() << ' ' << net.edges.size() << '\n';
  for (int v = 0; v < net.size(); ++v) {
    os << "node " << v << ' ';
    switch (net.nodes[v].kind) {
      case NodeKind::Root: os << "root"; break;
      case NodeKind::Tree: os << "tree"; break;
      case NodeKind::Reticulation: os << "retic"; break;
      case NodeKind::Leaf: os << "leaf " << net.nodes[v].label; break;
    }
    os << '\n';
  }
  for (const auto& [p, c] : net.edges) os << "edge " << p << ' ' << c << '\n';
}

inline PhyloNetwork read_network(std::istream& is) {
  std::string tok;
  int nv = 0, ne = 0;
  if (!(is >> tok >> nv >> ne) || tok != "network")
    throw std::runtime_error("read_network: expected 'network <V> <E>' header");
  PhyloNetwork net;
  net.nodes.resize(nv);
  for (int i = 0; i < nv; ++i) {
    int id;
    std::string kind;
    if (!(is >> tok >> id >> kind) || tok != "node" || id < 0 || id >= nv)
      throw std::runtime_error("read_network: bad node line");
    if (kind == "root") net.nodes[id] = {NodeKind::Root, 0};
    else if (kind == "tree") net.nodes[id] = {NodeKind::Tree, 0};
    else if (kind == "retic") net.nodes[id] = {NodeKind::Reticulation, 0};
    else if (kind == "leaf") {
      int label;
      if (!(is >> label)) throw std::runtime_error("read_network: leaf without label");
      net.nodes[id] = {NodeKind::Leaf, label};
    } else
      throw std::runtime_error("read_network: unknown node kind '" + kind + "'");
  }
  for (int i = 0; i < ne; ++i) {
    int p, c;
    if (!(is >> tok >> p >> c) || tok != "edge")
      throw std::runtime_error("read_network: bad edge line");
    net.add_edge(p, c);
  }
  return net;
}

inline nlohmann::json network_to_json(const PhyloNetwork& net) {
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (int v = 0; v < net.size(); ++v) {
    nlohmann::json nd;
    nd["id"] = v;
    switch (net.nodes[v].kind) {
      case NodeKind::Root: nd["kind"] = "root"; break;
      case NodeKind::Tree: nd["kind"] = "tree"; break;
      case NodeKind::Reticulation: nd["kind"] = "retic"; break;
      case NodeKind::Leaf: nd["kind"] = "leaf"; nd["label"] = net.nodes[v].label; break;
    }
    j["nodes"].push_back(nd);
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& [p, c] : net.edges) j["edges"].push_back({p, c});
  return j;
}

inline PhyloNetwork network_from_json(const nlohmann::json& j) {
  PhyloNetwork net;
  net.nodes.resize(j.at("nodes").size());
  for (const auto& nd : j.at("nodes")) {
    int id = nd.at("id");
    std::string kind = nd.at("kind");
    if (kind == "root") net.nodes[id] = {NodeKind::Root, 0};
    else if (kind == "tree") net.nodes[id] = {NodeKind::Tree, 0};
    else if (kind == "retic") net.nodes[id] = {NodeKind::Reticulation, 0};
    else net.nodes[id] = {NodeKind::Leaf, nd.at("label")};
  }
  for (const auto& e : j.at("edges")) net.add_edge(e[0], e[1]);
  return net;
}

}  // namespace treechild
