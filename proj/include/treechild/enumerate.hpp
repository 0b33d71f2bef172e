#pragma once

// Ground-truth enumeration oracles: rooted binary leaf-labeled trees,
// tree-child networks stratified by reticulation count, one-component
// tree-child networks, and the word class A_n.

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "network.hpp"
#include "words.hpp"

namespace treechild {

struct CountByReticulation {
  int n = 0;
  std::map<int, mpz_class> counts;  // k -> number of networks
  mpz_class total() const {
    mpz_class t = 0;
    for (const auto& [k, c] : counts) t += c;
    return t;
  }
};

// All rooted binary trees with leaves labeled 1..n, built by inserting leaf i
// into every edge of every tree on i-1 leaves; yields (2n-3)!! trees.
inline std::vector<PhyloNetwork> enumerate_trees(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_trees: n must be >= 1");
  std::vector<PhyloNetwork> cur;
  {
    PhyloNetwork net;
    int r = net.add_node(NodeKind::Root);
    int l = net.add_node(NodeKind::Leaf, 1);
    net.add_edge(r, l);
    cur.push_back(std::move(net));
  }
  for (int i = 2; i <= n; ++i) {
    std::vector<PhyloNetwork> next;
    for (const auto& net : cur) {
      for (size_t e = 0; e < net.edges.size(); ++e) {
        PhyloNetwork out = net;
        int u = out.add_node(NodeKind::Tree);
        int lf = out.add_node(NodeKind::Leaf, i);
        Edge old = out.edges[e];
        out.edges[e] = {old.first, u};
        out.add_edge(u, old.second);
        out.add_edge(u, lf);
        next.push_back(std::move(out));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

namespace detail {

// Subdivide edge eu with a tree node u and edge ev with a reticulation v,
// then add u -> v. Requires eu != ev (as indices).
inline PhyloNetwork insert_pair(const PhyloNetwork& net, size_t eu, size_t ev) {
  PhyloNetwork out = net;
  int u = out.add_node(NodeKind::Tree);
  int v = out.add_node(NodeKind::Reticulation);
  Edge a = out.edges[eu], b = out.edges[ev];
  out.edges[eu] = {a.first, u};
  out.add_edge(u, a.second);
  out.edges[ev] = {b.first, v};
  out.add_edge(v, b.second);
  out.add_edge(u, v);
  return out;
}

inline bool acyclic(const PhyloNetwork& net) {
  Adjacency adj(net);
  return is_acyclic(net, adj);
}

inline bool tree_child_raw(const PhyloNetwork& net) {
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

}  // namespace detail

using ProgressFn = std::function<void(int k, uint64_t done, uint64_t total)>;

// All tree-child networks with n leaves and up to k_max reticulations,
// stratified by k. Every tree-child network arises from a tree by repeatedly
// subdividing one edge with a tree node, another with a reticulation, and
// joining them; generation inserts all such pairs, filters by acyclicity and
// the tree-child condition, and deduplicates by canonical code.
inline std::vector<std::vector<PhyloNetwork>> enumerate_tree_child_networks(
    int n, int k_max = -1, const ProgressFn& progress = nullptr) {
  if (n < 1) throw std::invalid_argument("enumerate_tree_child_networks: n must be >= 1");
  if (k_max < 0 || k_max > n - 1) k_max = n - 1;
  std::vector<std::vector<PhyloNetwork>> strata;
  strata.push_back(enumerate_trees(n));
  for (int k = 1; k <= k_max; ++k) {
    const auto& prev = strata.back();
    std::unordered_map<std::string, size_t> seen;
    std::vector<PhyloNetwork> next;
    uint64_t done = 0, total = prev.size();
    for (const auto& net : prev) {
      size_t m = net.edges.size();
      for (size_t eu = 0; eu < m; ++eu)
        for (size_t ev = 0; ev < m; ++ev) {
          if (eu == ev) continue;
          PhyloNetwork cand = detail::insert_pair(net, eu, ev);
          if (!detail::acyclic(cand)) continue;
          if (!detail::tree_child_raw(cand)) continue;
          std::string code = canonical_code(cand);
          if (seen.emplace(std::move(code), next.size()).second) next.push_back(std::move(cand));
        }
      ++done;
      if (progress && done % 1024 == 0) progress(k, done, total);
    }
    if (progress) progress(k, done, total);
    strata.push_back(std::move(next));
  }
  return strata;
}

inline CountByReticulation enumerate_tree_child(int n, int k_max = -1,
                                                const ProgressFn& progress = nullptr) {
  auto strata = enumerate_tree_child_networks(n, k_max, progress);
  CountByReticulation out;
  out.n = n;
  for (size_t k = 0; k < strata.size(); ++k) out.counts[static_cast<int>(k)] = strata[k].size();
  return out;
}

// One-component restriction: every reticulation's child is a leaf.
inline bool is_one_component(const PhyloNetwork& net) {
  Adjacency adj(net);
  for (int v = 0; v < net.size(); ++v)
    if (net.nodes[v].kind == NodeKind::Reticulation)
      if (net.nodes[adj.children[v][0]].kind != NodeKind::Leaf) return false;
  return true;
}

inline CountByReticulation enumerate_one_component(int n, int k_max = -1,
                                                   const ProgressFn& progress = nullptr) {
  auto strata = enumerate_tree_child_networks(n, k_max, progress);
  CountByReticulation out;
  out.n = n;
  for (size_t k = 0; k < strata.size(); ++k) {
    mpz_class c = 0;
    for (const auto& net : strata[k])
      if (is_one_component(net)) ++c;
    out.counts[static_cast<int>(k)] = c;
  }
  return out;
}

// Count (and optionally collect) the words of A_n by prefix-pruned
// backtracking over letter-count vectors.
inline uint64_t enumerate_words(int n, std::vector<Word>* collect = nullptr) {
  if (n < 0) throw std::invalid_argument("enumerate_words: n must be >= 0");
  std::vector<int> cnt(n + 1, 0);
  Word w;
  uint64_t total = 0;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(w.size()) == 3 * n) {
      ++total;
      if (collect) collect->push_back(w);
      return;
    }
    for (int i = 1; i <= n; ++i) {
      if (cnt[i] >= 3) continue;
      ++cnt[i];
      bool ok = true;
      for (int j = i + 1; j <= n && ok; ++j)
        if (cnt[j] > cnt[i]) ok = false;
      for (int ip = 1; ip < i && ok; ++ip)
        if (cnt[ip] != 0 && cnt[ip] < cnt[i]) ok = false;
      if (ok) {
        w.push_back(i);
        self(self);
        w.pop_back();
      }
      --cnt[i];
    }
  };
  rec(rec);
  return total;
}

}  // namespace treechild
