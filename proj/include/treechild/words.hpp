#pragma once

// The word class A_n (letters 1..n, each exactly three times, prefix
// dominance) and the explicit bijection with maximal-reticulation tree-child
// networks (k = n-1), via path-component decomposition.

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "network.hpp"

namespace treechild {

using Word = std::vector<int>;

// Each letter 1..K occurs exactly 3 times; in every prefix, once letter i has
// occurred its count dominates the count of every letter j > i.
inline bool is_valid_word(const Word& w) {
  if (w.empty()) return true;
  int K = *std::max_element(w.begin(), w.end());
  if (*std::min_element(w.begin(), w.end()) < 1) return false;
  std::vector<int> cnt(K + 1, 0);
  for (int ch : w) {
    ++cnt[ch];
    for (int i = 1; i <= K; ++i) {
      if (cnt[i] == 0) continue;
      for (int j = i + 1; j <= K; ++j)
        if (cnt[j] > cnt[i]) return false;
    }
  }
  for (int i = 1; i <= K; ++i)
    if (cnt[i] != 3) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Path-component decomposition of a maximal (k = n-1) tree-child network.
// Components: the root's child and every reticulation start a component; each
// continues through the unique non-reticulation child down to a leaf.
// Indexing proceeds in rounds: a component is eligible once both parents of
// its head lie in indexed components; its sort key is the second parent
// (same component: the lower / descendant parent; different components: the
// higher-indexed one), ordered by (component index, position within it).
// ---------------------------------------------------------------------------

struct PathComponentDecomposition {
  // components[k] = node ids of component with index k, head first, leaf last
  std::vector<std::vector<int>> components;
  std::vector<int> component_of;  // node id -> component index
  std::vector<int> position_of;   // node id -> position within its component
};

inline PathComponentDecomposition path_components(const PhyloNetwork& net) {
  if (!is_tree_child(net)) throw std::invalid_argument("path_components: not tree-child");
  auto prof = profile(net);
  if (prof.reticulations != prof.leaves - 1)
    throw std::invalid_argument("path_components: network is not maximal (k != n-1)");
  Adjacency adj(net);
  int root = -1;
  for (int v = 0; v < net.size(); ++v)
    if (net.nodes[v].kind == NodeKind::Root) root = v;

  auto chain_from = [&](int head) {
    std::vector<int> seq{head};
    int v = head;
    while (net.nodes[v].kind != NodeKind::Leaf) {
      int nxt = -1;
      for (int c : adj.children[v])
        if (net.nodes[c].kind != NodeKind::Reticulation) nxt = c;
      if (nxt < 0) throw std::logic_error("path_components: tree-child chain broke");
      v = nxt;
      seq.push_back(v);
    }
    return seq;
  };

  std::vector<int> heads{adj.children[root][0]};
  for (int v = 0; v < net.size(); ++v)
    if (net.nodes[v].kind == NodeKind::Reticulation) heads.push_back(v);

  std::map<int, std::vector<int>> comp;  // head -> chain
  std::vector<int> comp_head(net.nodes.size(), -1), pos(net.nodes.size(), -1);
  for (int h : heads) {
    comp[h] = chain_from(h);
    for (size_t i = 0; i < comp[h].size(); ++i) {
      comp_head[comp[h][i]] = h;
      pos[comp[h][i]] = static_cast<int>(i);
    }
  }

  std::map<int, int> index;  // head -> component index
  std::vector<int> order{heads[0]};
  index[heads[0]] = 0;
  while (order.size() < heads.size()) {
    std::vector<std::array<int, 3>> eligible;  // (second-parent comp idx, pos, head)
    for (int h : heads) {
      if (index.count(h)) continue;
      const auto& ps = adj.parents[h];
      bool ready = true;
      for (int p : ps)
        if (!index.count(comp_head[p])) ready = false;
      if (!ready) continue;
      int p1 = ps[0], p2 = ps[1];
      int second;
      if (comp_head[p1] == comp_head[p2])
        second = pos[p1] > pos[p2] ? p1 : p2;  // same component: the descendant
      else
        second = index[comp_head[p1]] > index[comp_head[p2]] ? p1 : p2;
      eligible.push_back({index[comp_head[second]], pos[second], h});
    }
    if (eligible.empty()) throw std::logic_error("path_components: indexing stalled");
    std::sort(eligible.begin(), eligible.end());
    for (const auto& e : eligible) {
      index[e[2]] = static_cast<int>(order.size());
      order.push_back(e[2]);
    }
  }

  PathComponentDecomposition out;
  out.component_of.assign(net.nodes.size(), -1);
  out.position_of.assign(net.nodes.size(), -1);
  for (int h : order) out.components.push_back(comp[h]);
  for (size_t k = 0; k < out.components.size(); ++k)
    for (size_t i = 0; i < out.components[k].size(); ++i) {
      out.component_of[out.components[k][i]] = static_cast<int>(k);
      out.position_of[out.components[k][i]] = static_cast<int>(i);
    }
  return out;
}

// Maximal network -> word in A_{n-1}: label the head of component k (k >= 1)
// and both of its parents with k, then read labels along components in index
// order. Leaf labels are ignored.
inline Word network_to_word(const PhyloNetwork& net) {
  auto pcd = path_components(net);
  Adjacency adj(net);
  std::vector<int> letter(net.nodes.size(), 0);
  for (size_t k = 1; k < pcd.components.size(); ++k) {
    int head = pcd.components[k][0];
    letter[head] = static_cast<int>(k);
    for (int p : adj.parents[head]) letter[p] = static_cast<int>(k);
  }
  Word w;
  for (const auto& seq : pcd.components)
    for (int v : seq)
      if (letter[v]) w.push_back(letter[v]);
  return w;
}

// Word in A_{n-1} -> maximal tree-child network with n leaves, labeled 1..n
// in left-to-right discovery order. Segment k of the word starts at the third
// occurrence of letter k (segment 0 at position 0); each segment becomes a
// path component: a reticulation head (k >= 1), one tree node per remaining
// letter, and a terminal leaf. The two tree nodes carrying the first and
// second occurrences of letter k are the parents of component k's head.
inline PhyloNetwork word_to_network(const Word& w) {
  if (!is_valid_word(w)) throw std::invalid_argument("word_to_network: invalid word");
  int K = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
  int L = static_cast<int>(w.size());

  std::vector<int> start(K + 1, 0);
  {
    std::vector<int> occ(K + 1, 0);
    for (int pos = 0; pos < L; ++pos)
      if (++occ[w[pos]] == 3) start[w[pos]] = pos;
  }
  for (int k = 1; k <= K; ++k)
    if (start[k] <= (k >= 2 ? start[k - 1] : -1))
      throw std::logic_error("word_to_network: segment starts not increasing");

  PhyloNetwork net;
  int root = net.add_node(NodeKind::Root);
  std::vector<int> head(K + 1, -1);
  std::vector<std::vector<int>> parent_slots(K + 1);
  int next_label = 0;
  int first_chain_node = -1;
  for (int k = 0; k <= K; ++k) {
    int s = start[k];
    int e = k == K ? L : start[k + 1];
    std::vector<int> chain;
    for (int idx = s; idx < e; ++idx) {
      if (k > 0 && idx == s) {
        head[k] = net.add_node(NodeKind::Reticulation);
        chain.push_back(head[k]);
      } else {
        int t = net.add_node(NodeKind::Tree);
        parent_slots[w[idx]].push_back(t);
        chain.push_back(t);
      }
    }
    chain.push_back(net.add_node(NodeKind::Leaf, ++next_label));
    if (k == 0) first_chain_node = chain[0];
    for (size_t i = 0; i + 1 < chain.size(); ++i) net.add_edge(chain[i], chain[i + 1]);
  }
  net.add_edge(root, first_chain_node);
  for (int k = 1; k <= K; ++k) {
    // first two occurrences of k were turned into tree nodes; the third is the
    // head itself and carries no parent slot
    if (parent_slots[k].size() != 2)
      throw std::logic_error("word_to_network: letter lacks two parent slots");
    for (int t : parent_slots[k]) net.add_edge(t, head[k]);
  }
  auto rep = validate_network(net);
  if (!rep.ok() || !is_tree_child(net))
    throw std::logic_error("word_to_network: produced invalid network");
  return net;
}

inline std::string word_to_string(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

inline Word word_from_string(const std::string& s) {
  Word w;
  std::istringstream is(s);
  int x;
  while (is >> x) w.push_back(x);
  return w;
}

}  // namespace treechild
