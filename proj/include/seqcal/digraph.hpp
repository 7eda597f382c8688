#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "seqcal/error.hpp"

namespace seqcal {

enum class VertexKind { kInitial, kTerminal, kInterior, kIsolated };
const char* to_string(VertexKind k);

// Directed graph with labeled arcs. V needs a total order; L needs == and <.
//
// Vertex indices follow insertion order and never change; builders that want
// the canonical order insert vertices sorted. Arc ids also follow insertion
// order and stay stable while the graph only grows. Arcs are deduplicated on
// (tail, label, head).
template <class V, class L>
class LabeledDigraph {
 public:
  struct Arc {
    std::size_t tail;
    L label;
    std::size_t head;
  };
  using Word = std::vector<L>;
  using LabelEq = std::function<bool(const L&, const L&)>;

  std::size_t add_vertex(const V& v) {
    auto [it, inserted] = index_.emplace(v, vertices_.size());
    if (inserted) {
      vertices_.push_back(v);
      in_deg_.push_back(0);
      out_.emplace_back();
    }
    return it->second;
  }

  std::optional<std::size_t> find(const V& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(const V& v) const {
    auto i = find(v);
    if (!i) throw UnknownVertexError("unknown vertex");
    return *i;
  }

  bool has_vertex(const V& v) const { return index_.count(v) != 0; }

  // Returns the id of the new arc, or of the identical arc already present.
  std::size_t add_arc(std::size_t tail, L label, std::size_t head) {
    check(tail);
    check(head);
    for (std::size_t id : out_[tail]) {
      const Arc& a = arcs_[id];
      if (a.head == head && a.label == label) return id;
    }
    arcs_.push_back(Arc{tail, std::move(label), head});
    out_[tail].push_back(arcs_.size() - 1);
    ++in_deg_[head];
    return arcs_.size() - 1;
  }

  std::size_t add_arc(const V& tail, L label, const V& head) {
    std::size_t t = add_vertex(tail);
    std::size_t h = add_vertex(head);
    return add_arc(t, std::move(label), h);
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<V>& vertices() const { return vertices_; }
  const V& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(std::size_t id) const { return arcs_.at(id); }
  const std::vector<std::size_t>& out_arcs(std::size_t v) const { return out_[v]; }
  std::size_t in_degree(std::size_t v) const { return in_deg_[v]; }
  std::size_t out_degree(std::size_t v) const { return out_[v].size(); }

  VertexKind classify(std::size_t v) const {
    check(v);
    bool in = in_deg_[v] > 0, out = !out_[v].empty();
    if (in && out) return VertexKind::kInterior;
    if (out) return VertexKind::kInitial;
    if (in) return VertexKind::kTerminal;
    return VertexKind::kIsolated;
  }
  VertexKind classify(const V& v) const { return classify(index_of(v)); }

  bool is_initial(std::size_t v) const { return classify(v) == VertexKind::kInitial; }
  bool is_terminal(std::size_t v) const { return classify(v) == VertexKind::kTerminal; }

  std::vector<std::size_t> vertices_of_kind(VertexKind k) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (classify(v) == k) out.push_back(v);
    return out;
  }

  // Throws IsolatedVertexError naming the first isolated vertex, if any.
  template <class Namer>
  void require_no_isolated(Namer&& name) const {
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (classify(v) == VertexKind::kIsolated)
        throw IsolatedVertexError("vertex " + name(v) + " has no arcs");
  }

  // Vertex indices in V order.
  std::vector<std::size_t> sorted_vertices() const {
    std::vector<std::size_t> order;
    for (const auto& [v, i] : index_) order.push_back(i);
    return order;
  }

  // Arc ids ordered by (tail, head, label) under V and L order.
  std::vector<std::size_t> sorted_arcs() const {
    std::vector<std::size_t> ids(arcs_.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::sort(ids.begin(), ids.end(), [&](std::size_t x, std::size_t y) {
      const Arc& a = arcs_[x];
      const Arc& b = arcs_[y];
      if (vertices_[a.tail] != vertices_[b.tail]) return vertices_[a.tail] < vertices_[b.tail];
      if (vertices_[a.head] != vertices_[b.head]) return vertices_[a.head] < vertices_[b.head];
      return a.label < b.label;
    });
    return ids;
  }

  // True iff some initial-to-terminal path spells `word` under `eq`.
  bool accepts(const Word& word, const LabelEq& eq = std::equal_to<L>()) const {
    if (word.empty()) throw EmptyWordError();
    std::vector<char> front(vertices_.size(), 0);
    for (std::size_t i = 0; i < word.size(); ++i) {
      std::vector<char> next(vertices_.size(), 0);
      for (const Arc& a : arcs_) {
        bool from = i == 0 ? is_initial(a.tail) : front[a.tail] != 0;
        if (from && eq(a.label, word[i])) next[a.head] = 1;
      }
      front.swap(next);
    }
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (front[v] && is_terminal(v)) return true;
    return false;
  }

  // Every accepted word of length at most max_len, shortest first, then
  // lexicographically by label order.
  std::vector<Word> accepted_words(std::size_t max_len) const {
    auto shorter = [](const Word& a, const Word& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    };
    std::set<Word, decltype(shorter)> found(shorter);
    Word cur;
    auto dfs = [&](auto&& self, std::size_t v) -> void {
      if (is_terminal(v) && !cur.empty()) found.insert(cur);
      if (cur.size() == max_len) return;
      for (std::size_t id : out_[v]) {
        cur.push_back(arcs_[id].label);
        self(self, arcs_[id].head);
        cur.pop_back();
      }
    };
    for (std::size_t v : sorted_vertices())
      if (is_initial(v)) dfs(dfs, v);
    return std::vector<Word>(found.begin(), found.end());
  }

  // Same vertex values and same (tail, label, head) triples.
  friend bool canonically_equal(const LabeledDigraph& a, const LabeledDigraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count()) return false;
    for (const V& v : a.vertices_)
      if (!b.has_vertex(v)) return false;
    for (const Arc& x : a.arcs_) {
      auto t = b.find(a.vertices_[x.tail]);
      auto h = b.find(a.vertices_[x.head]);
      bool hit = false;
      for (std::size_t id : b.out_[*t]) {
        const Arc& y = b.arcs_[id];
        if (y.head == *h && y.label == x.label) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
    return true;
  }

 private:
  void check(std::size_t v) const {
    if (v >= vertices_.size()) throw UnknownVertexError("vertex index out of range");
  }

  std::vector<V> vertices_;
  std::map<V, std::size_t> index_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::size_t> in_deg_;
};

inline const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::kInitial: return "initial";
    case VertexKind::kTerminal: return "terminal";
    case VertexKind::kInterior: return "interior";
    case VertexKind::kIsolated: return "isolated";
  }
  return "?";
}

}  // namespace seqcal
