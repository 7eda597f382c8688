#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace seqcal {

// Subset of a graph's vertices, bit i standing for the vertex at index i.
using VertexSet = std::uint64_t;
inline constexpr unsigned kMaxVertices = 64;

inline VertexSet vbit(unsigned i) { return VertexSet{1} << i; }

// Ascending member indices.
std::vector<unsigned> vertex_members(VertexSet s);

// Canonical order on vertex sets: by size, then lexicographically by member ids.
bool vset_less(VertexSet a, VertexSet b);

// An element of SoS(V): pairwise inclusion-incomparable vertex sets, kept in
// canonical order so equality is plain vector equality.
class Antichain {
 public:
  // {} : no member sets (bottom).
  Antichain() = default;
  // {{}} : the single empty set (top).
  static Antichain top() { return Antichain(std::vector<VertexSet>{0}); }
  static Antichain bottom() { return {}; }
  static Antichain singleton(VertexSet s) { return Antichain(std::vector<VertexSet>{s}); }
  // min_incl of an arbitrary collection.
  static Antichain of(std::vector<VertexSet> sets);

  const std::vector<VertexSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool is_bottom() const { return sets_.empty(); }
  bool is_top() const { return sets_.size() == 1 && sets_[0] == 0; }
  // Union of all member sets.
  VertexSet support() const;

  friend bool operator==(const Antichain&, const Antichain&) = default;
  friend std::strong_ordering operator<=>(const Antichain& a, const Antichain& b);

 private:
  explicit Antichain(std::vector<VertexSet> canonical) : sets_(std::move(canonical)) {}
  std::vector<VertexSet> sets_;
};

Antichain min_incl(std::vector<VertexSet> sets);
Antichain join(const Antichain& a, const Antichain& b);
Antichain meet(const Antichain& a, const Antichain& b);
// Minimal hitting sets of a's members. The result does not depend on the
// universe as long as it covers a's support; the overload taking a universe
// checks that precondition.
Antichain complement(const Antichain& a);
Antichain complement(const Antichain& a, VertexSet universe);
bool leq(const Antichain& a, const Antichain& b);

// All antichains over `universe` (at most 5 members), in canonical order.
std::vector<Antichain> enumerate_sos(VertexSet universe);

using VertexNamer = std::function<std::string(unsigned)>;
std::string default_vertex_name(unsigned i);

std::string render(VertexSet s, const VertexNamer& name = default_vertex_name);
std::string render(const Antichain& a, const VertexNamer& name = default_vertex_name);

}  // namespace seqcal
