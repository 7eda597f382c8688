#include "seqcal/sos.hpp"

#include <algorithm>
#include <bit>

#include "seqcal/error.hpp"

namespace seqcal {

std::vector<unsigned> vertex_members(VertexSet s) {
  std::vector<unsigned> out;
  while (s) {
    out.push_back(static_cast<unsigned>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

bool vset_less(VertexSet a, VertexSet b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  // Same size: the lowest differing member belongs to the smaller set.
  VertexSet diff = a ^ b;
  return (a & diff & (~diff + 1)) != 0;
}

VertexSet Antichain::support() const {
  VertexSet u = 0;
  for (VertexSet s : sets_) u |= s;
  return u;
}

Antichain Antichain::of(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), vset_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // Sorted by size, so any proper subset of a set appears before it.
  std::vector<VertexSet> keep;
  keep.reserve(sets.size());
  for (VertexSet s : sets) {
    bool dominated = std::any_of(keep.begin(), keep.end(),
                                 [s](VertexSet k) { return (k & s) == k; });
    if (!dominated) keep.push_back(s);
  }
  return Antichain(std::move(keep));
}

std::strong_ordering operator<=>(const Antichain& a, const Antichain& b) {
  std::size_t n = std::min(a.sets_.size(), b.sets_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.sets_[i] == b.sets_[i]) continue;
    return vset_less(a.sets_[i], b.sets_[i]) ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
  }
  return a.sets_.size() <=> b.sets_.size();
}

Antichain min_incl(std::vector<VertexSet> sets) { return Antichain::of(std::move(sets)); }

Antichain join(const Antichain& a, const Antichain& b) {
  std::vector<VertexSet> all = a.sets();
  all.insert(all.end(), b.sets().begin(), b.sets().end());
  return min_incl(std::move(all));
}

Antichain meet(const Antichain& a, const Antichain& b) {
  std::vector<VertexSet> all;
  all.reserve(a.size() * b.size());
  for (VertexSet x : a.sets())
    for (VertexSet y : b.sets()) all.push_back(x | y);
  return min_incl(std::move(all));
}

namespace {

// Branch on the members of the smallest unhit set; each branch commits one
// vertex and drops every set it hits.
void hitting_sets(const std::vector<VertexSet>& sets, VertexSet chosen,
                  std::vector<VertexSet>& out) {
  const VertexSet* pick = nullptr;
  for (const VertexSet& s : sets) {
    if (s & chosen) continue;
    if (pick == nullptr || std::popcount(s) < std::popcount(*pick)) pick = &s;
  }
  if (pick == nullptr) {
    out.push_back(chosen);
    return;
  }
  for (unsigned v : vertex_members(*pick)) hitting_sets(sets, chosen | vbit(v), out);
}

}  // namespace

Antichain complement(const Antichain& a) {
  if (a.is_bottom()) return Antichain::top();
  if (a.is_top()) return Antichain::bottom();
  std::vector<VertexSet> out;
  hitting_sets(a.sets(), 0, out);
  return min_incl(std::move(out));
}

Antichain complement(const Antichain& a, VertexSet universe) {
  if ((a.support() & ~universe) != 0) throw Error("antichain member outside the universe");
  return complement(a);
}

bool leq(const Antichain& a, const Antichain& b) {
  for (VertexSet x : a.sets()) {
    bool found = std::any_of(b.sets().begin(), b.sets().end(),
                             [x](VertexSet y) { return (y & x) == y; });
    if (!found) return false;
  }
  return true;
}

std::vector<Antichain> enumerate_sos(VertexSet universe) {
  if (std::popcount(universe) > 5)
    throw SizeLimitError("enumerate_sos is limited to universes of at most 5 vertices");
  std::vector<VertexSet> subsets;
  for (VertexSet s = universe;; s = (s - 1) & universe) {
    subsets.push_back(s);
    if (s == 0) break;
  }
  std::sort(subsets.begin(), subsets.end(), vset_less);

  std::vector<Antichain> out;
  std::vector<VertexSet> chosen;
  // Each subset is either left out or added when incomparable with all
  // chosen ones, which reaches every antichain exactly once.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == subsets.size()) {
      out.push_back(Antichain::of(chosen));
      return;
    }
    self(self, i + 1);
    VertexSet s = subsets[i];
    bool ok = std::none_of(chosen.begin(), chosen.end(), [s](VertexSet c) {
      return (c & s) == c || (c & s) == s;
    });
    if (ok) {
      chosen.push_back(s);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string default_vertex_name(unsigned i) { return "v" + std::to_string(i); }

std::string render(VertexSet s, const VertexNamer& name) {
  std::string out = "{";
  bool first = true;
  for (unsigned v : vertex_members(s)) {
    if (!first) out += ',';
    first = false;
    out += name(v);
  }
  return out + "}";
}

std::string render(const Antichain& a, const VertexNamer& name) {
  std::string out = "{";
  bool first = true;
  for (VertexSet s : a.sets()) {
    if (!first) out += ',';
    first = false;
    out += render(s, name);
  }
  return out + "}";
}

}  // namespace seqcal
