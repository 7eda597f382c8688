#include "seqcal/normalize.hpp"

#include <deque>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <variant>

#include "seqcal/error.hpp"
#include "seqcal/logic.hpp"

namespace seqcal {

ElabVertex vertex_plus(const BooleanGraph& g, const Antichain& aft, const Expr& be) {
  Antichain m = max_plus_logic(g, aft, {be});
  return {m, complement(m)};
}

namespace {

// Conjecture vertices are tagged so they can never collide with pairs.
struct ConjVertex {
  std::string name;
  friend bool operator==(const ConjVertex&, const ConjVertex&) = default;
  friend auto operator<=>(const ConjVertex& a, const ConjVertex& b) {
    return natural_compare(a.name, b.name);
  }
};

using NVertex = std::variant<ConjVertex, ElabVertex>;

struct WorkArc {
  std::size_t tail;
  Expr label;
  std::size_t head;
  bool alive = true;
};

class Normalizer {
 public:
  Normalizer(const BooleanGraph& g, const BooleanGraph& e, const NormalizeOptions& opt)
      : g_(g), e_(e), opt_(opt), namer_(g.namer()) {}

  Elaboration run(NormalizeStats& stats) {
    e_.dg.require_no_isolated(e_.namer());
    for (const std::string& atom : e_.ap.names())
      if (!g_.ap.contains(atom)) throw UndefinedAtomError(atom);

    // Steps 1 and 2: a fresh initial pair, with arcs out of the
    // conjecture's initial vertices moved onto it.
    init_ = vertex(ElabVertex::initial());
    terminal_pair_ = ElabVertex::terminal();
    for (std::size_t v = 0; v < e_.dg.vertex_count(); ++v) {
      std::size_t id = vertex(ConjVertex{e_.dg.vertex(v).name});
      conj_terminal_.resize(std::max(conj_terminal_.size(), id + 1), 0);
      conj_terminal_[id] = e_.dg.is_terminal(v);
    }
    for (const auto& a : e_.dg.arcs()) {
      std::size_t t = e_.dg.is_initial(a.tail) ? init_ : vertex(ConjVertex{e_.dg.vertex(a.tail).name});
      std::size_t h = vertex(ConjVertex{e_.dg.vertex(a.head).name});
      add_arc(t, a.label, h);
    }

    // Step 3.
    std::mt19937_64 rng(opt_.shuffle_seed.value_or(0));
    while (!pending_.empty()) {
      std::size_t pick = 0;
      if (opt_.shuffle_seed) pick = std::uniform_int_distribution<std::size_t>(0, pending_.size() - 1)(rng);
      std::size_t id = pending_[pick];
      pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(pick));
      if (!arcs_[id].alive) continue;
      process(id, stats);
      ++stats.iterations;
      if (opt_.trace) opt_.trace(stats.iterations, snapshot());
    }

    // Step 4.
    for (WorkArc& a : arcs_)
      if (a.alive && a.head == init_) a.alive = false;

    return prune_and_export();
  }

 private:
  bool is_pair(std::size_t v) const { return std::holds_alternative<ElabVertex>(verts_[v]); }
  const ElabVertex& pair(std::size_t v) const { return std::get<ElabVertex>(verts_[v]); }

  std::size_t vertex(const NVertex& v) {
    auto [it, inserted] = index_.emplace(v, verts_.size());
    if (inserted) verts_.push_back(v);
    return it->second;
  }

  // Adds the arc unless it was ever present before; pairs-to-conjecture arcs
  // join the worklist.
  bool add_arc(std::size_t t, const Expr& label, std::size_t h) {
    if (!history_.emplace(t, label.key(), h).second) return false;
    arcs_.push_back(WorkArc{t, label, h});
    if (is_pair(t) && !is_pair(h)) pending_.push_back(arcs_.size() - 1);
    return true;
  }

  const ElabVertex& plus(const Antichain& aft, const Expr& be) {
    auto key = std::make_pair(aft, be.key());
    auto it = plus_cache_.find(key);
    if (it == plus_cache_.end()) it = plus_cache_.emplace(key, vertex_plus(g_, aft, be)).first;
    return it->second;
  }

  void process(std::size_t id, NormalizeStats& stats) {
    WorkArc a = arcs_[id];
    ElabVertex vp = plus(pair(a.tail).fore, a.label);
    bool reaches_terminal = vp == terminal_pair_;
    if (conj_terminal_[a.head] && !reaches_terminal) {
      arcs_[id].alive = false;
      ++stats.deleted;
      return;
    }
    std::size_t np = vertex(vp);
    arcs_[id].alive = false;
    if (history_.emplace(a.tail, a.label.key(), np).second) arcs_.push_back(WorkArc{a.tail, a.label, np});
    else revive(a.tail, a.label, np);
    if (reaches_terminal) return;
    std::vector<std::size_t> outs;
    for (std::size_t j = 0; j < arcs_.size(); ++j)
      if (arcs_[j].alive && arcs_[j].tail == a.head) outs.push_back(j);
    for (std::size_t j : outs) {
      WorkArc o = arcs_[j];
      if (add_arc(np, o.label, o.head)) ++stats.copied;
    }
  }

  // An arc replaced earlier may be produced again by a replacement; the set
  // of arcs keeps a single live copy.
  void revive(std::size_t t, const Expr& label, std::size_t h) {
    for (WorkArc& w : arcs_)
      if (w.tail == t && w.head == h && w.label == label) {
        w.alive = true;
        return;
      }
  }

  std::string name_of(std::size_t v) const {
    if (is_pair(v)) return render(pair(v), namer_);
    return std::get<ConjVertex>(verts_[v]).name;
  }

  std::string snapshot() const {
    std::vector<std::string> lines;
    for (const WorkArc& a : arcs_)
      if (a.alive)
        lines.push_back("arc " + name_of(a.tail) + " -> " + name_of(a.head) + " : " + render(a.label));
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string& l : lines) out += l + "\n";
    return out;
  }

  Elaboration prune_and_export() const {
    std::size_t n = verts_.size();
    std::vector<std::vector<std::size_t>> fwd(n), back(n);
    for (const WorkArc& a : arcs_)
      if (a.alive) {
        fwd[a.tail].push_back(a.head);
        back[a.head].push_back(a.tail);
      }
    auto reach = [n](std::size_t from, const std::vector<std::vector<std::size_t>>& adj) {
      std::vector<char> seen(n, 0);
      std::vector<std::size_t> stack{from};
      seen[from] = 1;
      while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v])
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      return seen;
    };
    std::vector<char> from_init = reach(init_, fwd);
    std::vector<char> to_term(n, 0);
    if (auto it = index_.find(NVertex{terminal_pair_}); it != index_.end())
      to_term = reach(it->second, back);

    Elaboration out{g_.name.empty() ? "normalized" : g_.name + "-normalized", g_.ap, {}};
    std::set<ElabVertex> keep_v;
    std::vector<std::tuple<ElabVertex, Expr, ElabVertex>> keep_a;
    for (const WorkArc& a : arcs_) {
      if (!a.alive || !from_init[a.tail] || !to_term[a.head]) continue;
      if (!is_pair(a.tail) || !is_pair(a.head)) continue;
      keep_v.insert(pair(a.tail));
      keep_v.insert(pair(a.head));
      keep_a.emplace_back(pair(a.tail), a.label, pair(a.head));
    }
    std::sort(keep_a.begin(), keep_a.end());
    for (const ElabVertex& v : keep_v) out.dg.add_vertex(v);
    for (const auto& [t, l, h] : keep_a) out.dg.add_arc(t, l, h);
    return out;
  }

  const BooleanGraph& g_;
  const BooleanGraph& e_;
  const NormalizeOptions& opt_;
  VertexNamer namer_;

  std::vector<NVertex> verts_;
  std::map<NVertex, std::size_t> index_;
  std::vector<WorkArc> arcs_;
  std::set<std::tuple<std::size_t, std::string, std::size_t>> history_;
  std::vector<std::size_t> pending_;
  std::vector<char> conj_terminal_;
  std::map<std::pair<Antichain, std::string>, ElabVertex> plus_cache_;
  std::size_t init_ = 0;
  ElabVertex terminal_pair_;
};

}  // namespace

Elaboration normalize(const BooleanGraph& g, const BooleanGraph& e,
                      const NormalizeOptions& options, NormalizeStats* stats) {
  NormalizeStats local;
  Elaboration out = Normalizer(g, e, options).run(stats ? *stats : local);
  return out;
}

ElabCheck check_forwards_maximal(const Elaboration& e, const BooleanGraph& g) {
  ElabCheck c = check_elaboration_logic(e, g);
  if (!c.ok) return c;
  VertexNamer name = g.namer();
  for (const ElabVertex& v : e.dg.vertices())
    if (complement(v.aft) != v.fore)
      return ElabCheck{false, 6, "forwards-maximal: " + render(v, name) + " has ~aft != fore"};
  for (std::size_t id = 0; id < e.dg.arc_count(); ++id) {
    const auto& a = e.dg.arc(id);
    Antichain want = max_plus_logic(g, e.dg.vertex(a.tail).fore, {a.label});
    if (want != e.dg.vertex(a.head).aft)
      return ElabCheck{false, 7,
                       "forwards-maximal: arc " + std::to_string(id) + " lands on aft " +
                           render(e.dg.vertex(a.head).aft, name) + " but max+ is " +
                           render(want, name)};
  }
  return {};
}

bool is_forwards_maximal(const Elaboration& e, const BooleanGraph& g) {
  return check_forwards_maximal(e, g).ok;
}

}  // namespace seqcal
