#include "seqcal/regex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>

#include "seqcal/error.hpp"

namespace seqcal {

namespace {

struct Node {
  enum class Kind { kTerm, kSeq, kStar } kind;
  Expr term;
  std::vector<std::shared_ptr<Node>> parts;  // kSeq: factors, kStar: one child
};
using NodePtr = std::shared_ptr<Node>;

NodePtr seq(std::vector<NodePtr> parts) {
  if (parts.size() == 1) return parts[0];
  return std::make_shared<Node>(Node{Node::Kind::kSeq, {}, std::move(parts)});
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse() {
    NodePtr r = sequence();
    ws();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  NodePtr sequence() {
    std::vector<NodePtr> parts{factor()};
    while (accept(',')) parts.push_back(factor());
    return seq(std::move(parts));
  }

  NodePtr factor() {
    NodePtr f;
    if (accept('<')) {
      f = sequence();
      if (!accept('>')) fail("expected '>'");
    } else {
      f = term();
    }
    while (true) {
      if (accept('*')) {
        f = std::make_shared<Node>(Node{Node::Kind::kStar, {}, {f}});
      } else if (accept('^')) {
        ws();
        std::size_t b = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (b == i_) fail("expected a count after '^'");
        unsigned long n = std::stoul(std::string(s_.substr(b, i_ - b)));
        if (n == 0) fail("'^0' would denote the empty word", b);
        if (n > 64) fail("power too large", b);
        f = seq(std::vector<NodePtr>(n, f));
      } else {
        return f;
      }
    }
  }

  // An expression runs up to the next top-level ',', '>', '*' or '^'.
  NodePtr term() {
    ws();
    std::size_t b = i_;
    int depth = 0;
    while (i_ < s_.size()) {
      char c = s_[i_];
      if (c == '(') ++depth;
      else if (c == ')') --depth;
      else if (depth == 0 && (c == ',' || c == '>' || c == '*' || c == '^')) break;
      ++i_;
    }
    std::string_view text = s_.substr(b, i_ - b);
    if (std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }))
      fail("expected an expression", b);
    return std::make_shared<Node>(Node{Node::Kind::kTerm, parse_expr(text, 1, b + 1), {}});
  }

  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, i_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, 1, at + 1);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

// Glushkov construction: one position per term occurrence.
struct Glushkov {
  std::vector<Expr> label;  // by position
  std::set<std::pair<std::size_t, std::size_t>> follow;

  struct Info {
    bool nullable;
    std::vector<std::size_t> first, last;
  };

  Info walk(const Node& n) {
    switch (n.kind) {
      case Node::Kind::kTerm: {
        label.push_back(n.term);
        std::size_t p = label.size() - 1;
        return {false, {p}, {p}};
      }
      case Node::Kind::kStar: {
        Info c = walk(*n.parts[0]);
        for (std::size_t a : c.last)
          for (std::size_t b : c.first) follow.emplace(a, b);
        return {true, c.first, c.last};
      }
      case Node::Kind::kSeq: {
        Info acc{true, {}, {}};
        for (const NodePtr& part : n.parts) {
          Info c = walk(*part);
          for (std::size_t a : acc.last)
            for (std::size_t b : c.first) follow.emplace(a, b);
          if (acc.nullable) acc.first.insert(acc.first.end(), c.first.begin(), c.first.end());
          if (c.nullable) acc.last.insert(acc.last.end(), c.last.begin(), c.last.end());
          else acc.last = c.last;
          acc.nullable = acc.nullable && c.nullable;
        }
        return acc;
      }
    }
    return {};
  }
};

bool nullable(const Node& n) {
  switch (n.kind) {
    case Node::Kind::kTerm: return false;
    case Node::Kind::kStar: return true;
    case Node::Kind::kSeq:
      return std::all_of(n.parts.begin(), n.parts.end(), [](const NodePtr& p) { return nullable(*p); });
  }
  return false;
}

std::set<BoolWord> expand(const Node& n, std::size_t max_len) {
  switch (n.kind) {
    case Node::Kind::kTerm:
      if (max_len == 0) return {};
      return {BoolWord{n.term}};
    case Node::Kind::kSeq: {
      std::set<BoolWord> acc{BoolWord{}};
      for (const NodePtr& part : n.parts) {
        std::set<BoolWord> next;
        std::set<BoolWord> piece = expand(*part, max_len);
        if (nullable(*part)) piece.insert(BoolWord{});
        for (const BoolWord& a : acc)
          for (const BoolWord& b : piece)
            if (a.size() + b.size() <= max_len) {
              BoolWord w = a;
              w.insert(w.end(), b.begin(), b.end());
              next.insert(std::move(w));
            }
        acc = std::move(next);
      }
      return acc;
    }
    case Node::Kind::kStar: {
      std::set<BoolWord> body = expand(*n.parts[0], max_len);
      body.erase(BoolWord{});
      std::set<BoolWord> acc{BoolWord{}};
      std::set<BoolWord> frontier = acc;
      while (!frontier.empty()) {
        std::set<BoolWord> next;
        for (const BoolWord& a : frontier)
          for (const BoolWord& b : body)
            if (a.size() + b.size() <= max_len) {
              BoolWord w = a;
              w.insert(w.end(), b.begin(), b.end());
              if (acc.insert(w).second) next.insert(std::move(w));
            }
        frontier = std::move(next);
      }
      return acc;
    }
  }
  return {};
}

}  // namespace

BooleanGraph compile_regex(std::string_view regex, const Props& ap, std::string name) {
  NodePtr root = Parser(regex).parse();
  Glushkov gl;
  Glushkov::Info info = gl.walk(*root);
  for (const Expr& e : gl.label)
    for (const std::string& atom : atoms_of(e))
      if (!ap.contains(atom)) throw UndefinedAtomError(atom);

  // Raw graph: 0 = init, 1..m = positions, m+1 = term.
  std::size_t m = gl.label.size();
  std::size_t term = m + 1;
  std::vector<std::tuple<std::size_t, Expr, std::size_t>> raw;
  std::set<std::size_t> last(info.last.begin(), info.last.end());
  for (std::size_t p : info.first) {
    raw.emplace_back(0, gl.label[p], p + 1);
    if (last.count(p)) raw.emplace_back(0, gl.label[p], term);
  }
  for (const auto& [p, q] : gl.follow) {
    raw.emplace_back(p + 1, gl.label[q], q + 1);
    if (last.count(q)) raw.emplace_back(p + 1, gl.label[q], term);
  }

  // Keep what lies on an init-to-term path.
  std::vector<std::vector<std::size_t>> fwd(m + 2), back(m + 2);
  for (const auto& [t, l, h] : raw) {
    fwd[t].push_back(h);
    back[h].push_back(t);
  }
  auto reach = [&](std::size_t from, const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<char> seen(m + 2, 0);
    std::vector<std::size_t> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v])
        if (!seen[w]) seen[w] = 1, stack.push_back(w);
    }
    return seen;
  };
  std::vector<char> a = reach(0, fwd), b = reach(term, back);
  std::map<std::size_t, std::string> names;
  std::size_t next = 0;
  for (std::size_t v = 0; v <= term; ++v)
    if (a[v] && b[v]) names[v] = "v" + std::to_string(next++);
  std::vector<ArcSpec> arcs;
  for (const auto& [t, l, h] : raw)
    if (names.count(t) && names.count(h)) arcs.emplace_back(names[t], l, names[h]);
  return make_boolean_graph(std::move(name), ap, arcs);
}

std::vector<BoolWord> expand_regex(std::string_view regex, std::size_t max_len) {
  NodePtr root = Parser(regex).parse();
  std::set<BoolWord> words = expand(*root, max_len);
  words.erase(BoolWord{});
  std::vector<BoolWord> out(words.begin(), words.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const BoolWord& x, const BoolWord& y) { return x.size() < y.size(); });
  return out;
}

}  // namespace seqcal
