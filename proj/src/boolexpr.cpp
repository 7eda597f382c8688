#include "seqcal/boolexpr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "seqcal/error.hpp"

namespace seqcal {

Expr Expr::make(Kind k, std::string name, std::vector<Expr> children) {
  std::string key;
  switch (k) {
    case Kind::kTrue: key = "1"; break;
    case Kind::kFalse: key = "0"; break;
    case Kind::kAtom: key = "a" + name; break;
    case Kind::kNot: key = "!" + children[0].key(); break;
    case Kind::kAnd:
    case Kind::kOr: {
      std::vector<const std::string*> keys;
      for (const Expr& c : children) keys.push_back(&c.key());
      std::sort(keys.begin(), keys.end(), [](auto* a, auto* b) { return *a < *b; });
      key = k == Kind::kAnd ? "&(" : "|(";
      for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) key += ',';
        key += *keys[i];
      }
      key += ')';
      break;
    }
  }
  return Expr(std::make_shared<const Node>(Node{k, std::move(name), std::move(children),
                                                std::move(key)}));
}

Expr Expr::constant(bool value) { return make(value ? Kind::kTrue : Kind::kFalse, {}, {}); }

Expr Expr::atom(std::string name) {
  if (!is_identifier(name) || name == "true" || name == "false")
    throw Error("invalid atom name '" + name + "'");
  return make(Kind::kAtom, std::move(name), {});
}

Expr Expr::negate(Expr e) { return make(Kind::kNot, {}, {std::move(e)}); }

namespace {

std::vector<Expr> flatten(Expr::Kind k, std::vector<Expr> children) {
  std::vector<Expr> out;
  for (Expr& c : children) {
    if (c.kind() == k)
      out.insert(out.end(), c.children().begin(), c.children().end());
    else
      out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Expr Expr::conj(std::vector<Expr> children) {
  children = flatten(Kind::kAnd, std::move(children));
  if (children.empty()) return constant(true);
  if (children.size() == 1) return children[0];
  return make(Kind::kAnd, {}, std::move(children));
}

Expr Expr::disj(std::vector<Expr> children) {
  children = flatten(Kind::kOr, std::move(children));
  if (children.empty()) return constant(false);
  if (children.size() == 1) return children[0];
  return make(Kind::kOr, {}, std::move(children));
}

Expr operator&(const Expr& a, const Expr& b) { return Expr::conj({a, b}); }
Expr operator|(const Expr& a, const Expr& b) { return Expr::disj({a, b}); }
Expr operator!(const Expr& a) { return Expr::negate(a); }

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

// ---- parsing ---------------------------------------------------------------

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t line, std::size_t column0)
      : s_(text), line_(line), col0_(column0) {}

  Expr parse() {
    Expr e = parse_or();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, col0_ + pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_or() {
    std::vector<Expr> parts{parse_and()};
    while (eat('|')) parts.push_back(parse_and());
    return Expr::disj(std::move(parts));
  }

  Expr parse_and() {
    std::vector<Expr> parts{parse_unary()};
    while (eat('&')) parts.push_back(parse_unary());
    return Expr::conj(std::move(parts));
  }

  Expr parse_unary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected an expression");
    char c = s_[pos_];
    if (c == '!') {
      ++pos_;
      return Expr::negate(parse_unary());
    }
    if (c == '(') {
      ++pos_;
      Expr e = parse_or();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string id(s_.substr(start, pos_ - start));
      if (id == "true") return Expr::constant(true);
      if (id == "false") return Expr::constant(false);
      return Expr::atom(std::move(id));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t line_;
  std::size_t col0_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text, std::size_t line, std::size_t column0) {
  return ExprParser(text, line, column0).parse();
}

// ---- rendering -------------------------------------------------------------

namespace {

void render_into(const Expr& e, std::string& out) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::kTrue: out += "true"; return;
    case K::kFalse: out += "false"; return;
    case K::kAtom: out += e.name(); return;
    case K::kNot: {
      const Expr& c = e.children()[0];
      bool wrap = c.kind() == K::kAnd || c.kind() == K::kOr;
      out += '!';
      if (wrap) out += '(';
      render_into(c, out);
      if (wrap) out += ')';
      return;
    }
    case K::kAnd:
    case K::kOr: {
      const char* op = e.kind() == K::kAnd ? " & " : " | ";
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        if (i) out += op;
        const Expr& c = e.children()[i];
        // And under Or is parenthesised too; not needed for parsing but it
        // reads the way sums of products are usually written.
        bool wrap = c.kind() == K::kAnd || c.kind() == K::kOr;
        if (wrap) out += '(';
        render_into(c, out);
        if (wrap) out += ')';
      }
      return;
    }
  }
}

}  // namespace

std::string render(const Expr& e) {
  std::string out;
  render_into(e, out);
  return out;
}

namespace {

Expr fold(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::kTrue:
    case K::kFalse:
    case K::kAtom: return e;
    case K::kNot: {
      Expr c = fold(e.children()[0]);
      if (c.kind() == K::kTrue) return Expr::constant(false);
      if (c.kind() == K::kFalse) return Expr::constant(true);
      if (c.kind() == K::kNot) return c.children()[0];
      return Expr::negate(c);
    }
    case K::kAnd:
    case K::kOr: {
      bool is_and = e.kind() == K::kAnd;
      K absorbing = is_and ? K::kFalse : K::kTrue;
      K neutral = is_and ? K::kTrue : K::kFalse;
      std::vector<Expr> kept;
      for (const Expr& c0 : e.children()) {
        Expr c = fold(c0);
        if (c.kind() == absorbing) return c;
        if (c.kind() == neutral) continue;
        if (std::find(kept.begin(), kept.end(), c) == kept.end()) kept.push_back(c);
      }
      return is_and ? Expr::conj(std::move(kept)) : Expr::disj(std::move(kept));
    }
  }
  return e;
}

}  // namespace

Expr simplify(const Expr& e) {
  Expr f = fold(e);
  std::vector<std::string> atoms = atoms_of(f);
  if (atoms.size() <= 16) {
    Props local(atoms);
    StateSet d = denotation(f, local);
    if (d.count() == d.universe()) return Expr::constant(true);
    if (d.empty()) return Expr::constant(false);
  }
  return f;
}

std::string render_simplified(const Expr& e) { return render(simplify(e)); }

std::vector<std::string> atoms_of(const Expr& e) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  auto rec = [&](auto&& self, const Expr& x) -> void {
    if (x.kind() == Expr::Kind::kAtom) {
      if (seen.insert(x.name()).second) out.push_back(x.name());
      return;
    }
    for (const Expr& c : x.children()) self(self, c);
  };
  rec(rec, e);
  return out;
}

// ---- propositions and states -----------------------------------------------

Props::Props(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const std::string& n = names_[i];
    if (!is_identifier(n) || n == "true" || n == "false")
      throw Error("invalid atom name '" + n + "'");
    if (!index_.emplace(n, i).second) throw Error("atom '" + n + "' declared twice");
  }
}

std::size_t Props::index_of(const std::string& atom) const {
  auto it = index_.find(atom);
  if (it == index_.end()) throw UndefinedAtomError(atom);
  return it->second;
}

std::size_t Props::state_count() const {
  if (names_.size() > 16)
    throw SizeLimitError("at most 16 atomic propositions can be enumerated, got " +
                         std::to_string(names_.size()));
  return std::size_t{1} << names_.size();
}

bool atom_value(std::size_t state, std::size_t atom, std::size_t atom_count) {
  std::size_t pair = atom / 2;
  if (atom + 1 == atom_count && atom_count % 2 == 1) return (state >> (2 * pair)) & 1u;
  std::size_t c = (state >> (2 * pair)) & 3u;
  std::size_t hi = c >> 1;
  return atom % 2 == 0 ? hi != 0 : (hi ^ (c & 1u)) != 0;
}

std::size_t state_of(const std::vector<bool>& values) {
  std::size_t n = values.size();
  std::size_t k = 0;
  for (std::size_t pair = 0; 2 * pair < n; ++pair) {
    std::size_t a = 2 * pair;
    if (a + 1 == n) {
      k |= std::size_t{values[a]} << a;
      break;
    }
    std::size_t hi = values[a], lo = values[a] ^ values[a + 1];
    k |= ((hi << 1) | lo) << a;
  }
  return k;
}

StateSet atom_column(std::size_t atom, std::size_t atom_count) {
  std::size_t n = std::size_t{1} << atom_count;
  StateSet s(n);
  for (std::size_t k = 0; k < n; ++k)
    if (atom_value(k, atom, atom_count)) s.set(k);
  return s;
}

TruthAssignment assignment_of(const Props& ap, std::size_t state) {
  TruthAssignment t;
  for (std::size_t i = 0; i < ap.size(); ++i) t[ap.name(i)] = atom_value(state, i, ap.size());
  return t;
}

bool eval(const Expr& e, const TruthAssignment& t) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::kTrue: return true;
    case K::kFalse: return false;
    case K::kAtom: {
      auto it = t.find(e.name());
      if (it == t.end()) throw UndefinedAtomError(e.name());
      return it->second;
    }
    case K::kNot: return !eval(e.children()[0], t);
    case K::kAnd:
      return std::all_of(e.children().begin(), e.children().end(),
                         [&](const Expr& c) { return eval(c, t); });
    case K::kOr:
      return std::any_of(e.children().begin(), e.children().end(),
                         [&](const Expr& c) { return eval(c, t); });
  }
  return false;
}

bool eval(const Expr& e, const Props& ap, std::size_t state) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::kTrue: return true;
    case K::kFalse: return false;
    case K::kAtom: return atom_value(state, ap.index_of(e.name()), ap.size());
    case K::kNot: return !eval(e.children()[0], ap, state);
    case K::kAnd:
      return std::all_of(e.children().begin(), e.children().end(),
                         [&](const Expr& c) { return eval(c, ap, state); });
    case K::kOr:
      return std::any_of(e.children().begin(), e.children().end(),
                         [&](const Expr& c) { return eval(c, ap, state); });
  }
  return false;
}

namespace {

StateSet denote(const Expr& e, const Props& ap, std::size_t n) {
  using K = Expr::Kind;
  switch (e.kind()) {
    case K::kTrue: return StateSet::full(n);
    case K::kFalse: return StateSet(n);
    case K::kAtom: return atom_column(ap.index_of(e.name()), ap.size());
    case K::kNot: return ~denote(e.children()[0], ap, n);
    case K::kAnd: {
      StateSet acc = StateSet::full(n);
      for (const Expr& c : e.children()) acc &= denote(c, ap, n);
      return acc;
    }
    case K::kOr: {
      StateSet acc(n);
      for (const Expr& c : e.children()) acc |= denote(c, ap, n);
      return acc;
    }
  }
  return StateSet(n);
}

}  // namespace

StateSet denotation(const Expr& e, const Props& ap) {
  return denote(e, ap, ap.state_count());
}

bool implies(const Expr& a, const Expr& b, const Props& ap) {
  return denotation(a, ap).subset_of(denotation(b, ap));
}

bool equivalent(const Expr& a, const Expr& b, const Props& ap) {
  return denotation(a, ap) == denotation(b, ap);
}

// ---- literal products ------------------------------------------------------

namespace {

std::optional<Literal> as_literal(const Expr& e) {
  if (e.kind() == Expr::Kind::kAtom) return Literal{e.name(), true};
  if (e.kind() == Expr::Kind::kNot && e.children()[0].kind() == Expr::Kind::kAtom)
    return Literal{e.children()[0].name(), false};
  return std::nullopt;
}

}  // namespace

std::optional<LiteralProduct> literal_product(const Expr& e) {
  if (e.kind() == Expr::Kind::kTrue) return LiteralProduct{};
  if (auto l = as_literal(e)) return LiteralProduct{*l};
  if (e.kind() != Expr::Kind::kAnd) return std::nullopt;
  LiteralProduct out;
  for (const Expr& c : e.children()) {
    auto l = as_literal(c);
    if (!l) return std::nullopt;
    // A repeated atom, same sign or not, is not a literal product; x & !x resolved
    // on x would otherwise yield true.
    for (const Literal& o : out)
      if (o.atom == l->atom) return std::nullopt;
    out.push_back(*l);
  }
  return out;
}

Expr product_expr(const LiteralProduct& p) {
  std::vector<Expr> parts;
  for (const Literal& l : p) {
    Expr a = Expr::atom(l.atom);
    parts.push_back(l.positive ? a : Expr::negate(a));
  }
  return Expr::conj(std::move(parts));
}

std::optional<Resolvent> boolean_resolvent(const LiteralProduct& p1, const LiteralProduct& p2) {
  std::vector<std::string> clashes;
  for (const Literal& a : p1)
    for (const Literal& b : p2)
      if (a.atom == b.atom && a.positive != b.positive &&
          std::find(clashes.begin(), clashes.end(), a.atom) == clashes.end())
        clashes.push_back(a.atom);
  if (clashes.size() != 1) return std::nullopt;

  LiteralProduct rest;
  for (const LiteralProduct* p : {&p1, &p2})
    for (const Literal& l : *p)
      if (l.atom != clashes[0] && std::find(rest.begin(), rest.end(), l) == rest.end())
        rest.push_back(l);
  return Resolvent{product_expr(rest), clashes[0]};
}

}  // namespace seqcal
