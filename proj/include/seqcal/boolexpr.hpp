#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seqcal/state_set.hpp"

namespace seqcal {

// Boolean expression over atomic propositions. And/Or nodes are flattened on
// construction; equality and ordering use the flattened, child-sorted key,
// while rendering keeps the order the expression was built in.
class Expr {
 public:
  enum class Kind { kTrue, kFalse, kAtom, kNot, kAnd, kOr };

  Expr() : Expr(constant(true)) {}
  static Expr constant(bool value);
  static Expr atom(std::string name);
  static Expr negate(Expr e);
  // Zero children give true/false, one child is returned unchanged.
  static Expr conj(std::vector<Expr> children);
  static Expr disj(std::vector<Expr> children);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const std::vector<Expr>& children() const { return node_->children; }
  const std::string& key() const { return node_->key; }

  friend bool operator==(const Expr& a, const Expr& b) { return a.key() == b.key(); }
  friend std::strong_ordering operator<=>(const Expr& a, const Expr& b) {
    return a.key() <=> b.key();
  }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Expr> children;
    std::string key;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr make(Kind k, std::string name, std::vector<Expr> children);

  std::shared_ptr<const Node> node_;
};

Expr operator&(const Expr& a, const Expr& b);
Expr operator|(const Expr& a, const Expr& b);
Expr operator!(const Expr& a);

// Grammar: expr := or; or := and ('|' and)*; and := unary ('&' unary)*;
// unary := '!' unary | 'true' | 'false' | ident | '(' expr ')'.
// Columns in errors are offset by `column0 - 1`.
Expr parse_expr(std::string_view text, std::size_t line = 1, std::size_t column0 = 1);

// ASCII rendering in the parser's grammar.
std::string render(const Expr& e);
// Rendering after constant folding, with tautologies shown as true and
// contradictions as false. Display only; never used for equality.
std::string render_simplified(const Expr& e);
Expr simplify(const Expr& e);

// Atoms in order of first appearance.
std::vector<std::string> atoms_of(const Expr& e);

// The declared atomic propositions, in order.
class Props {
 public:
  Props() = default;
  explicit Props(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  bool contains(const std::string& atom) const { return index_.count(atom) != 0; }
  // Throws UndefinedAtomError.
  std::size_t index_of(const std::string& atom) const;
  // Number of truth assignments, 2^size. Throws SizeLimitError above 16 atoms.
  std::size_t state_count() const;

  friend bool operator==(const Props& a, const Props& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
};

bool is_identifier(std::string_view s);

// State numbering. Atoms are grouped in declared-order pairs; pair j reads
// two bits c of k at positions 2j..2j+1 in Gray order, so the first atom of
// the pair is c's high bit and the second is the XOR of both bits. A trailing
// unpaired atom reads a single bit. For AP = Q0 Q1 Reset Carry this yields
// the familiar 16-state table with Reset on s8..s15 and Carry on s4..s11.
bool atom_value(std::size_t state, std::size_t atom, std::size_t atom_count);
std::size_t state_of(const std::vector<bool>& values);
// The states where atom i is true.
StateSet atom_column(std::size_t atom, std::size_t atom_count);

using TruthAssignment = std::map<std::string, bool>;
TruthAssignment assignment_of(const Props& ap, std::size_t state);

// Throws UndefinedAtomError if an atom of e is missing from t.
bool eval(const Expr& e, const TruthAssignment& t);
bool eval(const Expr& e, const Props& ap, std::size_t state);

// Satisfying states among all 2^|ap| assignments.
StateSet denotation(const Expr& e, const Props& ap);
bool implies(const Expr& a, const Expr& b, const Props& ap);
bool equivalent(const Expr& a, const Expr& b, const Props& ap);

struct Literal {
  std::string atom;
  bool positive;
  friend bool operator==(const Literal&, const Literal&) = default;
};
using LiteralProduct = std::vector<Literal>;

// The literals of a conjunction of literals over distinct atoms; true is the empty
// product. Anything else yields nullopt.
std::optional<LiteralProduct> literal_product(const Expr& e);
Expr product_expr(const LiteralProduct& p);

struct Resolvent {
  Expr expr;
  std::string clash;
};
// Requires exactly one atom occurring positively in one product and
// negatively in the other; the result joins the remaining literals with
// repetitions dropped.
std::optional<Resolvent> boolean_resolvent(const LiteralProduct& p1, const LiteralProduct& p2);

}  // namespace seqcal
