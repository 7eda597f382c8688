#include "seqcal/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "seqcal/error.hpp"

namespace seqcal {

namespace {

struct Line {
  std::size_t number;
  std::string_view text;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back({number, line});
    if (text.empty()) break;
  }
  return out;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

std::string_view trim(std::string_view s) {
  std::size_t b = skip_space(s, 0);
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Splits off the leading keyword; `rest_col` is the 0-based offset of rest.
std::string_view keyword(std::string_view line, std::string_view& rest, std::size_t& rest_col) {
  std::size_t b = skip_space(line, 0);
  std::size_t e = b;
  while (e < line.size() && !std::isspace(static_cast<unsigned char>(line[e]))) ++e;
  rest_col = skip_space(line, e);
  rest = line.substr(rest_col);
  return line.substr(b, e - b);
}

std::vector<std::string> words_of(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

struct RawArc {
  std::string tail, head;
  Expr label;
  std::size_t line;
  std::size_t tail_col, head_col;
};

struct RawDoc {
  std::string kind;  // graph or elaboration
  std::string name;
  std::vector<std::string> atoms;
  bool have_props = false;
  std::vector<std::pair<std::string, std::size_t>> vertices;
  std::vector<RawArc> arcs;
};

RawDoc parse_raw(std::string_view text) {
  RawDoc doc;
  for (const Line& l : split_lines(text)) {
    if (blank(l.text)) continue;
    std::string_view rest;
    std::size_t rest_col = 0;
    std::string_view kw = keyword(l.text, rest, rest_col);
    auto fail = [&](const std::string& msg, std::size_t col) { throw ParseError(msg, l.number, col + 1); };
    if (kw == "graph" || kw == "elaboration") {
      if (!doc.kind.empty()) fail("duplicate header", 0);
      auto w = words_of(rest);
      if (w.size() != 1) fail("expected '" + std::string(kw) + " <name>'", rest_col);
      doc.kind = kw;
      doc.name = w[0];
    } else if (kw == "base") {
      // informational: the system graph this elaboration was built over
    } else if (kw == "props") {
      if (doc.have_props) fail("duplicate props line", 0);
      doc.have_props = true;
      doc.atoms = words_of(rest);
      for (const std::string& a : doc.atoms)
        if (!is_identifier(a) || a == "true" || a == "false") fail("invalid atom name '" + a + "'", rest_col);
    } else if (kw == "vertex") {
      std::string_view v = trim(rest);
      if (v.empty()) fail("expected a vertex", rest_col);
      doc.vertices.emplace_back(std::string(v), l.number);
    } else if (kw == "arc") {
      std::size_t arrow = rest.find("->");
      if (arrow == std::string_view::npos) fail("expected '->'", rest_col);
      std::size_t colon = rest.find(':', arrow);
      if (colon == std::string_view::npos) fail("expected ':' before the label", rest_col + arrow);
      RawArc a;
      a.tail = std::string(trim(rest.substr(0, arrow)));
      a.head = std::string(trim(rest.substr(arrow + 2, colon - arrow - 2)));
      a.tail_col = rest_col + 1;
      a.head_col = rest_col + skip_space(rest, arrow + 2) + 1;
      if (a.tail.empty()) fail("missing tail vertex", rest_col);
      if (a.head.empty()) fail("missing head vertex", rest_col + arrow + 2);
      a.label = parse_expr(rest.substr(colon + 1), l.number, rest_col + colon + 2);
      a.line = l.number;
      doc.arcs.push_back(std::move(a));
    } else {
      fail("unknown directive '" + std::string(kw) + "'", l.text.find(kw));
    }
  }
  if (doc.kind.empty()) throw ParseError("missing 'graph <name>' header", 1, 1);
  if (!doc.have_props) throw ParseError("missing 'props' line", 1, 1);
  return doc;
}

void check_atoms(const RawArc& a, const Props& ap) {
  for (const std::string& atom : atoms_of(a.label))
    if (!ap.contains(atom)) throw ParseError("undeclared atom '" + atom + "'", a.line, 1);
}

std::string header(const std::string& kind, const std::string& name, const Props& ap) {
  std::string out = kind + " " + (name.empty() ? std::string("unnamed") : name) + "\nprops";
  for (const std::string& a : ap.names()) out += " " + a;
  return out + "\n";
}

// Minimal cursor for antichain literals.
class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}
  void ws() { i_ = skip_space(s_, i_); }
  bool peek(char c) {
    ws();
    return i_ < s_.size() && s_[i_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  std::string name() {
    ws();
    std::size_t b = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '.')) ++i_;
    if (b == i_) fail("expected a vertex name");
    return std::string(s_.substr(b, i_ - b));
  }
  bool done() {
    ws();
    return i_ == s_.size();
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, i_ + 1); }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

Antichain antichain_at(Cursor& c, const BooleanGraph& base) {
  c.expect('{');
  std::vector<VertexSet> sets;
  if (!c.accept('}')) {
    do {
      c.expect('{');
      VertexSet s = 0;
      if (!c.accept('}')) {
        do {
          std::string n = c.name();
          auto idx = base.dg.find(VertexId{n});
          if (!idx) c.fail("unknown vertex '" + n + "'");
          if (*idx >= kMaxVertices) throw SizeLimitError("vertex index past 64");
          s |= vbit(static_cast<unsigned>(*idx));
        } while (c.accept(','));
        c.expect('}');
      }
      sets.push_back(s);
    } while (c.accept(','));
    c.expect('}');
  }
  return Antichain::of(std::move(sets));
}

ElabVertex elab_vertex_at(Cursor& c, const BooleanGraph& base) {
  c.expect('<');
  Antichain aft = antichain_at(c, base);
  c.expect(',');
  Antichain fore = antichain_at(c, base);
  c.expect('>');
  return {aft, fore};
}

template <class Fn>
auto relocate(std::size_t line, std::size_t col, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    std::string msg = e.what();
    msg = msg.substr(msg.find(": ") + 2);
    throw ParseError(msg, line, col + e.column() - 1);
  }
}

}  // namespace

bool is_elaboration_document(std::string_view text) {
  for (const Line& l : split_lines(text)) {
    if (blank(l.text)) continue;
    std::string_view rest;
    std::size_t col = 0;
    std::string_view kw = keyword(l.text, rest, col);
    if (kw == "graph" || kw == "elaboration") return kw == "elaboration";
  }
  return false;
}

BooleanGraph parse_graph(std::string_view text, std::vector<std::string>* warnings) {
  RawDoc doc = parse_raw(text);
  if (doc.kind != "graph") throw ParseError("expected a 'graph' document", 1, 1);
  Props ap(doc.atoms);
  std::vector<ArcSpec> specs;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (const RawArc& a : doc.arcs) {
    check_atoms(a, ap);
    for (const auto& [v, col] : {std::pair{a.tail, a.tail_col}, std::pair{a.head, a.head_col}})
      if (!std::all_of(v.begin(), v.end(), [](unsigned char ch) {
            return std::isalnum(ch) || ch == '_' || ch == '.';
          }))
        throw ParseError("invalid vertex name '" + v + "'", a.line, col);
    if (!seen.emplace(a.tail, a.label.key(), a.head).second) {
      if (warnings) warnings->push_back("line " + std::to_string(a.line) + ": duplicate arc dropped");
      continue;
    }
    specs.emplace_back(a.tail, a.label, a.head);
  }
  std::vector<std::string> extra;
  for (const auto& [v, line] : doc.vertices) extra.push_back(v);
  return make_boolean_graph(doc.name, std::move(ap), specs, extra);
}

std::string render_graph(const BooleanGraph& g) {
  std::string out = header("graph", g.name, g.ap);
  for (std::size_t v = 0; v < g.dg.vertex_count(); ++v)
    if (g.dg.classify(v) == VertexKind::kIsolated) out += "vertex " + g.dg.vertex(v).name + "\n";
  for (const auto& a : g.dg.arcs())
    out += "arc " + g.dg.vertex(a.tail).name + " -> " + g.dg.vertex(a.head).name + " : " +
           render(a.label) + "\n";
  return out;
}

Elaboration parse_elaboration(std::string_view text, const BooleanGraph& base,
                              std::vector<std::string>* warnings) {
  RawDoc doc = parse_raw(text);
  if (doc.kind != "elaboration") throw ParseError("expected an 'elaboration' document", 1, 1);
  Elaboration e{doc.name, Props(doc.atoms), {}};
  for (const auto& [v, line] : doc.vertices)
    e.dg.add_vertex(relocate(line, 8, [&] { return parse_elab_vertex(v, base); }));
  for (const RawArc& a : doc.arcs) {
    check_atoms(a, e.ap);
    ElabVertex t = relocate(a.line, a.tail_col, [&] { return parse_elab_vertex(a.tail, base); });
    ElabVertex h = relocate(a.line, a.head_col, [&] { return parse_elab_vertex(a.head, base); });
    std::size_t ti = e.dg.add_vertex(t);
    std::size_t hi = e.dg.add_vertex(h);
    std::size_t before = e.dg.arc_count();
    e.dg.add_arc(ti, a.label, hi);
    if (e.dg.arc_count() == before && warnings)
      warnings->push_back("line " + std::to_string(a.line) + ": duplicate arc dropped");
  }
  return e;
}

std::string render_elaboration(const Elaboration& e, const BooleanGraph& base) {
  VertexNamer name = base.namer();
  std::string out = header("elaboration", e.name, e.ap);
  if (!base.name.empty()) out.insert(out.find('\n') + 1, "base " + base.name + "\n");
  for (std::size_t v = 0; v < e.dg.vertex_count(); ++v)
    if (e.dg.classify(v) == VertexKind::kIsolated) out += "vertex " + render(e.dg.vertex(v), name) + "\n";
  for (const auto& a : e.dg.arcs())
    out += "arc " + render(e.dg.vertex(a.tail), name) + " -> " + render(e.dg.vertex(a.head), name) +
           " : " + render(a.label) + "\n";
  return out;
}

Antichain parse_antichain(std::string_view text, const BooleanGraph& base) {
  Cursor c(text);
  Antichain a = antichain_at(c, base);
  if (!c.done()) c.fail("trailing text after antichain");
  return a;
}

ElabVertex parse_elab_vertex(std::string_view text, const BooleanGraph& base) {
  Cursor c(text);
  ElabVertex v = elab_vertex_at(c, base);
  if (!c.done()) c.fail("trailing text after vertex");
  return v;
}

BoolWord parse_word(std::string_view text) {
  if (blank(text)) throw EmptyWordError();
  BoolWord w;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = text.find(';', start);
    std::string_view piece = text.substr(start, semi == std::string_view::npos ? semi : semi - start);
    if (blank(piece)) throw ParseError("empty term in word", 1, start + 1);
    w.push_back(parse_expr(piece, 1, start + 1));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return w;
}

std::string render_word_cli(const BoolWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " ; " : "") + render(w[i]);
  return out;
}

std::vector<ResolutionStep> parse_replay(std::string_view text) {
  std::vector<ResolutionStep> steps;
  for (const Line& l : split_lines(text)) {
    if (blank(l.text)) continue;
    auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, l.number, 1); };
    auto w = words_of(l.text);
    ResolutionStep s;
    if (w[0] == "boolean") s.mode = ResolutionMode::kBoolean;
    else if (w[0] == "disjunctive") s.mode = ResolutionMode::kDisjunctive;
    else fail("expected 'boolean' or 'disjunctive'");
    bool have_k = false;
    for (std::size_t i = 1; i < w.size(); ++i) {
      std::size_t eq = w[i].find('=');
      if (eq == std::string::npos) fail("expected key=value, got '" + w[i] + "'");
      std::string key = w[i].substr(0, eq), val = w[i].substr(eq + 1);
      auto ids = [&] {
        std::vector<std::size_t> out;
        std::istringstream in(val);
        for (std::string item; std::getline(in, item, ',');) {
          if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit)) fail("bad arc id in '" + w[i] + "'");
          out.push_back(std::stoul(item));
        }
        return out;
      };
      if (key == "k") {
        auto v = ids();
        if (v.size() != 1) fail("k takes one index");
        s.k = v[0];
        have_k = true;
      } else if (key == "p1") {
        s.path1 = ids();
      } else if (key == "p2") {
        s.path2 = ids();
      } else {
        fail("unknown key '" + key + "'");
      }
    }
    if (!have_k || s.path1.empty() || s.path2.empty()) fail("a step needs k, p1 and p2");
    steps.push_back(std::move(s));
  }
  return steps;
}

std::string render_replay(const std::vector<ResolutionStep>& steps) {
  std::string out;
  auto ids = [](const std::vector<std::size_t>& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s;
  };
  for (const ResolutionStep& s : steps)
    out += std::string(s.mode == ResolutionMode::kBoolean ? "boolean" : "disjunctive") +
           " k=" + std::to_string(s.k) + " p1=" + ids(s.path1) + " p2=" + ids(s.path2) + "\n";
  return out;
}

ConstraintFile parse_scl(std::string_view text) {
  ConstraintFile f;
  bool have_props = false;
  for (const Line& l : split_lines(text)) {
    if (blank(l.text)) continue;
    std::string_view rest;
    std::size_t rest_col = 0;
    std::string_view kw = keyword(l.text, rest, rest_col);
    if (kw == "props") {
      if (have_props) throw ParseError("duplicate props line", l.number, 1);
      f.ap = Props(words_of(rest));
      have_props = true;
    } else if (kw == "constraint") {
      std::size_t colon = rest.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected ':'", l.number, rest_col + 1);
      std::string name(trim(rest.substr(0, colon)));
      if (name.empty()) throw ParseError("missing constraint name", l.number, rest_col + 1);
      f.constraints.push_back({name, std::string(trim(rest.substr(colon + 1))), l.number});
    } else {
      throw ParseError("unknown directive '" + std::string(kw) + "'", l.number, 1);
    }
  }
  if (!have_props) throw ParseError("missing 'props' line", 1, 1);
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace seqcal
