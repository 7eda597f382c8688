#include "seqcal/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "seqcal/dot.hpp"
#include "seqcal/error.hpp"
#include "seqcal/fixtures.hpp"
#include "seqcal/kernels.hpp"
#include "seqcal/kripke.hpp"
#include "seqcal/logic.hpp"
#include "seqcal/normalize.hpp"
#include "seqcal/regex.hpp"
#include "seqcal/resolution.hpp"
#include "seqcal/text.hpp"

namespace seqcal {

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kFailure = 2;

BooleanGraph load_graph(const std::string& path) {
  std::string text = read_file(path);
  if (is_elaboration_document(text))
    throw Error(path + ": expected a graph document, found an elaboration");
  std::vector<std::string> warnings;
  BooleanGraph g = parse_graph(text, &warnings);
  for (const std::string& w : warnings) std::cerr << path << ": warning: " << w << "\n";
  return g;
}

Elaboration load_elaboration(const std::string& path, const BooleanGraph& base) {
  std::vector<std::string> warnings;
  Elaboration e = parse_elaboration(read_file(path), base, &warnings);
  for (const std::string& w : warnings) std::cerr << path << ": warning: " << w << "\n";
  return e;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") out << text;
  else write_file(path, text);
}

int verdict(std::ostream& out, bool value, const std::string& detail = {}) {
  out << (value ? "true" : "false");
  if (!detail.empty()) out << ": " << detail;
  out << "\n";
  return value ? kTrue : kFalse;
}

void print_words(std::ostream& out, const std::vector<BoolWord>& words) {
  for (const BoolWord& w : words) out << "  " << render_word(w) << "\n";
}

int demo_sos(std::ostream& out) {
  VertexSet u = vbit(0) | vbit(1) | vbit(2);
  std::vector<Antichain> all = enumerate_sos(u);
  out << "SoS({v0,v1,v2}) has " << all.size() << " elements\n";
  for (const Antichain& a : all)
    out << "  ~" << render(a) << " = " << render(complement(a, u)) << "\n";
  out << "kernels: " << kernels::active().name << "\n";
  return kTrue;
}

int demo_counter(std::ostream& out) {
  BooleanGraph g = fixtures::counter();
  out << render_graph(g) << "\ninitial links:\n";
  for (const LogicLink& l : initial_logical_links(g)) out << "  " << render(l, g.namer()) << "\n";
  BooleanGraph conj = fixtures::carry_conjecture();
  Elaboration e = normalize(g, conj);
  out << "\nnormalized with\n" << render_graph(conj) << "\n" << render_elaboration(e, g);
  out << "forwards-maximal: " << (is_forwards_maximal(e, g) ? "yes" : "no") << "\n";
  out << "accepted words up to length 12:\n";
  print_words(out, e.dg.accepted_words(12));
  return kTrue;
}

int demo_resolution(std::ostream& out) {
  BooleanGraph g = fixtures::resolution_example();
  Elaboration e = initial_elaboration(g);
  out << render_graph(g) << "\ninitial elaboration:\n" << render_elaboration(e, g);
  int n = 0;
  for (const ResolutionStep& s : fixtures::resolution_replay()) {
    e = resolve(e, s, &g);
    out << "\nafter resolution " << ++n << ":\n" << render_elaboration(e, g);
  }
  BoolWord w = parse_word("P & R ; true ; !T");
  out << "\naccepts " << render_word(w) << ": " << (e.dg.accepts(w) ? "yes" : "no") << "\n";
  out << "implicant of the base graph: " << (is_implicant_logic(g, w) ? "yes" : "no") << "\n";
  return kTrue;
}

int demo_induction(std::ostream& out) {
  BooleanGraph g = fixtures::induction_example();
  Elaboration e = initial_elaboration(g);
  for (const ResolutionStep& s : fixtures::induction_replay()) e = resolve(e, s, &g);
  out << render_graph(g) << "\nafter boolean resolution:\n" << render_elaboration(e, g);
  out << "accepted words up to length 6:\n";
  print_words(out, e.dg.accepted_words(6));
  return kTrue;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sequential constraint calculus: links, resolution and normalization", "seqcal"};
  app.require_subcommand(1);
  std::function<int()> run;

  // compile
  std::string scl_path, regex_text, props_text, constraint_name, out_path;
  auto* compile = app.add_subcommand("compile", "Compile property regexes to constraint graphs");
  compile->add_option("file", scl_path, "Property file (.scl)");
  compile->add_option("--regex", regex_text, "A single regex instead of a file");
  compile->add_option("--props", props_text, "Atoms for --regex, space separated");
  compile->add_option("--constraint", constraint_name, "Only this constraint of the file");
  compile->add_option("-o,--output", out_path, "Output file");
  compile->callback([&] {
    run = [&] {
      std::string text;
      if (!regex_text.empty()) {
        std::istringstream in(props_text);
        std::vector<std::string> atoms{std::istream_iterator<std::string>(in), {}};
        text = render_graph(compile_regex(regex_text, Props(atoms)));
      } else {
        if (scl_path.empty()) throw CLI::ValidationError("compile", "give a .scl file or --regex");
        ConstraintFile f = parse_scl(read_file(scl_path));
        bool found = false;
        for (const ConstraintDecl& c : f.constraints) {
          if (!constraint_name.empty() && c.name != constraint_name) continue;
          found = true;
          try {
            text += (text.empty() ? "" : "\n") + render_graph(compile_regex(c.regex, f.ap, c.name));
          } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()).substr(std::string(e.what()).find(": ") + 2),
                             c.line, e.column());
          }
        }
        if (!found) throw Error("no constraint named '" + constraint_name + "'");
      }
      emit(out, out_path, text);
      return kTrue;
    };
  });

  // init-elab
  std::string graph_path;
  auto* init = app.add_subcommand("init-elab", "Initial elaboration of a graph");
  init->add_option("--graph,graph", graph_path, "Graph document")->required();
  init->add_option("-o,--output", out_path, "Output file");
  init->callback([&] {
    run = [&] {
      BooleanGraph g = load_graph(graph_path);
      emit(out, out_path, render_elaboration(initial_elaboration(g), g));
      return kTrue;
    };
  });

  // normalize
  std::string system_path, conj_path, dot_path, trace_dir;
  std::optional<std::uint64_t> seed;
  auto* norm = app.add_subcommand("normalize", "Normalize a conjecture against a system graph");
  norm->add_option("--system", system_path, "System graph")->required();
  norm->add_option("--conjecture", conj_path, "Conjectured graph")->required();
  norm->add_option("-o,--output", out_path, "Output elaboration");
  norm->add_option("--dot", dot_path, "Also write DOT here");
  norm->add_option("--trace", trace_dir, "Directory for one snapshot per worklist step");
  norm->add_option("--seed", seed, "Process the worklist in a seeded random order");
  norm->callback([&] {
    run = [&] {
      BooleanGraph g = load_graph(system_path);
      BooleanGraph conj = load_graph(conj_path);
      NormalizeOptions opts;
      opts.shuffle_seed = seed;
      if (!trace_dir.empty()) {
        std::filesystem::create_directories(trace_dir);
        opts.trace = [&](std::size_t i, const std::string& snap) {
          char name[32];
          std::snprintf(name, sizeof name, "step-%03zu.txt", i);
          write_file((std::filesystem::path(trace_dir) / name).string(), snap);
        };
      }
      Elaboration e = normalize(g, conj, opts);
      emit(out, out_path, render_elaboration(e, g));
      if (!dot_path.empty()) write_file(dot_path, render_dot(e, g));
      return kTrue;
    };
  });

  // resolve
  std::string elab_path, replay_path;
  auto* res = app.add_subcommand("resolve", "Apply resolution steps from a replay file");
  res->add_option("--graph", graph_path, "Base graph")->required();
  res->add_option("--elab", elab_path, "Starting elaboration (default: the initial one)");
  res->add_option("--replay", replay_path, "Replay file")->required();
  res->add_option("-o,--output", out_path, "Output elaboration");
  res->add_option("--dot", dot_path, "Also write DOT here");
  res->callback([&] {
    run = [&] {
      BooleanGraph g = load_graph(graph_path);
      Elaboration e = elab_path.empty() ? initial_elaboration(g) : load_elaboration(elab_path, g);
      for (const ResolutionStep& s : parse_replay(read_file(replay_path))) e = resolve(e, s, &g);
      emit(out, out_path, render_elaboration(e, g));
      if (!dot_path.empty()) write_file(dot_path, render_dot(e, g));
      return kTrue;
    };
  });

  // check
  std::string aft_text, fore_text, word_text;
  std::size_t bound = 0;
  bool forwards = false;
  auto* check = app.add_subcommand("check", "Decide a judgement");
  check->require_subcommand(1);
  auto* link = check->add_subcommand("link", "Is <aft, word, fore> a link of the graph?");
  auto* llink = check->add_subcommand("logical-link", "Is <aft, expr, fore> a logical link?");
  for (auto* c : {link, llink}) {
    c->add_option("--graph", graph_path, "Graph document")->required();
    c->add_option("--aft", aft_text, "Antichain, e.g. {{v3,v12}}")->required();
    c->add_option("--word", word_text, "Terms separated by ;")->required();
    c->add_option("--fore", fore_text, "Antichain")->required();
  }
  link->callback([&] {
    run = [&] {
      BooleanGraph g = load_graph(graph_path);
      LogicLink l{parse_antichain(aft_text, g), parse_word(word_text), parse_antichain(fore_text, g)};
      return verdict(out, is_link_logic(g, l));
    };
  });
  llink->callback([&] {
    run = [&] {
      BooleanGraph g = load_graph(graph_path);
      BoolWord w = parse_word(word_text);
      if (w.size() != 1) throw Error("a logical link has a single expression");
      return verdict(out, is_logical_link(g, parse_antichain(aft_text, g), w[0],
                                          parse_antichain(fore_text, g)));
    };
  });
  auto* celab = check->add_subcommand("elaboration", "Is the document an elaboration of the graph?");
  celab->add_option("--graph", graph_path, "Base graph")->required();
  celab->add_option("--elab", elab_path, "Elaboration document")->required();
  celab->add_flag("--forwards-maximal", forwards, "Also require forwards maximality");
  celab->callback([&] {
    run = [&] {
      BooleanGraph g = load_graph(graph_path);
      Elaboration e = load_elaboration(elab_path, g);
      ElabCheck c = forwards ? check_forwards_maximal(e, g) : check_elaboration_logic(e, g);
      return verdict(out, c.ok, c.diagnostic);
    };
  });
  auto* cimpl = check->add_subcommand("implicant", "Is the word an implicant of the graph?");
  cimpl->add_option("--graph", graph_path, "Graph document")->required();
  cimpl->add_option("--word", word_text, "Terms separated by ;")->required();
  cimpl->callback([&] {
    run = [&] {
      BooleanGraph g = load_graph(graph_path);
      return verdict(out, is_implicant_logic(g, parse_word(word_text)));
    };
  });
  auto* ccons = check->add_subcommand(
      "constraint", "Is the word disallowed in every behavior the graph permits?");
  ccons->add_option("--graph", graph_path, "Graph document")->required();
  ccons->add_option("--word", word_text, "Terms separated by ;")->required();
  ccons->add_option("--bound", bound, "Behavior length bound (default: word length)");
  ccons->callback([&] {
    run = [&] {
      BooleanGraph g = load_graph(graph_path);
      BoolWord w = parse_word(word_text);
      std::size_t n = bound == 0 ? w.size() : bound;
      return verdict(out, is_constraint(w, g, fully_populated(g.ap), n));
    };
  });

  // accepts
  std::size_t list_len = 0;
  auto* acc = app.add_subcommand("accepts", "Does the graph accept a word, or list its words");
  acc->add_option("--graph", graph_path, "Graph or elaboration document")->required();
  acc->add_option("--system", system_path, "Base graph, needed for elaborations");
  acc->add_option("--word", word_text, "Terms separated by ;");
  acc->add_option("--list", list_len, "List accepted words up to this length");
  acc->callback([&] {
    run = [&] {
      std::string text = read_file(graph_path);
      bool is_elab = is_elaboration_document(text);
      if (is_elab && system_path.empty()) throw Error("elaborations need --system");
      if (word_text.empty() == (list_len == 0)) throw Error("give exactly one of --word and --list");
      auto go = [&](const auto& dg) {
        if (list_len) {
          for (const auto& w : dg.accepted_words(list_len)) out << render_word_cli(w) << "\n";
          return kTrue;
        }
        return verdict(out, dg.accepts(parse_word(word_text)));
      };
      if (is_elab) return go(load_elaboration(graph_path, load_graph(system_path)).dg);
      return go(parse_graph(text).dg);
    };
  });

  // max
  auto* mx = app.add_subcommand("max", "Greatest fore (plus) or aft (minus) for a word");
  mx->require_subcommand(1);
  auto* mplus = mx->add_subcommand("plus", "max+ from --aft");
  auto* mminus = mx->add_subcommand("minus", "max- from --fore");
  mplus->add_option("--aft", aft_text, "Antichain")->required();
  mminus->add_option("--fore", fore_text, "Antichain")->required();
  for (auto* c : {mplus, mminus}) {
    c->add_option("--graph", graph_path, "Graph document")->required();
    c->add_option("--word", word_text, "Terms separated by ;")->required();
  }
  mplus->callback([&] {
    run = [&] {
      BooleanGraph g = load_graph(graph_path);
      out << render(max_plus_logic(g, parse_antichain(aft_text, g), parse_word(word_text)), g.namer())
          << "\n";
      return kTrue;
    };
  });
  mminus->callback([&] {
    run = [&] {
      BooleanGraph g = load_graph(graph_path);
      out << render(max_minus_logic(g, parse_antichain(fore_text, g), parse_word(word_text)),
                    g.namer())
          << "\n";
      return kTrue;
    };
  });

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a graph or elaboration");
  dot->add_option("--graph,graph", graph_path, "Graph or elaboration document")->required();
  dot->add_option("--system", system_path, "Base graph, needed for elaborations");
  dot->add_option("-o,--output", out_path, "Output file");
  dot->callback([&] {
    run = [&] {
      std::string text = read_file(graph_path);
      if (is_elaboration_document(text)) {
        if (system_path.empty()) throw Error("elaborations need --system");
        BooleanGraph base = load_graph(system_path);
        emit(out, out_path, render_dot(load_elaboration(graph_path, base), base));
      } else {
        emit(out, out_path, render_dot(parse_graph(text)));
      }
      return kTrue;
    };
  });

  // demo
  auto* demo = app.add_subcommand("demo", "Built-in worked examples");
  demo->require_subcommand(1);
  demo->add_subcommand("counter", "Counter normalization")->callback([&] { run = [&] { return demo_counter(out); }; });
  demo->add_subcommand("resolution", "Two-step resolution")->callback([&] { run = [&] { return demo_resolution(out); }; });
  demo->add_subcommand("induction", "Boolean resolution with a self-loop")->callback([&] { run = [&] { return demo_induction(out); }; });
  demo->add_subcommand("sos", "Antichains over three vertices")->callback([&] { run = [&] { return demo_sos(out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kTrue : kFailure;
  }
  try {
    return run ? run() : kFailure;
  } catch (const CLI::Error& e) {
    err << "seqcal: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "seqcal: parse error at " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "seqcal: " << e.what() << "\n";
  }
  return kFailure;
}

}  // namespace seqcal
