#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "adian/adian.hpp"
#include "adian/report.hpp"

namespace {

using namespace adian;

Presentation load_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  return parse_presentation(in);
}

void fill_answer(CliReport& rep, const TriBool& t) {
  rep.answer = t.is_true() ? "true" : t.is_false() ? "false" : "unknown";
  if (!t.reason.empty()) {
    rep.reason = t.reason;
  }
}

int exit_for_answer(const CliReport& rep) {
  if (rep.answer == "true") {
    return 0;
  }
  if (rep.answer == "false") {
    return 1;
  }
  return 2;
}

//! Accumulate closure statistics; a second call sums, so a two-closure
//! subcommand reports totals over both runs.
void add_stats(CliReport& rep, const ClosureOutcome& out) {
  rep.rounds = rep.rounds.value_or(0) + out.rounds_used;
  rep.vertices = rep.vertices.value_or(0) + out.complex.graph.num_vertices();
  rep.edges = rep.edges.value_or(0) + out.complex.graph.num_edges();
  rep.faces = rep.faces.value_or(0) + out.complex.faces.size();
  rep.fold_merges = rep.fold_merges.value_or(0) + out.fold_merges;
}

void attach_dot(CliReport& rep, const std::string& dot_text, const std::string& dot_path) {
  if (dot_path.empty()) {
    rep.dot = "inline";
    rep.dot_body = dot_text;
    return;
  }
  std::ofstream out(dot_path);
  if (!out) {
    throw std::runtime_error("cannot write '" + dot_path + "'");
  }
  out << dot_text;
  rep.dot = dot_path;
}

int run(int argc, char** argv) {
  CLI::App app{"word problem tool for finitely presented inverse monoids"};
  app.require_subcommand(1);

  std::string file, word_u, word_v, dot_path;
  size_t max_vertices = Budget{}.max_vertices;
  size_t max_rounds = Budget{}.max_rounds;
  size_t depth = 10;
  bool json = false;
  bool with_faces = false;

  auto add_json = [&](CLI::App* s) {
    s->add_flag("--json", json, "emit the report as one JSON document");
  };
  auto add_budget = [&](CLI::App* s) {
    s->add_option("--max-vertices", max_vertices, "vertex budget for closure construction");
    s->add_option("--max-rounds", max_rounds, "round budget for closure construction");
  };

  CLI::App* c_check = app.add_subcommand("check", "classify a presentation file");
  c_check->add_option("file", file, "presentation file")->required();
  add_json(c_check);

  CLI::App* c_eq = app.add_subcommand("eq", "decide u = v in the presented monoid");
  c_eq->add_option("file", file, "presentation file")->required();
  c_eq->add_option("u", word_u, "left word")->required();
  c_eq->add_option("v", word_v, "right word")->required();
  add_budget(c_eq);
  add_json(c_eq);

  CLI::App* c_leq = app.add_subcommand("leq", "decide u <= v in the natural partial order");
  c_leq->add_option("file", file, "presentation file")->required();
  c_leq->add_option("u", word_u, "lower word")->required();
  c_leq->add_option("v", word_v, "upper word")->required();
  add_budget(c_leq);
  add_json(c_leq);

  CLI::App* c_idem = app.add_subcommand("idem", "decide whether w is idempotent");
  c_idem->add_option("file", file, "presentation file")->required();
  c_idem->add_option("w", word_u, "word")->required();
  add_budget(c_idem);
  add_json(c_idem);

  CLI::App* c_group =
      app.add_subcommand("group-id", "decide whether w is the identity of the group image");
  c_group->add_option("file", file, "presentation file")->required();
  c_group->add_option("w", word_u, "word")->required();
  add_budget(c_group);
  add_json(c_group);

  CLI::App* c_graph = app.add_subcommand("graph", "build the closure of w and export DOT");
  c_graph->add_option("file", file, "presentation file")->required();
  c_graph->add_option("w", word_u, "word")->required();
  c_graph->add_option("--dot", dot_path, "write DOT here instead of inline");
  c_graph->add_flag("--complex", with_faces, "include the face list in the DOT export");
  add_budget(c_graph);
  add_json(c_graph);

  CLI::App* c_munn = app.add_subcommand("munn", "build the Munn tree of w and export DOT");
  c_munn->add_option("file", file, "presentation file")->required();
  c_munn->add_option("w", word_u, "word")->required();
  c_munn->add_option("--dot", dot_path, "write DOT here instead of inline");
  add_json(c_munn);

  CLI::App* c_oracle =
      app.add_subcommand("oracle-eq", "search for a rewrite derivation between two positive words");
  c_oracle->add_option("file", file, "presentation file")->required();
  c_oracle->add_option("u", word_u, "left word")->required();
  c_oracle->add_option("v", word_v, "right word")->required();
  c_oracle->add_option("--depth", depth, "derivation search depth");
  add_json(c_oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  Presentation p = load_presentation_file(file);
  CliReport rep;
  classification_fields(rep, p);
  Budget budget{max_vertices, max_rounds};
  int exit_code = 0;

  if (*c_check) {
    rep.command = "check";
  } else if (*c_eq) {
    rep.command = "eq";
    Word u = p.parse_word(word_u);
    Word v = p.parse_word(word_v);
    auto bs = detect_bs(p);
    if (bs && bs->m != bs->n && is_positive(u) && is_positive(v)) {
      rep.engine = "bs-blocks";
      BsEqualResult r = bs_equal_positive(p, *bs, u, v, budget);
      fill_answer(rep, r.answer);
      add_stats(rep, r.left.outcome);
      add_stats(rep, r.right.outcome);
    } else {
      rep.engine = "generic";
      auto [answer, cu, cv] = equal_words_full(p, u, v, budget);
      fill_answer(rep, answer);
      add_stats(rep, cu);
      add_stats(rep, cv);
    }
    exit_code = exit_for_answer(rep);
  } else if (*c_leq) {
    rep.command = "leq";
    rep.engine = "generic";
    auto [answer, out] = natural_leq_full(p, p.parse_word(word_u), p.parse_word(word_v), budget);
    fill_answer(rep, answer);
    add_stats(rep, out);
    exit_code = exit_for_answer(rep);
  } else if (*c_idem) {
    rep.command = "idem";
    rep.engine = "generic";
    Word w = p.parse_word(word_u);
    auto [answer, cu, cv] = equal_words_full(p, w, concat(w, w), budget);
    fill_answer(rep, answer);
    add_stats(rep, cu);
    add_stats(rep, cv);
    exit_code = exit_for_answer(rep);
  } else if (*c_group) {
    rep.command = "group-id";
    rep.engine = "generic";
    auto [answer, out] = equals_identity_in_group_full(p, p.parse_word(word_u), budget);
    fill_answer(rep, answer);
    add_stats(rep, out);
    exit_code = exit_for_answer(rep);
  } else if (*c_graph) {
    rep.command = "graph";
    rep.engine = "generic";
    ClosureOutcome out = schutzenberger(p, p.parse_word(word_u), budget);
    add_stats(rep, out);
    if (out.status == ClosureStatus::Exhausted) {
      rep.reason = kBudgetReason;
      exit_code = 2;
    }
    attach_dot(rep, with_faces ? to_dot(out.complex) : to_dot(out.complex.graph, p), dot_path);
  } else if (*c_munn) {
    rep.command = "munn";
    rep.engine = "munn";
    WordGraph g = munn_tree(p, p.parse_word(word_u));
    rep.vertices = g.num_vertices();
    rep.edges = g.num_edges();
    rep.fold_merges = g.fold_count();
    attach_dot(rep, to_dot(g, p), dot_path);
  } else if (*c_oracle) {
    rep.command = "oracle-eq";
    rep.engine = "rewrite-bfs";
    OracleAnswer ans = oracle_equal_positive(p, p.parse_word(word_u), p.parse_word(word_v), depth);
    if (ans.certain) {
      rep.answer = "true";
      rep.derivation_length = ans.derivation.length;
      rep.derivation = describe_derivation(p, ans.derivation);
    } else {
      rep.answer = "unknown";
      rep.reason = "no derivation within the search bounds";
      exit_code = 2;
    }
  }

  std::cout << (json ? render_json(rep) : render_text(rep));
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
