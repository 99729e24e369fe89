#ifndef ADIAN_REPORT_HPP_
#define ADIAN_REPORT_HPP_

#include <optional>
#include <string>

#include "json.hpp"

#include "oracle.hpp"
#include "presentation.hpp"

namespace adian {

//! Result document for one tool run. The field set and the field order are
//! fixed; fields a run has nothing to say about carry "-" in text output and
//! null in JSON, so reports from different subcommands line up and diff
//! cleanly.
struct CliReport {
  std::string command;
  std::string presentation_class;
  std::string engine = "-";
  std::string answer = "-";  // "true", "false", "unknown", or "-"
  std::string reason = "-";
  bool adian = false;
  bool star = false;
  bool forest = false;
  std::optional<size_t> rounds;
  std::optional<size_t> vertices;
  std::optional<size_t> edges;
  std::optional<size_t> faces;
  std::optional<size_t> fold_merges;
  std::string star_witness = "-";
  std::string bisided_cycle = "-";
  std::optional<size_t> derivation_length;
  std::string derivation = "-";
  std::string dot = "-";  // "-", a file path, or "inline"
  std::string dot_body;   // DOT text when dot == "inline"
};

inline std::string quoted_word(const Presentation& p, const Word& w) {
  return "'" + p.format_word(w) + "'";
}

inline std::string describe_star_witness(const Presentation& p, const StarWitness& w) {
  std::string frag = quoted_word(p, w.fragment);
  std::string a = quoted_word(p, w.rword_a);
  std::string b = quoted_word(p, w.rword_b);
  if (w.prefix_case) {
    return "prefix " + frag + " of " + a + " is a suffix of " + b;
  }
  return "suffix " + frag + " of " + a + " is a prefix of " + b;
}

inline std::string describe_cycle(const Presentation& p, const BiSidedGraph& g,
                                  const std::vector<uint32_t>& cycle) {
  std::string out;
  for (size_t i = 0; i < cycle.size(); ++i) {
    if (i != 0) {
      out += " -> ";
    }
    out += quoted_word(p, g.vertices[cycle[i]]);
  }
  return out;
}

inline std::string describe_derivation(const Presentation& p, const DerivationResult& r) {
  if (r.path.empty()) {
    return "-";
  }
  std::string out;
  for (size_t i = 0; i < r.path.size(); ++i) {
    const auto& [step, word] = r.path[i];
    if (i != 0) {
      out += "; ";
    }
    out += "rel " + std::to_string(step.relation_index);
    out += step.lhs_to_rhs ? " lhs->rhs at " : " rhs->lhs at ";
    out += std::to_string(step.position);
    out += " => " + quoted_word(p, word);
  }
  return out;
}

//! Fill the classification block: class name, the two side-graph tests, the
//! overlap condition, the bi-sided forest test, and witnesses for whichever
//! of the latter two fail. Every subcommand reports these.
inline void classification_fields(CliReport& rep, const Presentation& p) {
  rep.presentation_class = classify(p).to_string();
  rep.adian = is_adian(p);
  StarResult star = check_star(p);
  rep.star = star.ok;
  if (!star.ok) {
    rep.star_witness = describe_star_witness(p, *star.witness);
  }
  BiSidedGraph bisided = build_bisided(p);
  ForestResult forest = forest_check(bisided);
  rep.forest = forest.is_forest;
  if (!forest.is_forest) {
    rep.bisided_cycle = describe_cycle(p, bisided, forest.cycle);
  }
}

namespace detail {

inline std::string opt_text(const std::optional<size_t>& v) {
  return v ? std::to_string(*v) : "-";
}

inline nlohmann::ordered_json opt_json(const std::optional<size_t>& v) {
  if (!v) {
    return nullptr;
  }
  return *v;
}

inline nlohmann::ordered_json dash_json(const std::string& s) {
  if (s == "-") {
    return nullptr;
  }
  return s;
}

}  // namespace detail

//! Key/value lines in the fixed field order; an inline DOT body follows the
//! fields after one blank line.
inline std::string render_text(const CliReport& r) {
  std::string out;
  out += "command: " + r.command + "\n";
  out += "class: " + r.presentation_class + "\n";
  out += "engine: " + r.engine + "\n";
  out += "answer: " + r.answer + "\n";
  out += "reason: " + r.reason + "\n";
  out += std::string("adian: ") + (r.adian ? "true" : "false") + "\n";
  out += std::string("star: ") + (r.star ? "true" : "false") + "\n";
  out += std::string("forest: ") + (r.forest ? "true" : "false") + "\n";
  out += "rounds: " + detail::opt_text(r.rounds) + "\n";
  out += "vertices: " + detail::opt_text(r.vertices) + "\n";
  out += "edges: " + detail::opt_text(r.edges) + "\n";
  out += "faces: " + detail::opt_text(r.faces) + "\n";
  out += "fold_merges: " + detail::opt_text(r.fold_merges) + "\n";
  out += "star_witness: " + r.star_witness + "\n";
  out += "bisided_cycle: " + r.bisided_cycle + "\n";
  out += "derivation_length: " + detail::opt_text(r.derivation_length) + "\n";
  out += "derivation: " + r.derivation + "\n";
  out += "dot: " + r.dot + "\n";
  if (r.dot == "inline") {
    out += "\n" + r.dot_body;
  }
  return out;
}

//! One JSON document with the same fields in the same order. Numeric fields
//! stay numbers; "-" becomes null; an inline DOT body is carried in the
//! "dot" field itself.
inline std::string render_json(const CliReport& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["class"] = r.presentation_class;
  j["engine"] = detail::dash_json(r.engine);
  j["answer"] = detail::dash_json(r.answer);
  j["reason"] = detail::dash_json(r.reason);
  j["adian"] = r.adian;
  j["star"] = r.star;
  j["forest"] = r.forest;
  j["rounds"] = detail::opt_json(r.rounds);
  j["vertices"] = detail::opt_json(r.vertices);
  j["edges"] = detail::opt_json(r.edges);
  j["faces"] = detail::opt_json(r.faces);
  j["fold_merges"] = detail::opt_json(r.fold_merges);
  j["star_witness"] = detail::dash_json(r.star_witness);
  j["bisided_cycle"] = detail::dash_json(r.bisided_cycle);
  j["derivation_length"] = detail::opt_json(r.derivation_length);
  j["derivation"] = detail::dash_json(r.derivation);
  if (r.dot == "inline") {
    j["dot"] = r.dot_body;
  } else {
    j["dot"] = detail::dash_json(r.dot);
  }
  return j.dump(2) + "\n";
}

}  // namespace adian

#endif  // ADIAN_REPORT_HPP_
