#ifndef ADIAN_STEPHEN_HPP_
#define ADIAN_STEPHEN_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"
#include "wordgraph.hpp"

namespace adian {

struct Budget {
  size_t max_vertices = 100000;
  size_t max_rounds = 10000;
};

enum class ClosureStatus { Closed, Exhausted };

//! Result of running the closure to completion or out of budget. Exhausted
//! outcomes still carry a sound approximation: every word it accepts lies
//! above the base word in the natural order, so positive answers derived
//! from an approximation are final.
struct ClosureOutcome {
  ClosureStatus status;
  Complex complex;
  size_t rounds_used;   // rounds that changed the complex
  size_t fold_merges;   // vertex merges over the whole construction
};

struct RoundDelta {
  size_t sites_glued = 0;
  size_t faces_added = 0;
  size_t folds = 0;

  bool changed() const { return sites_glued > 0 || faces_added > 0 || folds > 0; }
};

//! Called after every expansion round with the folded complex.
using RoundObserver = std::function<void(const Complex&, size_t round)>;

//! One full expansion round. The scan runs over a snapshot: for every
//! (relation, vertex) pair it reads both sides first, and only afterwards
//! pastes the missing sides, so the outcome does not depend on scan order.
//! Sites where both sides already run co-terminally just (re-)record their
//! face, which keeps the face set saturated at every stage.
inline RoundDelta full_p_expansion_round(Complex& c) {
  struct Task {
    uint32_t rel;
    Word missing;        // side to paste
    PathTrace existing;  // trace of the side already readable
    bool missing_is_rhs;
  };
  RoundDelta delta;
  std::vector<Task> tasks;
  const auto& rels = c.presentation.relations();
  for (uint32_t i = 0; i < rels.size(); ++i) {
    for (vertex_type v : c.graph.canonical_vertices()) {
      auto lt = read_word(c.graph, v, rels[i].lhs);
      auto rt = read_word(c.graph, v, rels[i].rhs);
      if (lt && rt && lt->back() == rt->back()) {
        if (record_face(c, Face{i, *lt, *rt})) {
          ++delta.faces_added;
        }
      } else if (lt) {
        tasks.push_back(Task{i, rels[i].rhs, std::move(*lt), true});
      } else if (rt) {
        tasks.push_back(Task{i, rels[i].lhs, std::move(*rt), false});
      }
    }
  }
  for (Task& t : tasks) {
    PathTrace pasted = glue_path(c.graph, t.existing.front(), t.missing, t.existing.back());
    ++delta.sites_glued;
    Face f = t.missing_is_rhs ? Face{t.rel, std::move(t.existing), std::move(pasted)}
                              : Face{t.rel, std::move(pasted), std::move(t.existing)};
    if (record_face(c, std::move(f))) {
      ++delta.faces_added;
    }
  }
  delta.folds = fold_complex(c);
  return delta;
}

//! Iterate expansion rounds until nothing changes (Closed) or the budget
//! runs out (Exhausted, returning the current approximation).
inline ClosureOutcome close(Complex c, Budget budget = {}, const RoundObserver& observer = {}) {
  fold_complex(c);
  size_t rounds = 0;
  auto finish = [&](ClosureStatus status) {
    size_t merges = static_cast<size_t>(c.graph.fold_count());
    return ClosureOutcome{status, std::move(c), rounds, merges};
  };
  while (true) {
    if (c.graph.num_vertices() > budget.max_vertices) {
      return finish(ClosureStatus::Exhausted);
    }
    RoundDelta delta = full_p_expansion_round(c);
    if (observer) {
      observer(c, rounds + 1);
    }
    if (!delta.changed()) {
      return finish(ClosureStatus::Closed);
    }
    ++rounds;
    if (rounds >= budget.max_rounds) {
      return finish(ClosureStatus::Exhausted);
    }
  }
}

//! Closure of the linear graph of w: the graph of all words equal to or
//! above w once Closed.
inline ClosureOutcome schutzenberger(const Presentation& p, const Word& w, Budget budget = {},
                                     const RoundObserver& observer = {}) {
  return close(Complex(p, linear_graph(p, w)), budget, observer);
}

// ---------------------------------------------------------------------------
// Decision procedures.
// ---------------------------------------------------------------------------

//! Three-valued answer; Unknown carries the reason.
struct TriBool {
  enum class Value { False, True, Unknown };
  Value value;
  std::string reason;

  static TriBool yes() { return TriBool{Value::True, ""}; }
  static TriBool no() { return TriBool{Value::False, ""}; }
  static TriBool unknown(std::string why) { return TriBool{Value::Unknown, std::move(why)}; }

  bool is_true() const { return value == Value::True; }
  bool is_false() const { return value == Value::False; }
  bool is_unknown() const { return value == Value::Unknown; }
};

inline const char* const kBudgetReason = "budget exhausted before the closure completed";

//! Decide u <= v in the natural partial order: v must be readable between
//! the roots of the closure of u. Acceptance by an approximation is already
//! conclusive; only a rejection needs the closure to have completed.
inline std::pair<TriBool, ClosureOutcome> natural_leq_full(const Presentation& p, const Word& u,
                                                           const Word& v, Budget budget = {}) {
  ClosureOutcome out = schutzenberger(p, u, budget);
  if (accepts(out.complex.graph, v)) {
    return {TriBool::yes(), std::move(out)};
  }
  if (out.status == ClosureStatus::Closed) {
    return {TriBool::no(), std::move(out)};
  }
  return {TriBool::unknown(kBudgetReason), std::move(out)};
}

inline TriBool natural_leq(const Presentation& p, const Word& u, const Word& v,
                           Budget budget = {}) {
  return natural_leq_full(p, u, v, budget).first;
}

//! Decide u = v in the monoid by mutual acceptance of the two closures.
//! When both closures complete, the answer is cross-checked against
//! birooted isomorphism of the two graphs; disagreement would mean a bug,
//! not a property of the input, hence the logic_error.
inline std::tuple<TriBool, ClosureOutcome, ClosureOutcome> equal_words_full(
    const Presentation& p, const Word& u, const Word& v, Budget budget = {}) {
  ClosureOutcome cu = schutzenberger(p, u, budget);
  ClosureOutcome cv = schutzenberger(p, v, budget);
  bool v_in_u = accepts(cu.complex.graph, v);
  bool u_in_v = accepts(cv.complex.graph, u);
  bool both_closed =
      cu.status == ClosureStatus::Closed && cv.status == ClosureStatus::Closed;
  if (both_closed) {
    bool iso = birooted_isomorphic(cu.complex.graph, cv.complex.graph);
    if (iso != (v_in_u && u_in_v)) {
      throw std::logic_error("closed complexes disagree with mutual acceptance");
    }
  }
  if (v_in_u && u_in_v) {
    return {TriBool::yes(), std::move(cu), std::move(cv)};
  }
  if ((cu.status == ClosureStatus::Closed && !v_in_u) ||
      (cv.status == ClosureStatus::Closed && !u_in_v)) {
    return {TriBool::no(), std::move(cu), std::move(cv)};
  }
  return {TriBool::unknown(kBudgetReason), std::move(cu), std::move(cv)};
}

inline TriBool equal_words(const Presentation& p, const Word& u, const Word& v,
                           Budget budget = {}) {
  return std::get<0>(equal_words_full(p, u, v, budget));
}

inline TriBool is_idempotent(const Presentation& p, const Word& w, Budget budget = {}) {
  return equal_words(p, w, concat(w, w), budget);
}

//! Decide whether w maps to the identity of the maximal group image. Valid
//! only over presentations whose monoid embeds its idempotent structure
//! faithfully into the group (the cycle-free side-graph class); there the
//! question reduces to whether both roots of the closure of w coincide.
inline std::pair<TriBool, ClosureOutcome> equals_identity_in_group_full(const Presentation& p,
                                                                        const Word& w,
                                                                        Budget budget = {}) {
  if (!is_adian(p)) {
    throw Error(Error::Code::NotAdian, "group identity test needs cycle-free side graphs");
  }
  ClosureOutcome out = schutzenberger(p, w, budget);
  if (out.complex.graph.alpha() == out.complex.graph.beta()) {
    return {TriBool::yes(), std::move(out)};
  }
  if (out.status == ClosureStatus::Closed) {
    return {TriBool::no(), std::move(out)};
  }
  return {TriBool::unknown(kBudgetReason), std::move(out)};
}

inline TriBool equals_identity_in_group(const Presentation& p, const Word& w,
                                        Budget budget = {}) {
  return equals_identity_in_group_full(p, w, budget).first;
}

// ---------------------------------------------------------------------------
// Closure by positive saturation.
// ---------------------------------------------------------------------------

namespace detail {

//! Paste a copy of sub into host so that sub_trace lands on host_trace.
//! Vertices off the trace become fresh; edges lying on the trace itself are
//! skipped since the host already has them. Faces come along.
inline void glue_subcomplex(Complex& host, const Complex& sub, const PathTrace& sub_trace,
                            const PathTrace& host_trace) {
  std::map<vertex_type, vertex_type> map;
  for (size_t i = 0; i < sub_trace.size(); ++i) {
    map[sub.graph.find(sub_trace[i])] = host.graph.find(host_trace[i]);
  }
  // Mark trace edges by their canonical triples; traces here read positive
  // words, so every step is a positive edge.
  std::set<std::array<vertex_type, 3>> on_trace;
  {
    const WordGraph& g = sub.graph;
    for (size_t i = 0; i + 1 < sub_trace.size(); ++i) {
      vertex_type a = g.find(sub_trace[i]);
      vertex_type b = g.find(sub_trace[i + 1]);
      g.for_each_half(a, [&](Letter x, vertex_type t) {
        if (x.is_positive() && t == b) {
          on_trace.insert({a, x.gen(), b});
        }
      });
    }
  }
  for (vertex_type v : sub.graph.canonical_vertices()) {
    if (map.find(v) == map.end()) {
      map[v] = host.graph.add_vertex();
    }
  }
  for (auto [u, gen, v] : sub.graph.positive_edges()) {
    if (on_trace.count({u, gen, v})) {
      continue;
    }
    host.graph.add_edge(map.at(u), Letter::positive(gen), map.at(v));
  }
  for (const Face& f : sub.faces) {
    Face nf = f;
    for (vertex_type& v : nf.lhs_trace) {
      v = map.at(sub.graph.find(v));
    }
    for (vertex_type& v : nf.rhs_trace) {
      v = map.at(sub.graph.find(v));
    }
    record_face(host, std::move(nf));
  }
}

}  // namespace detail

struct SaturationResult {
  ClosureOutcome closure;
  size_t waves;        // saturation passes that pasted something
  size_t tail_rounds;  // expansion rounds the finishing run still needed
};

//! Closure of an arbitrary word over a presentation with cycle-free side
//! graphs, built the way the theory justifies it: rebuild the folded tree
//! of w one pendant edge at a time, and after each step paste the closure
//! of every maximal positive path label at every positive-source vertex.
//! Unlike the plain closure of a positive word, folding does real merging
//! here. A finishing run of expansion rounds both verifies closedness and
//! completes anything saturation alone did not reach.
inline SaturationResult close_by_positive_saturation(const Presentation& p, const Word& w,
                                                     Budget budget = {}) {
  if (!is_adian(p)) {
    throw Error(Error::Code::NotAdian, "positive saturation needs cycle-free side graphs");
  }
  WordGraph mt = munn_tree(p, w);
  Complex host(p, WordGraph(p.alphabet_size()));
  std::map<Word, ClosureOutcome> cache;
  std::set<std::pair<vertex_type, Word>> processed;
  size_t waves = 0;
  bool exhausted = false;

  auto saturate = [&]() {
    while (!exhausted) {
      if (host.graph.num_vertices() > budget.max_vertices || waves >= budget.max_rounds) {
        exhausted = true;
        break;
      }
      if (find_positive_cycle(host.graph)) {
        throw Error(Error::Code::PositiveCycle, "saturation found a directed positive cycle");
      }
      struct Job {
        Word label;
        PathTrace trace;
      };
      std::vector<Job> jobs;
      for (vertex_type v : host.graph.canonical_vertices()) {
        if (detail::has_positive_in(host.graph, v)) {
          continue;
        }
        for (auto& [label, trace] : maximal_positive_path_traces(host.graph, v)) {
          if (processed.emplace(v, label).second) {
            jobs.push_back(Job{std::move(label), std::move(trace)});
          }
        }
      }
      if (jobs.empty()) {
        break;
      }
      ++waves;
      for (Job& job : jobs) {
        auto it = cache.find(job.label);
        if (it == cache.end()) {
          it = cache.emplace(job.label, schutzenberger(p, job.label, budget)).first;
        }
        if (it->second.status == ClosureStatus::Exhausted) {
          exhausted = true;
          break;
        }
        auto sub_trace = read_word(it->second.complex.graph, it->second.complex.graph.alpha(),
                                   job.label);
        detail::glue_subcomplex(host, it->second.complex, *sub_trace, job.trace);
      }
      fold_complex(host);
      std::set<std::pair<vertex_type, Word>> fresh;
      for (const auto& [v, label] : processed) {
        fresh.emplace(host.graph.find(v), label);
      }
      processed = std::move(fresh);
    }
  };

  // Rebuild the tree by attaching one pendant edge at a time, in a
  // deterministic walk from the left root, saturating after each step.
  std::map<vertex_type, vertex_type> to_host;
  vertex_type mt_alpha = mt.alpha();
  to_host[mt_alpha] = host.graph.add_vertex();
  host.graph.set_roots(to_host[mt_alpha], to_host[mt_alpha]);
  saturate();
  std::vector<vertex_type> stack{mt_alpha};
  while (!stack.empty() && !exhausted) {
    vertex_type v = stack.back();
    stack.pop_back();
    std::vector<std::pair<Letter, vertex_type>> halves;
    mt.for_each_half(v, [&](Letter x, vertex_type t) { halves.emplace_back(x, t); });
    std::sort(halves.begin(), halves.end(),
              [](const auto& a, const auto& b) {
                return a.first.code() != b.first.code() ? a.first.code() < b.first.code()
                                                       : a.second < b.second;
              });
    for (auto [x, t] : halves) {
      if (to_host.find(t) != to_host.end()) {
        continue;
      }
      vertex_type nt = host.graph.add_vertex();
      to_host[t] = nt;
      host.graph.add_edge(host.graph.find(to_host.at(v)), x, nt);
      stack.push_back(t);
      saturate();
      if (exhausted) {
        break;
      }
    }
  }
  host.graph.set_roots(host.graph.find(to_host.at(mt_alpha)),
                       host.graph.find(to_host.at(mt.beta())));
  if (exhausted) {
    size_t merges = static_cast<size_t>(host.graph.fold_count());
    return SaturationResult{
        ClosureOutcome{ClosureStatus::Exhausted, std::move(host), 0, merges}, waves, 0};
  }
  ClosureOutcome out = close(std::move(host), budget);
  size_t tail = out.rounds_used;
  return SaturationResult{std::move(out), waves, tail};
}

}  // namespace adian

#endif  // ADIAN_STEPHEN_HPP_
