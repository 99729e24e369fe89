#ifndef ADIAN_ORACLE_HPP_
#define ADIAN_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace adian {

//! One rewrite: at position, replace one side of the relation by the other.
struct DerivationStep {
  size_t position;
  uint32_t relation_index;
  bool lhs_to_rhs;
};

struct DerivationResult {
  bool found = false;
  size_t length = 0;
  //! Steps with the word each produced; replaying them from the start word
  //! yields the target.
  std::vector<std::pair<DerivationStep, Word>> path;
};

namespace detail {

//! All single-step rewrites of w, in scan order: position left to right,
//! relations in presentation order, left-to-right before right-to-left.
inline std::vector<std::pair<DerivationStep, Word>> rewrite_neighbors(const Presentation& p,
                                                                      const Word& w) {
  std::vector<std::pair<DerivationStep, Word>> out;
  const auto& rels = p.relations();
  for (size_t pos = 0; pos <= w.size(); ++pos) {
    for (uint32_t r = 0; r < rels.size(); ++r) {
      for (bool l2r : {true, false}) {
        const Word& from = l2r ? rels[r].lhs : rels[r].rhs;
        const Word& to = l2r ? rels[r].rhs : rels[r].lhs;
        if (pos + from.size() > w.size() ||
            !std::equal(from.begin(), from.end(), w.begin() + pos)) {
          continue;
        }
        Word next(w.begin(), w.begin() + pos);
        next.insert(next.end(), to.begin(), to.end());
        next.insert(next.end(), w.begin() + pos + from.size(), w.end());
        out.emplace_back(DerivationStep{pos, r, l2r}, std::move(next));
      }
    }
  }
  return out;
}

}  // namespace detail

//! Breadth-first search for a rewrite derivation u -> ... -> v of length at
//! most max_depth. Independent of the graph machinery on purpose: it knows
//! only how to substitute one relation side for the other.
inline DerivationResult derivation_bfs(const Presentation& p, const Word& u, const Word& v,
                                       size_t max_depth, size_t max_states = 1000000) {
  if (!is_positive(u) || !is_positive(v)) {
    throw Error(Error::Code::NotPositive, "rewriting is defined on positive words only");
  }
  if (u == v) {
    return DerivationResult{true, 0, {}};
  }
  std::map<Word, std::pair<Word, DerivationStep>> parent;
  std::map<Word, size_t> depth;
  std::deque<Word> queue{u};
  depth[u] = 0;
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    size_t d = depth.at(w);
    if (d >= max_depth) {
      continue;
    }
    for (auto& [step, next] : detail::rewrite_neighbors(p, w)) {
      if (depth.find(next) != depth.end()) {
        continue;
      }
      depth[next] = d + 1;
      parent.emplace(next, std::make_pair(w, step));
      if (next == v) {
        DerivationResult res;
        res.found = true;
        res.length = d + 1;
        Word cur = v;
        while (cur != u) {
          auto& [prev, st] = parent.at(cur);
          res.path.emplace_back(st, cur);
          cur = prev;
        }
        std::reverse(res.path.begin(), res.path.end());
        return res;
      }
      if (depth.size() > max_states) {
        return DerivationResult{};
      }
      queue.push_back(next);
    }
  }
  return DerivationResult{};
}

//! All words reachable from w by at most max_depth rewrites, sorted.
inline std::vector<Word> derivation_ball(const Presentation& p, const Word& w, size_t max_depth,
                                         size_t max_states = 1000000) {
  if (!is_positive(w)) {
    throw Error(Error::Code::NotPositive, "rewriting is defined on positive words only");
  }
  std::map<Word, size_t> depth;
  std::deque<Word> queue{w};
  depth[w] = 0;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    size_t d = depth.at(cur);
    if (d >= max_depth) {
      continue;
    }
    for (auto& [step, next] : detail::rewrite_neighbors(p, cur)) {
      (void)step;
      if (depth.find(next) != depth.end() || depth.size() > max_states) {
        continue;
      }
      depth[next] = d + 1;
      queue.push_back(next);
    }
  }
  std::vector<Word> out;
  out.reserve(depth.size());
  for (const auto& [word, d] : depth) {
    out.push_back(word);
  }
  return out;
}

//! Equality oracle for positive words over cycle-free side-graph
//! presentations, where monoid equality of positive words coincides with
//! rewrite derivability. A found derivation certifies equality; absence
//! within the bound proves nothing, so the answer is never a definite no.
struct OracleAnswer {
  bool certain;  // true: equal, with a derivation; false: search bound hit
  DerivationResult derivation;
};

inline OracleAnswer oracle_equal_positive(const Presentation& p, const Word& u, const Word& v,
                                          size_t max_depth, size_t max_states = 1000000) {
  if (!is_adian(p)) {
    throw Error(Error::Code::NotAdian,
                "the rewrite oracle is sound only for cycle-free side graphs");
  }
  DerivationResult res = derivation_bfs(p, u, v, max_depth, max_states);
  return OracleAnswer{res.found, std::move(res)};
}

}  // namespace adian

#endif  // ADIAN_ORACLE_HPP_
