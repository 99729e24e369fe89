#ifndef ADIAN_BS_FAMILY_HPP_
#define ADIAN_BS_FAMILY_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "errors.hpp"
#include "presentation.hpp"
#include "stephen.hpp"
#include "word.hpp"
#include "wordgraph.hpp"

namespace adian {

//! Parameters of a one-relation presentation of the shape a b^m = b^n a
//! (in either written order). sides_swapped records that the presentation
//! lists the b^n a side first. The specialized engines below need m != n;
//! mirrored() presentations (m < n) are handled by reversal.
struct BsParams {
  size_t m = 0;
  size_t n = 0;
  uint32_t a_gen = 0;
  uint32_t b_gen = 0;
  bool sides_swapped = false;

  bool mirrored() const { return m < n; }
};

inline std::optional<BsParams> detect_bs(const Presentation& p) {
  auto shape = detail::match_bs_shape(p);
  if (!shape) {
    return std::nullopt;
  }
  return BsParams{shape->m, shape->n, shape->a_gen, shape->b_gen, shape->sides_swapped};
}

struct BsBuildStats {
  size_t waves_a = 0;      // passes over a-sources that changed the complex
  size_t waves_b = 0;      // passes over b-sources that changed the complex
  size_t tail_rounds = 0;  // rounds the finishing expansion run still needed
};

struct BsClosureResult {
  ClosureOutcome outcome;
  BsBuildStats stats;
};

inline BsClosureResult sc_pos_block(const Presentation& p, const BsParams& bs, size_t k,
                                    size_t t, Budget budget);
inline BsClosureResult sc_neg_block(const Presentation& p, const BsParams& bs, size_t t,
                                    size_t k, Budget budget);

namespace detail {

inline Letter bs_a(const BsParams& bs) { return Letter::positive(bs.a_gen); }
inline Letter bs_b(const BsParams& bs) { return Letter::positive(bs.b_gen); }

//! Trace of the unique maximal x-labeled run from v (determinism makes the
//! successor unique). Guarded against directed cycles.
inline PathTrace follow_run(const WordGraph& g, vertex_type v, Letter x) {
  PathTrace run{g.find(v)};
  while (auto t = g.target(run.back(), x)) {
    run.push_back(*t);
    if (run.size() > g.num_vertices() + 1) {
      throw Error(Error::Code::PositiveCycle, "run does not terminate");
    }
  }
  return run;
}

//! The trace of the a b^m side and of the b^n a side of an attach result,
//! regardless of which side the presentation wrote first.
inline const PathTrace& bs_pos_trace(const BsParams& bs, const AttachResult& r) {
  return bs.sides_swapped ? r.rhs_trace : r.lhs_trace;
}
inline const PathTrace& bs_neg_trace(const BsParams& bs, const AttachResult& r) {
  return bs.sides_swapped ? r.lhs_trace : r.rhs_trace;
}

//! Column scheme for a run a^k b^t hanging together as run + seg: process
//! the a-edges right to left; at each one, repeatedly span faces whose
//! a b^m side runs along the current b-segment, chaining the glued b^n
//! pieces into the segment for the next column. Needs m > n; all pastes
//! happen at vertices without the pasted first letter, so no folding ever
//! becomes necessary.
inline bool apply_pos_block(Complex& c, const BsParams& bs, const std::vector<vertex_type>& run,
                            PathTrace seg, const Budget& budget, bool& exhausted) {
  bool changed = false;
  for (size_t col = run.size() - 1; col >= 1; --col) {
    size_t s = seg.size() - 1;
    if (s < bs.m) {
      break;
    }
    size_t q = s / bs.m;
    vertex_type g = run[col - 1];
    PathTrace next_seg{g};
    for (size_t j = 1; j <= q; ++j) {
      if (c.graph.num_vertices() > budget.max_vertices) {
        exhausted = true;
        return changed;
      }
      AttachResult r = attach_face(c, 0, g);
      changed = changed || r.face_added || r.glued;
      const PathTrace& neg = bs_neg_trace(bs, r);
      for (size_t i = 1; i <= bs.n; ++i) {
        next_seg.push_back(neg[i]);
      }
      g = neg[bs.n];
    }
    seg = std::move(next_seg);
  }
  return changed;
}

//! Column scheme for a run b^t a^k (seg ends where run starts): process the
//! a-edges left to right; at each one, span faces whose b^n a side climbs
//! the tail of the current b-segment, the glued a b^m sides providing both
//! the next cells' endpoints and the segment for the next column.
inline bool apply_neg_block(Complex& c, const BsParams& bs, PathTrace seg,
                            const std::vector<vertex_type>& run, const Budget& budget,
                            bool& exhausted) {
  bool changed = false;
  for (size_t col = 1; col < run.size(); ++col) {
    size_t s = seg.size() - 1;
    if (s < bs.n) {
      break;
    }
    size_t q = s / bs.n;
    std::vector<PathTrace> pos_traces;
    for (size_t j = 1; j <= q; ++j) {
      if (c.graph.num_vertices() > budget.max_vertices) {
        exhausted = true;
        return changed;
      }
      AttachResult r = attach_face(c, 0, seg[s - j * bs.n]);
      changed = changed || r.face_added || r.glued;
      pos_traces.push_back(bs_pos_trace(bs, r));
    }
    PathTrace next_seg{pos_traces[q - 1][1]};
    for (size_t j = q; j >= 1; --j) {
      for (size_t i = 2; i <= bs.m + 1; ++i) {
        next_seg.push_back(pos_traces[j - 1][i]);
      }
    }
    seg = std::move(next_seg);
  }
  return changed;
}

//! One pass over all a-sources (a-edge out, none in): apply the a^k b^t
//! column scheme along each maximal a-run and the b-run at its end.
inline bool pos_block_wave(Complex& c, const BsParams& bs, const Budget& budget,
                           bool& exhausted) {
  bool changed = false;
  Letter a = bs_a(bs), b = bs_b(bs);
  for (vertex_type v : c.graph.canonical_vertices()) {
    if (c.graph.num_vertices() > budget.max_vertices) {
      exhausted = true;
      return changed;
    }
    bool a_out = c.graph.target(v, a).has_value();
    bool a_in = c.graph.target(v, a.inverse()).has_value();
    if (!a_out || a_in) {
      continue;
    }
    std::vector<vertex_type> run = follow_run(c.graph, v, a);
    PathTrace seg = follow_run(c.graph, run.back(), b);
    changed = apply_pos_block(c, bs, run, std::move(seg), budget, exhausted) || changed;
    if (exhausted) {
      return changed;
    }
  }
  return changed;
}

//! One pass over all b-sources: apply the b^t a^k column scheme along each
//! maximal b-run and the a-run at its end.
inline bool neg_block_wave(Complex& c, const BsParams& bs, const Budget& budget,
                           bool& exhausted) {
  bool changed = false;
  Letter a = bs_a(bs), b = bs_b(bs);
  for (vertex_type v : c.graph.canonical_vertices()) {
    if (c.graph.num_vertices() > budget.max_vertices) {
      exhausted = true;
      return changed;
    }
    bool b_out = c.graph.target(v, b).has_value();
    bool b_in = c.graph.target(v, b.inverse()).has_value();
    if (!b_out || b_in) {
      continue;
    }
    PathTrace seg = follow_run(c.graph, v, b);
    std::vector<vertex_type> run = follow_run(c.graph, seg.back(), a);
    changed = apply_neg_block(c, bs, std::move(seg), run, budget, exhausted) || changed;
    if (exhausted) {
      return changed;
    }
  }
  return changed;
}

inline void require_direct(const BsParams& bs) {
  if (bs.m == bs.n) {
    throw Error(Error::Code::NotApplicable,
                "the specialized engine needs distinct exponents; use the generic closure");
  }
}

inline BsClosureResult finish_exhausted(Complex host, BsBuildStats stats) {
  size_t merges = static_cast<size_t>(host.graph.fold_count());
  return BsClosureResult{
      ClosureOutcome{ClosureStatus::Exhausted, std::move(host), 0, merges}, stats};
}

inline BsClosureResult finish_with_tail(Complex host, BsBuildStats stats, const Budget& budget) {
  ClosureOutcome out = close(std::move(host), budget);
  stats.tail_rounds = out.rounds_used;
  return BsClosureResult{std::move(out), stats};
}

//! Alternate the two wave passes to a fixpoint, then verify closedness with
//! plain expansion rounds (expected to change nothing; any stragglers it
//! does find are still handled correctly).
inline BsClosureResult waves_to_closure(Complex host, const BsParams& bs, const Budget& budget) {
  BsBuildStats stats;
  bool exhausted = false;
  size_t iterations = 0;
  while (true) {
    if (iterations >= budget.max_rounds || host.graph.num_vertices() > budget.max_vertices) {
      exhausted = true;
      break;
    }
    bool a = pos_block_wave(host, bs, budget, exhausted);
    if (a) {
      ++stats.waves_a;
    }
    if (exhausted) {
      break;
    }
    bool b = neg_block_wave(host, bs, budget, exhausted);
    if (b) {
      ++stats.waves_b;
    }
    if (exhausted) {
      break;
    }
    ++iterations;
    if (!a && !b) {
      break;
    }
  }
  if (exhausted) {
    return finish_exhausted(std::move(host), stats);
  }
  return finish_with_tail(std::move(host), stats, budget);
}

//! Carry a result computed over the mirrored presentation back: reverse the
//! complex (which restores the original relation orientation) and keep the
//! construction statistics.
inline BsClosureResult mirror_back(BsClosureResult internal) {
  Complex ext = reversed(internal.outcome.complex);
  ClosureOutcome out{internal.outcome.status, std::move(ext), internal.outcome.rounds_used,
                     internal.outcome.fold_merges};
  return BsClosureResult{std::move(out), internal.stats};
}

inline BsParams mirrored_params(const Presentation& p_int) {
  auto bs = detect_bs(p_int);
  if (!bs || bs->m <= bs->n) {
    throw Error(Error::Code::NotApplicable, "mirrored presentation is not of the direct shape");
  }
  return *bs;
}

}  // namespace detail

//! Closure of a^k b^t by the right-to-left column scheme (m > n directly,
//! m < n through the mirror, which turns it into the left-to-right scheme
//! over b^t a^k).
inline BsClosureResult sc_pos_block(const Presentation& p, const BsParams& bs, size_t k,
                                    size_t t, Budget budget = {}) {
  detail::require_direct(bs);
  if (bs.mirrored()) {
    Presentation p_int = reversed_presentation(p);
    return detail::mirror_back(
        sc_neg_block(p_int, detail::mirrored_params(p_int), t, k, budget));
  }
  Word w = concat(repeated(detail::bs_a(bs), k), repeated(detail::bs_b(bs), t));
  Complex host(p, linear_graph(p, w));
  PathTrace line = *read_word(host.graph, host.graph.alpha(), w);
  std::vector<vertex_type> run(line.begin(), line.begin() + k + 1);
  PathTrace seg(line.begin() + k, line.end());
  bool exhausted = false;
  detail::apply_pos_block(host, bs, run, std::move(seg), budget, exhausted);
  if (exhausted) {
    return detail::finish_exhausted(std::move(host), BsBuildStats{});
  }
  return detail::finish_with_tail(std::move(host), BsBuildStats{}, budget);
}

//! Closure of b^t a^k by the left-to-right column scheme.
inline BsClosureResult sc_neg_block(const Presentation& p, const BsParams& bs, size_t t,
                                    size_t k, Budget budget = {}) {
  detail::require_direct(bs);
  if (bs.mirrored()) {
    Presentation p_int = reversed_presentation(p);
    return detail::mirror_back(
        sc_pos_block(p_int, detail::mirrored_params(p_int), k, t, budget));
  }
  Word w = concat(repeated(detail::bs_b(bs), t), repeated(detail::bs_a(bs), k));
  Complex host(p, linear_graph(p, w));
  PathTrace line = *read_word(host.graph, host.graph.alpha(), w);
  PathTrace seg(line.begin(), line.begin() + t + 1);
  std::vector<vertex_type> run(line.begin() + t, line.end());
  bool exhausted = false;
  detail::apply_neg_block(host, bs, std::move(seg), run, budget, exhausted);
  if (exhausted) {
    return detail::finish_exhausted(std::move(host), BsBuildStats{});
  }
  return detail::finish_with_tail(std::move(host), BsBuildStats{}, budget);
}

//! Closure of an arbitrary positive word over a b^m = b^n a, by alternating
//! the two block waves to a fixpoint. No folding occurs: every paste starts
//! at a vertex lacking the pasted letter.
inline BsClosureResult sc_positive_word(const Presentation& p, const BsParams& bs, const Word& w,
                                        Budget budget = {}) {
  detail::require_direct(bs);
  if (!is_positive(w)) {
    throw Error(Error::Code::NotPositive, "the wave construction needs a positive word");
  }
  if (bs.mirrored()) {
    Presentation p_int = reversed_presentation(p);
    return detail::mirror_back(
        sc_positive_word(p_int, detail::mirrored_params(p_int), reversed(w), budget));
  }
  Complex host(p, linear_graph(p, w));
  return detail::waves_to_closure(std::move(host), bs, budget);
}

//! Word equality for positive words through the specialized engine, with
//! the mutual-acceptance cross-check mirroring the generic procedure.
struct BsEqualResult {
  TriBool answer;
  BsClosureResult left;
  BsClosureResult right;
};

inline BsEqualResult bs_equal_positive(const Presentation& p, const BsParams& bs, const Word& u,
                                       const Word& v, Budget budget = {}) {
  BsClosureResult cu = sc_positive_word(p, bs, u, budget);
  BsClosureResult cv = sc_positive_word(p, bs, v, budget);
  bool v_in_u = accepts(cu.outcome.complex.graph, v);
  bool u_in_v = accepts(cv.outcome.complex.graph, u);
  bool both_closed = cu.outcome.status == ClosureStatus::Closed &&
                     cv.outcome.status == ClosureStatus::Closed;
  TriBool answer = TriBool::unknown(kBudgetReason);
  if (both_closed) {
    bool iso = birooted_isomorphic(cu.outcome.complex.graph, cv.outcome.complex.graph);
    if (iso != (v_in_u && u_in_v)) {
      throw std::logic_error("closed complexes disagree with mutual acceptance");
    }
    answer = iso ? TriBool::yes() : TriBool::no();
  } else if (v_in_u && u_in_v) {
    answer = TriBool::yes();
  } else if ((cu.outcome.status == ClosureStatus::Closed && !v_in_u) ||
             (cv.outcome.status == ClosureStatus::Closed && !u_in_v)) {
    answer = TriBool::no();
  }
  return BsEqualResult{std::move(answer), std::move(cu), std::move(cv)};
}

}  // namespace adian

#endif  // ADIAN_BS_FAMILY_HPP_
