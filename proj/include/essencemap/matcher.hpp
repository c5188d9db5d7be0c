#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The essencemap Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "essencemap/concept.hpp"
#include "essencemap/lexicon.hpp"
#include "essencemap/lta.hpp"
#include "essencemap/match_set.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace essencemap {

/// A concept located in its context.
struct ConceptView
{
  std::string const &context;
  Concept const     &concept_;

  ConceptRef ref() const
  {
    return {context, concept_.name};
  }

  AttributeRef attribute_ref(AttributeStatement const &a) const
  {
    return {context, concept_.name, a.id};
  }
};

/// Everything pair scoring needs besides the two concepts.
struct ScoringConfig
{
  Lexicon const         &lexicon;
  AnnotationTable const &annotations;
  ScoringMode            mode      = ScoringMode::hybrid;
  int                    threshold = 2;
};

/// Levels of all |A1| x |A2| attribute pairs, in (left, right) order.
inline std::vector<CandidatePair> level_matrix(ConceptView const &c1, ConceptView const &c2,
                                               ScoringConfig const &cfg)
{
  std::vector<CandidatePair> out;
  out.reserve(c1.concept_.attributes.size() * c2.concept_.attributes.size());
  for (auto const &a : c1.concept_.attributes)
  {
    for (auto const &b : c2.concept_.attributes)
    {
      StatementRef const s1{c1.attribute_ref(a), a.text};
      StatementRef const s2{c2.attribute_ref(b), b.text};
      out.push_back({s1.ref, s2.ref, score_pair(s1, s2, cfg.lexicon, cfg.annotations, cfg.mode)});
    }
  }
  std::sort(out.begin(), out.end(), pair_ref_less);
  return out;
}

/// Pairs at or above the threshold, sorted by level descending, then left
/// and right reference ascending.
inline std::vector<CandidatePair> candidate_pairs(ConceptView const &c1, ConceptView const &c2,
                                                  ScoringConfig const &cfg)
{
  if (cfg.threshold < 1 || cfg.threshold > 3)
  {
    throw Error(ErrorKind::usage, "threshold must be 1, 2 or 3");
  }
  auto all = level_matrix(c1, c2, cfg);
  std::vector<CandidatePair> out;
  for (auto &p : all)
  {
    if (p.level.value() >= cfg.threshold)
    {
      out.push_back(std::move(p));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](auto const &a, auto const &b) {
    return a.level > b.level;
  });
  return out;
}

namespace detail {

struct MatchingValue
{
  std::size_t cardinality = 0;
  int         weight      = 0;

  bool operator==(MatchingValue const &) const = default;
};

struct Edge
{
  std::size_t left;
  std::size_t right;
  int         level;
};

/// Maximum-cardinality matching of greatest total level over `edges`, by
/// successive shortest augmenting paths (Bellman-Ford on the residual graph,
/// cost = -level). Vertices flagged in `left_used` / `right_used` are
/// unavailable. Only the optimum value is returned.
inline MatchingValue best_matching_value(std::vector<Edge> const &edges, std::size_t n_left,
                                         std::size_t n_right, std::vector<bool> const &left_used,
                                         std::vector<bool> const &right_used)
{
  // Node layout: source, lefts, rights, sink.
  std::size_t const source = 0;
  std::size_t const sink   = 1 + n_left + n_right;
  std::size_t const n      = sink + 1;

  struct Arc
  {
    std::size_t to;
    int         cap;
    int         cost;
  };
  std::vector<Arc>                      arcs;
  std::vector<std::vector<std::size_t>> out(n);
  auto add_arc = [&](std::size_t from, std::size_t to, int cost) {
    out[from].push_back(arcs.size());
    arcs.push_back({to, 1, cost});
    out[to].push_back(arcs.size());
    arcs.push_back({from, 0, -cost});
  };
  for (std::size_t l = 0; l < n_left; ++l)
  {
    if (!left_used[l])
    {
      add_arc(source, 1 + l, 0);
    }
  }
  for (std::size_t r = 0; r < n_right; ++r)
  {
    if (!right_used[r])
    {
      add_arc(1 + n_left + r, sink, 0);
    }
  }
  for (auto const &e : edges)
  {
    if (!left_used[e.left] && !right_used[e.right])
    {
      add_arc(1 + e.left, 1 + n_left + e.right, -e.level);
    }
  }

  MatchingValue value;
  constexpr int unreached = std::numeric_limits<int>::max();
  for (;;)
  {
    std::vector<int>         dist(n, unreached);
    std::vector<std::size_t> via(n, arcs.size());
    dist[source] = 0;
    for (std::size_t round = 0; round + 1 < n; ++round)
    {
      bool changed = false;
      for (std::size_t u = 0; u < n; ++u)
      {
        if (dist[u] == unreached)
        {
          continue;
        }
        for (auto const a : out[u])
        {
          auto const &arc = arcs[a];
          if (arc.cap > 0 && dist[u] + arc.cost < dist[arc.to])
          {
            dist[arc.to] = dist[u] + arc.cost;
            via[arc.to]  = a;
            changed      = true;
          }
        }
      }
      if (!changed)
      {
        break;
      }
    }
    if (dist[sink] == unreached)
    {
      return value;
    }
    for (auto v = sink; v != source;)
    {
      auto const a = via[v];
      arcs[a].cap -= 1;
      arcs[a ^ 1].cap += 1;
      v = arcs[a ^ 1].to;
    }
    ++value.cardinality;
    value.weight -= dist[sink];
  }
}

inline MatchSet select_matching(std::vector<CandidatePair> candidates, std::size_t left_size,
                                std::size_t right_size)
{
  MatchSet result{{}, left_size, right_size};
  if (candidates.empty())
  {
    return result;
  }

  // One edge per (left, right); a repeated pair keeps its highest level.
  std::sort(candidates.begin(), candidates.end(), [](auto const &a, auto const &b) {
    if (a.left != b.left || a.right != b.right)
    {
      return pair_ref_less(a, b);
    }
    return a.level > b.level;
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](auto const &a, auto const &b) {
                                 return a.left == b.left && a.right == b.right;
                               }),
                   candidates.end());

  std::vector<AttributeRef> lefts;
  std::vector<AttributeRef> rights;
  for (auto const &c : candidates)
  {
    lefts.push_back(c.left);
    rights.push_back(c.right);
  }
  for (auto *v : {&lefts, &rights})
  {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  auto index_of = [](std::vector<AttributeRef> const &v, AttributeRef const &r) {
    return static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), r) - v.begin());
  };

  // Edges in (left, right) order: greedily keeping the earliest edge that
  // still admits an optimal completion yields the lexicographically smallest
  // optimal pair list.
  std::vector<Edge> edges;
  for (auto const &c : candidates)
  {
    edges.push_back({index_of(lefts, c.left), index_of(rights, c.right), c.level.value()});
  }

  std::vector<bool> left_used(lefts.size(), false);
  std::vector<bool> right_used(rights.size(), false);
  auto const        target = best_matching_value(edges, lefts.size(), rights.size(), left_used,
                                                 right_used);

  MatchingValue taken;
  for (std::size_t i = 0; i < edges.size() && taken.cardinality < target.cardinality; ++i)
  {
    auto const &e = edges[i];
    if (left_used[e.left] || right_used[e.right])
    {
      continue;
    }
    left_used[e.left]   = true;
    right_used[e.right] = true;
    std::vector<Edge> later(edges.begin() + static_cast<std::ptrdiff_t>(i) + 1, edges.end());
    auto const rest = best_matching_value(later, lefts.size(), rights.size(), left_used,
                                          right_used);
    MatchingValue const with{taken.cardinality + 1 + rest.cardinality,
                             taken.weight + e.level + rest.weight};
    if (with == target)
    {
      taken.cardinality += 1;
      taken.weight += e.level;
      result.pairs.push_back(candidates[i]);
    }
    else
    {
      left_used[e.left]   = false;
      right_used[e.right] = false;
    }
  }
  return result;
}

}  // namespace detail

/// Maximum-cardinality bijective matching over the candidate graph. Among
/// maximum matchings the one with the highest total level wins, then the
/// lexicographically smallest (left, right)-ordered pair list. The selection
/// is made with the two concepts in canonical order (context id, then concept
/// name) so that swapping the arguments yields the mirrored result.
inline MatchSet max_matching(std::vector<CandidatePair> const &candidates, std::size_t left_size,
                             std::size_t right_size)
{
  if (candidates.empty())
  {
    return MatchSet{{}, left_size, right_size};
  }
  auto const left_owner  = candidates.front().left.owner();
  auto const right_owner = candidates.front().right.owner();
  if (right_owner < left_owner)
  {
    std::vector<CandidatePair> flipped;
    flipped.reserve(candidates.size());
    for (auto const &c : candidates)
    {
      flipped.push_back(c.mirrored());
    }
    return detail::select_matching(std::move(flipped), right_size, left_size).mirrored();
  }
  return detail::select_matching(candidates, left_size, right_size);
}

}  // namespace essencemap
