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
#include "essencemap/error.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace essencemap {

/// Typological similarity level of an attribute pair: the number of similar
/// sentence parts (subject, predicate, object), 0..3.
class LtaLevel
{
public:
  constexpr LtaLevel() = default;

  explicit LtaLevel(int value)
    : value_(value)
  {
    if (value < 0 || value > 3)
    {
      throw Error(ErrorKind::domain, "level " + std::to_string(value) + " outside 0..3");
    }
  }

  constexpr int value() const noexcept
  {
    return value_;
  }

  constexpr auto operator<=>(LtaLevel const &) const = default;

private:
  int value_ = 0;
};

struct CandidatePair
{
  AttributeRef left;
  AttributeRef right;
  LtaLevel     level;

  bool operator==(CandidatePair const &) const = default;

  CandidatePair mirrored() const
  {
    return {right, left, level};
  }
};

/// Orders pairs by (left, right) reference.
inline bool pair_ref_less(CandidatePair const &a, CandidatePair const &b)
{
  if (a.left != b.left)
  {
    return a.left < b.left;
  }
  return a.right < b.right;
}

/// A bijective pairing of attributes between two concepts; the computable
/// stand-in for the intersection of their attribute sets. Pairs are kept in
/// (left, right) order.
struct MatchSet
{
  std::vector<CandidatePair> pairs;
  std::size_t                left_size  = 0;
  std::size_t                right_size = 0;

  bool operator==(MatchSet const &) const = default;

  std::size_t size() const noexcept
  {
    return pairs.size();
  }

  bool empty() const noexcept
  {
    return pairs.empty();
  }

  int total_level() const noexcept
  {
    int sum = 0;
    for (auto const &p : pairs)
    {
      sum += p.level.value();
    }
    return sum;
  }

  MatchSet mirrored() const
  {
    MatchSet out{{}, right_size, left_size};
    out.pairs.reserve(pairs.size());
    for (auto const &p : pairs)
    {
      out.pairs.push_back(p.mirrored());
    }
    std::sort(out.pairs.begin(), out.pairs.end(), pair_ref_less);
    return out;
  }

  /// True when no reference occurs twice and the size bound holds.
  bool is_bijective() const
  {
    for (std::size_t i = 0; i < pairs.size(); ++i)
    {
      for (std::size_t j = i + 1; j < pairs.size(); ++j)
      {
        if (pairs[i].left == pairs[j].left || pairs[i].right == pairs[j].right)
        {
          return false;
        }
      }
    }
    return pairs.size() <= std::min(left_size, right_size);
  }
};

/// Identity matching of a concept with itself at the given level.
inline MatchSet identity_matching(std::string const &context, Concept const &c, LtaLevel level)
{
  MatchSet m{{}, c.attributes.size(), c.attributes.size()};
  for (auto const &a : c.attributes)
  {
    AttributeRef ref{context, c.name, a.id};
    m.pairs.push_back({ref, ref, level});
  }
  std::sort(m.pairs.begin(), m.pairs.end(), pair_ref_less);
  return m;
}

}  // namespace essencemap
