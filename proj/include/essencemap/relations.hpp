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
#include "essencemap/match_set.hpp"
#include "essencemap/percentage.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

// Relational operations between two concepts. Every operation takes the
// MatchSet produced for (c1, c2); its pairs stand for the shared attributes.

namespace essencemap {

/// Lowercased, whitespace-collapsed, trimmed label.
inline std::string normalize_label(std::string_view text)
{
  std::string out;
  bool        pending_space = false;
  for (char c : text)
  {
    if (detail::is_space(c))
    {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space)
    {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

inline bool related(Concept const &, Concept const &, MatchSet const &m)
{
  return !m.empty();
}

inline bool independent(Concept const &c1, Concept const &c2, MatchSet const &m)
{
  return !related(c1, c2, m);
}

/// 100 * k / (|A1| + |A2| - k), matched pairs counted once in the union.
inline Percentage similarity(Concept const &c1, Concept const &c2, MatchSet const &m)
{
  auto const n1 = c1.attributes.size();
  auto const n2 = c2.attributes.size();
  if (n1 == 0 && n2 == 0)
  {
    throw Error(ErrorKind::domain,
                "no attributes to compare between '" + c1.name + "' and '" + c2.name + "'");
  }
  auto const k = m.size();
  return Percentage(k, n1 + n2 - k);
}

/// Object sets compared as sets of normalized labels.
inline bool same_objects(Concept const &c1, Concept const &c2)
{
  auto labels = [](Concept const &c) {
    std::vector<std::string> out;
    out.reserve(c.objects.size());
    for (auto const &o : c.objects)
    {
      out.push_back(normalize_label(o.text));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  return labels(c1) == labels(c2);
}

/// Fully matched attributes and identical object sets.
inline bool equivalent(Concept const &c1, Concept const &c2, MatchSet const &m)
{
  auto const k = m.size();
  return similarity(c1, c2, m).is_full() && k == c1.attributes.size() &&
         k == c2.attributes.size() && same_objects(c1, c2);
}

/// c1's intension strictly contains c2's: every attribute of c2 is matched
/// and c1 has more attributes.
inline bool sub_concept(Concept const &c1, Concept const &c2, MatchSet const &m)
{
  return m.size() == c2.attributes.size() && c1.attributes.size() > c2.attributes.size();
}

inline bool super_concept(Concept const &c1, Concept const &c2, MatchSet const &m)
{
  return sub_concept(c2, c1, m.mirrored());
}

}  // namespace essencemap
