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
#include "essencemap/lexicon.hpp"
#include "essencemap/match_set.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

// Linguistic typological analysis: an attribute statement is read as a simple
// sentence of subject, predicate and object parts, and two statements score
// one point per similar part.

namespace essencemap {

/// Placeholder predicate for statements in which no verb was found.
inline constexpr std::string_view kNoPredicate = "\xe2\x80\xb9none\xe2\x80\xba";

struct SpoTriple
{
  Tokens      subject;
  Tokens      predicate;
  Tokens      object_part;
  std::string owner;
  bool        verbless = false;

  bool operator==(SpoTriple const &) const = default;
};

/// Splits a statement into subject / predicate / object.
///
/// Only the first sentence (up to the first '.') is searched for the
/// predicate, which is the first maximal run of verb tokens. Tokens before it
/// form the subject; when there are none the owning concept's name stands in,
/// since attribute statements are usually written with the concept as implicit
/// subject ("are the definition of ..."). Everything after the predicate,
/// including any later sentences, is the object part.
///
/// A statement without a verb yields predicate [kNoPredicate], the owner as
/// subject and every token as object, with `verbless` set.
inline SpoTriple extract_spo(std::string_view text, std::string_view owner, Lexicon const &lex)
{
  if (detail::trim(text).empty())
  {
    throw Error(ErrorKind::domain, "empty attribute statement for " + std::string(owner));
  }
  auto const period = text.find('.');
  auto const first  = tokenize(text.substr(0, period));
  auto const rest   = period == std::string_view::npos ? Tokens{} : tokenize(text.substr(period + 1));

  SpoTriple spo;
  spo.owner = std::string(owner);

  std::size_t begin = 0;
  while (begin < first.size() && !lex.is_verb(first[begin]))
  {
    ++begin;
  }
  if (begin == first.size())
  {
    spo.verbless = true;
    spo.subject  = name_tokens(owner);
    spo.predicate.emplace_back(kNoPredicate);
    spo.object_part = first;
    spo.object_part.insert(spo.object_part.end(), rest.begin(), rest.end());
    return spo;
  }
  auto end = begin;
  while (end < first.size() && lex.is_verb(first[end]))
  {
    ++end;
  }
  spo.subject.assign(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(begin));
  if (spo.subject.empty())
  {
    spo.subject = name_tokens(owner);
  }
  spo.predicate.assign(first.begin() + static_cast<std::ptrdiff_t>(begin),
                       first.begin() + static_cast<std::ptrdiff_t>(end));
  spo.object_part.assign(first.begin() + static_cast<std::ptrdiff_t>(end), first.end());
  spo.object_part.insert(spo.object_part.end(), rest.begin(), rest.end());
  return spo;
}

/// Number of similar parts between two decomposed statements. A verbless
/// statement's predicate is never similar to anything.
inline LtaLevel heuristic_level(SpoTriple const &s1, SpoTriple const &s2, Lexicon const &lex)
{
  int level = 0;
  if (part_similar(s1.subject, s2.subject, lex))
  {
    ++level;
  }
  if (!s1.verbless && !s2.verbless && part_similar(s1.predicate, s2.predicate, lex))
  {
    ++level;
  }
  if (part_similar(s1.object_part, s2.object_part, lex))
  {
    ++level;
  }
  return LtaLevel(level);
}

/// Expert-assigned levels keyed by unordered attribute pair.
class AnnotationTable
{
public:
  using Key = std::pair<AttributeRef, AttributeRef>;

  static Key key(AttributeRef a, AttributeRef b)
  {
    if (b < a)
    {
      std::swap(a, b);
    }
    return {std::move(a), std::move(b)};
  }

  /// Returns false if the unordered pair already has an entry.
  bool insert(AttributeRef const &a, AttributeRef const &b, LtaLevel level)
  {
    return entries_.emplace(key(a, b), level).second;
  }

  std::optional<LtaLevel> find(AttributeRef const &a, AttributeRef const &b) const
  {
    auto it = entries_.find(key(a, b));
    if (it == entries_.end())
    {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t size() const noexcept
  {
    return entries_.size();
  }

  bool empty() const noexcept
  {
    return entries_.empty();
  }

  std::map<Key, LtaLevel> const &entries() const noexcept
  {
    return entries_;
  }

private:
  std::map<Key, LtaLevel> entries_;
};

enum class ScoringMode
{
  heuristic,
  annotated,
  hybrid
};

inline std::string_view to_string(ScoringMode mode)
{
  switch (mode)
  {
  case ScoringMode::heuristic:
    return "heuristic";
  case ScoringMode::annotated:
    return "annotated";
  case ScoringMode::hybrid:
    return "hybrid";
  }
  return "?";
}

inline ScoringMode parse_scoring_mode(std::string_view text)
{
  if (text == "heuristic")
  {
    return ScoringMode::heuristic;
  }
  if (text == "annotated")
  {
    return ScoringMode::annotated;
  }
  if (text == "hybrid")
  {
    return ScoringMode::hybrid;
  }
  throw Error(ErrorKind::usage, "unknown mode '" + std::string(text) + "'");
}

/// An attribute statement together with where it lives.
struct StatementRef
{
  AttributeRef     ref;
  std::string_view text;
};

/// Level of one attribute pair under the given mode. Symmetric in its two
/// statements. In annotated mode a missing table entry is an error.
inline LtaLevel score_pair(StatementRef const &s1, StatementRef const &s2, Lexicon const &lex,
                           AnnotationTable const &annotations, ScoringMode mode)
{
  if (mode != ScoringMode::heuristic)
  {
    if (auto level = annotations.find(s1.ref, s2.ref))
    {
      return *level;
    }
    if (mode == ScoringMode::annotated)
    {
      throw Error(ErrorKind::reference,
                  "unannotated pair " + s1.ref.str() + " " + s2.ref.str());
    }
  }
  return heuristic_level(extract_spo(s1.text, s1.ref.concept_name, lex),
                         extract_spo(s2.text, s2.ref.concept_name, lex), lex);
}

}  // namespace essencemap
