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

#include <array>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace essencemap {

using Token    = std::string;
using Tokens   = std::vector<Token>;
using TokenSet = std::set<Token>;

/// Lowercases ASCII letters and digits. Apostrophes and non-ASCII bytes are
/// dropped inside a word ("owner's" -> "owners"); any other ASCII punctuation
/// or whitespace separates words.
inline Tokens tokenize(std::string_view text)
{
  Tokens out;
  Token  current;
  auto   flush = [&] {
    if (!current.empty())
    {
      out.push_back(std::move(current));
      current.clear();
    }
  };
  for (char ch : text)
  {
    auto const c = static_cast<unsigned char>(ch);
    if (c >= 0x80 || c == '\'')
    {
      continue;
    }
    if (std::isalnum(c) != 0)
    {
      current.push_back(static_cast<char>(std::tolower(c)));
    }
    else
    {
      flush();
    }
  }
  flush();
  return out;
}

/// Splits a concept name on case changes: "ProductBacklog" -> [product, backlog].
inline Tokens name_tokens(std::string_view name)
{
  std::string spaced;
  for (std::size_t i = 0; i < name.size(); ++i)
  {
    auto const c = static_cast<unsigned char>(name[i]);
    if (i > 0 && std::isupper(c) != 0 && std::islower(static_cast<unsigned char>(name[i - 1])) != 0)
    {
      spaced.push_back(' ');
    }
    spaced.push_back(name[i]);
  }
  return tokenize(spaced);
}

/// One pass of the suffix rules -ies->y, -ing, -ed, -es, -s. The first rule
/// whose suffix matches and leaves a stem of at least three characters wins.
/// Tokens shorter than four characters are left alone.
inline Token stem_once(Token const &token)
{
  if (token.size() < 4)
  {
    return token;
  }
  struct Rule
  {
    std::string_view suffix;
    std::string_view replacement;
  };
  static constexpr std::array<Rule, 5> rules{{
      {"ies", "y"},
      {"ing", ""},
      {"ed", ""},
      {"es", ""},
      {"s", ""},
  }};
  std::string_view const t(token);
  for (auto const &r : rules)
  {
    if (t.size() <= r.suffix.size() || t.substr(t.size() - r.suffix.size()) != r.suffix)
    {
      continue;
    }
    auto const base = t.substr(0, t.size() - r.suffix.size());
    if (base.size() + r.replacement.size() < 3)
    {
      continue;
    }
    return std::string(base) + std::string(r.replacement);
  }
  return token;
}

/// Applies stem_once until nothing changes, so stems are fixed points.
inline Token stem(Token token)
{
  for (;;)
  {
    auto next = stem_once(token);
    if (next == token)
    {
      return token;
    }
    token = std::move(next);
  }
}

inline TokenSet const &builtin_stopwords()
{
  static TokenSet const words{
      // articles
      "a", "an", "the",
      // prepositions
      "of", "to", "in", "on", "at", "by", "for", "with", "from", "into", "through", "about", "as",
      "within", "over", "under", "between", "after", "before", "during", "without", "up", "out",
      "per", "via",
      // conjunctions
      "and", "or", "but", "nor", "so", "yet", "if", "than", "that", "while", "whether",
      // pronouns
      "it", "its", "they", "them", "their", "this", "these", "those", "he", "she", "him", "her",
      "his", "we", "us", "our", "you", "your", "i", "me", "my", "what", "which", "who", "whom",
      "whose",
      "be"};
  return words;
}

inline TokenSet const &builtin_verbs()
{
  static TokenSet const words{
      // to-be forms
      "is", "are", "am", "was", "were", "be", "been", "being",
      // modals
      "must", "may", "might", "can", "could", "shall", "should", "will", "would",
      // verbs used by the bundled corpora
      "need", "needs", "progress", "continue", "provides", "refers", "address", "satisfy",
      "meet", "stay", "evolve"};
  return words;
}

/// Tuning data for heuristic scoring: synonym groups plus additions to the
/// built-in stopword and verb lists. Synonyms and verbs are matched on stems;
/// stopwords on either the surface token or its stem.
class Lexicon
{
public:
  Lexicon() = default;

  /// Adds a synonym group canonicalizing to its first member. Throws when a
  /// token repeats inside the group or when a member's stem already belongs
  /// to another group.
  void add_synonym_group(std::vector<Token> const &group)
  {
    if (group.empty())
    {
      throw Error(ErrorKind::parse, "empty synonym group");
    }
    auto const canonical = stem(group.front());
    std::set<Token> seen;
    std::set<Token> members;
    for (auto const &member : group)
    {
      if (!members.insert(member).second)
      {
        throw Error(ErrorKind::parse, "token '" + member + "' repeated in synonym group");
      }
      auto const s = stem(member);
      if (synonyms_.count(s) != 0)
      {
        throw Error(ErrorKind::parse, "token '" + member + "' appears in two synonym groups");
      }
      seen.insert(s);
    }
    for (auto const &s : seen)
    {
      synonyms_.emplace(s, canonical);
    }
    groups_.push_back(group);
  }

  void add_stopword(Token const &t)
  {
    stopwords_.insert(t);
  }

  void add_verb(Token const &t)
  {
    verbs_.insert(t);
    verb_stems_.insert(stem(t));
  }

  std::vector<std::vector<Token>> const &synonym_groups() const noexcept
  {
    return groups_;
  }

  TokenSet const &extra_stopwords() const noexcept
  {
    return stopwords_;
  }

  TokenSet const &extra_verbs() const noexcept
  {
    return verbs_;
  }

  bool is_stopword(Token const &t) const
  {
    auto const &builtin = builtin_stopwords();
    if (builtin.count(t) != 0 || stopwords_.count(t) != 0)
    {
      return true;
    }
    auto const s = stem(t);
    return builtin.count(s) != 0 || stopwords_.count(s) != 0;
  }

  bool is_verb(Token const &t) const
  {
    if (builtin_verbs().count(t) != 0 || verbs_.count(t) != 0)
    {
      return true;
    }
    auto const s = stem(t);
    return builtin_verb_stems().count(s) != 0 || verb_stems_.count(s) != 0;
  }

  /// Canonical form of a stem: its group's canonical stem, or itself.
  Token synonym_of(Token const &stemmed) const
  {
    auto it = synonyms_.find(stemmed);
    return it == synonyms_.end() ? stemmed : it->second;
  }

private:
  static TokenSet const &builtin_verb_stems()
  {
    static TokenSet const stems = [] {
      TokenSet out;
      for (auto const &v : builtin_verbs())
      {
        out.insert(stem(v));
      }
      return out;
    }();
    return stems;
  }

  std::vector<std::vector<Token>> groups_;
  std::map<Token, Token>          synonyms_;
  TokenSet                        stopwords_;
  TokenSet                        verbs_;
  TokenSet                        verb_stems_;
};

/// Drops stopwords, stems, then maps each stem to its synonym canonical form.
/// Idempotent: every emitted token is a non-stopword fixed point.
inline TokenSet canonicalize_part(Tokens const &tokens, Lexicon const &lex)
{
  TokenSet out;
  for (auto const &t : tokens)
  {
    if (lex.is_stopword(t))
    {
      continue;
    }
    auto const canonical = lex.synonym_of(stem(t));
    if (!lex.is_stopword(canonical))
    {
      out.insert(canonical);
    }
  }
  return out;
}

/// Parts are similar when their canonical token sets intersect.
inline bool part_similar(Tokens const &p1, Tokens const &p2, Lexicon const &lex)
{
  auto const a = canonicalize_part(p1, lex);
  auto const b = canonicalize_part(p2, lex);
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end())
  {
    if (*ia < *ib)
    {
      ++ia;
    }
    else if (*ib < *ia)
    {
      ++ib;
    }
    else
    {
      return true;
    }
  }
  return false;
}

}  // namespace essencemap
