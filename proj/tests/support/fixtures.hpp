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

#include "essencemap/corpus_io.hpp"
#include "essencemap/mapper.hpp"

#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef ESSENCEMAP_DATA_DIR
#error "ESSENCEMAP_DATA_DIR must point at the bundled corpora"
#endif

namespace essencemap::testing {

inline std::string data_path(std::string const &name)
{
  return std::string(ESSENCEMAP_DATA_DIR) + "/" + name;
}

inline SemanticContext load_context(std::string const &name)
{
  auto in = open_input(data_path(name));
  return parse_concepts(in);
}

inline SemanticContext essence()
{
  return load_context("essence.concepts");
}

inline SemanticContext scrum()
{
  return load_context("scrum.concepts");
}

inline Lexicon case_study_lexicon()
{
  auto in = open_input(data_path("paper.lex"));
  return parse_lexicon(in);
}

inline AnnotationTable case_study_annotations(SemanticContext const &a, SemanticContext const &b)
{
  auto in = open_input(data_path("paper-table1.ann"));
  return parse_annotations(in, {&a, &b});
}

inline SemanticContext parse_text(std::string const &text)
{
  std::istringstream in(text);
  return parse_concepts(in);
}

inline AttributeRef aref(std::string const &ctx, std::string const &concept_name,
                         std::string const &id)
{
  return {ctx, concept_name, id};
}

/// Concept with attributes ids[i] -> texts[i].
inline Concept make_concept(std::string name, std::vector<std::string> const &texts,
                            std::string const &prefix = "a")
{
  Concept c;
  c.name = std::move(name);
  for (std::size_t i = 0; i < texts.size(); ++i)
  {
    c.attributes.push_back({prefix + std::to_string(i + 1), texts[i]});
  }
  return c;
}

/// Random candidate graph between L/Left and R/Right; every pair gets a
/// uniform level in 0..3 and pairs below `threshold` are dropped.
inline std::vector<CandidatePair> random_candidates(std::mt19937 &rng, std::size_t left,
                                                    std::size_t right, int threshold = 1)
{
  std::uniform_int_distribution<int> level(0, 3);
  std::vector<CandidatePair>         out;
  for (std::size_t i = 0; i < left; ++i)
  {
    for (std::size_t j = 0; j < right; ++j)
    {
      auto const l = level(rng);
      if (l >= threshold)
      {
        out.push_back({aref("L", "Left", "a" + std::to_string(i + 1)),
                       aref("R", "Right", "b" + std::to_string(j + 1)), LtaLevel(l)});
      }
    }
  }
  return out;
}

inline std::vector<std::string> const &vocabulary()
{
  static std::vector<std::string> const words{
      "requirements", "backlog",  "product", "owner",    "is",      "are",     "must",
      "provides",     "managing", "states",  "the",      "of",      "and",     "defines",
      "stakeholders", "value",    "team",    "sprint",   "goal",    "refined", "items",
      "continue",     "evolve",   "meet",    "done",     "ready",   "vision",  "scope"};
  return words;
}

inline std::string random_sentence(std::mt19937 &rng, std::size_t min_words = 2,
                                   std::size_t max_words = 8)
{
  auto const                               &words = vocabulary();
  std::uniform_int_distribution<std::size_t> count(min_words, max_words);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::string                               out;
  auto const                                n = count(rng);
  for (std::size_t i = 0; i < n; ++i)
  {
    if (!out.empty())
    {
      out += " ";
    }
    out += words[pick(rng)];
  }
  return out;
}

/// A random valid context, including texts with '#', ':' and punctuation.
inline SemanticContext random_context(std::mt19937 &rng)
{
  std::uniform_int_distribution<int> small(0, 4);
  std::uniform_int_distribution<int> coin(0, 1);
  SemanticContext                    ctx;
  ctx.id = "Ctx" + std::to_string(small(rng));
  auto const n_concepts = small(rng);
  for (int c = 0; c < n_concepts; ++c)
  {
    Concept concept_value;
    concept_value.name     = "Concept" + std::to_string(c);
    auto const n_attrs     = small(rng) + 1;
    for (int a = 0; a < n_attrs; ++a)
    {
      auto text = random_sentence(rng);
      if (coin(rng) != 0)
      {
        text += " # not a comment: really";
      }
      concept_value.attributes.push_back({"a" + std::to_string(a + 1), text});
    }
    auto const n_objs = small(rng);
    for (int o = 0; o < n_objs; ++o)
    {
      concept_value.objects.push_back({"o" + std::to_string(o + 1), random_sentence(rng, 1, 3)});
    }
    if (coin(rng) != 0)
    {
      concept_value.input_relations.push_back("Other/Thing" + std::to_string(c));
    }
    if (coin(rng) != 0)
    {
      concept_value.output_relations.push_back(ctx.id + "/Concept0");
    }
    ctx.concepts.push_back(std::move(concept_value));
  }
  return ctx;
}

}  // namespace essencemap::testing
