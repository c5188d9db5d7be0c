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
#include "essencemap/matcher.hpp"
#include "essencemap/percentage.hpp"
#include "essencemap/relations.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace essencemap {

enum class Relation
{
  equivalent,
  sub_concept,
  super_concept,
  related,
  independent
};

inline std::string_view to_string(Relation r)
{
  switch (r)
  {
  case Relation::equivalent:
    return "equivalent";
  case Relation::sub_concept:
    return "sub-concept";
  case Relation::super_concept:
    return "super-concept";
  case Relation::related:
    return "related";
  case Relation::independent:
    return "independent";
  }
  return "?";
}

/// Relation seen from the other side.
inline Relation mirrored(Relation r)
{
  switch (r)
  {
  case Relation::sub_concept:
    return Relation::super_concept;
  case Relation::super_concept:
    return Relation::sub_concept;
  default:
    return r;
  }
}

/// Single headline relation. Precedence: equivalent, sub-concept,
/// super-concept, related, independent.
inline Relation classify(Concept const &c1, Concept const &c2, MatchSet const &m)
{
  if (equivalent(c1, c2, m))
  {
    return Relation::equivalent;
  }
  if (sub_concept(c1, c2, m))
  {
    return Relation::sub_concept;
  }
  if (super_concept(c1, c2, m))
  {
    return Relation::super_concept;
  }
  if (related(c1, c2, m))
  {
    return Relation::related;
  }
  return Relation::independent;
}

struct MappingResult
{
  ConceptRef               left;
  ConceptRef               right;
  MatchSet                 match_set;
  Percentage               similarity_pct;
  Relation                 relation = Relation::independent;
  std::vector<std::string> diagnostics;
};

struct MappingConfig
{
  Lexicon         lexicon;
  AnnotationTable annotations;
  ScoringMode     mode      = ScoringMode::hybrid;
  int             threshold = 2;

  ScoringConfig scoring() const
  {
    return {lexicon, annotations, mode, threshold};
  }
};

/// Notes on statements that will be scored heuristically without a verb.
inline std::vector<std::string> verbless_diagnostics(ConceptView const &c, Lexicon const &lex)
{
  std::vector<std::string> out;
  for (auto const &a : c.concept_.attributes)
  {
    if (extract_spo(a.text, c.concept_.name, lex).verbless)
    {
      out.push_back("no verb found in " + c.attribute_ref(a).str());
    }
  }
  return out;
}

/// Scores, matches, measures and classifies one concept pair.
inline MappingResult map_pair(ConceptView const &c1, ConceptView const &c2,
                              MappingConfig const &cfg)
{
  for (auto const *c : {&c1, &c2})
  {
    if (c->concept_.attributes.empty())
    {
      throw Error(ErrorKind::domain, "concept " + c->ref().str() + " has no attributes");
    }
  }
  auto const scoring    = cfg.scoring();
  auto const candidates = candidate_pairs(c1, c2, scoring);

  MappingResult r;
  r.left      = c1.ref();
  r.right     = c2.ref();
  r.match_set = max_matching(candidates, c1.concept_.attributes.size(),
                             c2.concept_.attributes.size());
  r.similarity_pct = similarity(c1.concept_, c2.concept_, r.match_set);
  r.relation       = classify(c1.concept_, c2.concept_, r.match_set);
  if (cfg.mode != ScoringMode::annotated)
  {
    for (auto const *c : {&c1, &c2})
    {
      auto notes = verbless_diagnostics(*c, cfg.lexicon);
      r.diagnostics.insert(r.diagnostics.end(), notes.begin(), notes.end());
    }
  }
  return r;
}

struct BestMatch
{
  std::string practice;
  std::string framework;
  Percentage  similarity_pct;
};

struct MappingReport
{
  std::string                practice;
  std::string                framework;
  ScoringMode                mode      = ScoringMode::hybrid;
  int                        threshold = 2;
  std::vector<MappingResult> results;
  std::vector<BestMatch>     best_matches;
};

/// Maps every practice concept onto every framework concept. Results are
/// sorted by (practice concept, framework concept); each practice concept's
/// best match is the highest similarity, ties going to the smaller framework
/// concept name.
inline MappingReport map_contexts(SemanticContext const &practice,
                                  SemanticContext const &framework, MappingConfig const &cfg)
{
  for (auto const *ctx : {&practice, &framework})
  {
    if (ctx->concepts.empty())
    {
      throw Error(ErrorKind::domain, "context " + ctx->id + " has no concepts");
    }
  }
  MappingReport report;
  report.practice  = practice.id;
  report.framework = framework.id;
  report.mode      = cfg.mode;
  report.threshold = cfg.threshold;

  for (auto const &p : practice.concepts)
  {
    for (auto const &f : framework.concepts)
    {
      report.results.push_back(map_pair({practice.id, p}, {framework.id, f}, cfg));
    }
  }
  std::sort(report.results.begin(), report.results.end(), [](auto const &a, auto const &b) {
    if (a.left.name != b.left.name)
    {
      return a.left.name < b.left.name;
    }
    return a.right.name < b.right.name;
  });

  for (auto const &r : report.results)
  {
    if (report.best_matches.empty() || report.best_matches.back().practice != r.left.name)
    {
      report.best_matches.push_back({r.left.name, r.right.name, r.similarity_pct});
    }
    else if (r.similarity_pct > report.best_matches.back().similarity_pct)
    {
      report.best_matches.back().framework      = r.right.name;
      report.best_matches.back().similarity_pct = r.similarity_pct;
    }
  }
  return report;
}

}  // namespace essencemap
