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
#include "essencemap/corpus_io.hpp"
#include "essencemap/error.hpp"
#include "essencemap/lta.hpp"
#include "essencemap/mapper.hpp"
#include "essencemap/matcher.hpp"
#include "essencemap/report.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

// Command implementations behind the essencemap executable. Each command
// writes its result to `out`, errors and diagnostics to `err`, and returns the
// process exit code.

namespace essencemap::cli {

inline constexpr std::string_view kVersion = "1.0.0";

enum ExitCode : int
{
  ok              = 0,
  usage_error     = 1,
  parse_error     = 2,
  reference_error = 3
};

/// Domain errors (e.g. a concept without attributes) come from the input
/// files, so they share the parse-error code.
inline int exit_code(ErrorKind kind)
{
  switch (kind)
  {
  case ErrorKind::usage:
    return usage_error;
  case ErrorKind::parse:
  case ErrorKind::domain:
    return parse_error;
  case ErrorKind::reference:
    return reference_error;
  }
  return usage_error;
}

struct CliConfig
{
  std::string                practice_path;
  std::string                framework_path;
  std::optional<std::string> lexicon_path;
  std::optional<std::string> annotations_path;
  ScoringMode                mode      = ScoringMode::hybrid;
  int                        threshold = 2;
  OutputFormat               format    = OutputFormat::table;
  std::optional<std::string> out_path;
};

struct ScoreConfig
{
  std::string                left;
  std::string                right;
  std::vector<std::string>   corpus_paths;
  std::optional<std::string> lexicon_path;
  std::optional<std::string> annotations_path;
  ScoringMode                mode      = ScoringMode::hybrid;
  int                        threshold = 2;
};

inline SemanticContext load_concepts(std::string const &path)
{
  try
  {
    auto in = open_input(path);
    return parse_concepts(in);
  }
  catch (Error const &e)
  {
    throw e.within(path);
  }
}

inline Lexicon load_lexicon(std::optional<std::string> const &path)
{
  if (!path)
  {
    return {};
  }
  try
  {
    auto in = open_input(*path);
    return parse_lexicon(in);
  }
  catch (Error const &e)
  {
    throw e.within(*path);
  }
}

inline AnnotationTable load_annotations(std::optional<std::string> const   &path,
                                        std::vector<SemanticContext const *> const &contexts)
{
  if (!path)
  {
    return {};
  }
  try
  {
    auto in = open_input(*path);
    return parse_annotations(in, contexts);
  }
  catch (Error const &e)
  {
    throw e.within(*path);
  }
}

inline void check_mode(ScoringMode mode, std::optional<std::string> const &annotations,
                       int threshold)
{
  if (mode == ScoringMode::annotated && !annotations)
  {
    throw Error(ErrorKind::usage, "--mode annotated requires --annotations");
  }
  if (threshold < 1 || threshold > 3)
  {
    throw Error(ErrorKind::usage, "--threshold must be 1, 2 or 3");
  }
}

inline int report_error(Error const &e, std::ostream &err)
{
  err << "essencemap: " << e.what() << "\n";
  return exit_code(e.kind());
}

/// Maps a practice corpus onto a framework corpus and renders the report.
inline int cmd_map(CliConfig const &cfg, std::ostream &out, std::ostream &err)
{
  try
  {
    check_mode(cfg.mode, cfg.annotations_path, cfg.threshold);
    auto const practice  = load_concepts(cfg.practice_path);
    auto const framework = load_concepts(cfg.framework_path);
    std::vector<SemanticContext const *> const contexts{&practice, &framework};
    validate_relations(contexts);

    MappingConfig mapping;
    mapping.lexicon     = load_lexicon(cfg.lexicon_path);
    mapping.annotations = load_annotations(cfg.annotations_path, contexts);
    mapping.mode        = cfg.mode;
    mapping.threshold   = cfg.threshold;

    auto const report = map_contexts(practice, framework, mapping);
    for (auto const &r : report.results)
    {
      for (auto const &d : r.diagnostics)
      {
        err << "note: " << r.left.str() << " vs " << r.right.str() << ": " << d << "\n";
      }
    }
    std::ostringstream rendered;
    render(report, cfg.format, rendered);
    if (cfg.out_path)
    {
      std::ofstream file(*cfg.out_path, std::ios::binary);
      if (!file)
      {
        throw Error(ErrorKind::usage, "cannot write '" + *cfg.out_path + "'");
      }
      file << rendered.str();
    }
    else
    {
      out << rendered.str();
    }
    return ok;
  }
  catch (Error const &e)
  {
    return report_error(e, err);
  }
}

inline std::string join(Tokens const &tokens)
{
  std::string out;
  for (auto const &t : tokens)
  {
    if (!out.empty())
    {
      out += " ";
    }
    out += t;
  }
  return out;
}

/// Validates a concept file and summarizes it; optionally lists the
/// subject / predicate / object split of every attribute.
inline int cmd_parse(std::string const &path, bool show_spo,
                     std::optional<std::string> const &lexicon_path, std::ostream &out,
                     std::ostream &err)
{
  try
  {
    auto const ctx = load_concepts(path);
    auto const lex = load_lexicon(lexicon_path);
    std::size_t attributes = 0;
    for (auto const &c : ctx.concepts)
    {
      attributes += c.attributes.size();
    }
    out << ctx.id << ": " << ctx.concepts.size()
        << (ctx.concepts.size() == 1 ? " concept, " : " concepts, ") << attributes
        << (attributes == 1 ? " attribute" : " attributes") << "\n";
    if (show_spo)
    {
      for (auto const &c : ctx.concepts)
      {
        for (auto const &a : c.attributes)
        {
          auto const spo = extract_spo(a.text, c.name, lex);
          out << c.name << "." << a.id << "  subject: " << join(spo.subject)
              << " | predicate: " << join(spo.predicate) << " | object: " << join(spo.object_part)
              << "\n";
        }
      }
    }
    return ok;
  }
  catch (Error const &e)
  {
    return report_error(e, err);
  }
}

inline char const *yes_no(bool b)
{
  return b ? "true" : "false";
}

/// Detail view for one concept pair: full level matrix, candidates, the
/// selected matching, similarity and every relational predicate. Attribute
/// pairs are listed in canonical orientation (context id, then concept name).
inline int cmd_score(ScoreConfig const &cfg, std::ostream &out, std::ostream &err)
{
  try
  {
    check_mode(cfg.mode, cfg.annotations_path, cfg.threshold);
    if (cfg.corpus_paths.empty())
    {
      throw Error(ErrorKind::usage, "at least one --corpus is required");
    }
    ConceptRef left_ref;
    ConceptRef right_ref;
    try
    {
      left_ref  = parse_concept_ref(cfg.left);
      right_ref = parse_concept_ref(cfg.right);
    }
    catch (Error const &e)
    {
      throw Error(ErrorKind::usage, e.what());
    }

    std::vector<SemanticContext> corpora;
    corpora.reserve(cfg.corpus_paths.size());
    for (auto const &p : cfg.corpus_paths)
    {
      corpora.push_back(load_concepts(p));
      for (std::size_t i = 0; i + 1 < corpora.size(); ++i)
      {
        if (corpora[i].id == corpora.back().id)
        {
          throw Error(ErrorKind::usage, "context '" + corpora.back().id + "' loaded twice");
        }
      }
    }
    std::vector<SemanticContext const *> contexts;
    for (auto const &c : corpora)
    {
      contexts.push_back(&c);
    }
    validate_relations(contexts);

    auto resolve = [&](ConceptRef const &ref) -> ConceptView {
      for (auto const &ctx : corpora)
      {
        if (ctx.id == ref.context)
        {
          if (auto const *c = ctx.find_concept(ref.name))
          {
            return {ctx.id, *c};
          }
        }
      }
      throw Error(ErrorKind::reference, "unknown concept '" + ref.str() + "'");
    };
    auto const left  = resolve(left_ref);
    auto const right = resolve(right_ref);

    MappingConfig mapping;
    mapping.lexicon     = load_lexicon(cfg.lexicon_path);
    mapping.annotations = load_annotations(cfg.annotations_path, contexts);
    mapping.mode        = cfg.mode;
    mapping.threshold   = cfg.threshold;

    auto const result = map_pair(left, right, mapping);

    bool const flip  = right_ref < left_ref;
    auto const first = flip ? right : left;
    auto const second = flip ? left : right;
    auto const scoring = mapping.scoring();
    auto const matrix  = level_matrix(first, second, scoring);
    auto const cands   = candidate_pairs(first, second, scoring);
    auto const shown   = flip ? result.match_set.mirrored() : result.match_set;

    auto print_pairs = [&](std::vector<CandidatePair> const &pairs) {
      for (auto const &p : pairs)
      {
        out << "  " << p.left.attr << " " << p.right.attr << " " << p.level.value() << "\n";
      }
    };

    out << "left: " << left.ref().str() << "\n";
    out << "right: " << right.ref().str() << "\n";
    out << "mode: " << to_string(cfg.mode) << "  threshold: " << cfg.threshold << "\n";
    out << "level matrix (" << first.ref().str() << " x " << second.ref().str() << "):\n";
    print_pairs(matrix);
    out << "candidates:\n";
    print_pairs(cands);
    out << "matching:\n";
    print_pairs(shown.pairs);
    auto const &pct = result.similarity_pct;
    out << "summary: " << pct.shared() << "/" << pct.total() << " = " << pct.str() << "% "
        << to_string(result.relation) << "\n";
    auto const &c1 = left.concept_;
    auto const &c2 = right.concept_;
    auto const &m  = result.match_set;
    out << "related: " << yes_no(related(c1, c2, m)) << "\n";
    out << "independent: " << yes_no(independent(c1, c2, m)) << "\n";
    out << "equivalent: " << yes_no(equivalent(c1, c2, m)) << "\n";
    out << "sub-concept: " << yes_no(sub_concept(c1, c2, m)) << "\n";
    out << "super-concept: " << yes_no(super_concept(c1, c2, m)) << "\n";
    for (auto const &d : result.diagnostics)
    {
      err << "note: " << d << "\n";
    }
    return ok;
  }
  catch (Error const &e)
  {
    return report_error(e, err);
  }
}

}  // namespace essencemap::cli
