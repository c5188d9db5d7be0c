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
#include "essencemap/lta.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

// Line-oriented corpus formats. In every format lines are trimmed, blank lines
// are skipped and a line whose first non-space character is '#' is a comment.
//
// Concepts:
//   context: <id>
//   concept: <Name>
//   attr <id>: <text>
//   obj <id>: <text>
//   rel-in: <ctx>/<Name>
//   rel-out: <ctx>/<Name>
//   end
//
// Lexicon:
//   syn: t1, t2, ...     (group canonicalizes to t1)
//   stop: t1, t2, ...
//   verb: t1, t2, ...
//
// Annotations:
//   pair: <ctx>/<Concept>.<attr> <ctx>/<Concept>.<attr> = <level>

namespace essencemap {

namespace detail {

/// Yields (line number, trimmed content) for every non-blank, non-comment line.
class LineReader
{
public:
  explicit LineReader(std::istream &in)
    : in_(in)
  {}

  bool next(std::string_view &content)
  {
    while (std::getline(in_, buffer_))
    {
      ++line_;
      content = trim(buffer_);
      if (!content.empty() && content.front() != '#')
      {
        return true;
      }
    }
    return false;
  }

  std::size_t line() const noexcept
  {
    return line_;
  }

private:
  std::istream &in_;
  std::string   buffer_;
  std::size_t   line_ = 0;
};

/// Splits "<key>: <value>" at the first colon; nullopt without a colon.
inline std::optional<std::pair<std::string_view, std::string_view>> split_key(
    std::string_view line)
{
  auto const colon = line.find(':');
  if (colon == std::string_view::npos)
  {
    return std::nullopt;
  }
  return std::make_pair(trim(line.substr(0, colon)), trim(line.substr(colon + 1)));
}

inline std::vector<Token> split_token_list(std::string_view list, std::size_t line)
{
  std::vector<Token> out;
  while (true)
  {
    auto const comma = list.find(',');
    auto const item  = trim(list.substr(0, comma));
    if (item.empty())
    {
      throw Error(ErrorKind::parse, line, "empty token in list");
    }
    Token t;
    for (char c : item)
    {
      t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    out.push_back(std::move(t));
    if (comma == std::string_view::npos)
    {
      return out;
    }
    list.remove_prefix(comma + 1);
  }
}

}  // namespace detail

inline SemanticContext parse_concepts(std::istream &in)
{
  detail::LineReader reader(in);
  SemanticContext    ctx;
  bool               have_context = false;
  Concept           *open         = nullptr;
  std::string_view   line;

  auto fail = [&](std::string const &message) -> void {
    throw Error(ErrorKind::parse, reader.line(), message);
  };

  while (reader.next(line))
  {
    if (line == "end")
    {
      if (open == nullptr)
      {
        fail("'end' without an open concept");
      }
      open = nullptr;
      continue;
    }
    auto kv = detail::split_key(line);
    if (!kv)
    {
      fail("expected '<key>: <value>' or 'end', got '" + std::string(line) + "'");
    }
    auto const [key, value] = *kv;

    if (key == "context")
    {
      if (have_context)
      {
        fail("duplicate context header");
      }
      if (!ctx.concepts.empty())
      {
        fail("context header must precede concepts");
      }
      if (!is_valid_context_id(value))
      {
        fail("expected 'context: <id>' with no whitespace or '/' in the id");
      }
      ctx.id       = std::string(value);
      have_context = true;
      continue;
    }
    if (!have_context)
    {
      fail("missing context header");
    }
    if (key == "concept")
    {
      if (open != nullptr)
      {
        fail("concept '" + std::string(value) + "' opened before 'end' of '" + open->name + "'");
      }
      if (!is_valid_concept_name(value))
      {
        fail("expected 'concept: <Name>' with no whitespace, '/' or '.' in the name");
      }
      if (ctx.find_concept(value) != nullptr)
      {
        fail("duplicate concept '" + std::string(value) + "'");
      }
      ctx.concepts.push_back(Concept{std::string(value), {}, {}, {}, {}});
      open = &ctx.concepts.back();
      continue;
    }
    if (open == nullptr)
    {
      fail("'" + std::string(key) + "' outside a concept block");
    }
    if (key == "rel-in" || key == "rel-out")
    {
      try
      {
        parse_concept_ref(value);
      }
      catch (Error const &e)
      {
        fail(e.what());
      }
      (key == "rel-in" ? open->input_relations : open->output_relations)
          .emplace_back(value);
      continue;
    }

    // "attr <id>" or "obj <id>"
    auto const space = key.find(' ');
    auto const kind  = key.substr(0, space);
    if ((kind != "attr" && kind != "obj") || space == std::string_view::npos)
    {
      fail("unknown key '" + std::string(key) + "'");
    }
    auto const id = detail::trim(key.substr(space + 1));
    if (!is_valid_item_id(id))
    {
      fail("expected '" + std::string(kind) + " <id>: <text>' with id matching [a-z][a-z0-9]*");
    }
    if (value.empty())
    {
      fail("empty text for " + std::string(kind) + " '" + std::string(id) + "'");
    }
    if (kind == "attr")
    {
      if (open->find_attribute(id) != nullptr)
      {
        fail("duplicate attribute '" + std::string(id) + "' in " + open->name);
      }
      open->attributes.push_back({std::string(id), std::string(value)});
    }
    else
    {
      for (auto const &o : open->objects)
      {
        if (o.id == id)
        {
          fail("duplicate object '" + std::string(id) + "' in " + open->name);
        }
      }
      open->objects.push_back({std::string(id), std::string(value)});
    }
  }
  if (open != nullptr)
  {
    throw Error(ErrorKind::parse, reader.line() + 1, "concept '" + open->name + "' lacks 'end'");
  }
  if (!have_context)
  {
    throw Error(ErrorKind::parse, reader.line() + 1, "missing context header");
  }
  return ctx;
}

/// Canonical text form; parse_concepts(serialize_concepts(c)) == c.
inline std::string serialize_concepts(SemanticContext const &ctx)
{
  std::ostringstream out;
  out << "context: " << ctx.id << "\n";
  for (auto const &c : ctx.concepts)
  {
    out << "\nconcept: " << c.name << "\n";
    for (auto const &a : c.attributes)
    {
      out << "attr " << a.id << ": " << a.text << "\n";
    }
    for (auto const &o : c.objects)
    {
      out << "obj " << o.id << ": " << o.text << "\n";
    }
    for (auto const &r : c.input_relations)
    {
      out << "rel-in: " << r << "\n";
    }
    for (auto const &r : c.output_relations)
    {
      out << "rel-out: " << r << "\n";
    }
    out << "end\n";
  }
  return out.str();
}

inline Lexicon parse_lexicon(std::istream &in)
{
  detail::LineReader reader(in);
  Lexicon            lex;
  std::string_view   line;
  while (reader.next(line))
  {
    auto kv = detail::split_key(line);
    if (!kv)
    {
      throw Error(ErrorKind::parse, reader.line(), "expected 'syn:', 'stop:' or 'verb:' line");
    }
    auto const [key, value] = *kv;
    if (key != "syn" && key != "stop" && key != "verb")
    {
      throw Error(ErrorKind::parse, reader.line(), "unknown key '" + std::string(key) + "'");
    }
    auto const tokens = detail::split_token_list(value, reader.line());
    if (key == "syn")
    {
      try
      {
        lex.add_synonym_group(tokens);
      }
      catch (Error const &e)
      {
        throw Error(ErrorKind::parse, reader.line(), e.what());
      }
    }
    else
    {
      for (auto const &t : tokens)
      {
        key == "stop" ? lex.add_stopword(t) : lex.add_verb(t);
      }
    }
  }
  return lex;
}

inline AnnotationTable parse_annotations(std::istream                             &in,
                                         std::vector<SemanticContext const *> const &contexts)
{
  detail::LineReader reader(in);
  AnnotationTable    table;
  std::string_view   line;

  auto resolve = [&](std::string_view text) {
    AttributeRef ref;
    try
    {
      ref = parse_attribute_ref(text);
    }
    catch (Error const &e)
    {
      throw Error(ErrorKind::parse, reader.line(), e.what());
    }
    for (auto const *ctx : contexts)
    {
      if (ctx->id != ref.context)
      {
        continue;
      }
      auto const *c = ctx->find_concept(ref.concept_name);
      if (c != nullptr && c->find_attribute(ref.attr) != nullptr)
      {
        return ref;
      }
    }
    throw Error(ErrorKind::reference, reader.line(), "unknown attribute '" + std::string(text) + "'");
  };

  while (reader.next(line))
  {
    auto kv = detail::split_key(line);
    if (!kv || kv->first != "pair")
    {
      throw Error(ErrorKind::parse, reader.line(),
                  "expected 'pair: <ctx>/<Concept>.<attr> <ctx>/<Concept>.<attr> = <level>'");
    }
    auto const body = kv->second;
    auto const eq   = body.rfind('=');
    if (eq == std::string_view::npos)
    {
      throw Error(ErrorKind::parse, reader.line(), "missing '= <level>'");
    }
    auto const refs      = detail::trim(body.substr(0, eq));
    auto const level_txt = detail::trim(body.substr(eq + 1));
    auto const space     = refs.find_first_of(" \t");
    if (space == std::string_view::npos)
    {
      throw Error(ErrorKind::parse, reader.line(), "expected two attribute references");
    }
    auto const first_txt  = refs.substr(0, space);
    auto const second_txt = detail::trim(refs.substr(space));
    if (second_txt.find_first_of(" \t") != std::string_view::npos)
    {
      throw Error(ErrorKind::parse, reader.line(), "expected two attribute references");
    }
    if (level_txt.size() != 1 || level_txt[0] < '0' || level_txt[0] > '3')
    {
      throw Error(ErrorKind::parse, reader.line(),
                  "level must be 0, 1, 2 or 3, got '" + std::string(level_txt) + "'");
    }
    auto const a = resolve(first_txt);
    auto const b = resolve(second_txt);
    if (!table.insert(a, b, LtaLevel(level_txt[0] - '0')))
    {
      throw Error(ErrorKind::parse, reader.line(),
                  "duplicate pair " + a.str() + " " + b.str());
    }
  }
  return table;
}

/// Opens a file for one of the parsers; unreadable files are parse errors.
inline std::ifstream open_input(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw Error(ErrorKind::parse, "cannot read '" + path + "'");
  }
  return in;
}

}  // namespace essencemap
