#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperwalk/hypergraph.hpp"

namespace hyperwalk {

/// One reaction line, before set semantics are applied.
struct ReactionRecord {
  std::string id;
  std::vector<std::string> substrates;
  std::vector<std::string> products;
  bool reversible = false;
  double weight = 1.0;

  friend bool operator==(const ReactionRecord&, const ReactionRecord&) = default;
};

enum class ParseMode {
  Strict,      // empty sides are an error
  Permissive,  // empty sides pass through for prune_to_core to remove
};

enum class ReversiblePolicy {
  Split,        // ID_fwd and ID_rev
  ForwardOnly,  // one arc, as written
};

/// Grammar: `ID ':' side ('->' | '<->') side ['@' weight]`, where side is a
/// '+'-separated list of `[A-Za-z0-9_-]+` identifiers. A '#' starts a comment.
/// Throws ParseError carrying `line_number` (0 for a lone line) and a 1-based column.
ReactionRecord parse_reaction_line(std::string_view line, ParseMode mode = ParseMode::Strict,
                                   std::size_t line_number = 0);

/// Parses a whole file; blank and comment-only lines are skipped.
std::vector<ReactionRecord> parse_reactions(std::string_view text, ParseMode mode = ParseMode::Strict);

struct IngestLog {
  std::size_t records = 0;
  std::size_t reversible_splits = 0;
  std::size_t collapsed_duplicates = 0;
  std::vector<std::string> warnings;
};

struct IngestResult {
  DirectedHypergraph hypergraph;
  IngestLog log;
};

/// Species become vertices in first-mention order. With `allow_empty_sides`
/// the result may contain empty-sided arcs and must be pruned before use.
IngestResult reactions_to_hypergraph(const std::vector<ReactionRecord>& records,
                                     ReversiblePolicy policy = ReversiblePolicy::Split,
                                     bool allow_empty_sides = false);

/// Canonical interchange document:
/// {"vertices": [..], "arcs": [{"id", "tail", "head", "weight"}, ..]}.
DirectedHypergraph load_canonical(std::string_view json_text);
std::string save_canonical(const DirectedHypergraph& hg);

}  // namespace hyperwalk
