#include "hyperwalk/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <unordered_map>

namespace hyperwalk {

namespace {

bool is_ident_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
}

class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line_number) : text_(text), line_(line_number) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool peek(std::string_view token) {
    skip_space();
    return text_.substr(pos_, token.size()) == token;
  }

  bool accept(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }

  // '-' is part of identifiers, except when it starts the arrow "->".
  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) {
      if (text_[pos_] == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') break;
      ++pos_;
    }
    if (pos_ == start) fail(ErrorCode::SyntaxError, "expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view rest() {
    skip_space();
    return text_.substr(pos_);
  }

  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(ErrorCode code, const std::string& message) const {
    std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of line";
    throw ParseError(code, line_, column(), message + ", found " + found);
  }

  [[noreturn]] void fail_at(ErrorCode code, std::size_t column, const std::string& message) const {
    throw ParseError(code, line_, column, message);
  }

  void advance(std::size_t n) { pos_ += n; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::vector<std::string> parse_side(LineScanner& scan, bool stop_at_weight) {
  std::vector<std::string> side;
  if (scan.at_end() || scan.peek("->") || scan.peek("<->") || (stop_at_weight && scan.peek("@"))) {
    return side;
  }
  side.push_back(scan.identifier());
  while (scan.accept("+")) side.push_back(scan.identifier());
  return side;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

ReactionRecord parse_reaction_line(std::string_view raw, ParseMode mode, std::size_t line_number) {
  LineScanner scan(strip_comment(raw), line_number);
  ReactionRecord rec;
  rec.id = scan.identifier();
  if (!scan.accept(":")) scan.fail(ErrorCode::SyntaxError, "expected ':' after reaction id");

  const std::size_t lhs_column = scan.column();
  rec.substrates = parse_side(scan, false);
  if (scan.accept("<->")) {
    rec.reversible = true;
  } else if (!scan.accept("->")) {
    scan.fail(ErrorCode::SyntaxError, "expected '->' or '<->'");
  }
  scan.skip_space();
  const std::size_t rhs_column = scan.column();
  rec.products = parse_side(scan, true);

  if (scan.accept("@")) {
    scan.skip_space();
    const std::size_t weight_column = scan.column();
    std::string_view token = scan.rest();
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\r')) {
      token.remove_suffix(1);
    }
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), w);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      scan.fail_at(ErrorCode::BadWeight, weight_column, "weight is not a number");
    }
    if (!std::isfinite(w) || !(w > 0.0)) {
      scan.fail_at(ErrorCode::BadWeight, weight_column, "weight must be a positive finite number");
    }
    rec.weight = w;
    scan.advance(token.size());
  }
  if (!scan.at_end()) scan.fail(ErrorCode::SyntaxError, "unexpected trailing input");

  if (mode == ParseMode::Strict) {
    if (rec.substrates.empty()) scan.fail_at(ErrorCode::EmptySide, lhs_column, "reaction has no substrates");
    if (rec.products.empty()) scan.fail_at(ErrorCode::EmptySide, rhs_column, "reaction has no products");
  }
  return rec;
}

std::vector<ReactionRecord> parse_reactions(std::string_view text, ParseMode mode) {
  std::vector<ReactionRecord> records;
  std::size_t line_number = 0;
  while (!text.empty()) {
    ++line_number;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    auto body = strip_comment(line);
    if (body.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    records.push_back(parse_reaction_line(line, mode, line_number));
  }
  return records;
}

IngestResult reactions_to_hypergraph(const std::vector<ReactionRecord>& records, ReversiblePolicy policy,
                                     bool allow_empty_sides) {
  IngestResult result;
  auto& hg = result.hypergraph;
  auto& log = result.log;
  std::unordered_map<std::string, Index> index;

  auto intern = [&](const std::string& species) {
    auto [it, inserted] = index.emplace(species, hg.num_vertices());
    if (inserted) hg.vertices.push_back(species);
    return it->second;
  };
  auto members = [&](const ReactionRecord& rec, const std::vector<std::string>& side, const char* which) {
    std::vector<Index> out;
    out.reserve(side.size());
    for (const auto& s : side) out.push_back(intern(s));
    if (auto dup = canonicalize_members(out); dup > 0) {
      log.collapsed_duplicates += dup;
      log.warnings.push_back(rec.id + ": collapsed " + std::to_string(dup) + " duplicate " + which + " species");
    }
    return out;
  };

  for (const auto& rec : records) {
    ++log.records;
    if (!allow_empty_sides && (rec.substrates.empty() || rec.products.empty())) {
      throw Error(ErrorCode::EmptySide, "reaction " + rec.id + " has an empty side");
    }
    for (const auto& s : rec.substrates) {
      if (std::find(rec.products.begin(), rec.products.end(), s) != rec.products.end()) {
        throw Error(ErrorCode::TailHeadOverlap, "reaction " + rec.id + ": species " + s + " on both sides");
      }
    }
    auto tail = members(rec, rec.substrates, "substrate");
    auto head = members(rec, rec.products, "product");
    if (rec.reversible && policy == ReversiblePolicy::Split) {
      ++log.reversible_splits;
      hg.arcs.push_back({rec.id + "_fwd", tail, head, rec.weight});
      hg.arcs.push_back({rec.id + "_rev", std::move(head), std::move(tail), rec.weight});
    } else {
      hg.arcs.push_back({rec.id, std::move(tail), std::move(head), rec.weight});
    }
  }
  return result;
}

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& message) {
  throw Error(ErrorCode::SchemaError, "schema: " + message);
}

void check_keys(const json& obj, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      schema_error("unknown key '" + key + "' in " + where);
    }
  }
  for (auto key : allowed) {
    if (!obj.contains(key)) schema_error("missing key '" + std::string(key) + "' in " + where);
  }
}

std::vector<std::string> string_array(const json& value, const std::string& where) {
  if (!value.is_array()) schema_error(where + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) schema_error(where + " must contain strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

DirectedHypergraph load_canonical(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    schema_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  check_keys(doc, {"vertices", "arcs"}, "document");

  DirectedHypergraph hg;
  hg.vertices = string_array(doc["vertices"], "\"vertices\"");
  std::unordered_map<std::string, Index> index;
  for (Index i = 0; i < hg.num_vertices(); ++i) index.emplace(hg.vertices[i], i);

  if (!doc["arcs"].is_array()) schema_error("\"arcs\" must be an array");
  ValidationReport unknown;
  for (const auto& item : doc["arcs"]) {
    if (!item.is_object()) schema_error("each arc must be an object");
    check_keys(item, {"id", "tail", "head", "weight"}, "arc");
    if (!item["id"].is_string()) schema_error("arc \"id\" must be a string");
    if (!item["weight"].is_number()) schema_error("arc \"weight\" must be a number");
    HyperArc arc;
    arc.id = item["id"].get<std::string>();
    arc.weight = item["weight"].get<double>();
    auto resolve = [&](const char* side, std::vector<Index>& out) {
      for (const auto& name : string_array(item[side], "arc \"" + std::string(side) + "\"")) {
        auto it = index.find(name);
        if (it == index.end()) {
          unknown.push_back({ErrorCode::UnknownVertex, arc.id, "unknown vertex \"" + name + "\""});
        } else {
          out.push_back(it->second);
        }
      }
      canonicalize_members(out);
    };
    resolve("tail", arc.tail);
    resolve("head", arc.head);
    hg.arcs.push_back(std::move(arc));
  }
  if (!unknown.empty()) throw ValidationError(std::move(unknown));
  require_valid(hg);
  return hg;
}

std::string save_canonical(const DirectedHypergraph& hg) {
  require_valid(hg);
  nlohmann::ordered_json doc;
  doc["vertices"] = hg.vertices;
  auto& arcs = doc["arcs"] = nlohmann::ordered_json::array();
  for (const auto& arc : hg.arcs) {
    nlohmann::ordered_json a;
    a["id"] = arc.id;
    auto names = [&](const std::vector<Index>& side) {
      std::vector<std::string> out;
      for (Index v : side) out.push_back(hg.vertices[v]);
      return out;
    };
    a["tail"] = names(arc.tail);
    a["head"] = names(arc.head);
    a["weight"] = arc.weight;
    arcs.push_back(std::move(a));
  }
  return doc.dump(2) + "\n";
}

}  // namespace hyperwalk
