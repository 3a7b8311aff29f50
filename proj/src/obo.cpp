#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "onto/parsing.hpp"

namespace onto {

bool ParseResult::has_errors() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const ParseDiagnostic& d) {
                       return d.severity == Severity::Error;
                     });
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Strips "! comment" trailers and "{...}" trailing modifiers.
std::string_view strip_trailers(std::string_view s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '"' && (i == 0 || s[i - 1] != '\\')) quoted = !quoted;
    if (!quoted && (c == '!' || c == '{')) {
      s = s.substr(0, i);
      break;
    }
  }
  return trim(s);
}

std::string canonical_id(std::string_view raw) {
  std::string out(raw);
  std::replace(out.begin(), out.end(), ':', '_');
  return out;
}

struct Stanza {
  std::string type;  // "Term" or "Typedef"
  int header_line = 0;
  // (line, tag, value)
  std::vector<std::tuple<int, std::string, std::string>> lines;
};

// Tags that carry no logical content under this translation. Unknown tags
// get a warning instead.
bool is_known_nonlogical(std::string_view tag) {
  static const char* known[] = {
      "name",       "def",        "comment",    "synonym",   "xref",
      "subset",     "created_by", "creation_date", "alt_id", "namespace",
      "exact_synonym", "related_synonym", "broad_synonym", "narrow_synonym",
      "is_symmetric", "is_anti_symmetric", "is_reflexive", "is_cyclic",
      "inverse_of", "replaced_by", "consider", "property_value",
  };
  for (auto* k : known)
    if (tag == k) return true;
  return false;
}

class OboParser {
 public:
  explicit OboParser(std::string_view text) : text_(text) {}

  ParseResult run() {
    split_stanzas();
    Ontology onto(Iri::of(header_id_.empty() ? "obo" : header_id_));
    for (const auto& stanza : stanzas_) translate(stanza, onto);
    ParseResult result;
    result.diagnostics = std::move(diags_);
    if (!result.has_errors()) result.ontology = std::move(onto);
    return result;
  }

 private:
  void warn(int line, std::string msg) {
    diags_.push_back({Severity::Warning, line, std::move(msg)});
  }
  void error(int line, std::string msg) {
    diags_.push_back({Severity::Error, line, std::move(msg)});
  }

  void split_stanzas() {
    int lineno = 0;
    bool in_header = true;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t eol = text_.find('\n', pos);
      std::string_view line = eol == std::string_view::npos
                                  ? text_.substr(pos)
                                  : text_.substr(pos, eol - pos);
      pos = eol == std::string_view::npos ? text_.size() + 1 : eol + 1;
      ++lineno;
      line = strip_trailers(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') {
          error(lineno, "malformed stanza header: " + std::string(line));
          continue;
        }
        std::string type(line.substr(1, line.size() - 2));
        if (type != "Term" && type != "Typedef" && type != "Instance") {
          error(lineno, "unknown stanza type [" + type + "]");
          continue;
        }
        in_header = false;
        stanzas_.push_back(Stanza{type, lineno, {}});
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        error(lineno, "unparseable line: " + std::string(line));
        continue;
      }
      std::string tag(trim(line.substr(0, colon)));
      std::string value(trim(line.substr(colon + 1)));
      if (in_header) {
        if (tag == "ontology") header_id_ = value;
        continue;  // other header tags are free-form
      }
      stanzas_.back().lines.emplace_back(lineno, std::move(tag),
                                         std::move(value));
    }
  }

  void translate(const Stanza& stanza, Ontology& onto) {
    if (stanza.type == "Instance") {
      warn(stanza.header_line, "[Instance] stanza skipped");
      return;
    }

    std::string id;
    int id_line = stanza.header_line;
    bool obsolete = false;
    for (const auto& [line, tag, value] : stanza.lines) {
      if (tag == "id") {
        id = canonical_id(value);
        id_line = line;
      } else if (tag == "is_obsolete" && value == "true") {
        obsolete = true;
      }
    }
    if (id.empty()) {
      error(stanza.header_line, "stanza missing id");
      return;
    }
    if (obsolete) {
      warn(id_line, "obsolete stanza " + id + " skipped");
      return;
    }

    Iri self = Iri::of(id);
    if (stanza.type == "Term") {
      translate_term(stanza, self, onto);
    } else {
      translate_typedef(stanza, self, onto);
    }
  }

  void translate_term(const Stanza& stanza, Iri self, Ontology& onto) {
    Concept self_c = Concept::atomic(self);
    std::vector<Concept> intersection_parts;
    int intersection_line = stanza.header_line;

    for (const auto& [line, tag, value] : stanza.lines) {
      if (tag == "id" || tag == "is_obsolete") continue;
      if (tag == "name") {
        onto.set_label(self, value);
      } else if (tag == "is_a") {
        if (value.empty()) {
          error(line, "is_a without target");
          continue;
        }
        onto.add(SubClassOf{self_c, Concept::atomic(Iri::of(canonical_id(value)))});
      } else if (tag == "relationship") {
        auto sp = value.find(' ');
        if (sp == std::string::npos) {
          error(line, "relationship needs a role and a target");
          continue;
        }
        std::string role(trim(std::string_view(value).substr(0, sp)));
        std::string target(trim(std::string_view(value).substr(sp + 1)));
        if (role.empty() || target.empty() ||
            target.find(' ') != std::string::npos) {
          error(line, "relationship needs exactly 'R X'");
          continue;
        }
        onto.add(SubClassOf{
            self_c, Concept::some(Iri::of(canonical_id(role)),
                                  Concept::atomic(Iri::of(canonical_id(target))))});
      } else if (tag == "intersection_of") {
        intersection_line = line;
        auto sp = value.find(' ');
        if (sp == std::string::npos) {
          intersection_parts.push_back(
              Concept::atomic(Iri::of(canonical_id(value))));
        } else {
          std::string role(trim(std::string_view(value).substr(0, sp)));
          std::string target(trim(std::string_view(value).substr(sp + 1)));
          intersection_parts.push_back(Concept::some(
              Iri::of(canonical_id(role)),
              Concept::atomic(Iri::of(canonical_id(target)))));
        }
      } else if (tag == "disjoint_from") {
        if (value.empty()) {
          error(line, "disjoint_from without target");
          continue;
        }
        onto.add(DisjointClasses{
            {self_c, Concept::atomic(Iri::of(canonical_id(value)))}});
      } else if (tag == "union_of") {
        warn(line, "union_of is not representable here; skipped");
      } else if (tag == "equivalent_to") {
        warn(line, "equivalent_to tag skipped");
      } else if (is_known_nonlogical(tag)) {
        // no logical content
      } else {
        warn(line, "unknown tag '" + tag + "' skipped");
      }
    }

    if (!intersection_parts.empty()) {
      if (intersection_parts.size() < 2) {
        error(intersection_line,
              "intersection_of needs at least two components");
        return;
      }
      onto.add(EquivalentClasses{
          {self_c, Concept::intersection(std::move(intersection_parts))}});
    }
  }

  void translate_typedef(const Stanza& stanza, Iri self, Ontology& onto) {
    for (const auto& [line, tag, value] : stanza.lines) {
      if (tag == "id" || tag == "is_obsolete") continue;
      if (tag == "name") {
        onto.set_label(self, value);
      } else if (tag == "is_a") {
        onto.add(SubRoleOf{self, Iri::of(canonical_id(value))});
      } else if (tag == "is_transitive") {
        if (value == "true") onto.add(TransitiveRole{self});
      } else if (tag == "domain") {
        onto.add(RoleDomain{self, Concept::atomic(Iri::of(canonical_id(value)))});
      } else if (tag == "range") {
        onto.add(RoleRange{self, Concept::atomic(Iri::of(canonical_id(value)))});
      } else if (tag == "transitive_over" || tag == "holds_over_chain") {
        warn(line, "role chains are not representable here; skipped");
      } else if (is_known_nonlogical(tag)) {
        // no logical content
      } else {
        warn(line, "unknown tag '" + tag + "' skipped");
      }
    }
  }

  std::string_view text_;
  std::string header_id_;
  std::vector<Stanza> stanzas_;
  std::vector<ParseDiagnostic> diags_;
};

}  // namespace

ParseResult parse_obo(std::string_view text) { return OboParser(text).run(); }

}  // namespace onto
