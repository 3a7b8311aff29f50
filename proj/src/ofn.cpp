#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "onto/parsing.hpp"

namespace onto {
namespace {

enum class TokKind { LParen, RParen, Symbol, String, IriRef, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  int line = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_ws();
    Token tok;
    tok.line = line_;
    if (pos_ >= text_.size()) return tok;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      tok.kind = TokKind::LParen;
      return tok;
    }
    if (c == ')') {
      ++pos_;
      tok.kind = TokKind::RParen;
      return tok;
    }
    if (c == '"') {
      tok.kind = TokKind::String;
      ++pos_;
      std::string out;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) {
          ++pos_;
          out += text_[pos_];
        } else {
          if (text_[pos_] == '\n') ++line_;
          out += text_[pos_];
        }
        ++pos_;
      }
      if (pos_ < text_.size()) ++pos_;  // closing quote
      tok.text = std::move(out);
      // optional language tag or datatype, consumed silently
      if (pos_ < text_.size() && text_[pos_] == '@') {
        while (pos_ < text_.size() && !is_delim(text_[pos_])) ++pos_;
      } else if (pos_ + 1 < text_.size() && text_[pos_] == '^' &&
                 text_[pos_ + 1] == '^') {
        while (pos_ < text_.size() && !is_delim(text_[pos_])) ++pos_;
      }
      return tok;
    }
    if (c == '<') {
      tok.kind = TokKind::IriRef;
      ++pos_;
      std::string out;
      while (pos_ < text_.size() && text_[pos_] != '>') out += text_[pos_++];
      if (pos_ < text_.size()) ++pos_;
      tok.text = std::move(out);
      return tok;
    }
    tok.kind = TokKind::Symbol;
    std::string out;
    while (pos_ < text_.size() && !is_delim(text_[pos_]) &&
           text_[pos_] != '<') {
      out += text_[pos_++];
    }
    tok.text = std::move(out);
    return tok;
  }

 private:
  static bool is_delim(char c) {
    return c == '(' || c == ')' || c == '"' ||
           std::isspace(static_cast<unsigned char>(c));
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        // comment to end of line; '#' cannot start a token in this grammar
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

std::string localize(const std::string& full_iri) {
  auto pos = full_iri.find_last_of("#/:");
  if (pos == std::string::npos || pos + 1 >= full_iri.size()) return full_iri;
  return full_iri.substr(pos + 1);
}

// Internal signal used to abandon one axiom and resynchronize.
struct SkipAxiom {
  int line;
  std::string reason;
};

struct HardError {
  int line;
  std::string reason;
};

class OfnParser {
 public:
  explicit OfnParser(std::string_view text) : lexer_(text) {
    prefixes_["owl"] = "http://www.w3.org/2002/07/owl#";
    prefixes_["rdf"] = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    prefixes_["rdfs"] = "http://www.w3.org/2000/01/rdf-schema#";
    prefixes_["xsd"] = "http://www.w3.org/2001/XMLSchema#";
    advance();
  }

  ParseResult run() {
    ParseResult result;
    Ontology onto;
    try {
      while (cur_.kind == TokKind::Symbol && cur_.text == "Prefix")
        parse_prefix_decl();
      expect_symbol("Ontology");
      expect(TokKind::LParen);
      if (cur_.kind == TokKind::IriRef) {
        onto.set_id(Iri::of(localize(cur_.text)));
        advance();
      } else {
        onto.set_id(Iri::of("ontology"));
      }
      while (cur_.kind != TokKind::RParen) {
        if (cur_.kind == TokKind::End)
          throw HardError{cur_.line, "unbalanced parentheses: missing ')'"};
        parse_axiom(onto);
      }
      advance();  // closing ')'
      if (cur_.kind != TokKind::End)
        throw HardError{cur_.line, "trailing content after Ontology(...)"};
    } catch (const HardError& e) {
      diags_.push_back({Severity::Error, e.line, e.reason});
    }
    result.diagnostics = std::move(diags_);
    if (!result.has_errors()) result.ontology = std::move(onto);
    return result;
  }

 private:
  void advance() {
    // depth_ counts unclosed parentheses among consumed tokens; axiom
    // resynchronization relies on it.
    if (cur_.kind == TokKind::LParen) ++depth_;
    if (cur_.kind == TokKind::RParen) --depth_;
    if (lookahead_valid_) {
      cur_ = lookahead_;
      lookahead_valid_ = false;
    } else {
      cur_ = lexer_.next();
    }
  }

  void expect(TokKind kind) {
    if (cur_.kind != kind) {
      throw HardError{cur_.line,
                      kind == TokKind::LParen ? "expected '('"
                      : kind == TokKind::RParen
                          ? "unbalanced parentheses: expected ')'"
                          : "unexpected token"};
    }
    advance();
  }

  void expect_symbol(const std::string& name) {
    if (cur_.kind != TokKind::Symbol || cur_.text != name)
      throw HardError{cur_.line, "expected '" + name + "'"};
    advance();
  }

  void parse_prefix_decl() {
    advance();  // Prefix
    expect(TokKind::LParen);
    if (cur_.kind != TokKind::Symbol || cur_.text.empty() ||
        cur_.text.back() != '=' ||
        cur_.text.find(':') == std::string::npos) {
      throw HardError{cur_.line, "malformed prefix declaration"};
    }
    std::string name = cur_.text.substr(0, cur_.text.find(':'));
    advance();
    if (cur_.kind != TokKind::IriRef)
      throw HardError{cur_.line, "prefix declaration needs <iri>"};
    prefixes_[name] = cur_.text;
    advance();
    expect(TokKind::RParen);
  }

  // Resolves a prefixed name or <iri> token to a canonical identifier.
  // Returns an empty string for owl:Thing / owl:Nothing (handled upstream).
  Iri resolve_entity(const Token& tok) {
    if (tok.kind == TokKind::IriRef) return Iri::of(localize(tok.text));
    if (tok.kind != TokKind::Symbol)
      throw SkipAxiom{tok.line, "expected an entity"};
    auto colon = tok.text.find(':');
    if (colon == std::string::npos)
      throw SkipAxiom{tok.line, "expected a prefixed name: " + tok.text};
    std::string prefix = tok.text.substr(0, colon);
    std::string local = tok.text.substr(colon + 1);
    if (!prefixes_.count(prefix))
      throw HardError{tok.line, "undeclared prefix '" + prefix + ":'"};
    if (prefix.empty()) return Iri::of(local);
    return Iri::of(prefix + "_" + local);
  }

  bool is_named(const Token& tok, const char* name) const {
    return tok.kind == TokKind::Symbol && tok.text == name;
  }

  Concept parse_class_expr() {
    if (cur_.kind == TokKind::IriRef ||
        (cur_.kind == TokKind::Symbol && !peek_is_lparen())) {
      if (is_named(cur_, "owl:Thing")) {
        advance();
        return Concept::top();
      }
      if (is_named(cur_, "owl:Nothing")) {
        advance();
        return Concept::bottom();
      }
      Token tok = cur_;
      advance();
      return Concept::atomic(resolve_entity(tok));
    }
    if (cur_.kind != TokKind::Symbol)
      throw SkipAxiom{cur_.line, "expected a class expression"};
    std::string ctor = cur_.text;
    int line = cur_.line;
    advance();
    expect_lparen_soft(line);
    Concept out;
    if (ctor == "ObjectIntersectionOf" || ctor == "ObjectUnionOf") {
      std::vector<Concept> members;
      while (cur_.kind != TokKind::RParen) members.push_back(parse_class_expr());
      if (members.size() < 2)
        throw SkipAxiom{line, ctor + " needs at least two members"};
      out = ctor == "ObjectIntersectionOf"
                ? Concept::intersection(std::move(members))
                : Concept::union_of(std::move(members));
    } else if (ctor == "ObjectComplementOf") {
      out = Concept::negation(parse_class_expr());
    } else if (ctor == "ObjectSomeValuesFrom" || ctor == "ObjectAllValuesFrom") {
      Token role_tok = cur_;
      advance();
      Iri role = resolve_entity(role_tok);
      Concept filler = parse_class_expr();
      out = ctor == "ObjectSomeValuesFrom" ? Concept::some(role, filler)
                                           : Concept::only(role, filler);
    } else {
      throw SkipAxiom{line, "unsupported class constructor " + ctor};
    }
    close_paren();
    return out;
  }

  bool peek_is_lparen() {
    // Symbols naming constructors are always followed by '('; entity
    // symbols never are in this grammar. A one-token lookahead suffices.
    if (lookahead_valid_) return lookahead_.kind == TokKind::LParen;
    lookahead_ = lexer_.next();
    lookahead_valid_ = true;
    return lookahead_.kind == TokKind::LParen;
  }

  void close_paren() {
    if (cur_.kind != TokKind::RParen)
      throw HardError{cur_.line, "unbalanced parentheses: expected ')'"};
    advance();
  }

  void expect_lparen_soft(int line) {
    if (cur_.kind != TokKind::LParen)
      throw HardError{line, "expected '(' after constructor"};
    advance();
  }

  // Consume tokens until every parenthesis opened past `base` is closed.
  void resync(int base) {
    while (depth_ > base) {
      if (cur_.kind == TokKind::End)
        throw HardError{cur_.line, "unbalanced parentheses: missing ')'"};
      advance();
    }
  }

  void parse_axiom(Ontology& onto) {
    if (cur_.kind != TokKind::Symbol)
      throw HardError{cur_.line, "expected an axiom"};
    std::string head = cur_.text;
    int line = cur_.line;
    const int base = depth_;
    advance();
    try {
      if (head == "SubClassOf") {
        expect_lparen_soft(line);
        Concept sub = parse_class_expr();
        Concept sup = parse_class_expr();
        close_paren();
        onto.add(SubClassOf{sub, sup});
      } else if (head == "EquivalentClasses" || head == "DisjointClasses") {
        expect_lparen_soft(line);
        std::vector<Concept> members;
        while (cur_.kind != TokKind::RParen)
          members.push_back(parse_class_expr());
        close_paren();
        // singletons are degenerate but legal here: canonicalization can
        // collapse members, and output must re-parse losslessly
        if (members.empty())
          throw SkipAxiom{line, head + " needs at least one member"};
        if (head == "EquivalentClasses")
          onto.add(EquivalentClasses{std::move(members)});
        else
          onto.add(DisjointClasses{std::move(members)});
      } else if (head == "SubObjectPropertyOf") {
        expect_lparen_soft(line);
        Token sub = cur_;
        advance();
        Token sup = cur_;
        advance();
        close_paren();
        onto.add(SubRoleOf{resolve_entity(sub), resolve_entity(sup)});
      } else if (head == "TransitiveObjectProperty") {
        expect_lparen_soft(line);
        Token role = cur_;
        advance();
        close_paren();
        onto.add(TransitiveRole{resolve_entity(role)});
      } else if (head == "ObjectPropertyDomain" ||
                 head == "ObjectPropertyRange") {
        expect_lparen_soft(line);
        Token role = cur_;
        advance();
        Iri r = resolve_entity(role);
        Concept c = parse_class_expr();
        close_paren();
        if (head == "ObjectPropertyDomain")
          onto.add(RoleDomain{r, c});
        else
          onto.add(RoleRange{r, c});
      } else if (head == "AnnotationAssertion") {
        expect_lparen_soft(line);
        Token prop = cur_;
        advance();
        if (!is_named(prop, "rdfs:label")) {
          diags_.push_back({Severity::Warning, line,
                            "annotation property " + prop.text + " skipped"});
          resync(base);
          return;
        }
        Token target = cur_;
        advance();
        Iri subject = resolve_entity(target);
        if (cur_.kind != TokKind::String)
          throw SkipAxiom{cur_.line, "rdfs:label needs a string literal"};
        onto.set_label(subject, cur_.text);
        advance();
        close_paren();
      } else {
        diags_.push_back(
            {Severity::Warning, line, "unsupported construct " + head + " skipped"});
        if (cur_.kind == TokKind::LParen) advance();
        resync(base);
      }
    } catch (const SkipAxiom& s) {
      diags_.push_back({Severity::Warning, s.line,
                        head + " skipped: " + s.reason});
      resync(base);
    }
  }

  Lexer lexer_;
  Token cur_;
  int depth_ = 0;
  Token lookahead_;
  bool lookahead_valid_ = false;
  std::map<std::string, std::string> prefixes_;
  std::vector<ParseDiagnostic> diags_;
};

}  // namespace

ParseResult parse_ofn(std::string_view text) { return OfnParser(text).run(); }

std::string serialize_ofn(const Ontology& ontology) {
  std::string out;
  out += "Prefix(:=<urn:onto#>)\n";
  out += "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n";
  out += "Prefix(rdf:=<http://www.w3.org/1999/02/22-rdf-syntax-ns#>)\n";
  out += "Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)\n";
  out += "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n";
  out += "Ontology(<urn:onto:" +
         (ontology.id().valid() ? ontology.id().canonical() : "ontology") +
         ">\n";

  std::vector<std::string> lines;
  lines.reserve(ontology.size());
  for (const auto& axiom : ontology.axioms()) lines.push_back(axiom.to_string());
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }

  for (const auto& [iri, label] : ontology.labels()) {
    std::string escaped;
    for (char c : label) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out += "AnnotationAssertion(rdfs:label :" + iri.canonical() + " \"" +
           escaped + "\")\n";
  }
  out += ")\n";
  return out;
}

}  // namespace onto
