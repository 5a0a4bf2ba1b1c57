#include "scon/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <sstream>

namespace scon {

std::string to_string(const ParseDiagnostic& d) {
  std::ostringstream out;
  out << (d.severity == Severity::Error ? "error" : "warning") << " at " << d.line << ':'
      << d.column << ": " << d.message;
  return out.str();
}

namespace {

enum class TokenKind { TermTok, Dot, LBrace, RBrace, Arrow, NolitKw, RuleKw, Name };

struct Token {
  TokenKind kind;
  int column;
  std::string text;           // raw spelling (for names and messages)
  std::optional<Term> term;   // set for TermTok
};

const std::regex kUriRe("[A-Za-z0-9_]*:[A-Za-z0-9_.-]+");
const std::regex kVarRe("\\?[A-Za-z0-9_]+");
const std::regex kNameRe("[A-Za-z0-9_][A-Za-z0-9_.-]*");

class LineTokenizer {
 public:
  LineTokenizer(std::string_view line, int line_no, std::vector<ParseDiagnostic>& diags)
      : line_(line), line_no_(line_no), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_ws();
      if (pos_ >= line_.size() || line_[pos_] == '#') break;
      int col = static_cast<int>(pos_) + 1;
      if (line_[pos_] == '"') {
        auto lit = read_literal();
        if (!lit) break;
        tokens.push_back({TokenKind::TermTok, col, *lit, Term::literal(*lit)});
        continue;
      }
      std::string word = read_word();
      if (auto tok = classify(word, col)) tokens.push_back(std::move(*tok));
    }
    return tokens;
  }

 private:
  void skip_ws() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }

  std::string read_word() {
    size_t start = pos_;
    while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_])) &&
           line_[pos_] != '#')
      ++pos_;
    return std::string(line_.substr(start, pos_ - start));
  }

  std::optional<std::string> read_literal() {
    size_t start = pos_++;
    std::string value;
    while (pos_ < line_.size()) {
      char c = line_[pos_++];
      if (c == '\\') {
        if (pos_ >= line_.size() || (line_[pos_] != '"' && line_[pos_] != '\\')) {
          error(static_cast<int>(pos_), "invalid escape in literal");
          return std::nullopt;
        }
        value.push_back(line_[pos_++]);
      } else if (c == '"') {
        if (value.empty()) {
          error(static_cast<int>(start) + 1, "empty literal");
          return std::nullopt;
        }
        return value;
      } else {
        value.push_back(c);
      }
    }
    error(static_cast<int>(start) + 1, "unterminated literal");
    return std::nullopt;
  }

  std::optional<Token> classify(const std::string& word, int col) {
    if (word == ".") return Token{TokenKind::Dot, col, word, {}};
    if (word == "{") return Token{TokenKind::LBrace, col, word, {}};
    if (word == "}") return Token{TokenKind::RBrace, col, word, {}};
    if (word == "=>") return Token{TokenKind::Arrow, col, word, {}};
    if (word == "@nolit") return Token{TokenKind::NolitKw, col, word, {}};
    if (word == "RULE") return Token{TokenKind::RuleKw, col, word, {}};
    if (!word.empty() && word[0] == '?') {
      if (!std::regex_match(word, kVarRe)) {
        error(col, "malformed variable '" + word + "'");
        return std::nullopt;
      }
      return Token{TokenKind::TermTok, col, word, Term::var(word.substr(1))};
    }
    if (word.find(':') != std::string::npos) {
      if (!std::regex_match(word, kUriRe)) {
        error(col, "malformed URI '" + word + "'");
        return std::nullopt;
      }
      return Token{TokenKind::TermTok, col, word, Term::uri(word)};
    }
    if (std::regex_match(word, kNameRe)) return Token{TokenKind::Name, col, word, {}};
    error(col, "unrecognized token '" + word + "'");
    return std::nullopt;
  }

  void error(int col, std::string message) {
    diags_.push_back({line_no_, col, std::move(message), Severity::Error});
  }

  std::string_view line_;
  int line_no_;
  size_t pos_ = 0;
  std::vector<ParseDiagnostic>& diags_;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// A triple line: exactly three terms closed by a dot.
std::optional<TriplePattern> parse_triple_tokens(const std::vector<Token>& tokens, int line_no,
                                                 std::vector<ParseDiagnostic>& diags) {
  std::vector<Term> terms;
  bool closed = false;
  for (const auto& tok : tokens) {
    if (closed) {
      diags.push_back({line_no, tok.column, "trailing content after '.'", Severity::Error});
      return std::nullopt;
    }
    if (tok.kind == TokenKind::Dot) {
      closed = true;
    } else if (tok.kind == TokenKind::TermTok) {
      terms.push_back(*tok.term);
    } else {
      diags.push_back({line_no, tok.column, "unexpected '" + tok.text + "' in triple line",
                       Severity::Error});
      return std::nullopt;
    }
  }
  int last_col = tokens.empty() ? 1 : tokens.back().column;
  if (!closed) {
    diags.push_back({line_no, last_col, "triple line must end with '.'", Severity::Error});
    return std::nullopt;
  }
  if (terms.size() != 3) {
    diags.push_back({line_no, last_col, "expected 3 terms, got " + std::to_string(terms.size()),
                     Severity::Error});
    return std::nullopt;
  }
  try {
    return TriplePattern(terms[0], terms[1], terms[2]);
  } catch (const std::invalid_argument& e) {
    diags.push_back({line_no, tokens[0].column, e.what(), Severity::Error});
    return std::nullopt;
  }
}

template <typename T>
ParseResult<T> finish(std::optional<T> value, std::vector<ParseDiagnostic> diags) {
  ParseResult<T> out;
  out.diagnostics = std::move(diags);
  if (!out.has_errors()) out.value = std::move(value);
  return out;
}

}  // namespace

ParseResult<TriplestoreSchema> parse_schema(std::string_view text) {
  std::vector<ParseDiagnostic> diags;
  GraphPattern graph;
  std::map<Term, std::pair<int, int>> var_positions;  // first occurrence, for dup messages
  std::vector<std::pair<Term, std::pair<int, int>>> nolit_mentions;

  auto lines = split_lines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    int line_no = static_cast<int>(i) + 1;
    auto tokens = LineTokenizer(lines[i], line_no, diags).run();
    if (tokens.empty()) continue;

    if (tokens[0].kind == TokenKind::NolitKw) {
      bool closed = false;
      for (size_t j = 1; j < tokens.size(); ++j) {
        const auto& tok = tokens[j];
        if (tok.kind == TokenKind::Dot && j + 1 == tokens.size()) {
          closed = true;
        } else if (tok.kind == TokenKind::TermTok && tok.term->is_variable()) {
          nolit_mentions.push_back({*tok.term, {line_no, tok.column}});
        } else {
          diags.push_back({line_no, tok.column, "@nolit expects variables followed by '.'",
                           Severity::Error});
        }
      }
      if (!closed)
        diags.push_back({line_no, tokens.back().column, "@nolit line must end with '.'",
                         Severity::Error});
      continue;
    }

    auto tp = parse_triple_tokens(tokens, line_no, diags);
    if (!tp) continue;
    for (int pos : {1, 2, 3}) {
      const Term& t = tp->at(pos);
      if (!t.is_variable()) continue;
      auto [it, inserted] = var_positions.insert({t, {line_no, tokens[pos - 1].column}});
      if (!inserted)
        diags.push_back({line_no, tokens[pos - 1].column,
                         "variable " + to_string(t) + " occurs more than once (first at line " +
                             std::to_string(it->second.first) + ")",
                         Severity::Error});
    }
    graph.add(std::move(*tp));
  }

  std::set<Term> nolit;
  for (const auto& [var, where] : nolit_mentions) {
    if (!var_positions.count(var)) {
      diags.push_back({where.first, where.second,
                       "@nolit names unknown variable " + to_string(var), Severity::Error});
      continue;
    }
    nolit.insert(var);
  }

  std::optional<TriplestoreSchema> schema;
  if (!std::any_of(diags.begin(), diags.end(),
                   [](const auto& d) { return d.severity == Severity::Error; })) {
    std::vector<std::string> warnings;
    try {
      schema.emplace(std::move(graph), std::move(nolit), &warnings);
    } catch (const std::invalid_argument& e) {
      diags.push_back({1, 1, e.what(), Severity::Error});
    }
    for (const auto& w : warnings) diags.push_back({1, 1, w, Severity::Warning});
  }
  return finish(std::move(schema), std::move(diags));
}

ParseResult<RuleSet> parse_rules(std::string_view text) {
  std::vector<ParseDiagnostic> diags;
  RuleSet rules;
  std::set<std::string> names;

  enum class State { TopLevel, Antecedent, Consequent };
  State state = State::TopLevel;
  std::string current_name;
  int block_line = 0;
  GraphPattern antecedent, consequent;

  auto close_block = [&](int line_no) {
    Rule r{current_name, std::move(antecedent), std::move(consequent)};
    if (state == State::Antecedent)
      diags.push_back({line_no, 1, "rule '" + current_name + "' is missing '=>'",
                       Severity::Error});
    for (const auto& v : validate_rule(r))
      diags.push_back({block_line, 1, "rule '" + current_name + "': " + v, Severity::Error});
    if (!names.insert(r.name).second)
      diags.push_back({block_line, 1, "duplicate rule name '" + r.name + "'", Severity::Error});
    rules.rules.push_back(std::move(r));
    antecedent = {};
    consequent = {};
    state = State::TopLevel;
  };

  auto lines = split_lines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    int line_no = static_cast<int>(i) + 1;
    auto tokens = LineTokenizer(lines[i], line_no, diags).run();
    if (tokens.empty()) continue;

    if (state == State::TopLevel) {
      if (tokens.size() == 3 && tokens[0].kind == TokenKind::RuleKw &&
          tokens[1].kind == TokenKind::Name && tokens[2].kind == TokenKind::LBrace) {
        current_name = tokens[1].text;
        block_line = line_no;
        state = State::Antecedent;
      } else {
        diags.push_back({line_no, tokens[0].column, "expected 'RULE <name> {'", Severity::Error});
      }
      continue;
    }

    if (tokens.size() == 1 && tokens[0].kind == TokenKind::Arrow) {
      if (state == State::Consequent)
        diags.push_back({line_no, tokens[0].column, "duplicate '=>' in rule '" + current_name +
                         "'", Severity::Error});
      state = State::Consequent;
      continue;
    }
    if (tokens.size() == 1 && tokens[0].kind == TokenKind::RBrace) {
      close_block(line_no);
      continue;
    }

    auto tp = parse_triple_tokens(tokens, line_no, diags);
    if (tp) (state == State::Antecedent ? antecedent : consequent).add(std::move(*tp));
  }
  if (state != State::TopLevel)
    diags.push_back({static_cast<int>(lines.size()), 1,
                     "unterminated rule block '" + current_name + "'", Severity::Error});

  return finish(std::make_optional(std::move(rules)), std::move(diags));
}

ParseResult<Graph> parse_graph(std::string_view text) {
  std::vector<ParseDiagnostic> diags;
  Graph g;
  auto lines = split_lines(text);
  for (size_t i = 0; i < lines.size(); ++i) {
    int line_no = static_cast<int>(i) + 1;
    auto tokens = LineTokenizer(lines[i], line_no, diags).run();
    if (tokens.empty()) continue;
    auto tp = parse_triple_tokens(tokens, line_no, diags);
    if (!tp) continue;
    if (!tp->is_ground()) {
      diags.push_back({line_no, tokens[0].column, "variables are not allowed in graph files",
                       Severity::Error});
      continue;
    }
    try {
      g.insert(Triple(tp->subject, tp->predicate, tp->object));
    } catch (const std::invalid_argument& e) {
      diags.push_back({line_no, tokens[0].column, e.what(), Severity::Error});
    }
  }
  return finish(std::make_optional(std::move(g)), std::move(diags));
}

namespace {

std::string triple_line(const std::string& s, const std::string& p, const std::string& o) {
  return s + " " + p + " " + o + " .\n";
}

}  // namespace

std::string serialize_graph(const Graph& g) {
  std::vector<std::string> lines;
  for (const auto& t : g)
    lines.push_back(triple_line(to_string(t.subject), to_string(t.predicate),
                                to_string(t.object)));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l;
  return out;
}

std::string serialize_schema(const TriplestoreSchema& s) {
  std::vector<std::string> lines;
  for (const auto& tp : s.graph())
    lines.push_back(triple_line(to_string(tp.subject), to_string(tp.predicate),
                                to_string(tp.object)));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l;
  out += "@nolit";
  for (const auto& v : s.nolit()) out += " " + to_string(v);
  out += " .\n";
  return out;
}

std::string serialize_rules(const RuleSet& rules) {
  std::string out;
  for (const auto& r : rules.rules) {
    out += "RULE " + r.name + " {\n";
    for (const auto& tp : r.antecedent)
      out += "  " + triple_line(to_string(tp.subject), to_string(tp.predicate),
                                to_string(tp.object));
    out += "  =>\n";
    for (const auto& tp : r.consequent)
      out += "  " + triple_line(to_string(tp.subject), to_string(tp.predicate),
                                to_string(tp.object));
    out += "}\n";
  }
  return out;
}

}  // namespace scon
