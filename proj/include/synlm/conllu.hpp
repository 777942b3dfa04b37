#ifndef SYNLM_CONLLU_HPP
#define SYNLM_CONLLU_HPP

// CoNLL-U ingestion: parsing, validation, projectivity filtering.

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "synlm/util.hpp"

namespace synlm::conllu {

struct Token {
  int id = 0;       // 1-based position
  std::string form;
  std::string upos;
  int head = 0;     // 0 = artificial root
  std::string deprel;
};

struct DepSentence {
  std::vector<Token> tokens;
  std::string source_id;  // from "# sent_id = ..." when present

  size_t size() const { return tokens.size(); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line, const std::string& what)
      : std::runtime_error("conllu parse error at line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  size_t line_number;
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string source_id, const std::string& what)
      : std::runtime_error("invalid sentence" +
                           (source_id.empty() ? std::string() : " [" + source_id + "]") + ": " +
                           what),
        source_id(std::move(source_id)) {}
  std::string source_id;
};

// Tree well-formedness: consecutive ids, single root, all tokens reach root.
inline void validate(const DepSentence& s) {
  const int n = static_cast<int>(s.tokens.size());
  if (n == 0) throw ValidationError(s.source_id, "empty sentence");
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const Token& t = s.tokens[i];
    if (t.id != i + 1)
      throw ValidationError(s.source_id, "non-consecutive token id " + std::to_string(t.id));
    if (t.form.empty()) throw ValidationError(s.source_id, "empty form");
    if (t.head < 0 || t.head > n)
      throw ValidationError(s.source_id, "head out of range: " + std::to_string(t.head));
    if (t.head == t.id)
      throw ValidationError(s.source_id, "self-headed token " + std::to_string(t.id));
    if (t.head == 0) ++roots;
  }
  if (roots != 1)
    throw ValidationError(s.source_id, "expected exactly one root, found " + std::to_string(roots));
  for (int i = 0; i < n; ++i) {
    int cur = i + 1, steps = 0;
    while (cur != 0) {
      cur = s.tokens[cur - 1].head;
      if (++steps > n) throw ValidationError(s.source_id, "head links contain a cycle");
    }
  }
}

struct ParseResult {
  std::vector<DepSentence> sentences;
  std::vector<ValidationError> rejected;  // multi-root / cyclic blocks, counted not repaired
};

namespace detail {

inline bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Range ids ("1-2") mark multiword tokens, decimal ids ("3.1") empty nodes.
inline bool is_skippable_id(const std::string& s) {
  return s.find('-') != std::string::npos || s.find('.') != std::string::npos;
}

}  // namespace detail

// Ten tab-separated columns per token line; blank line separates sentences;
// '#' lines are comments. Only (id, form, upos, head, deprel) are retained.
inline ParseResult parse_conllu(std::istream& in) {
  ParseResult result;
  DepSentence current;
  size_t line_number = 0;
  bool in_block = false;

  auto flush = [&]() {
    if (!in_block) return;
    if (!current.tokens.empty()) {
      try {
        validate(current);
        result.sentences.push_back(std::move(current));
      } catch (const ValidationError& e) {
        result.rejected.push_back(e);
      }
    }
    current = DepSentence();
    in_block = false;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      in_block = true;
      auto eq = line.find('=');
      if (eq != std::string::npos && strip(line.substr(1, eq - 1)) == "sent_id")
        current.source_id = strip(line.substr(eq + 1));
      continue;
    }
    in_block = true;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 10)
      throw ParseError(line_number,
                       "expected 10 tab-separated columns, got " + std::to_string(cols.size()));
    if (detail::is_skippable_id(cols[0])) continue;
    if (!detail::is_integer(cols[0])) throw ParseError(line_number, "bad token id '" + cols[0] + "'");
    if (!detail::is_integer(cols[6])) throw ParseError(line_number, "non-integer head '" + cols[6] + "'");
    Token t;
    t.id = std::stoi(cols[0]);
    t.form = cols[1];
    t.upos = cols[3];
    t.head = std::stoi(cols[6]);
    t.deprel = cols[7];
    if (t.form.empty()) throw ParseError(line_number, "empty form");
    current.tokens.push_back(std::move(t));
  }
  flush();
  return result;
}

inline ParseResult parse_conllu(const std::string& text) {
  std::istringstream in(text);
  return parse_conllu(in);
}

// Retained-column serialization; parse(to_conllu(s)) is lossless for these.
inline void to_conllu(const DepSentence& s, std::ostream& os) {
  if (!s.source_id.empty()) os << "# sent_id = " << s.source_id << '\n';
  for (const Token& t : s.tokens) {
    os << t.id << '\t' << t.form << "\t_\t" << t.upos << "\t_\t_\t" << t.head << '\t' << t.deprel
       << "\t_\t_\n";
  }
  os << '\n';
}

// No two arcs cross; the root arc spans virtual position 0 to the head.
// Equivalent to the descendant condition checked by the test oracle.
inline bool is_projective(const DepSentence& s) {
  const int n = static_cast<int>(s.tokens.size());
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(n);
  for (const Token& t : s.tokens)
    arcs.emplace_back(std::min(t.head, t.id), std::max(t.head, t.id));
  for (size_t a = 0; a < arcs.size(); ++a) {
    for (size_t b = a + 1; b < arcs.size(); ++b) {
      auto [lo1, hi1] = arcs[a];
      auto [lo2, hi2] = arcs[b];
      bool lo2_in = lo1 < lo2 && lo2 < hi1;
      bool hi2_in = lo1 < hi2 && hi2 < hi1;
      if (lo2_in != hi2_in && lo2 != lo1 && lo2 != hi1 && hi2 != lo1 && hi2 != hi1) return false;
    }
  }
  return true;
}

struct FilterResult {
  std::vector<DepSentence> kept;
  size_t dropped_count = 0;
};

inline FilterResult filter_projective(std::vector<DepSentence> sentences,
                                      Diagnostics* diag = nullptr) {
  FilterResult out;
  for (auto& s : sentences) {
    if (is_projective(s))
      out.kept.push_back(std::move(s));
    else
      ++out.dropped_count;
  }
  if (diag) {
    diag->emit("projective_kept", out.kept.size());
    diag->emit("non_projective_dropped", out.dropped_count);
  }
  return out;
}

// Removes deprel=="punct" tokens; a punct token with dependents makes the
// sentence unusable and is reported as a validation error.
inline DepSentence drop_punct(const DepSentence& s) {
  std::vector<int> remap(s.tokens.size() + 1, 0);  // old id -> new id, 0 stays 0
  int next = 0;
  for (const Token& t : s.tokens) {
    if (t.deprel == "punct") continue;
    remap[t.id] = ++next;
  }
  DepSentence out;
  out.source_id = s.source_id;
  for (const Token& t : s.tokens) {
    if (t.deprel == "punct") continue;
    Token nt = t;
    nt.id = remap[t.id];
    if (t.head != 0) {
      if (remap[t.head] == 0)
        throw ValidationError(s.source_id, "token depends on removed punct token");
      nt.head = remap[t.head];
    }
    out.tokens.push_back(std::move(nt));
  }
  if (out.tokens.empty()) throw ValidationError(s.source_id, "sentence is all punctuation");
  return out;
}

// "nsubj:pass" -> "nsubj"; kept whole by default.
inline DepSentence strip_deprel_subtypes(DepSentence s) {
  for (Token& t : s.tokens) {
    auto pos = t.deprel.find(':');
    if (pos != std::string::npos) t.deprel.resize(pos);
  }
  return s;
}

}  // namespace synlm::conllu

#endif
