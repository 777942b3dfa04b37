#ifndef SYNLM_TREE_HPP
#define SYNLM_TREE_HPP

// Constituency trees over word leaves, with PTB-style bracket interchange.

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace synlm::tree {

enum class Structure { kFlat, kLeftFirst, kRightFirst };
enum class Labeling { kX, kPos, kDep };

inline const char* to_string(Structure s) {
  switch (s) {
    case Structure::kFlat: return "flat";
    case Structure::kLeftFirst: return "left_first";
    case Structure::kRightFirst: return "right_first";
  }
  return "?";
}

inline const char* to_string(Labeling l) {
  switch (l) {
    case Labeling::kX: return "X";
    case Labeling::kPos: return "POS";
    case Labeling::kDep: return "DEP";
  }
  return "?";
}

struct ConstNode {
  std::string label;                // internal nodes only
  std::string word;                 // leaves only
  std::vector<ConstNode> children;  // empty iff leaf
  int head_index = -1;              // 0-based token index of the word this node was created for

  bool is_leaf() const { return children.empty(); }

  static ConstNode leaf(std::string word) {
    ConstNode n;
    n.word = std::move(word);
    return n;
  }

  static ConstNode internal(std::string label, std::vector<ConstNode> children,
                            int head_index = -1) {
    ConstNode n;
    n.label = std::move(label);
    n.children = std::move(children);
    n.head_index = head_index;
    return n;
  }

  // Structural equality; head_index is bookkeeping and not compared.
  friend bool operator==(const ConstNode& a, const ConstNode& b) {
    return a.label == b.label && a.word == b.word && a.children == b.children;
  }
};

struct ConstTree {
  ConstNode root;
  Structure structure_tag = Structure::kFlat;
  Labeling label_tag = Labeling::kX;

  friend bool operator==(const ConstTree& a, const ConstTree& b) { return a.root == b.root; }
};

inline void yield_of(const ConstNode& n, std::vector<std::string>& out) {
  if (n.is_leaf()) {
    out.push_back(n.word);
    return;
  }
  for (const ConstNode& c : n.children) yield_of(c, out);
}

inline std::vector<std::string> yield_of(const ConstTree& t) {
  std::vector<std::string> out;
  yield_of(t.root, out);
  return out;
}

// A unary wrapper is an internal node whose only child is a leaf.
inline bool is_wrapper(const ConstNode& n) {
  return !n.is_leaf() && n.children.size() == 1 && n.children[0].is_leaf();
}

// Replaces every wrapper by its word, except a wrapper that is the root.
inline ConstNode collapse_wrappers(const ConstNode& n) {
  if (n.is_leaf()) return n;
  ConstNode out;
  out.label = n.label;
  out.head_index = n.head_index;
  for (const ConstNode& c : n.children) {
    if (is_wrapper(c))
      out.children.push_back(c.children[0]);
    else
      out.children.push_back(collapse_wrappers(c));
  }
  return out;
}

inline ConstTree collapse_wrappers(const ConstTree& t) {
  ConstTree out = t;
  if (!is_wrapper(t.root)) out.root = collapse_wrappers(t.root);
  return out;
}

namespace detail {

inline std::string escape(const std::string& s) {
  if (s.find('(') == std::string::npos && s.find(')') == std::string::npos) return s;
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    if (c == '(')
      out += "-LRB-";
    else if (c == ')')
      out += "-RRB-";
    else
      out += c;
  }
  return out;
}

inline std::string unescape(const std::string& s) {
  if (s.find("-LRB-") == std::string::npos && s.find("-RRB-") == std::string::npos) return s;
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size();) {
    if (s.compare(i, 5, "-LRB-") == 0) {
      out += '(';
      i += 5;
    } else if (s.compare(i, 5, "-RRB-") == 0) {
      out += ')';
      i += 5;
    } else {
      out += s[i++];
    }
  }
  return out;
}

inline void write_bracket(const ConstNode& n, std::ostream& os) {
  if (n.is_leaf()) {
    os << escape(n.word);
    return;
  }
  os << '(' << escape(n.label);
  for (const ConstNode& c : n.children) {
    os << ' ';
    write_bracket(c, os);
  }
  os << ')';
}

}  // namespace detail

inline std::string to_bracket(const ConstNode& n) {
  std::ostringstream ss;
  detail::write_bracket(n, ss);
  return ss.str();
}

inline std::string to_bracket(const ConstTree& t) { return to_bracket(t.root); }

class BracketParseError : public std::runtime_error {
 public:
  BracketParseError(size_t offset, const std::string& what)
      : std::runtime_error("bracket parse error at offset " + std::to_string(offset) + ": " + what),
        offset(offset) {}
  size_t offset;
};

namespace detail {

struct BracketParser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  std::string atom() {
    size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    if (pos == start) throw BracketParseError(pos, "expected atom");
    return unescape(std::string(text.substr(start, pos - start)));
  }

  ConstNode node() {
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') throw BracketParseError(pos, "expected '('");
    ++pos;
    skip_ws();
    ConstNode n;
    n.label = atom();
    bool any_child = false;
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw BracketParseError(pos, "unbalanced: missing ')'");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == '(')
        n.children.push_back(node());
      else
        n.children.push_back(ConstNode::leaf(atom()));
      any_child = true;
    }
    if (!any_child) throw BracketParseError(pos, "internal node with no children");
    return n;
  }
};

}  // namespace detail

inline ConstTree from_bracket(std::string_view text) {
  detail::BracketParser p{text};
  p.skip_ws();
  if (p.pos >= text.size()) throw BracketParseError(0, "empty input");
  ConstTree t;
  t.root = p.node();
  p.skip_ws();
  if (p.pos != text.size()) throw BracketParseError(p.pos, "trailing content after tree");
  return t;
}

}  // namespace synlm::tree

#endif
