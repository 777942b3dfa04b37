#ifndef SYNLM_CONVERT_HPP
#define SYNLM_CONVERT_HPP

// Dependency-to-constituency conversion: three structural conversions
// (flat, left-first, right-first) and three labeling schemes (X, POS, DEP).
//
// All three structures introduce one nonterminal per recursive step, headed
// by a word; every word additionally sits under a unary wrapper node. The
// left-first and right-first structures are binary above the wrappers.

#include <stdexcept>
#include <string>
#include <vector>

#include "synlm/conllu.hpp"
#include "synlm/tree.hpp"

namespace synlm::convert {

using conllu::DepSentence;
using tree::ConstNode;
using tree::ConstTree;
using tree::Labeling;
using tree::Structure;

namespace detail {

struct Deps {
  // Per word (0-based), dependents in surface order.
  std::vector<std::vector<int>> left, right;
  int root = -1;
};

inline Deps collect_deps(const DepSentence& s) {
  Deps d;
  const int n = static_cast<int>(s.tokens.size());
  d.left.resize(n);
  d.right.resize(n);
  for (int i = 0; i < n; ++i) {
    int head = s.tokens[i].head;
    if (head == 0) {
      d.root = i;
    } else if (i + 1 < head) {
      d.left[head - 1].push_back(i);
    } else {
      d.right[head - 1].push_back(i);
    }
  }
  return d;
}

using Span = std::pair<int, int>;  // [begin, end) into left/right dependent lists

inline ConstNode wrapper(const DepSentence& s, int w) {
  ConstNode n;
  n.head_index = w;
  n.children.push_back(ConstNode::leaf(s.tokens[w].form));
  return n;
}

inline ConstNode flat(const DepSentence& s, const Deps& d, int w) {
  if (d.left[w].empty() && d.right[w].empty()) return wrapper(s, w);
  ConstNode n;
  n.head_index = w;
  for (int lw : d.left[w]) n.children.push_back(flat(s, d, lw));
  n.children.push_back(wrapper(s, w));
  for (int rw : d.right[w]) n.children.push_back(flat(s, d, rw));
  return n;
}

inline ConstNode left_first(const DepSentence& s, const Deps& d, int w, Span l, Span r) {
  if (l.first < l.second) {
    int lw = d.left[w][l.first];
    ConstNode n;
    n.head_index = w;
    n.children.push_back(
        left_first(s, d, lw, {0, (int)d.left[lw].size()}, {0, (int)d.right[lw].size()}));
    n.children.push_back(left_first(s, d, w, {l.first + 1, l.second}, r));
    return n;
  }
  if (r.first < r.second) {
    int rw = d.right[w][r.second - 1];
    ConstNode n;
    n.head_index = w;
    n.children.push_back(left_first(s, d, w, l, {r.first, r.second - 1}));
    n.children.push_back(
        left_first(s, d, rw, {0, (int)d.left[rw].size()}, {0, (int)d.right[rw].size()}));
    return n;
  }
  return wrapper(s, w);
}

inline ConstNode right_first(const DepSentence& s, const Deps& d, int w, Span l, Span r) {
  if (r.first < r.second) {
    int rw = d.right[w][r.second - 1];
    ConstNode n;
    n.head_index = w;
    n.children.push_back(right_first(s, d, w, l, {r.first, r.second - 1}));
    n.children.push_back(
        right_first(s, d, rw, {0, (int)d.left[rw].size()}, {0, (int)d.right[rw].size()}));
    return n;
  }
  if (l.first < l.second) {
    int lw = d.left[w][l.first];
    ConstNode n;
    n.head_index = w;
    n.children.push_back(
        right_first(s, d, lw, {0, (int)d.left[lw].size()}, {0, (int)d.right[lw].size()}));
    n.children.push_back(right_first(s, d, w, {l.first + 1, l.second}, r));
    return n;
  }
  return wrapper(s, w);
}

}  // namespace detail

// Unlabeled skeleton; every node carries head_index only.
inline ConstTree convert_structure(const DepSentence& s, Structure structure) {
  if (s.tokens.empty()) throw std::invalid_argument("convert: empty sentence");
  if (!conllu::is_projective(s))
    throw std::invalid_argument("convert: non-projective sentence" +
                                (s.source_id.empty() ? std::string() : " [" + s.source_id + "]"));
  detail::Deps d = detail::collect_deps(s);
  if (d.root < 0) throw std::invalid_argument("convert: no root token");
  ConstTree t;
  t.structure_tag = structure;
  switch (structure) {
    case Structure::kFlat:
      t.root = detail::flat(s, d, d.root);
      break;
    case Structure::kLeftFirst:
      t.root = detail::left_first(s, d, d.root, {0, (int)d.left[d.root].size()},
                                  {0, (int)d.right[d.root].size()});
      break;
    case Structure::kRightFirst:
      t.root = detail::right_first(s, d, d.root, {0, (int)d.left[d.root].size()},
                                   {0, (int)d.right[d.root].size()});
      break;
  }
  return t;
}

inline std::string node_label(const DepSentence& s, int head_index, Labeling labeling) {
  switch (labeling) {
    case Labeling::kX: return "X";
    case Labeling::kPos: return s.tokens[head_index].upos + "P";
    case Labeling::kDep: return s.tokens[head_index].deprel;
  }
  return "?";
}

namespace detail {

inline void apply_labels(ConstNode& n, const DepSentence& s, Labeling labeling) {
  if (n.is_leaf()) return;
  if (n.head_index < 0 || n.head_index >= static_cast<int>(s.tokens.size()))
    throw std::logic_error("label_tree: head_word_index out of range");
  n.label = node_label(s, n.head_index, labeling);
  for (ConstNode& c : n.children) apply_labels(c, s, labeling);
}

}  // namespace detail

inline ConstTree label_tree(ConstTree t, const DepSentence& s, Labeling labeling) {
  detail::apply_labels(t.root, s, labeling);
  t.label_tag = labeling;
  return t;
}

inline ConstTree convert(const DepSentence& s, Structure structure, Labeling labeling) {
  return label_tree(convert_structure(s, structure), s, labeling);
}

}  // namespace synlm::convert

#endif
