#ifndef SYNLM_TESTS_TESTUTIL_HPP
#define SYNLM_TESTS_TESTUTIL_HPP

// Shared test helpers: random tree generators and independent oracles.
// Everything here is deliberately brute-force and kept independent of the
// library code paths it is used to check.

#include <random>
#include <string>
#include <vector>

#include "synlm/conllu.hpp"
#include "synlm/tree.hpp"

namespace testutil {

using synlm::conllu::DepSentence;
using synlm::conllu::Token;

inline const std::vector<std::string>& upos_pool() {
  static const std::vector<std::string> pool = {"NOUN", "VERB", "DET", "ADJ", "ADV", "PRON"};
  return pool;
}

inline const std::vector<std::string>& deprel_pool() {
  static const std::vector<std::string> pool = {"nsubj", "obj", "det", "amod", "advmod", "nmod"};
  return pool;
}

// Recursive construction that yields exactly the projective trees: a head is
// chosen inside the span, and each side of it is carved into contiguous
// segments whose sub-heads attach to it.
inline int gen_projective_heads(std::vector<int>& heads, int lo, int hi, std::mt19937_64& rng) {
  int h = lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo));
  int pos = h;
  while (pos > lo) {
    int s = lo + static_cast<int>(rng() % static_cast<uint64_t>(pos - lo));
    int sub = gen_projective_heads(heads, s, pos, rng);
    heads[sub] = h + 1;  // heads are 1-based
    pos = s;
  }
  pos = h + 1;
  while (pos < hi) {
    int e = pos + 1 + static_cast<int>(rng() % static_cast<uint64_t>(hi - pos));
    int sub = gen_projective_heads(heads, pos, e, rng);
    heads[sub] = h + 1;
    pos = e;
  }
  return h;
}

inline DepSentence random_projective_sentence(int n, std::mt19937_64& rng) {
  std::vector<int> heads(n, 0);
  int root = gen_projective_heads(heads, 0, n, rng);
  heads[root] = 0;
  DepSentence s;
  for (int i = 0; i < n; ++i) {
    Token t;
    t.id = i + 1;
    t.form = "w" + std::to_string(i + 1);
    t.upos = upos_pool()[rng() % upos_pool().size()];
    t.head = heads[i];
    t.deprel = (heads[i] == 0) ? "root" : deprel_pool()[rng() % deprel_pool().size()];
    s.tokens.push_back(std::move(t));
  }
  return s;
}

// Random head assignment that is a valid single-rooted tree but not
// necessarily projective (rejection sampling over arbitrary assignments).
inline DepSentence random_tree_sentence(int n, std::mt19937_64& rng) {
  while (true) {
    std::vector<int> heads(n);
    int root = static_cast<int>(rng() % static_cast<uint64_t>(n));
    for (int i = 0; i < n; ++i) {
      if (i == root) {
        heads[i] = 0;
        continue;
      }
      int h;
      do {
        h = 1 + static_cast<int>(rng() % static_cast<uint64_t>(n));
      } while (h == i + 1);
      heads[i] = h;
    }
    // accept only if every token reaches the root (no cycles)
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int cur = i + 1, steps = 0;
      while (cur != 0) {
        cur = heads[cur - 1];
        if (++steps > n) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    DepSentence s;
    for (int i = 0; i < n; ++i) {
      Token t;
      t.id = i + 1;
      t.form = "w" + std::to_string(i + 1);
      t.upos = upos_pool()[rng() % upos_pool().size()];
      t.head = heads[i];
      t.deprel = (heads[i] == 0) ? "root" : deprel_pool()[rng() % deprel_pool().size()];
      s.tokens.push_back(std::move(t));
    }
    return s;
  }
}

// Independent projectivity oracle: for every arc (h, d), every token strictly
// between h and d must be a descendant of h (the root arc is vacuous for a
// valid tree). O(n^3) and proud of it.
inline bool projective_oracle(const DepSentence& s) {
  const int n = static_cast<int>(s.tokens.size());
  auto is_descendant_of = [&](int tok, int anc) {
    int cur = tok;
    while (cur != 0) {
      cur = s.tokens[cur - 1].head;
      if (cur == anc) return true;
    }
    return false;
  };
  for (const Token& t : s.tokens) {
    if (t.head == 0) continue;
    int lo = std::min(t.head, t.id), hi = std::max(t.head, t.id);
    for (int between = lo + 1; between < hi; ++between) {
      if (between == t.head || between == t.id) continue;
      if (!is_descendant_of(between, t.head)) return false;
    }
  }
  (void)n;
  return true;
}

inline DepSentence mirror(const DepSentence& s) {
  const int n = static_cast<int>(s.tokens.size());
  DepSentence out;
  out.source_id = s.source_id;
  for (int i = n - 1; i >= 0; --i) {
    Token t = s.tokens[i];
    t.id = n - s.tokens[i].id + 1;
    t.head = (s.tokens[i].head == 0) ? 0 : n - s.tokens[i].head + 1;
    out.tokens.push_back(std::move(t));
  }
  return out;
}

inline synlm::tree::ConstNode mirror(const synlm::tree::ConstNode& n) {
  synlm::tree::ConstNode out;
  out.label = n.label;
  out.word = n.word;
  out.head_index = n.head_index;
  for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
    out.children.push_back(mirror(*it));
  return out;
}

}  // namespace testutil

#endif
