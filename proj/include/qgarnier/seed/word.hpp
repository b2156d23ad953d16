#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "../quiver/quiver.hpp"
#include "../ratfield/errors.hpp"

namespace qgarnier {

struct ElementaryStep {
  enum class Kind { Mutation, Transposition, Reversal };

  Kind kind = Kind::Reversal;
  int i = 0;
  int j = 0;

  static ElementaryStep mutation(int v) { return {Kind::Mutation, v, 0}; }
  static ElementaryStep transposition(int a, int b) { return {Kind::Transposition, a, b}; }
  static ElementaryStep reversal() { return {Kind::Reversal, 0, 0}; }

  std::string to_string() const {
    switch (kind) {
      case Kind::Mutation: return "m" + std::to_string(i);
      case Kind::Transposition: return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      case Kind::Reversal: return "iota";
    }
    return "?";
  }

  friend bool operator==(const ElementaryStep&, const ElementaryStep&) = default;
};

// Steps in the order they act on a seed (first element first). Every step is
// an involution, so the inverse word is the reversed list.
struct Word {
  std::string name;
  std::vector<ElementaryStep> steps;

  std::size_t size() const { return steps.size(); }

  Word inverse() const {
    Word w{name.empty() ? "" : "(" + name + ")^-1", steps};
    std::reverse(w.steps.begin(), w.steps.end());
    return w;
  }

  Word then(const Word& o) const {
    Word w{name + " " + o.name, steps};
    w.steps.insert(w.steps.end(), o.steps.begin(), o.steps.end());
    return w;
  }

  Word power(int k) const {
    Word base = k < 0 ? inverse() : *this;
    Word w{"(" + name + ")^" + std::to_string(k), {}};
    for (int r = 0; r < (k < 0 ? -k : k); ++r) w.steps.insert(w.steps.end(), base.steps.begin(), base.steps.end());
    return w;
  }

  std::string steps_text() const {
    std::string s;
    for (const auto& e : steps) s += (s.empty() ? "" : " ") + e.to_string();
    return s;
  }
};

// A named generator (or its inverse) or one block of elementary tokens, as
// it occurs in a product. Products are folded atom by atom.
struct WordAtom {
  std::string key;
  std::vector<ElementaryStep> steps;

  WordAtom inverse() const {
    WordAtom a{key, steps};
    std::reverse(a.steps.begin(), a.steps.end());
    const std::string suffix = "^-1";
    if (a.key.size() > suffix.size() && a.key.compare(a.key.size() - suffix.size(), suffix.size(), suffix) == 0)
      a.key.erase(a.key.size() - suffix.size());
    else
      a.key += suffix;
    return a;
  }
};

using AtomResolver = std::function<std::optional<std::vector<WordAtom>>(const std::string&)>;

namespace detail {

struct WordNode {
  enum class Kind { Elementary, Named, Group };
  Kind kind = Kind::Elementary;
  std::vector<ElementaryStep> written;  // one token, written order
  std::string name;
  std::vector<WordNode> children;
  int power = 1;
};

inline std::string canonical_generator_name(std::string s) {
  std::replace(s.begin(), s.end(), '\'', 'p');
  return s;
}

class WordParser {
 public:
  explicit WordParser(std::string_view text) : s_(text) {}

  std::vector<WordNode> parse() {
    auto seq = sequence();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return seq;
  }

 private:
  std::vector<WordNode> sequence() {
    std::vector<WordNode> out;
    for (;;) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] == ')') return out;
      WordNode n = factor();
      skip();
      if (accept('^')) n.power = exponent();
      out.push_back(std::move(n));
    }
  }

  WordNode factor() {
    if (s_[pos_] == '(') {
      std::size_t look = pos_ + 1;
      while (look < s_.size() && std::isspace(static_cast<unsigned char>(s_[look]))) ++look;
      if (look < s_.size() && std::isdigit(static_cast<unsigned char>(s_[look]))) return cycle();
      ++pos_;
      WordNode g;
      g.kind = WordNode::Kind::Group;
      g.children = sequence();
      if (!accept(')')) fail("expected ')'");
      return g;
    }
    if (!std::isalpha(static_cast<unsigned char>(s_[pos_]))) fail("expected a word token");
    std::size_t start = pos_;
    WordNode n;
    // mutations may be written back to back, as in "m1m2(2,4)m2m1"
    std::size_t digits = s_.compare(pos_, 2, "mu") == 0 ? pos_ + 2 : pos_ + 1;
    if (s_[pos_] == 'm' && digits < s_.size() && std::isdigit(static_cast<unsigned char>(s_[digits]))) {
      pos_ = digits;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      n.written.push_back(ElementaryStep::mutation(std::stoi(std::string(s_.substr(digits, pos_ - digits)))));
      return n;
    }
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
      ++pos_;
    std::string tok(s_.substr(start, pos_ - start));
    if (tok == "iota") {
      n.written.push_back(ElementaryStep::reversal());
      return n;
    }
    n.kind = WordNode::Kind::Named;
    n.name = canonical_generator_name(tok);
    return n;
  }

  // (a1,...,am) is the written product (a1,a2)(a1,a3)...(a1,am)
  WordNode cycle() {
    ++pos_;
    std::vector<int> entries;
    for (;;) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a vertex number");
      entries.push_back(std::stoi(std::string(s_.substr(start, pos_ - start))));
      skip();
      if (accept(')')) break;
      if (!accept(',')) fail("expected ',' or ')'");
    }
    if (entries.size() < 2) fail("a cycle needs at least two vertices");
    WordNode n;
    for (std::size_t k = 1; k < entries.size(); ++k)
      n.written.push_back(ElementaryStep::transposition(entries[0], entries[k]));
    return n;
  }

  int exponent() {
    skip();
    bool paren = accept('(');
    skip();
    bool neg = accept('-');
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return neg ? -e : e;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in word '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline std::vector<WordAtom> raise(const std::vector<WordAtom>& atoms, int k) {
  std::vector<WordAtom> base = atoms;
  if (k < 0) {
    std::reverse(base.begin(), base.end());
    for (auto& a : base) a = a.inverse();
  }
  std::vector<WordAtom> out;
  for (int r = 0; r < (k < 0 ? -k : k); ++r) out.insert(out.end(), base.begin(), base.end());
  return out;
}

inline std::vector<WordAtom> to_atoms(const std::vector<WordNode>& seq, const AtomResolver& resolve) {
  std::vector<WordAtom> out;
  std::vector<ElementaryStep> run;
  std::string run_text;
  // written elementary tokens act rightmost first, so a run is reversed
  auto flush = [&] {
    if (run.empty()) return;
    std::reverse(run.begin(), run.end());
    out.push_back({run_text, run});
    run.clear();
    run_text.clear();
  };
  for (const WordNode& n : seq) {
    if (n.kind == WordNode::Kind::Elementary && n.power == 1) {
      run.insert(run.end(), n.written.begin(), n.written.end());
      for (const auto& e : n.written) run_text += (run_text.empty() ? "" : " ") + e.to_string();
      continue;
    }
    flush();
    std::vector<WordAtom> piece;
    if (n.kind == WordNode::Kind::Elementary) {
      std::vector<ElementaryStep> steps(n.written.rbegin(), n.written.rend());
      std::string text;
      for (const auto& e : n.written) text += (text.empty() ? "" : " ") + e.to_string();
      piece.push_back({text, steps});
    } else if (n.kind == WordNode::Kind::Group) {
      piece = to_atoms(n.children, resolve);
    } else {
      std::optional<std::vector<WordAtom>> r = resolve ? resolve(n.name) : std::nullopt;
      if (!r) throw UnknownName(n.name);
      piece = *r;
    }
    auto raised = raise(piece, n.power);
    out.insert(out.end(), raised.begin(), raised.end());
  }
  flush();
  return out;
}

}  // namespace detail

// Parses the product notation used for generators, e.g. "m1 (1,2) m1",
// "(2,4,6,8,10,12)(1,3,5,7,9,11)", "pi2 sp0 s0" or "(pi3 pi2 pi1)^2".
// A maximal run of elementary tokens acts on seeds rightmost token first;
// named elements compose as maps, (u v)(f) = u(v(f)).
inline std::vector<WordAtom> parse_atoms(std::string_view text, const AtomResolver& resolve = {}) {
  return detail::to_atoms(detail::WordParser(text).parse(), resolve);
}

inline Word atoms_to_word(const std::vector<WordAtom>& atoms, std::string name) {
  Word w{std::move(name), {}};
  for (const auto& a : atoms) w.steps.insert(w.steps.end(), a.steps.begin(), a.steps.end());
  return w;
}

inline Word parse_word(std::string_view text, const AtomResolver& resolve = {}) {
  return atoms_to_word(parse_atoms(text, resolve), std::string(text));
}

}  // namespace qgarnier
