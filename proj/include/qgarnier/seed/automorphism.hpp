#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "../ratfield/rational_function.hpp"
#include "seed.hpp"

namespace qgarnier {

class QuiverNotPreserved : public std::logic_error {
 public:
  explicit QuiverNotPreserved(const std::string& word)
      : std::logic_error("word '" + word + "' does not return the quiver to itself") {}
};

// A birational map of the coefficient field, stored as the images of y_1..y_n.
// Action on a function substitutes these images.
struct Automorphism {
  std::vector<RationalFunction> images;

  int size() const { return static_cast<int>(images.size()); }
  const RationalFunction& image(int k) const { return images.at(k - 1); }

  Substitution substitution() const {
    Substitution s;
    for (int k = 1; k <= size(); ++k) s.emplace(var::y(k), images[k - 1]);
    return s;
  }

  bool is_identity() const {
    for (int k = 1; k <= size(); ++k)
      if (!(images[k - 1] == RationalFunction::variable(var::y(k)))) return false;
    return true;
  }
};

inline Automorphism identity_automorphism(int n) {
  Automorphism a;
  for (int k = 1; k <= n; ++k) a.images.push_back(RationalFunction::variable(var::y(k)));
  return a;
}

// Runs the word on the initial seed. The word must bring the quiver back.
inline Automorphism compile(const Word& w, const Quiver& q) {
  Seed<RationalFunction> s = apply_word(initial_seed<RationalFunction>(q), w);
  if (s.quiver != q) throw QuiverNotPreserved(w.name.empty() ? w.steps_text() : w.name);
  Automorphism a;
  for (auto& c : s.coeffs) a.images.push_back(c.reduced());
  return a;
}

inline RationalFunction act_on(const Automorphism& a, const RationalFunction& f) {
  return substitute(f, a.substitution()).reduced();
}

// (a b)(f) = a(b(f))
inline Automorphism compose(const Automorphism& a, const Automorphism& b) {
  if (a.size() != b.size()) throw std::invalid_argument("automorphisms of different rank");
  Substitution sa = a.substitution();
  Automorphism r;
  for (const auto& img : b.images) r.images.push_back(substitute(img, sa).reduced());
  return r;
}

inline bool operator==(const Automorphism& a, const Automorphism& b) {
  if (a.size() != b.size()) return false;
  for (int k = 0; k < a.size(); ++k)
    if (!(a.images[k] == b.images[k])) return false;
  return true;
}

inline std::string to_string(const Automorphism& a) {
  std::string s;
  for (int k = 1; k <= a.size(); ++k) s += "y" + std::to_string(k) + " -> " + a.image(k).to_string() + "\n";
  return s;
}

}  // namespace qgarnier
