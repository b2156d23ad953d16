#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "../quiver/quiver.hpp"
#include "../ratfield/laurent_monomial.hpp"
#include "../seed/automorphism.hpp"
#include "../seed/word.hpp"
#include "cartan.hpp"
#include "roots.hpp"

namespace qgarnier {

class NonMonomialImage : public std::runtime_error {
 public:
  NonMonomialImage(const std::string& element, const std::string& root)
      : std::runtime_error(element + "(" + root + ") is not a Laurent monomial") {}
};

class NoTranslation : public std::invalid_argument {
 public:
  explicit NoTranslation(const std::string& what) : std::invalid_argument(what) {}
};

// Simple reflections g_i acting on simple roots r_i through a Cartan matrix,
// e.g. r_i on alpha_i ("r", "a") or s'_k on beta'_k ("sp", "bp").
struct ReflectionFamily {
  std::string generator_prefix;
  std::string root_prefix;
  CartanMatrix cartan;

  std::vector<int> labels() const {
    std::vector<int> l;
    for (int k = 0; k < cartan.size(); ++k) l.push_back(cartan.first_index + k);
    return l;
  }
  std::string generator(int i) const { return generator_prefix + std::to_string(i); }
  std::string root(int i) const { return root_prefix + std::to_string(i); }
};

// element(root) = image, where image is a root expression such as "q^-1 b0".
struct ActionRow {
  std::string element;
  std::string root;
  std::string image;
};

struct Decomposition {
  std::string lhs;
  std::string rhs;
};

struct Representation {
  std::string name;
  Quiver quiver;
  std::vector<std::string> generator_order;
  std::map<std::string, Word> generators;
  std::vector<std::string> translation_order;
  std::map<std::string, std::string> translations;  // products of generators
  std::vector<std::string> root_order;
  std::map<std::string, LaurentMonomial> roots;
  std::vector<ReflectionFamily> families;
  std::vector<std::string> reflection_invariant;  // gamma-type roots
  std::vector<ActionRow> table;
  std::vector<std::vector<std::string>> root_identities;  // each group must agree
  std::vector<Decomposition> decompositions;

  bool has_generator(const std::string& g) const { return generators.count(g) > 0; }
  bool has_translation(const std::string& t) const { return translations.count(t) > 0; }
  bool has_root(const std::string& r) const { return roots.count(r) > 0; }

  const LaurentMonomial& root(const std::string& r) const {
    auto it = roots.find(r);
    if (it == roots.end()) throw UnknownName(name + " has no root " + r);
    return it->second;
  }

  AtomResolver resolver() const {
    return [this](const std::string& id) -> std::optional<std::vector<WordAtom>> {
      if (auto g = generators.find(id); g != generators.end()) return std::vector<WordAtom>{{id, g->second.steps}};
      if (auto t = translations.find(id); t != translations.end()) return parse_atoms(t->second, resolver());
      return std::nullopt;
    };
  }

  std::vector<WordAtom> atoms(std::string_view expr) const { return parse_atoms(expr, resolver()); }
  Word word(std::string_view expr) const { return atoms_to_word(atoms(expr), std::string(expr)); }

  LaurentMonomial root_value(const RootExpr& e, long power = 1) const { return evaluate_root_expr(e, roots, power); }
  LaurentMonomial root_value(std::string_view e) const { return root_value(parse_root_expr(e)); }
};

// Compiled automorphisms of atoms, shared between threads. Words are
// compiled once per (representation, atom key).
class AutomorphismCache {
 public:
  const Automorphism& get(const Representation& rep, const WordAtom& atom) {
    std::string key = rep.name + "|" + atom.key;
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
    }
    auto a = std::make_unique<Automorphism>(compile(Word{atom.key, atom.steps}, rep.quiver));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = cache_.emplace(key, std::move(a));
    return *it->second;
  }

  static AutomorphismCache& global() {
    static AutomorphismCache c;
    return c;
  }

 private:
  std::mutex mu_;
  std::map<std::string, std::unique_ptr<Automorphism>> cache_;
};

// Automorphism of a product, (u v)(f) = u(v(f)). Running the whole word on
// a seed is much cheaper than composing compiled factors.
inline Automorphism automorphism_of(const Representation& rep, std::string_view expr) {
  return compile(rep.word(expr), rep.quiver);
}

// Image of f under a product, applying the rightmost atom first. Cheap when
// every intermediate image stays small, as for roots.
inline RationalFunction act_on_expr(const Representation& rep, std::string_view expr, const RationalFunction& f,
                                    AutomorphismCache& cache = AutomorphismCache::global()) {
  auto atoms = rep.atoms(expr);
  RationalFunction g = f;
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) g = act_on(cache.get(rep, *it), g);
  return g;
}

}  // namespace qgarnier
