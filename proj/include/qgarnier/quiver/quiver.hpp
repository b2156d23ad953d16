#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qgarnier {

class InvalidVertex : public std::out_of_range {
 public:
  explicit InvalidVertex(int v, int n)
      : std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n)) {}
};

class InvalidPermutation : public std::invalid_argument {
 public:
  explicit InvalidPermutation(const std::string& what) : std::invalid_argument(what) {}
};

class UnknownName : public std::invalid_argument {
 public:
  explicit UnknownName(const std::string& name) : std::invalid_argument("unknown name '" + name + "'") {}
};

struct Arrow {
  int src = 0;
  int dst = 0;
  int multiplicity = 1;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Vertex relabeling given by its non-identity images; unmentioned vertices
// map to themselves.
class VertexMap {
 public:
  VertexMap() = default;
  VertexMap(std::initializer_list<std::pair<const int, int>> images) : images_(images) {}
  explicit VertexMap(std::map<int, int> images) : images_(std::move(images)) {}

  // images[k-1] is the image of k
  static VertexMap from_images(const std::vector<int>& images) {
    VertexMap m;
    for (std::size_t k = 0; k < images.size(); ++k)
      if (images[k] != static_cast<int>(k + 1)) m.images_[static_cast<int>(k + 1)] = images[k];
    return m;
  }

  int operator()(int v) const {
    auto it = images_.find(v);
    return it == images_.end() ? v : it->second;
  }

  const std::map<int, int>& images() const { return images_; }
  bool is_identity() const { return images_.empty(); }

  // true when the map permutes {1..n}
  bool is_permutation_of(int n) const {
    std::vector<bool> hit(n + 1, false);
    for (int v = 1; v <= n; ++v) {
      int w = (*this)(v);
      if (w < 1 || w > n || hit[w]) return false;
      hit[w] = true;
    }
    for (const auto& [k, v] : images_)
      if (k < 1 || k > n) return false;
    return true;
  }

 private:
  std::map<int, int> images_;
};

// Exchange matrix of a quiver without loops or 2-cycles: lambda(i,j) is the
// number of arrows i->j minus the number j->i. Vertices are 1-based.
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int n) : n_(n), m_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  static Quiver from_arrows(int n, const std::vector<Arrow>& arrows) {
    Quiver q(n);
    for (const Arrow& a : arrows) {
      q.check(a.src);
      q.check(a.dst);
      if (a.src == a.dst) throw std::invalid_argument("loops are not allowed");
      q.at(a.src, a.dst) += a.multiplicity;
      q.at(a.dst, a.src) -= a.multiplicity;
    }
    return q;
  }

  static Quiver from_matrix(const std::vector<std::vector<int>>& rows) {
    int n = static_cast<int>(rows.size());
    Quiver q(n);
    for (int i = 1; i <= n; ++i) {
      if (static_cast<int>(rows[i - 1].size()) != n) throw std::invalid_argument("matrix is not square");
      for (int j = 1; j <= n; ++j) q.at(i, j) = rows[i - 1][j - 1];
    }
    if (!q.is_skew_symmetric()) throw std::invalid_argument("matrix is not skew-symmetric");
    return q;
  }

  int size() const { return n_; }

  int lambda(int i, int j) const {
    check(i);
    check(j);
    return m_[index(i, j)];
  }

  std::vector<std::vector<int>> matrix() const {
    std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j) rows[i - 1][j - 1] = m_[index(i, j)];
    return rows;
  }

  // one entry per ordered pair with a positive count, sorted by (src, dst)
  std::vector<Arrow> arrows() const {
    std::vector<Arrow> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (m_[index(i, j)] > 0) out.push_back({i, j, m_[index(i, j)]});
    return out;
  }

  bool is_skew_symmetric() const {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (m_[index(i, j)] != -m_[index(j, i)]) return false;
    return true;
  }

  void check(int v) const {
    if (v < 1 || v > n_) throw InvalidVertex(v, n_);
  }

  friend bool operator==(const Quiver& a, const Quiver& b) { return a.n_ == b.n_ && a.m_ == b.m_; }
  friend bool operator!=(const Quiver& a, const Quiver& b) { return !(a == b); }

  int& at(int i, int j) { return m_[index(i, j)]; }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i - 1) * n_ + (j - 1); }

  int n_ = 0;
  std::vector<int> m_;
};

inline int sign(int v) { return (v > 0) - (v < 0); }

inline Quiver mutate_matrix(const Quiver& q, int i) {
  q.check(i);
  const int n = q.size();
  Quiver r(n);
  for (int k = 1; k <= n; ++k) {
    for (int l = 1; l <= n; ++l) {
      int lkl = q.lambda(k, l);
      if (k == i || l == i) {
        r.at(k, l) = -lkl;
      } else {
        int lki = q.lambda(k, i), lil = q.lambda(i, l);
        r.at(k, l) = lkl + (sign(lki) + sign(lil)) * lki * lil / 2;
      }
    }
  }
  return r;
}

// new lambda(k,l) = lambda(sigma(k), sigma(l))
inline Quiver permute(const Quiver& q, const VertexMap& sigma) {
  const int n = q.size();
  if (!sigma.is_permutation_of(n)) throw InvalidPermutation("vertex map is not a permutation of 1.." + std::to_string(n));
  Quiver r(n);
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) r.at(k, l) = q.lambda(sigma(k), sigma(l));
  return r;
}

inline Quiver transpose_vertices(const Quiver& q, int i, int j) {
  q.check(i);
  q.check(j);
  if (i == j) return q;
  return permute(q, VertexMap{{i, j}, {j, i}});
}

inline Quiver reverse(const Quiver& q) {
  Quiver r(q.size());
  for (int k = 1; k <= q.size(); ++k)
    for (int l = 1; l <= q.size(); ++l) r.at(k, l) = -q.lambda(k, l);
  return r;
}

inline std::vector<int> surviving_vertices(int n, int removed) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v)
    if (v != removed) out.push_back(v);
  return out;
}

// Maps a surviving source label to its final position given a relabeling of
// source labels onto 1..n-1.
class ConfluenceLabels {
 public:
  ConfluenceLabels(int n, int removed, const VertexMap& relabel) : n_(n), removed_(removed) {
    std::vector<bool> hit(n, false);
    for (int v : surviving_vertices(n, removed)) {
      int w = relabel(v);
      if (w < 1 || w > n - 1 || hit[w])
        throw InvalidPermutation("relabeling does not send the surviving vertices onto 1.." + std::to_string(n - 1));
      hit[w] = true;
      target_[v] = w;
    }
  }

  int operator()(int v) const { return target_.at(v); }
  int removed() const { return removed_; }
  int source_size() const { return n_; }

 private:
  int n_;
  int removed_;
  std::map<int, int> target_;
};

// The largest label moves into the hole left by the removed vertex.
inline VertexMap default_confluence_relabel(int n, int removed) {
  if (removed == n) return {};
  return VertexMap{{n, removed}};
}

// Confluence i -> j: add row and column i into j, delete vertex i, and rename
// the survivors. `relabel` acts on source labels.
inline Quiver confluence_matrix(const Quiver& q, int i, int j, const std::optional<VertexMap>& relabel = std::nullopt) {
  q.check(i);
  q.check(j);
  if (i == j) throw std::invalid_argument("confluence needs two distinct vertices");
  const int n = q.size();
  ConfluenceLabels labels(n, i, relabel ? *relabel : default_confluence_relabel(n, i));
  std::vector<std::vector<int>> m = q.matrix();
  for (int c = 0; c < n; ++c) m[j - 1][c] += m[i - 1][c];
  for (int r = 0; r < n; ++r) m[r][j - 1] += m[r][i - 1];
  Quiver out(n - 1);
  for (int a : surviving_vertices(n, i))
    for (int b : surviving_vertices(n, i)) out.at(labels(a), labels(b)) = m[a - 1][b - 1];
  if (!out.is_skew_symmetric()) throw std::logic_error("confluence produced a non skew-symmetric matrix");
  return out;
}

}  // namespace qgarnier
