#pragma once

#include <cstdint>
#include <vector>

#include "treemono/bignat.hpp"
#include "treemono/permutation.hpp"

namespace treemono {

// The action of a tree automorphism on the d^n words of level n, stored
// as an explicit image table. Vertices are indexed lexicographically
// with letter 1 first: v = x_1..x_n |-> sum (x_i - 1) d^(n-i), so the
// induced action on a prefix level is index / d^(n-k).
class LevelPerm {
 public:
  LevelPerm() = default;
  LevelPerm(int degree, int level, std::vector<std::uint32_t> images);

  static LevelPerm identity(int degree, int level);
  // The element (w_1,...,w_d) sigma assembled from a root permutation
  // and d level-(n-1) sections.
  static LevelPerm from_blocks(const Perm& root, const std::vector<LevelPerm>& sections);
  // A root permutation viewed at level n with trivial sections.
  static LevelPerm constant(const Perm& root, int level);

  int degree() const { return degree_; }
  int level() const { return level_; }
  std::size_t size() const { return images_.size(); }
  const std::vector<std::uint32_t>& images() const { return images_; }
  std::uint32_t apply(std::uint32_t v) const { return images_[v]; }

  bool is_identity() const;
  LevelPerm inverse() const;
  // Induced action on level k <= n.
  LevelPerm project(int k) const;
  // Action on the first letter.
  Perm root_perm() const;
  // Section at letter x (0-based): the induced map on the subtree below
  // x, transported to the root; a LevelPerm of level n-1.
  LevelPerm section(std::uint8_t x) const;

  std::vector<std::uint64_t> cycle_lengths() const;
  BigNat order() const;  // lcm of cycle lengths
  // True when the local permutation at every internal vertex is even,
  // i.e. the element lies in the iterated wreath power of A_d.
  bool all_nodes_even() const;

  friend LevelPerm operator*(const LevelPerm& p, const LevelPerm& q);  // p acts first
  friend bool operator==(const LevelPerm& a, const LevelPerm& b) = default;
  friend auto operator<=>(const LevelPerm& a, const LevelPerm& b) = default;

 private:
  int degree_ = 0;
  int level_ = 0;
  std::vector<std::uint32_t> images_;
};

// w g w^-1 (right-action composition: w first in w g, etc).
LevelPerm conjugate(const LevelPerm& w, const LevelPerm& g);

// Block-diagonal element acting as `g` on the subtree below the given
// first-level letter and trivially elsewhere (level g.level()+1).
LevelPerm embed_at_letter(const LevelPerm& g, std::uint8_t letter, int degree);

// All of Aut(T_n) for small n (6^((3^n-1)/2) elements for d=3); test oracle.
std::vector<LevelPerm> enumerate_wn(int degree, int level);

}  // namespace treemono
