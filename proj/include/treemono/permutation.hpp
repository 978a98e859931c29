#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treemono/errors.hpp"

namespace treemono {

// A permutation of {0..d-1} acting on the right: the image of x is
// images()[x], and in a product p*q the factor p acts first. Letters are
// 0-based internally; all text I/O is 1-based.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint8_t> images);

  static Perm identity(int degree);
  // Builds a single cycle (letters 0-based), identity elsewhere.
  static Perm cycle(int degree, const std::vector<std::uint8_t>& letters);

  int degree() const { return static_cast<int>(images_.size()); }
  std::uint8_t apply(std::uint8_t x) const { return images_[x]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  int sign() const;  // +1 even, -1 odd

  // Disjoint cycle decomposition including fixed points; every cycle is
  // rotated to start at its smallest letter and cycles are ordered by
  // that letter.
  std::vector<std::vector<std::uint8_t>> cycles() const;
  // Multiset of cycle lengths, sorted descending.
  std::vector<int> cycle_type() const;

  // Cycle notation with 1-based letters, e.g. "(1 2)"; identity is "()".
  std::string to_cycle_string() const;

  friend Perm operator*(const Perm& p, const Perm& q);  // p first
  friend bool operator==(const Perm& a, const Perm& b) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) = default;

 private:
  std::vector<std::uint8_t> images_;
};

// All d! permutations of degree d in lexicographic image order.
std::vector<Perm> all_perms(int degree);

}  // namespace treemono
