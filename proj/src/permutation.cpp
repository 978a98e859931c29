#include "treemono/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace treemono {

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint8_t x : images_) {
    if (x >= images_.size() || seen[x])
      throw ArgumentError("image table is not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<std::uint8_t> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Perm(std::move(im));
}

Perm Perm::cycle(int degree, const std::vector<std::uint8_t>& letters) {
  std::vector<std::uint8_t> im(degree);
  std::iota(im.begin(), im.end(), 0);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    std::uint8_t from = letters[i];
    std::uint8_t to = letters[(i + 1) % letters.size()];
    if (from >= degree || to >= degree)
      throw ArgumentError("cycle letter out of range");
    im[from] = to;
  }
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> im(images_.size());
  for (int x = 0; x < degree(); ++x) im[images_[x]] = static_cast<std::uint8_t>(x);
  return Perm(std::move(im));
}

int Perm::sign() const {
  int transpositions = 0;
  for (const auto& c : cycles()) transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2 == 0 ? 1 : -1;
}

std::vector<std::vector<std::uint8_t>> Perm::cycles() const {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    std::vector<std::uint8_t> c;
    std::uint8_t x = static_cast<std::uint8_t>(start);
    do {
      c.push_back(x);
      seen[x] = true;
      x = images_[x];
    } while (x != start);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string Perm::to_cycle_string() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw ArgumentError("degree mismatch in product");
  std::vector<std::uint8_t> im(p.images_.size());
  for (int x = 0; x < p.degree(); ++x) im[x] = q.images_[p.images_[x]];
  return Perm(std::move(im));
}

std::vector<Perm> all_perms(int degree) {
  std::vector<std::uint8_t> im(degree);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace treemono
