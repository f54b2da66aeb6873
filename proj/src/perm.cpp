#include "cayleyci/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace cayleyci {

Perm::Perm(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be at least 1");
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  if (img_.empty()) throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x]) {
      throw std::invalid_argument("image array is not a bijection");
    }
    seen[x] = 1;
  }
}

Perm Perm::from_cycles(std::string_view text, int degree) {
  if (degree < 1) throw std::invalid_argument("permutation degree must be at least 1");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<char> seen(degree, 0);

  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) {
      ++i;
    }
  };

  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    skip();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw std::invalid_argument("unexpected character in cycle notation");
      }
      int pt;
      if (degree <= 9) {
        pt = text[i] - '0';
        ++i;
      } else {
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + (text[i] - '0');
          if (v > degree) break;
          ++i;
        }
        pt = static_cast<int>(v);
      }
      if (pt < 1 || pt > degree) throw std::invalid_argument("cycle point out of range");
      if (seen[pt - 1]) throw std::invalid_argument("repeated point in cycle notation");
      seen[pt - 1] = 1;
      cyc.push_back(pt - 1);
      skip();
    }
    if (i >= text.size()) throw std::invalid_argument("unclosed cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    }
    skip();
  }
  return Perm(img);
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (img_[x] != x) return false;
  }
  return true;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    std::vector<int> cyc;
    int y = x;
    while (!seen[y]) {
      seen[y] = 1;
      cyc.push_back(y);
      y = img_[y];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

bool Perm::is_even() const {
  int transpositions = 0;
  for (const auto& c : cycles()) transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2 == 0;
}

bool Perm::is_semiregular() const {
  std::size_t len = 0;
  std::vector<char> seen(img_.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::size_t cur = 0;
    int y = x;
    while (!seen[y]) {
      seen[y] = 1;
      ++cur;
      y = img_[y];
    }
    if (len == 0) len = cur;
    if (cur != len) return false;
  }
  return true;
}

int Perm::fixed_points() const {
  int k = 0;
  for (int x = 0; x < degree(); ++x) {
    if (img_[x] == x) ++k;
  }
  return k;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  std::vector<char> seen(img_.size(), 0);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    int y = x;
    while (!seen[y]) {
      seen[y] = 1;
      ++len;
      y = img_[y];
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int x = 0; x < degree(); ++x) inv[img_[x]] = x;
  return Perm(inv);
}

Perm Perm::pow(std::uint64_t k) const {
  Perm acc(degree());
  Perm base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::string Perm::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0 && degree() > 9) out += ' ';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in composition");
  std::vector<int> img(p.degree());
  for (int x = 0; x < p.degree(); ++x) img[x] = q[p[x]];
  return Perm(img);
}

Perm conjugate(const Perm& p, const Perm& g) {
  return g.inverse() * p * g;
}

}  // namespace cayleyci
