#include "grouplat/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "grouplat/errors.hpp"

namespace grouplat {

Perm::Perm(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint16_t v : images_) {
    GROUPLAT_CHECK(v < images_.size() && !seen[v],
                   "permutation images are not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(int degree) {
  std::vector<std::uint16_t> images(static_cast<size_t>(degree));
  std::iota(images.begin(), images.end(), std::uint16_t{0});
  return Perm(std::move(images));
}

Perm Perm::compose(const Perm& other) const {
  GROUPLAT_CHECK(degree() == other.degree(),
                 "composing permutations of different degrees");
  std::vector<std::uint16_t> images(images_.size());
  for (size_t i = 0; i < images_.size(); ++i)
    images[i] = images_[other.images_[i]];
  return Perm(std::move(images));
}

Perm Perm::inverse() const {
  std::vector<std::uint16_t> images(images_.size());
  for (size_t i = 0; i < images_.size(); ++i)
    images[images_[i]] = static_cast<std::uint16_t>(i);
  return Perm(std::move(images));
}

int Perm::order() const {
  // lcm of cycle lengths
  std::vector<bool> seen(images_.size(), false);
  long long result = 1;
  for (size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    size_t p = start;
    do {
      seen[p] = true;
      p = images_[p];
      ++len;
    } while (p != start);
    result = std::lcm<long long>(result, len);
  }
  return static_cast<int>(result);
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Perm::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) {
      seen[start] = true;
      continue;
    }
    any = true;
    out << '(';
    size_t p = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << (p + 1);  // 1-based
      first = false;
      seen[p] = true;
      p = images_[p];
    } while (p != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm Perm::from_cycles(int degree, const std::string& text) {
  std::vector<std::uint16_t> images(static_cast<size_t>(degree));
  std::iota(images.begin(), images.end(), std::uint16_t{0});

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point number in cycle: " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree)
        throw ParseError("cycle point out of range 1.." + std::to_string(degree) +
                         ": " + std::to_string(v));
      cycle.push_back(v - 1);
      skip_ws();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle: " + text);
    ++i;  // ')'
    for (size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (images[static_cast<size_t>(from)] != from)
        throw ParseError("point repeated across cycles: " + std::to_string(from + 1));
      images[static_cast<size_t>(from)] = static_cast<std::uint16_t>(to);
    }
    skip_ws();
  }
  return Perm(std::move(images));
}

}  // namespace grouplat
