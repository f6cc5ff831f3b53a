#include "permdepth/permutation.hpp"

#include <cctype>
#include <cstdlib>

namespace permdepth {
namespace {

// Marks each value of `image` as seen, rejecting repeats and out-of-range
// entries so the result is a bijection on {1, ..., n}.
void check_bijection(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  std::vector<char> seen(n, 0);
  for (int v : image) {
    if (v < 1 || v > n)
      throw std::invalid_argument("permutation: value " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n));
    if (seen[v - 1])
      throw std::invalid_argument("permutation: repeated value " +
                                  std::to_string(v));
    seen[v - 1] = 1;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> image) {
  check_bijection(image);
  image_ = std::move(image);
}

std::string Permutation::str() const {
  std::string s;
  if (size() <= 9) {
    for (int v : image_) s.push_back(static_cast<char>('0' + v));
  } else {
    for (int i = 0; i < size(); ++i) {
      if (i) s.push_back(',');
      s += std::to_string(image_[i]);
    }
  }
  return s;
}

Permutation parse_permutation(const std::string& text) {
  auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  bool has_sep = false;
  for (char c : text)
    if (is_sep(c)) has_sep = true;

  std::vector<int> image;
  if (has_sep) {
    size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_sep(text[i])) ++i;
      if (i == text.size()) break;
      size_t j = i;
      while (j < text.size() && !is_sep(text[j])) ++j;
      std::string tok = text.substr(i, j - i);
      for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("permutation: non-integer token '" +
                                      tok + "'");
      if (tok.size() > 9)
        throw std::invalid_argument("permutation: token '" + tok +
                                    "' too large");
      image.push_back(std::atoi(tok.c_str()));
      i = j;
    }
  } else if (!text.empty()) {
    for (char c : text)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument(
            std::string("permutation: non-integer character '") + c + "'");
    if (text.size() > 9)
      throw std::invalid_argument(
          "permutation: digit-string form is ambiguous for n > 9; "
          "use comma-separated values");
    for (char c : text) image.push_back(c - '0');
  }
  return Permutation(std::move(image));
}

Permutation inverse(const Permutation& w) {
  const int n = w.size();
  std::vector<int> inv(n);
  for (int i = 1; i <= n; ++i) inv[w(i) - 1] = i;
  return Permutation::unchecked(std::move(inv));
}

long long depth(const Permutation& w) {
  long long d = 0;
  for (int i = 1; i <= w.size(); ++i)
    if (w(i) > i) d += w(i) - i;
  return d;
}

long long total_displacement(const Permutation& w) {
  long long d = 0;
  for (int i = 1; i <= w.size(); ++i) d += std::abs(w(i) - i);
  return d;
}

std::vector<Permutation> all_permutations(int n, bool force) {
  std::vector<Permutation> out;
  enumerate_sn(n, [&](const Permutation& w) { out.push_back(w); }, force);
  return out;
}

}  // namespace permdepth
