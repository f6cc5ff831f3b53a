#include "permdepth/phi_map.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permdepth {

MotzkinPath phi(const Permutation& w) {
  const int n = w.size();
  std::vector<int> inv(n + 1);
  for (int i = 1; i <= n; ++i) inv[w(i)] = i;
  std::vector<Step> steps(n);
  for (int i = 1; i <= n; ++i) {
    if (inv[i] > i && i < w(i))
      steps[i - 1] = Step::U;
    else if (inv[i] < i && i > w(i))
      steps[i - 1] = Step::D;
    else
      steps[i - 1] = Step::H;
  }
  // The validating constructor doubles as a structural sanity check.
  return MotzkinPath(std::move(steps));
}

ArrowDiagram diagram(const Permutation& w) {
  const int n = w.size();
  std::vector<int> inv(n + 1);
  for (int i = 1; i <= n; ++i) inv[w(i)] = i;

  ArrowDiagram d;
  for (int i = 1; i <= n; ++i) {
    if (w(i) == i) {
      d.fixed_points.push_back(i);
    } else if (w(i) > i && inv[i] > i) {
      // Start of an above-string: follow excedance arrows to their end.
      std::vector<int> chain{i};
      int j = i;
      while (w(j) > j) {
        j = w(j);
        chain.push_back(j);
      }
      d.above.push_back(std::move(chain));
    } else if (w(i) < i && inv[i] < i) {
      // Start of a below-string: follow descending arrows.
      std::vector<int> chain{i};
      int j = i;
      while (w(j) < j) {
        j = w(j);
        chain.push_back(j);
      }
      d.below.push_back(std::move(chain));
    }
  }
  return d;
}

Permutation permutation_from_diagram(const ArrowDiagram& d, int n) {
  std::vector<int> image(n, 0);
  auto assign = [&](int from, int to) {
    if (from < 1 || from > n || to < 1 || to > n)
      throw std::invalid_argument("diagram: position out of range");
    if (image[from - 1] != 0)
      throw std::invalid_argument("diagram: position " + std::to_string(from) +
                                  " assigned twice");
    image[from - 1] = to;
  };
  for (int i : d.fixed_points) assign(i, i);
  for (const auto& chain : d.above) {
    if (chain.size() < 2)
      throw std::invalid_argument("diagram: above-string shorter than 2");
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      if (chain[i] >= chain[i + 1])
        throw std::invalid_argument("diagram: above-string not increasing");
      assign(chain[i], chain[i + 1]);
    }
  }
  for (const auto& chain : d.below) {
    if (chain.size() < 2)
      throw std::invalid_argument("diagram: below-string shorter than 2");
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      if (chain[i] <= chain[i + 1])
        throw std::invalid_argument("diagram: below-string not decreasing");
      assign(chain[i], chain[i + 1]);
    }
  }
  // The validating constructor rejects any position left unassigned
  // (a zero) or any value used twice.
  return Permutation(std::move(image));
}

long long depth_via_path(const Permutation& w) { return area(phi(w)); }

BigInt preimage_count(const MotzkinPath& p) { return weight(p); }

namespace {

// Builds the permutation selected by one digit vector. digits[i] ranges
// over h_i values for U and D positions and 2*h_i + 1 values for H
// positions (0 = fixed point, 1..h = above-strings oldest-first,
// h+1..2h = below-strings oldest-first).
Permutation assemble(const MotzkinPath& p, const HeightProfile& h,
                     const std::vector<int>& digits) {
  const int n = p.size();
  ArrowDiagram d;
  std::vector<int> open;  // indices of open strings, oldest first

  for (int i = 0; i < n; ++i) {
    const int pos = i + 1;
    switch (p.steps()[i]) {
      case Step::U:
        d.above.push_back({pos});
        open.push_back(static_cast<int>(d.above.size()) - 1);
        break;
      case Step::D:
        d.above[open[digits[i]]].push_back(pos);
        open.erase(open.begin() + digits[i]);
        break;
      case Step::H:
        if (digits[i] == 0)
          d.fixed_points.push_back(pos);
        else if (digits[i] <= h[i])
          d.above[open[digits[i] - 1]].push_back(pos);
        break;
    }
  }

  open.clear();
  for (int i = n - 1; i >= 0; --i) {
    const int pos = i + 1;
    switch (p.steps()[i]) {
      case Step::D:
        d.below.push_back({pos});
        open.push_back(static_cast<int>(d.below.size()) - 1);
        break;
      case Step::U:
        d.below[open[digits[i]]].push_back(pos);
        open.erase(open.begin() + digits[i]);
        break;
      case Step::H:
        if (digits[i] > h[i]) d.below[open[digits[i] - h[i] - 1]].push_back(pos);
        break;
    }
  }
  std::reverse(d.below.begin(), d.below.end());  // order by start position

  return permutation_from_diagram(d, n);
}

}  // namespace

void enumerate_preimage(const MotzkinPath& p,
                        const std::function<void(const Permutation&)>& fn,
                        bool force) {
  if (!force && weight(p) > static_cast<long>(kPreimageCeiling))
    throw std::invalid_argument(
        "preimage: fiber of " + p.str() + " has " + weight(p).get_str() +
        " members, above the ceiling of " + std::to_string(kPreimageCeiling) +
        " (use force to override)");

  const int n = p.size();
  const HeightProfile h = heights(p);
  std::vector<int> radix(n), digits(n, 0);
  for (int i = 0; i < n; ++i)
    radix[i] = p.steps()[i] == Step::H ? 2 * h[i] + 1 : h[i];

  for (;;) {
    fn(assemble(p, h, digits));
    int i = n - 1;
    while (i >= 0 && digits[i] == radix[i] - 1) digits[i--] = 0;
    if (i < 0) break;
    ++digits[i];
  }
}

std::vector<Permutation> preimage(const MotzkinPath& p, bool force) {
  std::vector<Permutation> out;
  enumerate_preimage(p, [&](const Permutation& w) { out.push_back(w); }, force);
  return out;
}

}  // namespace permdepth
