#include "permdepth/motzkin.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "golden.hpp"

using namespace permdepth;

namespace {

// Independent count of Motzkin paths: M_n = M_{n-1} + sum M_k M_{n-2-k}.
std::vector<long long> motzkin_numbers(int n_max) {
  std::vector<long long> m(n_max + 1, 0);
  m[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    m[n] = m[n - 1];
    for (int k = 0; k <= n - 2; ++k) m[n] += m[k] * m[n - 2 - k];
  }
  return m;
}

MotzkinPath random_path(int n, std::mt19937_64& rng) {
  std::vector<Step> steps;
  int height = 0;
  for (int i = 0; i < n; ++i) {
    const int remaining = n - i;
    std::vector<Step> legal;
    if (height + 1 <= remaining - 1) legal.push_back(Step::U);
    if (height <= remaining - 1) legal.push_back(Step::H);
    if (height >= 1) legal.push_back(Step::D);
    Step s = legal[std::uniform_int_distribution<size_t>(
        0, legal.size() - 1)(rng)];
    steps.push_back(s);
    if (s == Step::U) ++height;
    if (s == Step::D) --height;
  }
  return MotzkinPath(std::move(steps));
}

}  // namespace

TEST_SUITE_BEGIN("motzkin");

TEST_CASE("parse: valid paths") {
  CHECK(parse_path("UUHDDUD").size() == 7);
  CHECK(parse_path("").size() == 0);
  CHECK(parse_path("uuhddud").str() == "UUHDDUD");
}

TEST_CASE("parse: errors carry the offending position") {
  CHECK_THROWS_WITH_AS(parse_path("DU"),
                       "path: prefix balance violated at position 1",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_path("UUDDX"),
                       "path: illegal character 'X' at position 5",
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_path("UUD"), std::invalid_argument);
  CHECK_THROWS_AS(parse_path("UDD"), std::invalid_argument);
}

TEST_CASE("area: known values") {
  CHECK(area(parse_path("UUHUDDHDH")) == 12);
  CHECK(area(parse_path("UUHDDUD")) == 7);
  CHECK(area(parse_path("HHHHH")) == 0);
  CHECK(area(parse_path("")) == 0);
}

TEST_CASE("heights: known values") {
  CHECK(heights(parse_path("UUHDDUD")) ==
        HeightProfile{1, 2, 2, 2, 1, 1, 1});
  CHECK(heights(parse_path("H")) == HeightProfile{0});
  CHECK(heights(parse_path("UD")) == HeightProfile{1, 1});
}

TEST_CASE("step weights: known values") {
  CHECK(step_weights(parse_path("UUHDDUD")) ==
        std::vector<long long>{1, 2, 5, 2, 1, 1, 1});
  CHECK(step_weights(parse_path("UHDHUUUDHUDDHD")) ==
        std::vector<long long>{1, 3, 1, 1, 1, 2, 3, 3, 5, 3, 3, 2, 3, 1});
  CHECK(step_weights(parse_path("H")) == std::vector<long long>{1});
}

TEST_CASE("weight: known values") {
  CHECK(weight(parse_path("UUHDDUD")) == 20);
  CHECK(weight(parse_path("UHDHUUUDHUDDHD")) == 14580);
  CHECK(weight(parse_path("")) == 1);
}

TEST_CASE("geometric area: known values") {
  CHECK(geometric_area(parse_path("UUHUDDHDH")) == 12);
  CHECK(geometric_area(parse_path("UD")) == 1);
  CHECK(geometric_area(parse_path("UUDD")) == 4);
}

TEST_CASE("enumerate: counts match the recurrence") {
  const auto m = motzkin_numbers(12);
  for (int n = 0; n <= 12; ++n) {
    long long count = 0;
    enumerate_paths(n, [&](const MotzkinPath&) { ++count; });
    CHECK(count == m[n]);
  }
  CHECK(m[7] == 127);
}

TEST_CASE("enumerate: n = 4 yields exactly the nine S_4 path shapes") {
  std::set<std::string> expected;
  for (const auto& fiber : golden::kS4Catalog) expected.insert(fiber.path);
  std::set<std::string> got;
  enumerate_paths(4, [&](const MotzkinPath& p) { got.insert(p.str()); });
  CHECK(got == expected);
}

TEST_CASE("enumerate: lexicographic with U < H < D") {
  std::vector<std::string> got;
  enumerate_paths(3, [&](const MotzkinPath& p) { got.push_back(p.str()); });
  // In the alphabet order U < H < D, "UHD" precedes "UDH".
  CHECK(got == std::vector<std::string>{"UHD", "UDH", "HUD", "HHH"});
}

TEST_CASE("enumerate: ceiling and partition") {
  CHECK_THROWS_AS(enumerate_paths(21, [](const MotzkinPath&) {}),
                  std::invalid_argument);

  std::vector<std::string> whole, parts;
  enumerate_paths(7, [&](const MotzkinPath& p) { whole.push_back(p.str()); });
  for (Step s : {Step::U, Step::H, Step::D})
    MotzkinPath::enumerate_with_first(
        7, s, [&](const MotzkinPath& p) { parts.push_back(p.str()); });
  CHECK(whole == parts);
}

TEST_CASE("properties: exhaustive n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    const long long bound = static_cast<long long>(n) * n / 4;
    long long attained = 0;
    bool ok = true;
    enumerate_paths(n, [&](const MotzkinPath& p) {
      const long long a = area(p);
      if (a != geometric_area(p)) ok = false;
      if (a < 0 || a > bound) ok = false;
      if (a == bound) ++attained;
      const auto h = heights(p);
      const auto wt = step_weights(p);
      for (int i = 0; i < n; ++i) {
        if (p.steps()[i] == Step::H) {
          if (wt[i] % 2 == 0) ok = false;
        } else if (wt[i] != h[i]) {
          ok = false;
        }
      }
    });
    CHECK(ok);
    // The maximal area is attained only by U^k D^k resp. U^k H D^k.
    CHECK(attained == 1);
    if (n >= 1) {
      std::string peak(n / 2, 'U');
      if (n % 2 == 1) peak.push_back('H');
      peak.append(n / 2, 'D');
      CHECK(area(parse_path(peak)) == bound);
    }
  }
}

TEST_CASE("properties: randomized 9 <= n <= 12") {
  std::mt19937_64 rng(987654);
  for (int n = 9; n <= 12; ++n)
    for (int trial = 0; trial < 200; ++trial) {
      MotzkinPath p = random_path(n, rng);
      CHECK(area(p) == geometric_area(p));
      CHECK(area(p) <= n * n / 4);
    }
}

TEST_CASE("weights over all paths of length n sum to n!") {
  BigInt fact = 1;
  for (int n = 0; n <= 12; ++n) {
    if (n >= 1) fact *= n;
    BigInt total = 0;
    enumerate_paths(n, [&](const MotzkinPath& p) { total += weight(p); });
    CHECK(total == fact);
  }
}

TEST_SUITE_END();
