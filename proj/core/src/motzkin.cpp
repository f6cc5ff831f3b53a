#include "permdepth/motzkin.hpp"

#include <cctype>

namespace permdepth {
namespace {

void check_balance(const std::vector<Step>& steps) {
  int height = 0;
  for (size_t i = 0; i < steps.size(); ++i) {
    if (steps[i] == Step::U) ++height;
    if (steps[i] == Step::D) {
      if (height == 0)
        throw std::invalid_argument(
            "path: prefix balance violated at position " +
            std::to_string(i + 1));
      --height;
    }
  }
  if (height != 0)
    throw std::invalid_argument(
        "path: total balance violated, " + std::to_string(height) +
        " unmatched U step(s) at position " + std::to_string(steps.size()));
}

}  // namespace

MotzkinPath::MotzkinPath(std::vector<Step> steps) {
  check_balance(steps);
  steps_ = std::move(steps);
}

std::string MotzkinPath::str() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step st : steps_) s.push_back(step_char(st));
  return s;
}

MotzkinPath parse_path(const std::string& text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    switch (std::toupper(static_cast<unsigned char>(text[i]))) {
      case 'U': steps.push_back(Step::U); break;
      case 'D': steps.push_back(Step::D); break;
      case 'H': steps.push_back(Step::H); break;
      default:
        throw std::invalid_argument(std::string("path: illegal character '") +
                                    text[i] + "' at position " +
                                    std::to_string(i + 1));
    }
  }
  return MotzkinPath(std::move(steps));
}

long long area(const MotzkinPath& p) {
  long long a = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (p.step(i) == Step::D) a += i;
    if (p.step(i) == Step::U) a -= i;
  }
  return a;
}

long long geometric_area(const MotzkinPath& p) {
  // Each step contributes a vertical strip: a U or D step with height h
  // covers a trapezoid of area h - 1/2, an H step a rectangle of area h.
  // Doubling keeps the sum integral.
  long long doubled = 0;
  int height = 0;
  for (Step st : p.steps()) {
    switch (st) {
      case Step::U: ++height; doubled += 2 * height - 1; break;
      case Step::D: doubled += 2 * height - 1; --height; break;
      case Step::H: doubled += 2 * height; break;
    }
  }
  return doubled / 2;
}

HeightProfile heights(const MotzkinPath& p) {
  HeightProfile h(p.size());
  int height = 0;
  for (int i = 0; i < p.size(); ++i) {
    switch (p.steps()[i]) {
      case Step::U: h[i] = ++height; break;
      case Step::D: h[i] = height--; break;
      case Step::H: h[i] = height; break;
    }
  }
  return h;
}

std::vector<long long> step_weights(const MotzkinPath& p) {
  HeightProfile h = heights(p);
  std::vector<long long> wt(p.size());
  for (int i = 0; i < p.size(); ++i)
    wt[i] = p.steps()[i] == Step::H ? 2LL * h[i] + 1 : h[i];
  return wt;
}

BigInt weight(const MotzkinPath& p) {
  BigInt w = 1;
  for (long long wt : step_weights(p)) w *= static_cast<long>(wt);
  return w;
}

std::vector<MotzkinPath> all_paths(int n, bool force) {
  std::vector<MotzkinPath> out;
  enumerate_paths(n, [&](const MotzkinPath& p) { out.push_back(p); }, force);
  return out;
}

}  // namespace permdepth
