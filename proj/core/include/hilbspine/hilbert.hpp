#pragma once

#include <string>
#include <vector>

namespace hilbspine {

// A finitely supported Hilbert function d -> h(d), stored densely from degree
// 0 with trailing zeros trimmed. h(d) = 0 outside the stored range.
class HilbertFunction {
 public:
  HilbertFunction() = default;
  explicit HilbertFunction(std::vector<int> values);

  int operator()(int d) const {
    return d >= 0 && d < static_cast<int>(values_.size()) ? values_[d] : 0;
  }
  // Largest degree with h(d) != 0, or -1 if h == 0.
  int dmax() const { return static_cast<int>(values_.size()) - 1; }
  // Sum of all values (the colength when h is the Hilbert function of a
  // finite-colength quotient).
  int total() const;
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;
  friend bool operator<(const HilbertFunction& a, const HilbertFunction& b) {
    return a.values_ < b.values_;
  }

 private:
  std::vector<int> values_;
};

// "1,1,2,1,1"
std::string to_string(const HilbertFunction& h);

}  // namespace hilbspine
