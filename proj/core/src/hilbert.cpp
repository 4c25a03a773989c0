#include "hilbspine/hilbert.hpp"

#include <numeric>

#include "hilbspine/errors.hpp"

namespace hilbspine {

HilbertFunction::HilbertFunction(std::vector<int> values) : values_(std::move(values)) {
  for (int v : values_)
    if (v < 0) throw input_error("Hilbert function values must be >= 0");
  while (!values_.empty() && values_.back() == 0) values_.pop_back();
}

int HilbertFunction::total() const {
  return std::accumulate(values_.begin(), values_.end(), 0);
}

std::string to_string(const HilbertFunction& h) {
  std::string s;
  for (size_t d = 0; d < h.values().size(); ++d) {
    if (d) s += ",";
    s += std::to_string(h.values()[d]);
  }
  return s.empty() ? "0" : s;
}

}  // namespace hilbspine
