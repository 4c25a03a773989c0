#include "hilbspine/arrows.hpp"

#include <algorithm>
#include <numeric>

#include "hilbspine/errors.hpp"

namespace hilbspine {

std::string to_string(const Arrow& a) {
  return "(" + std::to_string(a.index) + "," + std::to_string(a.length) + ")";
}

std::string to_string(const std::vector<Arrow>& arrows) {
  std::string s = "{";
  for (size_t k = 0; k < arrows.size(); ++k) {
    if (k) s += ",";
    s += to_string(arrows[k]);
  }
  return s + "}";
}

std::vector<Arrow> positive_arrows(const MonomialIdeal& M, const Grading& g) {
  std::vector<Arrow> out;
  for (int i = 1; i <= M.e(); ++i) {
    const Monomial mi = M.generators()[i];
    const Monomial wi = M.w(i);
    // l is capped by the y-exponent: j(m_i) - l*a >= 0 (w_i has the same
    // y-exponent as m_i).
    for (int ell = 1; ell * g.a() <= mi.j; ++ell) {
      const auto shifted = g.shift(mi, ell);
      const auto wshift = g.shift(wi, ell);
      if (!M.contains(*shifted) && M.contains(*wshift)) out.push_back({i, ell});
    }
  }
  return out;
}

std::vector<Arrow> negative_arrows(const MonomialIdeal& M, const Grading& g) {
  std::vector<Arrow> out;
  for (int i = 0; i < M.e(); ++i) {
    const Monomial mi = M.generators()[i];
    const Monomial wnext = M.w(i + 1);
    // l <= -1 is capped by the x-exponent: i(m_i) + l*b >= 0 (w_{i+1} has the
    // same x-exponent as m_i).
    for (int ell = -1; -ell * g.b() <= mi.i; --ell) {
      const auto shifted = g.shift(mi, ell);
      const auto wshift = g.shift(wnext, ell);
      if (!M.contains(*shifted) && M.contains(*wshift)) out.push_back({i, ell});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Path::length() const {
  return std::accumulate(steps.begin(), steps.end(), 0,
                         [](int acc, const Arrow& a) { return acc + a.length; });
}

std::string to_string(const Path& p) {
  std::string s = "(";
  for (size_t k = 0; k < p.steps.size(); ++k) {
    if (k) s += ",";
    s += to_string(p.steps[k]);
  }
  return s + ")";
}

namespace {
void collect_paths(const MonomialIdeal& M, const Grading& g, const std::vector<Arrow>& tplus,
                   int k, int ell, std::vector<Arrow>& prefix, std::vector<Path>& out) {
  if (ell == 0) {
    out.push_back({prefix});
    return;
  }
  // First arrow descending in (i,l): tplus is ascending, so walk it backward.
  for (auto it = tplus.rbegin(); it != tplus.rend(); ++it) {
    if (it->index > k || it->length > ell) continue;
    const Monomial w = *g.shift(M.w(it->index), it->length);  // in M by arrowhood
    prefix.push_back(*it);
    collect_paths(M, g, tplus, M.j_plus(w), ell - it->length, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<Path> paths_from(const MonomialIdeal& M, const Grading& g, int k, int ell) {
  if (k < 0 || k > M.e()) throw input_error("paths_from: generator index out of range");
  if (ell < 0) throw input_error("paths_from: length must be >= 0");
  const auto tplus = positive_arrows(M, g);
  std::vector<Path> out;
  std::vector<Arrow> prefix;
  collect_paths(M, g, tplus, k, ell, prefix, out);
  return out;
}

std::optional<Path> direct_path(const MonomialIdeal& M, const Grading& g, int k, int ell) {
  if (k < 0 || k > M.e()) throw input_error("direct_path: generator index out of range");
  if (ell < 0) throw input_error("direct_path: length must be >= 0");
  if (ell == 0) return Path{};

  const auto tplus = positive_arrows(M, g);
  // longest[i] = longest length of a positive arrow at index i (0 if none).
  std::vector<int> longest(M.e() + 1, 0);
  for (const Arrow& a : tplus) longest[a.index] = std::max(longest[a.index], a.length);

  // Greedy z-sequence: from index i, take the longest arrow there (if any)
  // and jump to j^+(w_i r^l); otherwise step down to i-1.
  std::vector<Arrow> z;
  int i = k;
  while (i >= 1) {
    if (longest[i] > 0) {
      z.push_back({i, longest[i]});
      i = M.j_plus(*g.shift(M.w(i), longest[i]));
    } else {
      --i;
    }
  }

  // p_{k,ell} = (z_1..z_s) if the lengths sum exactly to ell, or
  // (z_1..z_s, (i', l')) with l' < longest[i'] completing the sum, where
  // (i', l') must itself be a positive arrow.
  int sum = 0;
  for (size_t s = 0; s < z.size(); ++s) {
    if (sum + z[s].length > ell) {
      const Arrow last{z[s].index, ell - sum};
      if (last.length == 0 || !std::binary_search(tplus.begin(), tplus.end(), last))
        return std::nullopt;
      Path p{std::vector<Arrow>(z.begin(), z.begin() + s)};
      p.steps.push_back(last);
      return p;
    }
    sum += z[s].length;
    if (sum == ell) return Path{std::vector<Arrow>(z.begin(), z.begin() + s + 1)};
  }
  return std::nullopt;  // ell exceeds the total greedy length
}

}  // namespace hilbspine
