#pragma once

// Sparse, map-based Magnus expansion and brute-force Lyndon enumeration.
// Deliberately naive: used only to cross-check the dense implementation.

#include <cstdint>
#include <map>
#include <vector>

#include "jcalc/words.hpp"

namespace oracle {

using Monomial = std::vector<int>;
using Series = std::map<Monomial, std::int64_t>;

inline Series multiply(const Series& a, const Series& b, int bound) {
  Series out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (ma.size() + mb.size() > static_cast<std::size_t>(bound)) continue;
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out[m] += ca * cb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Series letter_series(jcalc::Letter l, int bound) {
  Series s{{{}, 1}};
  if (l.sign() > 0) {
    s[{l.gen()}] = 1;
  } else {
    Monomial m;
    for (int d = 1; d <= bound; ++d) {
      m.push_back(l.gen());
      s[m] = d % 2 == 0 ? 1 : -1;
    }
  }
  return s;
}

inline Series magnus(const jcalc::Word& w, int bound) {
  Series s{{{}, 1}};
  for (jcalc::Letter l : w.letters()) s = multiply(s, letter_series(l, bound), bound);
  return s;
}

// Strictly smaller than every proper rotation.
inline bool is_lyndon(const Monomial& w) {
  for (std::size_t r = 1; r < w.size(); ++r) {
    Monomial rot(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
    if (!(w < rot)) return false;
  }
  return true;
}

inline std::vector<Monomial> lyndon_brute_force(int n, int j) {
  std::vector<Monomial> out;
  Monomial w(static_cast<std::size_t>(j), 1);
  for (;;) {
    if (is_lyndon(w)) out.push_back(w);
    int pos = j - 1;
    while (pos >= 0 && w[static_cast<std::size_t>(pos)] == n) w[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) return out;
    ++w[static_cast<std::size_t>(pos)];
  }
}

}  // namespace oracle
