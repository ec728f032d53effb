#ifndef ORBIBRAID_TESTS_RANDOM_WORDS_HPP_
#define ORBIBRAID_TESTS_RANDOM_WORDS_HPP_

#include <cstdlib>
#include <vector>

#include "orbibraid/braid.hpp"
#include "support/random.hpp"

namespace orbibraid::testing {

  inline BraidWord random_word(std::mt19937_64& g, int n, int len) {
    std::vector<BraidLetter> v;
    for (int i = 0; i < len && n > 1; ++i) {
      v.push_back({uniform(g, 1, n - 1), uniform(g, 0, 1) ? 1 : -1});
    }
    return BraidWord(n, std::move(v));
  }

  inline CylBraidWord random_cyl_word(std::mt19937_64& g, int n, int len) {
    std::vector<CylLetter> v;
    for (int i = 0; i < len; ++i) {
      int e = uniform(g, 0, 1) ? 1 : -1;
      if (n == 1 || uniform(g, 0, n - 1) == 0) {
        v.push_back(CylLetter::kappa(e));
      } else {
        v.push_back(CylLetter::sigma(uniform(g, 1, n - 1), e));
      }
    }
    return CylBraidWord(n, std::move(v));
  }

  // One application of a defining relation somewhere in the word (or a free
  // insertion of x x^-1); the result is equal to w in B_n.
  inline BraidWord rewrite_once(std::mt19937_64& g, BraidWord const& w) {
    int  n = w.strand_count();
    auto v = w.letters();
    if (n < 2) {
      return w;
    }
    for (int attempt = 0; attempt < 20; ++attempt) {
      int kind = uniform(g, 0, 3);
      int pos  = uniform(g, 0, static_cast<int>(v.size()));
      if (kind == 0) {
        int i = uniform(g, 1, n - 1);
        int e = uniform(g, 0, 1) ? 1 : -1;
        v.insert(v.begin() + pos, {{i, e}, {i, -e}});
        return BraidWord(n, v);
      }
      if (kind == 1 && pos + 1 < static_cast<int>(v.size())) {
        auto a = v[pos], b = v[pos + 1];
        if (a.index == b.index && a.exponent == -b.exponent) {
          v.erase(v.begin() + pos, v.begin() + pos + 2);
          return BraidWord(n, v);
        }
        if (std::abs(a.index - b.index) > 1) {
          std::swap(v[pos], v[pos + 1]);
          return BraidWord(n, v);
        }
      }
      if (kind == 2 && pos + 2 < static_cast<int>(v.size())) {
        auto a = v[pos], b = v[pos + 1], c = v[pos + 2];
        if (a == c && std::abs(a.index - b.index) == 1
            && a.exponent == b.exponent) {
          v[pos]     = b;
          v[pos + 1] = a;
          v[pos + 2] = b;
          return BraidWord(n, v);
        }
      }
      if (kind == 3 && n > 2) {
        // insert a braid relator s_i s_{i+1} s_i S_{i+1} S_i S_{i+1}
        int i = uniform(g, 1, n - 2);
        v.insert(v.begin() + pos,
                 {{i, 1}, {i + 1, 1}, {i, 1}, {i + 1, -1}, {i, -1}, {i + 1, -1}});
        return BraidWord(n, v);
      }
    }
    return BraidWord(n, v);
  }

}  // namespace orbibraid::testing

#endif
