#include "orbibraid/braid.hpp"

#include <sstream>
#include <utility>

#include "orbibraid/error.hpp"

namespace orbibraid {

  namespace {
    void check_strands(int n) {
      if (n < 0) {
        throw MalformedWordError("negative strand count");
      }
    }

    void check_index(int i, int n) {
      if (i < 1 || i > n - 1) {
        throw MalformedWordError("generator index " + std::to_string(i)
                                 + " out of range for " + std::to_string(n)
                                 + " strands");
      }
    }

    void check_exponent(int e) {
      if (e != 1 && e != -1) {
        throw MalformedWordError("exponent must be +1 or -1");
      }
    }

    int parse_index(std::string const& tok) {
      if (tok.size() < 2) {
        throw MalformedWordError("bad token '" + tok + "'");
      }
      int v = 0;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] < '0' || tok[i] > '9') {
          throw MalformedWordError("bad token '" + tok + "'");
        }
        v = v * 10 + (tok[i] - '0');
        if (v > 1000000) {
          throw MalformedWordError("bad token '" + tok + "'");
        }
      }
      return v;
    }

    template <typename F>
    void for_tokens(std::string const& text, F&& f) {
      std::istringstream in(text);
      std::string        tok;
      while (in >> tok) {
        if (tok == "1") {
          continue;
        }
        f(tok);
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // BraidWord
  ////////////////////////////////////////////////////////////////////////

  BraidWord::BraidWord(int strand_count, std::vector<BraidLetter> letters)
      : _strands(strand_count), _letters(std::move(letters)) {
    check_strands(_strands);
    for (auto const& l : _letters) {
      check_index(l.index, _strands);
      check_exponent(l.exponent);
    }
  }

  BraidWord BraidWord::inverse() const {
    std::vector<BraidLetter> v(_letters.rbegin(), _letters.rend());
    for (auto& l : v) {
      l.exponent = -l.exponent;
    }
    return BraidWord(_strands, std::move(v));
  }

  BraidWord BraidWord::operator*(BraidWord const& v) const {
    if (_strands != v._strands) {
      throw ArityError("strand counts differ: " + std::to_string(_strands)
                       + " vs " + std::to_string(v._strands));
    }
    auto letters = _letters;
    letters.insert(letters.end(), v._letters.begin(), v._letters.end());
    return BraidWord(_strands, std::move(letters));
  }

  BraidWord BraidWord::shifted(int offset, int strand_count) const {
    if (offset < 0 || offset + _strands > strand_count) {
      throw ArityError("shift does not fit");
    }
    auto v = _letters;
    for (auto& l : v) {
      l.index += offset;
    }
    return BraidWord(strand_count, std::move(v));
  }

  BraidWord BraidWord::mirrored() const {
    auto v = _letters;
    for (auto& l : v) {
      l.index = _strands - l.index;
    }
    return BraidWord(_strands, std::move(v));
  }

  Permutation BraidWord::permutation() const {
    std::vector<int> pos(_strands);
    std::vector<int> at(_strands);
    for (int i = 0; i < _strands; ++i) {
      pos[i] = at[i] = i;
    }
    for (auto const& l : _letters) {
      int a = l.index - 1;
      std::swap(at[a], at[a + 1]);
      pos[at[a]]     = a;
      pos[at[a + 1]] = a + 1;
    }
    return Permutation(std::move(pos));
  }

  std::string BraidWord::to_string() const {
    if (_letters.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& l : _letters) {
      if (!out.empty()) {
        out += ' ';
      }
      out += (l.exponent > 0 ? 's' : 'S');
      out += std::to_string(l.index);
    }
    return out;
  }

  BraidWord BraidWord::parse(std::string const& text, int strand_count) {
    std::vector<BraidLetter> v;
    for_tokens(text, [&](std::string const& tok) {
      if (tok[0] == 's' || tok[0] == 'S') {
        v.push_back({parse_index(tok), tok[0] == 's' ? 1 : -1});
      } else {
        throw MalformedWordError("bad token '" + tok + "'");
      }
    });
    return BraidWord(strand_count, std::move(v));
  }

  ////////////////////////////////////////////////////////////////////////
  // CylBraidWord
  ////////////////////////////////////////////////////////////////////////

  CylBraidWord::CylBraidWord(int strand_count, std::vector<CylLetter> letters)
      : _strands(strand_count), _letters(std::move(letters)) {
    check_strands(_strands);
    for (auto const& l : _letters) {
      check_exponent(l.exponent);
      if (l.is_kappa()) {
        if (_strands < 1) {
          throw MalformedWordError("kappa needs at least one strand");
        }
      } else {
        check_index(l.index, _strands);
      }
    }
  }

  CylBraidWord::CylBraidWord(BraidWord const& w) : _strands(w.strand_count()) {
    for (auto const& l : w.letters()) {
      _letters.push_back(CylLetter::sigma(l.index, l.exponent));
    }
  }

  CylBraidWord CylBraidWord::inverse() const {
    std::vector<CylLetter> v(_letters.rbegin(), _letters.rend());
    for (auto& l : v) {
      l.exponent = -l.exponent;
    }
    return CylBraidWord(_strands, std::move(v));
  }

  CylBraidWord CylBraidWord::operator*(CylBraidWord const& v) const {
    if (_strands != v._strands) {
      throw ArityError("strand counts differ: " + std::to_string(_strands)
                       + " vs " + std::to_string(v._strands));
    }
    auto letters = _letters;
    letters.insert(letters.end(), v._letters.begin(), v._letters.end());
    return CylBraidWord(_strands, std::move(letters));
  }

  CylBraidWord CylBraidWord::shifted(int offset, int strand_count) const {
    if (offset < 0 || offset + _strands > strand_count) {
      throw ArityError("shift does not fit");
    }
    auto v = _letters;
    for (auto& l : v) {
      if (l.is_kappa()) {
        if (offset != 0) {
          throw ArityError("cannot shift a kappa letter away from the pole");
        }
      } else {
        l.index += offset;
      }
    }
    return CylBraidWord(strand_count, std::move(v));
  }

  bool CylBraidWord::has_kappa() const noexcept {
    for (auto const& l : _letters) {
      if (l.is_kappa()) {
        return true;
      }
    }
    return false;
  }

  Permutation CylBraidWord::permutation() const {
    std::vector<BraidLetter> v;
    for (auto const& l : _letters) {
      if (!l.is_kappa()) {
        v.push_back({l.index, l.exponent});
      }
    }
    return BraidWord(_strands, std::move(v)).permutation();
  }

  std::string CylBraidWord::to_string() const {
    if (_letters.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& l : _letters) {
      if (!out.empty()) {
        out += ' ';
      }
      if (l.is_kappa()) {
        out += (l.exponent > 0 ? 'k' : 'K');
      } else {
        out += (l.exponent > 0 ? 's' : 'S');
        out += std::to_string(l.index);
      }
    }
    return out;
  }

  CylBraidWord CylBraidWord::parse(std::string const& text, int strand_count) {
    std::vector<CylLetter> v;
    for_tokens(text, [&](std::string const& tok) {
      if (tok == "k" || tok == "K") {
        v.push_back(CylLetter::kappa(tok == "k" ? 1 : -1));
      } else if (tok[0] == 's' || tok[0] == 'S') {
        v.push_back(CylLetter::sigma(parse_index(tok), tok[0] == 's' ? 1 : -1));
      } else {
        throw MalformedWordError("bad token '" + tok + "'");
      }
    });
    return CylBraidWord(strand_count, std::move(v));
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  BraidWord embed_cyl(CylBraidWord const& w) {
    std::vector<BraidLetter> v;
    for (auto const& l : w.letters()) {
      if (l.is_kappa()) {
        v.push_back({1, l.exponent});
        v.push_back({1, l.exponent});
      } else {
        v.push_back({l.index + 1, l.exponent});
      }
    }
    return BraidWord(w.strand_count() + 1, std::move(v));
  }

  std::vector<int> pole_windings(CylBraidWord const& w) {
    int              n = w.strand_count();
    std::vector<int> at(n);
    std::vector<int> wind(n, 0);
    for (int i = 0; i < n; ++i) {
      at[i] = i;
    }
    for (auto const& l : w.letters()) {
      if (l.is_kappa()) {
        wind[at[0]] += l.exponent;
      } else {
        std::swap(at[l.index - 1], at[l.index]);
      }
    }
    return wind;
  }

  int pole_winding(CylBraidWord const& w, int strand) {
    if (strand < 1 || strand > w.strand_count()) {
      throw PreconditionError("strand " + std::to_string(strand)
                              + " out of range");
    }
    return pole_windings(w)[strand - 1];
  }

}  // namespace orbibraid
