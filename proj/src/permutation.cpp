#include "orbibraid/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "orbibraid/error.hpp"

namespace orbibraid {

  Permutation::Permutation(std::vector<int> images) : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (int x : _images) {
      if (x < 0 || static_cast<std::size_t>(x) >= _images.size() || seen[x]) {
        throw Error("not a permutation");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  Permutation Permutation::transposition(std::size_t n,
                                         std::size_t i,
                                         std::size_t j) {
    auto p = identity(n);
    std::swap(p._images[i], p._images[j]);
    return p;
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != static_cast<int>(i)) {
        return false;
      }
    }
    return true;
  }

  Permutation Permutation::inverse() const {
    std::vector<int> v(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      v[_images[i]] = static_cast<int>(i);
    }
    return Permutation(std::move(v));
  }

  Permutation Permutation::then(Permutation const& b) const {
    if (b.degree() != degree()) {
      throw ArityError("composing permutations of different degree");
    }
    std::vector<int> v(_images.size());
    for (std::size_t i = 0; i < _images.size(); ++i) {
      v[i] = b._images[_images[i]];
    }
    return Permutation(std::move(v));
  }

  std::string Permutation::to_string() const {
    std::string out;
    bool const wide = _images.size() >= 10;
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (wide && i > 0) {
        out += ',';
      }
      out += std::to_string(_images[i] + 1);
    }
    return out;
  }

  Permutation Permutation::parse(std::string const& text) {
    std::vector<int> v;
    if (text.find(',') != std::string::npos) {
      std::size_t pos = 0;
      while (pos <= text.size()) {
        auto next = text.find(',', pos);
        if (next == std::string::npos) {
          next = text.size();
        }
        auto tok = text.substr(pos, next - pos);
        if (tok.empty()
            || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
                 return std::isdigit(c);
               })) {
          throw Error("bad permutation '" + text + "'");
        }
        v.push_back(std::stoi(tok) - 1);
        pos = next + 1;
      }
    } else {
      for (unsigned char c : text) {
        if (!std::isdigit(c)) {
          throw Error("bad permutation '" + text + "'");
        }
        v.push_back(c - '1');
      }
    }
    return Permutation(std::move(v));
  }

  std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<Permutation> out;
    std::vector<int>         v(n);
    std::iota(v.begin(), v.end(), 0);
    do {
      out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

}  // namespace orbibraid
