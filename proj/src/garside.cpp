#include "orbibraid/garside.hpp"

#include <utility>

#include "orbibraid/error.hpp"

namespace orbibraid {

  namespace {
    using Perm = std::vector<int>;

    Perm delta(int n) {
      Perm d(n);
      for (int k = 0; k < n; ++k) {
        d[k] = n - 1 - k;
      }
      return d;
    }

    Perm identity(int n) {
      Perm d(n);
      for (int k = 0; k < n; ++k) {
        d[k] = k;
      }
      return d;
    }

    int swap_at(int x, int i) {
      return x == i ? i + 1 : (x == i + 1 ? i : x);
    }

    Perm inverse(Perm const& a) {
      Perm v(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        v[a[k]] = static_cast<int>(k);
      }
      return v;
    }

    // conjugation by Delta: x Delta^-1 = Delta^-1 tau(x)
    Perm tau(Perm const& x) {
      int  n = static_cast<int>(x.size());
      Perm v(n);
      for (int k = 0; k < n; ++k) {
        v[k] = n - 1 - x[n - 1 - k];
      }
      return v;
    }

    // Makes (a, b) left-weighted by moving every starting generator of b
    // that a can absorb.
    void make_left_weighted(Perm& a, Perm& b) {
      int n = static_cast<int>(a.size());
      for (;;) {
        Perm ainv  = inverse(a);
        bool moved = false;
        for (int i = 0; i + 1 < n; ++i) {
          bool starts   = b[i] > b[i + 1];
          bool finishes = ainv[i] > ainv[i + 1];
          if (starts && !finishes) {
            for (auto& x : a) {
              x = swap_at(x, i);
            }
            std::swap(b[i], b[i + 1]);
            moved = true;
            break;
          }
        }
        if (!moved) {
          return;
        }
      }
    }

    struct Builder {
      int               n;
      int               p = 0;
      std::vector<Perm> fs;

      void append(Perm x) {
        fs.push_back(std::move(x));
        for (std::size_t j = fs.size() - 1; j > 0; --j) {
          make_left_weighted(fs[j - 1], fs[j]);
        }
        Perm const d  = delta(n);
        Perm const id = identity(n);
        std::size_t lead = 0;
        while (lead < fs.size() && fs[lead] == d) {
          ++lead;
        }
        if (lead > 0) {
          p += static_cast<int>(lead);
          fs.erase(fs.begin(), fs.begin() + lead);
        }
        while (!fs.empty() && fs.back() == id) {
          fs.pop_back();
        }
      }

      void positive(int i) {
        Perm x = identity(n);
        std::swap(x[i], x[i + 1]);
        append(std::move(x));
      }

      void negative(int i) {
        for (auto& f : fs) {
          f = tau(f);
        }
        --p;
        Perm x = delta(n);
        for (auto& v : x) {
          v = swap_at(v, i);
        }
        append(std::move(x));
      }
    };
  }  // namespace

  std::string GarsideNF::to_string() const {
    std::string out = "p=" + std::to_string(infimum) + " factors=[";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += factors[i].to_string();
    }
    return out + "]";
  }

  GarsideNF garside_nf(BraidWord const& w) {
    Builder b{w.strand_count(), 0, {}};
    for (auto const& l : w.letters()) {
      if (l.exponent > 0) {
        b.positive(l.index - 1);
      } else {
        b.negative(l.index - 1);
      }
    }
    GarsideNF nf;
    nf.strand_count = w.strand_count();
    nf.infimum      = b.p;
    for (auto& f : b.fs) {
      nf.factors.emplace_back(std::move(f));
    }
    return nf;
  }

  BraidWord permutation_braid_word(Permutation const& p) {
    Perm                     a = p.images();
    int                      n = static_cast<int>(a.size());
    std::vector<BraidLetter> out;
    for (bool found = true; found;) {
      found = false;
      for (int i = 0; i + 1 < n; ++i) {
        if (a[i] > a[i + 1]) {
          out.push_back({i + 1, 1});
          std::swap(a[i], a[i + 1]);
          found = true;
          break;
        }
      }
    }
    return BraidWord(n, std::move(out));
  }

  BraidWord to_word(GarsideNF const& nf) {
    int       n = nf.strand_count;
    BraidWord d = permutation_braid_word(Permutation(delta(n)));
    BraidWord w(n);
    BraidWord step = nf.infimum >= 0 ? d : d.inverse();
    for (int k = 0; k < (nf.infimum >= 0 ? nf.infimum : -nf.infimum); ++k) {
      w = w * step;
    }
    for (auto const& f : nf.factors) {
      w = w * permutation_braid_word(f);
    }
    return w;
  }

  bool braid_eq(BraidWord const& u, BraidWord const& v) {
    if (u.strand_count() != v.strand_count()) {
      throw ArityError("strand counts differ: "
                       + std::to_string(u.strand_count()) + " vs "
                       + std::to_string(v.strand_count()));
    }
    return garside_nf(u.inverse() * v).is_trivial();
  }

  bool cyl_braid_eq(CylBraidWord const& u, CylBraidWord const& v) {
    if (u.strand_count() != v.strand_count()) {
      throw ArityError("strand counts differ: "
                       + std::to_string(u.strand_count()) + " vs "
                       + std::to_string(v.strand_count()));
    }
    return braid_eq(embed_cyl(u), embed_cyl(v));
  }

  GarsideNF cyl_garside_nf(CylBraidWord const& w) {
    return garside_nf(embed_cyl(w));
  }

}  // namespace orbibraid
