#ifndef ORBIBRAID_OPERAD_HPP_
#define ORBIBRAID_OPERAD_HPP_

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "orbibraid/objects.hpp"
#include "orbibraid/permutation.hpp"

namespace orbibraid {

  enum class Color { D, Dstar };

  std::string to_string(Color c);
  Color       parse_color(std::string const& s);

  // Connected component of a space of operations. A Dstar input, if any, is
  // stored first. eps[j] and perm refer to the D-inputs only, numbered in
  // input order; perm[p] is the D-input sitting at position p (positions
  // counted along the positive side of the target).
  class SignedOp {
   public:
    SignedOp(Color              output,
             std::vector<Color> inputs,
             std::vector<int>   eps,
             Permutation        perm);

    static SignedOp identity(Color c);

    Color output() const noexcept {
      return _output;
    }
    std::vector<Color> const& inputs() const noexcept {
      return _inputs;
    }
    std::vector<int> const& eps() const noexcept {
      return _eps;
    }
    Permutation const& perm() const noexcept {
      return _perm;
    }
    std::size_t arity() const noexcept {
      return _inputs.size();
    }
    std::size_t d_arity() const noexcept {
      return _eps.size();
    }
    bool has_star_input() const noexcept {
      return !_inputs.empty() && _inputs[0] == Color::Dstar;
    }

    // op <out-color> [<in-colors>] eps=<bits> perm=<one-line permutation>
    std::string     to_string() const;
    static SignedOp parse(std::string const& text);

    friend bool operator==(SignedOp const&, SignedOp const&) = default;
    friend auto operator<=>(SignedOp const&, SignedOp const&) = default;

   private:
    Color              _output;
    std::vector<Color> _inputs;
    std::vector<int>   _eps;
    Permutation        _perm;
  };

  // All components; empty when no operation has these colors. The input
  // colors are put in canonical order first.
  std::vector<SignedOp> classify(std::size_t               k,
                                 Color                     output,
                                 std::vector<Color> const& input_colors);

  // Input i of g is fed by fs[outer_perm[i]]. The inputs of the composite are
  // the inputs of fs[0], fs[1], ... in turn, with the Dstar input moved first.
  SignedOp compose(SignedOp const&              g,
                   std::vector<SignedOp> const& fs,
                   Permutation const&           outer_perm);
  SignedOp compose(SignedOp const& g, std::vector<SignedOp> const& fs);

  ////////////////////////////////////////////////////////////////////////
  // One-dimensional model
  ////////////////////////////////////////////////////////////////////////

  using Rational = boost::multiprecision::cpp_rational;

  // A D-input placed at (center, radius). For a D target, `copy` says which
  // of the two intervals D_b, D_r receives the b-copy of the input; for a
  // Dstar target the sign of the center decides and `copy` is ignored.
  struct Interval1D {
    enum class Copy { b, r };
    Rational center;
    Rational radius;
    Copy     copy = Copy::b;
  };

  struct Embedding1D {
    Color                   output = Color::D;
    std::optional<Rational> star_radius;  // the Dstar input, centered
    std::vector<Interval1D> disks;
  };

  // Reads (eps, perm) off a concrete embedding; GeometryError if the data is
  // not an embedding.
  SignedOp brute_force_classify_1d(Embedding1D const& e);

  ////////////////////////////////////////////////////////////////////////
  // Functors
  ////////////////////////////////////////////////////////////////////////

  struct FunctorExpr {
    enum class Fold { tensor, unit_module, act };
    std::vector<int> powers;  // Phi power on each D-input
    Permutation      perm;    // same convention as SignedOp
    Fold             fold = Fold::tensor;

    // Stages right to left, trivial stages dropped, e.g. "otimes_2 . perm(21)"
    std::string to_string() const;
    // The functor applied to X1, X2, ... (and M for a Dstar input).
    ObjectExpr to_object() const;
    SignedOp   to_signed_op() const;

    friend bool operator==(FunctorExpr const&, FunctorExpr const&) = default;
  };

  FunctorExpr realize_functor(SignedOp const& op);

}  // namespace orbibraid

#endif  // ORBIBRAID_OPERAD_HPP_
