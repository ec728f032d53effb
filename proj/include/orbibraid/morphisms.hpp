#ifndef ORBIBRAID_MORPHISMS_HPP_
#define ORBIBRAID_MORPHISMS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbibraid/objects.hpp"

namespace orbibraid {

  enum class GenKind { alpha, lambda, rho, a, r, sigma, kappa, phi2, phi0, t };

  std::string            to_string(GenKind k);
  std::optional<GenKind> generator_from_name(std::string const& name);
  std::size_t            parameter_count(GenKind k);

  // Structural isomorphism term. Construction type-checks: every node knows
  // its domain and codomain, and ill-typed terms throw TypingError.
  class MorExpr {
   public:
    enum class Kind { generator, identity, inverse, vert, tens, act, phi, horiz };

    static MorExpr gen(GenKind k, std::vector<ObjectExpr> params);
    static MorExpr id(ObjectExpr const& o);
    static MorExpr inv(MorExpr const& f);
    // f after g; codomain(g) must be syntactically domain(f)
    static MorExpr vert(MorExpr const& f, MorExpr const& g);
    static MorExpr tens(MorExpr const& f, MorExpr const& g);
    static MorExpr act(MorExpr const& f, MorExpr const& g);
    static MorExpr phi(MorExpr const& f);
    // outer is a generator or the inverse of one, with parameters equal to
    // the codomains of the inners
    static MorExpr horiz(MorExpr const& outer, std::vector<MorExpr> inners);

    Kind    kind() const noexcept;
    GenKind generator() const;  // generator nodes only
    std::vector<ObjectExpr> const& params() const;
    std::vector<MorExpr> const&    children() const;
    MorExpr const&                 child(std::size_t i) const;

    // Throw TypingError when a vert seam inside does not match.
    ObjectExpr const& domain() const;
    ObjectExpr const& codomain() const;
    // as recorded, without the seam check
    ObjectExpr const& raw_domain() const noexcept;
    ObjectExpr const& raw_codomain() const noexcept;
    bool               well_typed() const noexcept;
    std::string const& typing_error() const noexcept;
    void               require_typed() const;
    bool              module_typed() const noexcept;
    // Number of generator leaves X_i in the domain.
    std::size_t strand_count() const noexcept;
    // Mentions sigma or kappa somewhere.
    bool braided() const noexcept;

    // horiz nodes rewritten as vertical composites, recursively
    MorExpr desugared() const;

    std::string to_string() const;

    friend bool operator==(MorExpr const& f, MorExpr const& g);
    friend bool operator!=(MorExpr const& f, MorExpr const& g) {
      return !(f == g);
    }

    struct Node;

   private:
    explicit MorExpr(std::shared_ptr<Node const> n) : _node(std::move(n)) {}
    std::shared_ptr<Node const> _node;
  };

  ObjectExpr const& domain(MorExpr const& f);
  ObjectExpr const& codomain(MorExpr const& f);

  // Generator applied to the given parameters: domain and codomain.
  ObjectExpr generator_domain(GenKind k, std::vector<ObjectExpr> const& p);
  ObjectExpr generator_codomain(GenKind k, std::vector<ObjectExpr> const& p);

  // The domain (or codomain) functor of k applied to morphisms.
  MorExpr generator_domain(GenKind k, std::vector<MorExpr> const& fs);
  MorExpr generator_codomain(GenKind k, std::vector<MorExpr> const& fs);

}  // namespace orbibraid

#endif  // ORBIBRAID_MORPHISMS_HPP_
