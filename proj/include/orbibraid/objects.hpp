#ifndef ORBIBRAID_OBJECTS_HPP_
#define ORBIBRAID_OBJECTS_HPP_

#include <memory>
#include <string>
#include <vector>

namespace orbibraid {

  // Formal object of a Z2-pair (A, M). Immutable; copies share structure.
  class ObjectExpr {
   public:
    enum class Kind { generator, unit, module, module_unit, phi, tensor, act };

    ObjectExpr();  // the unit of A

    static ObjectExpr gen(int label);
    static ObjectExpr one();
    static ObjectExpr module();
    static ObjectExpr module_unit();
    // Throw TypingError unless the operands have the right type.
    static ObjectExpr phi(ObjectExpr const& x);
    static ObjectExpr tensor(ObjectExpr const& x, ObjectExpr const& y);
    static ObjectExpr act(ObjectExpr const& p, ObjectExpr const& x);

    Kind kind() const noexcept;
    int  label() const noexcept;
    // phi: child(0); tensor, act: child(0), child(1)
    ObjectExpr const& child(std::size_t i) const;

    // True for objects of M, false for objects of A.
    bool module_typed() const noexcept;
    // Number of generator leaves X_i.
    std::size_t leaf_count() const noexcept;

    std::string to_string() const;

    friend bool operator==(ObjectExpr const& x, ObjectExpr const& y);
    friend bool operator!=(ObjectExpr const& x, ObjectExpr const& y) {
      return !(x == y);
    }

   private:
    struct Node;
    explicit ObjectExpr(std::shared_ptr<Node const> n) : _node(std::move(n)) {}
    std::shared_ptr<Node const> _node;
  };

  struct SignedLeaf {
    int label;
    int eps;
    friend bool operator==(SignedLeaf const&, SignedLeaf const&) = default;
  };

  // Leaves with Phi pushed down: Phi reverses and flips. For M-typed objects
  // the marker records whether the module leaf is M or the unit of M.
  struct SignedSignature {
    enum class Marker { none, module, module_unit };
    Marker                  marker = Marker::none;
    std::vector<SignedLeaf> leaves;

    // e.g. "[M; (1,0), (2,1)]"
    std::string to_string() const;
    friend bool operator==(SignedSignature const&, SignedSignature const&) = default;
  };

  SignedSignature signature(ObjectExpr const& o);

  ObjectExpr parse_object(std::string const& text);

}  // namespace orbibraid

#endif  // ORBIBRAID_OBJECTS_HPP_
