#include "orbibraid/objects.hpp"

#include <algorithm>

#include "orbibraid/error.hpp"

namespace orbibraid {

  struct ObjectExpr::Node {
    Kind                    kind;
    int                     label = 0;
    std::vector<ObjectExpr> children;
    bool                    module_typed = false;
    std::size_t             leaves       = 0;
  };

  ObjectExpr::ObjectExpr() {
    static auto const unit
        = std::make_shared<Node const>(Node{Kind::unit, 0, {}, false, 0});
    _node = unit;
  }

  ObjectExpr ObjectExpr::gen(int label) {
    if (label < 1) {
      throw TypingError("generator labels must be positive");
    }
    return ObjectExpr(
        std::make_shared<Node const>(Node{Kind::generator, label, {}, false, 1}));
  }

  ObjectExpr ObjectExpr::one() {
    return ObjectExpr();
  }

  ObjectExpr ObjectExpr::module() {
    return ObjectExpr(
        std::make_shared<Node const>(Node{Kind::module, 0, {}, true, 0}));
  }

  ObjectExpr ObjectExpr::module_unit() {
    return ObjectExpr(
        std::make_shared<Node const>(Node{Kind::module_unit, 0, {}, true, 0}));
  }

  ObjectExpr ObjectExpr::phi(ObjectExpr const& x) {
    if (x.module_typed()) {
      throw TypingError("Phi applied to M-typed object " + x.to_string());
    }
    return ObjectExpr(std::make_shared<Node const>(
        Node{Kind::phi, 0, {x}, false, x.leaf_count()}));
  }

  ObjectExpr ObjectExpr::tensor(ObjectExpr const& x, ObjectExpr const& y) {
    if (x.module_typed() || y.module_typed()) {
      throw TypingError("tensor of M-typed object in tensor(" + x.to_string()
                        + ", " + y.to_string() + ")");
    }
    return ObjectExpr(std::make_shared<Node const>(
        Node{Kind::tensor, 0, {x, y}, false, x.leaf_count() + y.leaf_count()}));
  }

  ObjectExpr ObjectExpr::act(ObjectExpr const& p, ObjectExpr const& x) {
    if (!p.module_typed() || x.module_typed()) {
      throw TypingError("act expects (M-typed, A-typed) in act(" + p.to_string()
                        + ", " + x.to_string() + ")");
    }
    return ObjectExpr(std::make_shared<Node const>(
        Node{Kind::act, 0, {p, x}, true, p.leaf_count() + x.leaf_count()}));
  }

  ObjectExpr::Kind ObjectExpr::kind() const noexcept {
    return _node->kind;
  }

  int ObjectExpr::label() const noexcept {
    return _node->label;
  }

  ObjectExpr const& ObjectExpr::child(std::size_t i) const {
    return _node->children.at(i);
  }

  bool ObjectExpr::module_typed() const noexcept {
    return _node->module_typed;
  }

  std::size_t ObjectExpr::leaf_count() const noexcept {
    return _node->leaves;
  }

  std::string ObjectExpr::to_string() const {
    switch (kind()) {
      case Kind::generator:
        return "X" + std::to_string(label());
      case Kind::unit:
        return "one";
      case Kind::module:
        return "M";
      case Kind::module_unit:
        return "oneM";
      case Kind::phi:
        return "Phi(" + child(0).to_string() + ")";
      case Kind::tensor:
        return "tensor(" + child(0).to_string() + ", " + child(1).to_string()
               + ")";
      case Kind::act:
        return "act(" + child(0).to_string() + ", " + child(1).to_string()
               + ")";
    }
    return "";
  }

  bool operator==(ObjectExpr const& x, ObjectExpr const& y) {
    if (x._node == y._node) {
      return true;
    }
    if (x.kind() != y.kind() || x.label() != y.label()
        || x.leaf_count() != y.leaf_count()) {
      return false;
    }
    auto const& a = x._node->children;
    auto const& b = y._node->children;
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
  }

  std::string SignedSignature::to_string() const {
    std::string out = "[";
    if (marker == Marker::module) {
      out += "M;";
    } else if (marker == Marker::module_unit) {
      out += "oneM;";
    }
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      out += (i == 0 ? (marker == Marker::none ? "" : " ") : ", ");
      out += "(" + std::to_string(leaves[i].label) + ","
             + std::to_string(leaves[i].eps) + ")";
    }
    return out + "]";
  }

  namespace {
    void flatten(ObjectExpr const&        o,
                 bool                     flipped,
                 std::vector<SignedLeaf>& out) {
      using K = ObjectExpr::Kind;
      switch (o.kind()) {
        case K::generator:
          out.push_back({o.label(), flipped ? 1 : 0});
          return;
        case K::phi:
          flatten(o.child(0), !flipped, out);
          return;
        case K::tensor:
          if (flipped) {
            flatten(o.child(1), flipped, out);
            flatten(o.child(0), flipped, out);
          } else {
            flatten(o.child(0), flipped, out);
            flatten(o.child(1), flipped, out);
          }
          return;
        case K::act:
          flatten(o.child(0), flipped, out);
          flatten(o.child(1), flipped, out);
          return;
        default:
          return;
      }
    }

    SignedSignature::Marker marker_of(ObjectExpr const& o) {
      using K = ObjectExpr::Kind;
      switch (o.kind()) {
        case K::module:
          return SignedSignature::Marker::module;
        case K::module_unit:
          return SignedSignature::Marker::module_unit;
        case K::act:
          return marker_of(o.child(0));
        default:
          return SignedSignature::Marker::none;
      }
    }
  }  // namespace

  SignedSignature signature(ObjectExpr const& o) {
    SignedSignature s;
    s.marker = marker_of(o);
    flatten(o, false, s.leaves);
    return s;
  }

}  // namespace orbibraid
