#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "intnfa/signature.hpp"

namespace intnfa {

enum class Kind : std::uint8_t { Empty, Act, Strict, Alt, CoReg, LoopS };

/// Immutable interaction term over {empty, actions, strict, alt, cr_l, loop_S}.
///
/// Terms share structure through reference-counted nodes; each node caches
/// its structural hash and size, so equality is cheap to reject and hashing
/// is O(1). `seq` and `par` are not separate kinds: they are co-regions over
/// the empty set and over all lifelines respectively.
class Interaction {
public:
  /// The empty interaction.
  Interaction();

  static Interaction empty();
  static Interaction act(const Action& a);
  static Interaction strict(Interaction left, Interaction right);
  static Interaction alt(Interaction left, Interaction right);
  static Interaction coreg(LifelineSet lifelines, Interaction left, Interaction right);
  static Interaction seq(Interaction left, Interaction right);
  static Interaction par(const Signature& sig, Interaction left, Interaction right);
  static Interaction loop_s(Interaction body);

  Kind kind() const noexcept;
  bool is_empty() const noexcept { return kind() == Kind::Empty; }

  /// Valid for Kind::Act only.
  const Action& action() const;
  /// Valid for Kind::CoReg only.
  const LifelineSet& lifelines() const;
  /// Valid for binary kinds and (as the body) for LoopS.
  const Interaction& left() const;
  /// Valid for binary kinds only.
  const Interaction& right() const;
  const Interaction& body() const { return left(); }

  bool is_binary() const noexcept;

  std::size_t hash() const noexcept;
  /// Number of nodes in the term tree.
  std::size_t size() const noexcept;
  std::size_t depth() const noexcept;

  /// Identity of the shared node; equal ids imply equal terms.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Interaction& a, const Interaction& b) noexcept;

private:
  struct Node;
  explicit Interaction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Rebuilds a binary or unary node with new children, reusing the node when
/// the children are unchanged.
Interaction with_children(const Interaction& node, Interaction left, Interaction right);
Interaction with_body(const Interaction& loop, Interaction body);

/// Concrete-syntax rendering: `0`, `l!m`, `strict(a,b)`, `alt(a,b)`,
/// `seq(a,b)`, `par(a,b)`, `coreg[l1 l2](a,b)`, `loopS(a)`.
std::string to_string(const Interaction& i, const Signature& sig);

}  // namespace intnfa

template <>
struct std::hash<intnfa::Interaction> {
  std::size_t operator()(const intnfa::Interaction& i) const noexcept { return i.hash(); }
};
