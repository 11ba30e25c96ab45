#include "intnfa/interaction.hpp"

#include <algorithm>
#include <stdexcept>

namespace intnfa {

struct Interaction::Node {
  Kind kind = Kind::Empty;
  Action action{};
  LifelineSet lifelines;
  Interaction left_child{nullptr};
  Interaction right_child{nullptr};
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t depth = 1;

  Node() = default;
};

namespace {

constexpr std::size_t mix(std::size_t seed, std::size_t v) noexcept {
  return seed ^ (v + 0x9E3779B97F4A7C15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

Interaction::Interaction() : Interaction(empty()) {}

Interaction Interaction::empty() {
  static const std::shared_ptr<const Node> node = [] {
    auto n = std::make_shared<Node>();
    n->hash = 0x51ED270B;
    return n;
  }();
  return Interaction(node);
}

Interaction Interaction::act(const Action& a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Act;
  n->action = a;
  n->hash = mix(static_cast<std::size_t>(Kind::Act), std::hash<Action>{}(a));
  return Interaction(std::move(n));
}

Interaction Interaction::strict(Interaction left, Interaction right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Strict;
  n->hash = mix(mix(static_cast<std::size_t>(Kind::Strict), left.hash()), right.hash());
  n->size = 1 + left.size() + right.size();
  n->depth = 1 + std::max(left.depth(), right.depth());
  n->left_child = std::move(left);
  n->right_child = std::move(right);
  return Interaction(std::move(n));
}

Interaction Interaction::alt(Interaction left, Interaction right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Alt;
  n->hash = mix(mix(static_cast<std::size_t>(Kind::Alt), left.hash()), right.hash());
  n->size = 1 + left.size() + right.size();
  n->depth = 1 + std::max(left.depth(), right.depth());
  n->left_child = std::move(left);
  n->right_child = std::move(right);
  return Interaction(std::move(n));
}

Interaction Interaction::coreg(LifelineSet lifelines, Interaction left, Interaction right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::CoReg;
  std::size_t h = static_cast<std::size_t>(Kind::CoReg);
  for (LifelineId l : lifelines) h = mix(h, l + 1);
  h = mix(h, lifelines.size());
  n->hash = mix(mix(h, left.hash()), right.hash());
  n->size = 1 + left.size() + right.size();
  n->depth = 1 + std::max(left.depth(), right.depth());
  n->lifelines = std::move(lifelines);
  n->left_child = std::move(left);
  n->right_child = std::move(right);
  return Interaction(std::move(n));
}

Interaction Interaction::seq(Interaction left, Interaction right) {
  return coreg({}, std::move(left), std::move(right));
}

Interaction Interaction::par(const Signature& sig, Interaction left, Interaction right) {
  return coreg(sig.all_lifelines(), std::move(left), std::move(right));
}

Interaction Interaction::loop_s(Interaction body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::LoopS;
  n->hash = mix(static_cast<std::size_t>(Kind::LoopS), body.hash());
  n->size = 1 + body.size();
  n->depth = 1 + body.depth();
  n->left_child = std::move(body);
  return Interaction(std::move(n));
}

Kind Interaction::kind() const noexcept { return node_->kind; }

const Action& Interaction::action() const {
  if (node_->kind != Kind::Act) throw std::logic_error("action() on a non-action term");
  return node_->action;
}

const LifelineSet& Interaction::lifelines() const {
  if (node_->kind != Kind::CoReg) throw std::logic_error("lifelines() on a non-coreg term");
  return node_->lifelines;
}

const Interaction& Interaction::left() const {
  if (!node_->left_child.node_) throw std::logic_error("left() on a leaf term");
  return node_->left_child;
}

const Interaction& Interaction::right() const {
  if (!node_->right_child.node_) throw std::logic_error("right() on a non-binary term");
  return node_->right_child;
}

bool Interaction::is_binary() const noexcept {
  auto k = node_->kind;
  return k == Kind::Strict || k == Kind::Alt || k == Kind::CoReg;
}

std::size_t Interaction::hash() const noexcept { return node_->hash; }
std::size_t Interaction::size() const noexcept { return node_->size; }
std::size_t Interaction::depth() const noexcept { return node_->depth; }

bool operator==(const Interaction& a, const Interaction& b) noexcept {
  const auto* x = a.node_.get();
  const auto* y = b.node_.get();
  if (x == y) return true;
  if (x->hash != y->hash || x->kind != y->kind || x->size != y->size) return false;
  switch (x->kind) {
    case Kind::Empty:
      return true;
    case Kind::Act:
      return x->action == y->action;
    case Kind::LoopS:
      return x->left_child == y->left_child;
    case Kind::CoReg:
      if (x->lifelines != y->lifelines) return false;
      [[fallthrough]];
    case Kind::Strict:
    case Kind::Alt:
      return x->left_child == y->left_child && x->right_child == y->right_child;
  }
  return false;
}

Interaction with_children(const Interaction& node, Interaction left, Interaction right) {
  if (left.id() == node.left().id() && right.id() == node.right().id()) return node;
  switch (node.kind()) {
    case Kind::Strict:
      return Interaction::strict(std::move(left), std::move(right));
    case Kind::Alt:
      return Interaction::alt(std::move(left), std::move(right));
    case Kind::CoReg:
      return Interaction::coreg(node.lifelines(), std::move(left), std::move(right));
    default:
      throw std::logic_error("with_children on a non-binary term");
  }
}

Interaction with_body(const Interaction& loop, Interaction body) {
  if (body.id() == loop.body().id()) return loop;
  return Interaction::loop_s(std::move(body));
}

namespace {

void render(const Interaction& i, const Signature& sig, std::string& out) {
  switch (i.kind()) {
    case Kind::Empty:
      out += '0';
      return;
    case Kind::Act:
      out += sig.format(i.action());
      return;
    case Kind::LoopS:
      out += "loopS(";
      render(i.body(), sig, out);
      out += ')';
      return;
    case Kind::Strict:
      out += "strict(";
      break;
    case Kind::Alt:
      out += "alt(";
      break;
    case Kind::CoReg: {
      const auto& ls = i.lifelines();
      if (ls.empty()) {
        out += "seq(";
      } else if (sig.lifeline_count() > 0 && ls.size() == sig.lifeline_count()) {
        out += "par(";
      } else {
        out += "coreg[";
        bool first = true;
        for (LifelineId l : ls) {
          if (!first) out += ' ';
          first = false;
          out += sig.lifeline_name(l);
        }
        out += "](";
      }
      break;
    }
  }
  render(i.left(), sig, out);
  out += ',';
  render(i.right(), sig, out);
  out += ')';
}

}  // namespace

std::string to_string(const Interaction& i, const Signature& sig) {
  std::string out;
  render(i, sig, out);
  return out;
}

}  // namespace intnfa
