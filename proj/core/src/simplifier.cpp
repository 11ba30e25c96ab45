#include "intnfa/simplifier.hpp"

#include <stdexcept>

namespace intnfa {

namespace {

using Tag = Pattern::Tag;

bool matches_kind(Tag tag, Kind kind) {
  switch (tag) {
    case Tag::Var:
      return true;
    case Tag::Empty:
      return kind == Kind::Empty;
    case Tag::Strict:
      return kind == Kind::Strict;
    case Tag::Alt:
      return kind == Kind::Alt;
    case Tag::CoReg:
      return kind == Kind::CoReg;
    case Tag::LoopS:
      return kind == Kind::LoopS;
  }
  return false;
}

bool match(const Pattern& p, const Interaction& i, std::optional<Interaction>& x) {
  if (p.tag == Tag::Var) {
    if (x) return *x == i;
    x = i;
    return true;
  }
  if (!matches_kind(p.tag, i.kind())) return false;
  switch (p.tag) {
    case Tag::Empty:
      return true;
    case Tag::LoopS:
      return match(p.children[0], i.body(), x);
    default:
      return match(p.children[0], i.left(), x) && match(p.children[1], i.right(), x);
  }
}

Interaction instantiate(const Pattern& p, const std::optional<Interaction>& x) {
  switch (p.tag) {
    case Tag::Var:
      if (!x) throw std::logic_error("unbound rewrite variable");
      return *x;
    case Tag::Empty:
      return Interaction::empty();
    case Tag::LoopS:
      return Interaction::loop_s(instantiate(p.children[0], x));
    case Tag::Strict:
      return Interaction::strict(instantiate(p.children[0], x), instantiate(p.children[1], x));
    case Tag::Alt:
      return Interaction::alt(instantiate(p.children[0], x), instantiate(p.children[1], x));
    case Tag::CoReg:
      break;
  }
  throw std::logic_error("co-region schemas cannot appear in a replacement");
}

std::vector<RewriteRule> make_rules() {
  const auto x = Pattern::var();
  const auto e = Pattern::empty();
  return {
      {"strict-empty-left", Pattern::binary(Tag::Strict, e, x), x},
      {"strict-empty-right", Pattern::binary(Tag::Strict, x, e), x},
      {"coreg-empty-left", Pattern::binary(Tag::CoReg, e, x), x},
      {"coreg-empty-right", Pattern::binary(Tag::CoReg, x, e), x},
      {"alt-empty-loop", Pattern::binary(Tag::Alt, e, Pattern::loop_s(x)), Pattern::loop_s(x)},
      {"alt-loop-empty", Pattern::binary(Tag::Alt, Pattern::loop_s(x), e), Pattern::loop_s(x)},
      {"alt-empty-empty", Pattern::binary(Tag::Alt, e, e), e},
      {"loop-empty", Pattern::loop_s(e), e},
  };
}

struct Redex {
  std::vector<int> path;
  Interaction result;
};

void collect_redexes(const Interaction& i, std::vector<int>& path, std::vector<Redex>& out,
                     bool first_only) {
  for (const auto& rule : rules()) {
    if (auto r = apply_at_root(rule, i)) {
      out.push_back({path, std::move(*r)});
      if (first_only) return;
    }
  }
  if (i.kind() == Kind::LoopS) {
    path.push_back(0);
    collect_redexes(i.body(), path, out, first_only);
    path.pop_back();
  } else if (i.is_binary()) {
    for (int side = 0; side < 2; ++side) {
      if (first_only && !out.empty()) return;
      path.push_back(side);
      collect_redexes(side == 0 ? i.left() : i.right(), path, out, first_only);
      path.pop_back();
    }
  }
}

Interaction replace_at(const Interaction& i, const std::vector<int>& path, std::size_t depth,
                       Interaction replacement) {
  if (depth == path.size()) return replacement;
  if (i.kind() == Kind::LoopS) {
    return with_body(i, replace_at(i.body(), path, depth + 1, std::move(replacement)));
  }
  if (path[depth] == 0) {
    return with_children(i, replace_at(i.left(), path, depth + 1, std::move(replacement)),
                         i.right());
  }
  return with_children(i, i.left(),
                       replace_at(i.right(), path, depth + 1, std::move(replacement)));
}

bool root_is_redex(const Interaction& i) {
  for (const auto& rule : rules()) {
    std::optional<Interaction> x;
    if (match(rule.pattern, i, x)) return true;
  }
  return false;
}

}  // namespace

const std::vector<RewriteRule>& rules() {
  static const std::vector<RewriteRule> table = make_rules();
  return table;
}

std::optional<Interaction> apply_at_root(const RewriteRule& rule, const Interaction& i) {
  std::optional<Interaction> x;
  if (!match(rule.pattern, i, x)) return std::nullopt;
  return instantiate(rule.replacement, x);
}

std::size_t PositionChoice::pick(std::size_t count) {
  if (!rng_ || count <= 1) return 0;
  return std::uniform_int_distribution<std::size_t>(0, count - 1)(*rng_);
}

std::optional<Interaction> rewrite_once(const Interaction& i, PositionChoice& choice) {
  std::vector<Redex> redexes;
  std::vector<int> path;
  collect_redexes(i, path, redexes, !choice.is_random());
  if (redexes.empty()) return std::nullopt;
  auto& chosen = redexes[choice.pick(redexes.size())];
  return replace_at(i, chosen.path, 0, std::move(chosen.result));
}

std::optional<Interaction> rewrite_once(const Interaction& i) {
  auto choice = PositionChoice::deterministic();
  return rewrite_once(i, choice);
}

Interaction normalize_by_rewriting(const Interaction& i, PositionChoice& choice) {
  Interaction current = i;
  while (auto next = rewrite_once(current, choice)) current = std::move(*next);
  return current;
}

Interaction simplify(const Interaction& i) {
  switch (i.kind()) {
    case Kind::Empty:
    case Kind::Act:
      return i;
    case Kind::LoopS: {
      auto body = simplify(i.body());
      if (body.is_empty()) return body;
      return with_body(i, std::move(body));
    }
    case Kind::Strict:
    case Kind::CoReg: {
      auto left = simplify(i.left());
      auto right = simplify(i.right());
      if (left.is_empty()) return right;
      if (right.is_empty()) return left;
      return with_children(i, std::move(left), std::move(right));
    }
    case Kind::Alt: {
      auto left = simplify(i.left());
      auto right = simplify(i.right());
      if (left.is_empty() && (right.is_empty() || right.kind() == Kind::LoopS)) return right;
      if (right.is_empty() && left.kind() == Kind::LoopS) return left;
      return with_children(i, std::move(left), std::move(right));
    }
  }
  return i;
}

bool is_normal_form(const Interaction& i) {
  if (root_is_redex(i)) return false;
  if (i.kind() == Kind::LoopS) return is_normal_form(i.body());
  if (i.is_binary()) return is_normal_form(i.left()) && is_normal_form(i.right());
  return true;
}

}  // namespace intnfa
