#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "intnfa/interaction.hpp"

namespace intnfa {

/// A term over the operators of Interaction plus one variable `x`. A CoReg
/// pattern matches a co-region over any lifeline set.
struct Pattern {
  enum class Tag : std::uint8_t { Var, Empty, Strict, Alt, CoReg, LoopS };

  Tag tag = Tag::Var;
  std::vector<Pattern> children;

  static Pattern var() { return {Tag::Var, {}}; }
  static Pattern empty() { return {Tag::Empty, {}}; }
  static Pattern loop_s(Pattern body) { return {Tag::LoopS, {std::move(body)}}; }
  static Pattern binary(Tag tag, Pattern left, Pattern right) {
    return {tag, {std::move(left), std::move(right)}};
  }
};

struct RewriteRule {
  std::string name;
  Pattern pattern;
  Pattern replacement;
};

/// The eight rules eliminating empty interactions.
const std::vector<RewriteRule>& rules();

/// Rewrites `i` at its root with `rule`, if the pattern matches there.
std::optional<Interaction> apply_at_root(const RewriteRule& rule, const Interaction& i);

/// Chooses which redex a single rewrite step applies to.
class PositionChoice {
public:
  /// Always the first redex in pre-order (leftmost-outermost), first rule.
  static PositionChoice deterministic() { return PositionChoice(); }
  /// Uniformly random among all (position, rule) redexes.
  static PositionChoice seeded(std::uint64_t seed) { return PositionChoice(seed); }

  bool is_random() const noexcept { return rng_.has_value(); }
  std::size_t pick(std::size_t count);

private:
  PositionChoice() = default;
  explicit PositionChoice(std::uint64_t seed) : rng_(std::in_place, seed) {}

  std::optional<std::mt19937_64> rng_;
};

/// One rewrite step at a redex chosen by `choice`; absent when `i` is
/// irreducible.
std::optional<Interaction> rewrite_once(const Interaction& i, PositionChoice& choice);
std::optional<Interaction> rewrite_once(const Interaction& i);

/// Normal form reached by iterating rewrite_once with `choice`. Slow
/// reference path; use simplify for production.
Interaction normalize_by_rewriting(const Interaction& i, PositionChoice& choice);

/// The unique normal form of `i`, in one bottom-up pass.
Interaction simplify(const Interaction& i);

/// True iff no subterm of `i` matches a rule pattern.
bool is_normal_form(const Interaction& i);

}  // namespace intnfa
