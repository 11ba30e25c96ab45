#include "intnfa/semantics.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "intnfa/errors.hpp"

namespace intnfa {

bool evades(const Interaction& i, const LifelineSet& ell) {
  switch (i.kind()) {
    case Kind::Empty:
    case Kind::LoopS:
      return true;
    case Kind::Act:
      return !ell.contains(lifeline_of(i.action()));
    case Kind::Alt:
      return evades(i.left(), ell) || evades(i.right(), ell);
    case Kind::Strict:
    case Kind::CoReg:
      return evades(i.left(), ell) && evades(i.right(), ell);
  }
  return false;
}

bool accepts_empty(const Interaction& i) {
  switch (i.kind()) {
    case Kind::Empty:
    case Kind::LoopS:
      return true;
    case Kind::Act:
      return false;
    case Kind::Alt:
      return accepts_empty(i.left()) || accepts_empty(i.right());
    case Kind::Strict:
    case Kind::CoReg:
      return accepts_empty(i.left()) && accepts_empty(i.right());
  }
  return false;
}

namespace {

std::optional<Interaction> prune_nonempty(const Interaction& i, const LifelineSet& ell) {
  switch (i.kind()) {
    case Kind::Empty:
      return i;
    case Kind::Act:
      if (ell.contains(lifeline_of(i.action()))) return std::nullopt;
      return i;
    case Kind::LoopS: {
      auto body = prune_nonempty(i.body(), ell);
      if (!body) return Interaction::empty();
      return with_body(i, std::move(*body));
    }
    case Kind::Alt: {
      auto left = prune_nonempty(i.left(), ell);
      auto right = prune_nonempty(i.right(), ell);
      if (left && right) return with_children(i, std::move(*left), std::move(*right));
      if (left) return left;
      return right;
    }
    case Kind::Strict:
    case Kind::CoReg: {
      auto left = prune_nonempty(i.left(), ell);
      if (!left) return std::nullopt;
      auto right = prune_nonempty(i.right(), ell);
      if (!right) return std::nullopt;
      return with_children(i, std::move(*left), std::move(*right));
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Interaction> prune(const Interaction& i, const LifelineSet& ell) {
  // Pruning by the empty set is the identity.
  if (ell.empty()) return i;
  return prune_nonempty(i, ell);
}

bool cannot_express(const Interaction& i, const Action& a) {
  switch (i.kind()) {
    case Kind::Empty:
      return true;
    case Kind::Act:
      return i.action() != a;
    case Kind::LoopS:
      return cannot_express(i.body(), a);
    case Kind::Alt:
      return cannot_express(i.left(), a) && cannot_express(i.right(), a);
    case Kind::Strict:
      return cannot_express(i.left(), a) &&
             (!accepts_empty(i.left()) || cannot_express(i.right(), a));
    case Kind::CoReg: {
      auto blocked = i.lifelines().singleton_minus(lifeline_of(a));
      return cannot_express(i.left(), a) &&
             (!evades(i.left(), blocked) || cannot_express(i.right(), a));
    }
  }
  return true;
}

namespace {

bool by_action(const Step& x, const Step& y) { return x.action < y.action; }

// Sorts by action (stable, so generation order is kept within one action) and
// drops repeated (action, target) pairs.
void normalize(std::vector<Step>& steps) {
  std::stable_sort(steps.begin(), steps.end(), by_action);
  std::vector<Step> out;
  out.reserve(steps.size());
  std::size_t group_start = 0;
  for (auto& s : steps) {
    if (!out.empty() && out.back().action != s.action) group_start = out.size();
    bool seen = false;
    for (std::size_t k = group_start; k < out.size(); ++k) {
      if (out[k].target == s.target) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(std::move(s));
  }
  steps = std::move(out);
}

std::vector<Step> steps_of(const Interaction& i);

std::vector<Step> alt_steps(const Interaction& i) {
  auto left = steps_of(i.left());
  auto right = steps_of(i.right());
  std::vector<Step> out;
  out.reserve(left.size() + right.size());
  std::size_t x = 0;
  std::size_t y = 0;
  while (x < left.size() || y < right.size()) {
    // Next action to process: the smallest remaining on either side.
    Action a;
    if (y >= right.size() || (x < left.size() && left[x].action < right[y].action)) {
      a = left[x].action;
    } else {
      a = right[y].action;
    }
    auto x_end = x;
    while (x_end < left.size() && left[x_end].action == a) ++x_end;
    auto y_end = y;
    while (y_end < right.size() && right[y_end].action == a) ++y_end;

    if (x_end > x && y_end > y) {
      // Both branches express a: delay the choice.
      for (auto p = x; p < x_end; ++p) {
        for (auto q = y; q < y_end; ++q) {
          out.push_back({a, with_children(i, left[p].target, right[q].target)});
        }
      }
    } else {
      // Only one branch expresses a: commit to it.
      for (auto p = x; p < x_end; ++p) out.push_back(std::move(left[p]));
      for (auto q = y; q < y_end; ++q) out.push_back(std::move(right[q]));
    }
    x = x_end;
    y = y_end;
  }
  return out;
}

std::vector<Step> steps_of(const Interaction& i) {
  std::vector<Step> out;
  switch (i.kind()) {
    case Kind::Empty:
      return out;
    case Kind::Act:
      out.push_back({i.action(), Interaction::empty()});
      return out;
    case Kind::LoopS:
      for (auto& s : steps_of(i.body())) {
        out.push_back({s.action, Interaction::strict(std::move(s.target), i)});
      }
      return out;
    case Kind::Alt:
      out = alt_steps(i);
      break;
    case Kind::Strict: {
      for (auto& s : steps_of(i.left())) {
        out.push_back({s.action, with_children(i, std::move(s.target), i.right())});
      }
      if (accepts_empty(i.left())) {
        for (auto& s : steps_of(i.right())) out.push_back(std::move(s));
      }
      break;
    }
    case Kind::CoReg: {
      for (auto& s : steps_of(i.left())) {
        out.push_back({s.action, with_children(i, std::move(s.target), i.right())});
      }
      auto right = steps_of(i.right());
      // Pruning depends only on the lifeline of the action; reuse per lifeline.
      std::vector<std::pair<LifelineId, std::optional<Interaction>>> pruned;
      for (auto& s : right) {
        auto l = lifeline_of(s.action);
        auto it = std::find_if(pruned.begin(), pruned.end(),
                               [l](const auto& e) { return e.first == l; });
        if (it == pruned.end()) {
          pruned.emplace_back(l, prune(i.left(), i.lifelines().singleton_minus(l)));
          it = std::prev(pruned.end());
        }
        if (it->second) {
          out.push_back({s.action, with_children(i, *it->second, std::move(s.target))});
        }
      }
      break;
    }
  }
  normalize(out);
  return out;
}

}  // namespace

std::vector<Step> next_steps(const Interaction& i) { return steps_of(i); }

std::vector<Interaction> successors(const Interaction& i, const Action& a) {
  std::vector<Interaction> out;
  for (auto& s : steps_of(i)) {
    if (s.action == a) out.push_back(std::move(s.target));
  }
  return out;
}

namespace {

struct Unfolding {
  Trace trace;
  Interaction term;

  friend bool operator==(const Unfolding& x, const Unfolding& y) {
    return x.trace == y.trace && x.term == y.term;
  }
};

struct UnfoldingHash {
  std::size_t operator()(const Unfolding& u) const noexcept {
    std::size_t h = u.term.hash();
    for (const auto& a : u.trace) h = h * 31 + std::hash<Action>{}(a);
    return h;
  }
};

}  // namespace

std::set<Trace> enumerate_traces(const Interaction& i, std::size_t max_len,
                                 const EnumerationLimits& limits) {
  std::set<Trace> out;
  std::vector<Unfolding> layer{{Trace{}, i}};
  for (std::size_t depth = 0;; ++depth) {
    std::unordered_set<Unfolding, UnfoldingHash> next;
    for (const auto& u : layer) {
      if (accepts_empty(u.term)) out.insert(u.trace);
      if (depth == max_len) continue;
      for (auto& s : steps_of(u.term)) {
        Trace t = u.trace;
        t.push_back(s.action);
        next.insert({std::move(t), std::move(s.target)});
        if (next.size() > limits.node_cap) {
          throw ResourceError("trace enumeration bound exceeded: more than " +
                              std::to_string(limits.node_cap) + " nodes at depth " +
                              std::to_string(depth + 1));
        }
      }
    }
    if (depth == max_len || next.empty()) break;
    layer.assign(next.begin(), next.end());
  }
  return out;
}

}  // namespace intnfa
