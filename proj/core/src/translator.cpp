#include "intnfa/translator.hpp"

#include <sstream>

#include "intnfa/errors.hpp"
#include "intnfa/semantics.hpp"
#include "intnfa/simplifier.hpp"

namespace intnfa {

std::optional<StateId> StateIndex::find(const Interaction& i) const {
  auto it = ids_.find(i);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::pair<StateId, bool> StateIndex::intern(const Interaction& i) {
  auto [it, fresh] = ids_.try_emplace(i, static_cast<StateId>(terms_.size()));
  if (fresh) terms_.push_back(i);
  return {it->second, fresh};
}

Translation build_nfa(const Signature& sig, const Interaction& i0,
                      const TranslationOptions& options) {
  const auto alphabet = sig.alphabet();
  NfaBuilder builder(alphabet);
  StateIndex index;

  auto canonical = [&](const Interaction& i) {
    return options.simplified ? simplify(i) : i;
  };
  auto add = [&](const Interaction& i, std::size_t frontier) {
    auto [id, fresh] = index.intern(i);
    if (fresh) {
      if (index.size() > options.state_cap) {
        throw ResourceError("state cap of " + std::to_string(options.state_cap) +
                            " exceeded with " + std::to_string(frontier) +
                            " states still in the frontier");
      }
      builder.add_state(accepts_empty(i));
    }
    return id;
  };

  builder.set_initial(add(canonical(i0), 0));
  // Ids are allocated in discovery order, so the FIFO worklist is just a cursor.
  for (StateId q = 0; q < index.size(); ++q) {
    const Interaction current = index.term(q);
    for (const auto& step : next_steps(current)) {
      if (!sig.valid(step.action)) throw InputError("action outside the signature");
      auto target = add(canonical(step.target), index.size() - q);
      builder.add_edge(q, static_cast<Symbol>(sig.index_of(step.action)), target);
    }
  }
  return {std::move(builder).build(), std::move(index)};
}

std::string dump_states(const Translation& t, const Signature& sig) {
  std::ostringstream out;
  for (StateId q = 0; q < t.states.size(); ++q) {
    out << q << '\t' << to_string(t.states.term(q), sig) << '\n';
  }
  return out.str();
}

bool is_basic(const Interaction& i) {
  switch (i.kind()) {
    case Kind::Empty:
    case Kind::Act:
      return true;
    case Kind::Strict:
      return is_basic(i.left()) && is_basic(i.right());
    case Kind::CoReg:
      return i.lifelines().empty() && is_basic(i.left()) && is_basic(i.right());
    case Kind::Alt:
    case Kind::LoopS:
      return false;
  }
  return false;
}

namespace {

std::string child_path(const std::string& path, int child) {
  return path.empty() ? std::to_string(child) : path + "." + std::to_string(child);
}

Nfa compo_at(const Signature& sig, const Interaction& i, const std::string& path) {
  if (is_basic(i)) return build_nfa(sig, i).nfa;
  switch (i.kind()) {
    case Kind::Alt:
      return nfa_union(compo_at(sig, i.left(), child_path(path, 1)),
                       compo_at(sig, i.right(), child_path(path, 2)));
    case Kind::Strict:
      return concat(compo_at(sig, i.left(), child_path(path, 1)),
                    compo_at(sig, i.right(), child_path(path, 2)));
    case Kind::LoopS:
      return star(compo_at(sig, i.body(), child_path(path, 1)));
    case Kind::CoReg: {
      const auto& ls = i.lifelines();
      if (!ls.empty() && ls.size() == sig.lifeline_count()) {
        return shuffle(compo_at(sig, i.left(), child_path(path, 1)),
                       compo_at(sig, i.right(), child_path(path, 2)));
      }
      throw UnsupportedScope(ls.empty() ? "seq above a non-basic interaction"
                                        : "co-region above a non-basic interaction",
                             path.empty() ? "root" : path);
    }
    case Kind::Empty:
    case Kind::Act:
      break;
  }
  return build_nfa(sig, i).nfa;
}

}  // namespace

Nfa compo(const Signature& sig, const Interaction& i) { return compo_at(sig, i, ""); }

}  // namespace intnfa
