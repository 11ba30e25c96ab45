#include "intnfa/nfa.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "intnfa/errors.hpp"

namespace intnfa {

// ---------------------------------------------------------------------------
// Representation

Nfa::Nfa() : accepting_(1, 0), offsets_{0, 0} {}

Nfa::Nfa(std::vector<Action> alphabet, std::size_t state_count, StateId initial,
         const std::vector<StateId>& accepting, const std::vector<Transition>& transitions) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  if (state_count == 0) throw InputError("an automaton needs at least one state");
  if (initial >= state_count) throw InputError("initial state out of range");

  NfaBuilder b(std::move(alphabet));
  for (std::size_t q = 0; q < state_count; ++q) b.add_state();
  b.set_initial(initial);
  for (StateId q : accepting) {
    if (q >= state_count) throw InputError("accepting state out of range");
    b.set_accepting(q);
  }
  for (const auto& t : transitions) {
    if (t.source >= state_count || t.target >= state_count) {
      throw InputError("transition endpoint out of range");
    }
    auto it = std::lower_bound(b.alphabet().begin(), b.alphabet().end(), t.action);
    if (it == b.alphabet().end() || *it != t.action) {
      throw InputError("transition action outside the alphabet");
    }
    b.add_edge(t.source, static_cast<Symbol>(it - b.alphabet().begin()), t.target);
  }
  *this = std::move(b).build();
}

Nfa Nfa::word(std::vector<Action> alphabet, const Trace& w) {
  alphabet.insert(alphabet.end(), w.begin(), w.end());
  std::vector<Transition> ts;
  for (std::size_t k = 0; k < w.size(); ++k) {
    ts.push_back({static_cast<StateId>(k), w[k], static_cast<StateId>(k + 1)});
  }
  return Nfa(std::move(alphabet), w.size() + 1, 0, {static_cast<StateId>(w.size())}, ts);
}

std::optional<Symbol> Nfa::symbol_of(const Action& a) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), a);
  if (it == alphabet_.end() || *it != a) return std::nullopt;
  return static_cast<Symbol>(it - alphabet_.begin());
}

std::size_t Nfa::accepting_count() const noexcept {
  return static_cast<std::size_t>(std::count(accepting_.begin(), accepting_.end(), 1));
}

std::vector<StateId> Nfa::accepting_states() const {
  std::vector<StateId> out;
  for (std::size_t q = 0; q < accepting_.size(); ++q) {
    if (accepting_[q]) out.push_back(static_cast<StateId>(q));
  }
  return out;
}

std::span<const Edge> Nfa::edges(StateId q) const {
  return {edges_.data() + offsets_.at(q), edges_.data() + offsets_.at(q + 1)};
}

std::vector<Transition> Nfa::transitions() const {
  std::vector<Transition> out;
  out.reserve(edges_.size());
  for (StateId q = 0; q < state_count(); ++q) {
    for (const auto& e : edges(q)) out.push_back({q, alphabet_[e.symbol], e.target});
  }
  return out;
}

bool Nfa::is_deterministic() const noexcept {
  for (std::size_t q = 0; q < state_count(); ++q) {
    for (auto k = offsets_[q] + 1; k < offsets_[q + 1]; ++k) {
      if (edges_[k].symbol == edges_[k - 1].symbol) return false;
    }
  }
  return true;
}

NfaBuilder::NfaBuilder(std::vector<Action> alphabet) : alphabet_(std::move(alphabet)) {}

StateId NfaBuilder::add_state(bool accepting) {
  accepting_.push_back(accepting ? 1 : 0);
  return static_cast<StateId>(accepting_.size() - 1);
}

void NfaBuilder::set_accepting(StateId q, bool accepting) { accepting_.at(q) = accepting ? 1 : 0; }

void NfaBuilder::add_edge(StateId source, Symbol symbol, StateId target) {
  edges_.push_back({source, Edge{symbol, target}});
}

Nfa NfaBuilder::build() && {
  if (accepting_.empty()) add_state();
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  Nfa a;
  a.alphabet_ = std::move(alphabet_);
  a.initial_ = initial_;
  a.accepting_ = std::move(accepting_);
  a.offsets_.assign(a.accepting_.size() + 1, 0);
  a.edges_.clear();
  a.edges_.reserve(edges_.size());
  for (const auto& [source, edge] : edges_) {
    ++a.offsets_[source + 1];
    a.edges_.push_back(edge);
  }
  std::partial_sum(a.offsets_.begin(), a.offsets_.end(), a.offsets_.begin());
  return a;
}

Dfa::Dfa(Nfa a) : nfa_(std::move(a)) {
  if (!nfa_.is_deterministic()) throw InputError("automaton is not deterministic");
}

std::optional<StateId> Dfa::next(StateId q, Symbol s) const {
  auto es = nfa_.edges(q);
  auto it = std::lower_bound(es.begin(), es.end(), Edge{s, 0});
  if (it == es.end() || it->symbol != s) return std::nullopt;
  return it->target;
}

// ---------------------------------------------------------------------------
// Runs

std::vector<char> coreachable(const Nfa& a) {
  const auto n = a.state_count();
  std::vector<std::vector<StateId>> preds(n);
  for (StateId q = 0; q < n; ++q) {
    for (const auto& e : a.edges(q)) preds[e.target].push_back(q);
  }
  std::vector<char> live(n, 0);
  std::vector<StateId> stack = a.accepting_states();
  for (StateId q : stack) live[q] = 1;
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (StateId p : preds[q]) {
      if (!live[p]) {
        live[p] = 1;
        stack.push_back(p);
      }
    }
  }
  return live;
}

RunResult simulate(const Nfa& a, const Trace& w, Mode mode, const std::vector<char>& live) {
  std::vector<Symbol> symbols;
  symbols.reserve(w.size());
  for (const auto& act : w) {
    auto s = a.symbol_of(act);
    if (!s) throw InputError("action outside the automaton alphabet");
    symbols.push_back(*s);
  }

  std::vector<StateId> current;
  if (live[a.initial()]) current.push_back(a.initial());
  if (current.empty()) return {false, 0};

  std::vector<std::uint32_t> stamp(a.state_count(), 0);
  std::uint32_t round = 0;
  std::vector<StateId> next;
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    ++round;
    next.clear();
    for (StateId q : current) {
      auto es = a.edges(q);
      auto it = std::lower_bound(es.begin(), es.end(), Edge{symbols[k], 0});
      for (; it != es.end() && it->symbol == symbols[k]; ++it) {
        if (live[it->target] && stamp[it->target] != round) {
          stamp[it->target] = round;
          next.push_back(it->target);
        }
      }
    }
    if (next.empty()) return {false, k};
    current.swap(next);
  }
  if (mode == Mode::Prefix) return {true, w.size()};
  bool accepted = std::any_of(current.begin(), current.end(),
                              [&](StateId q) { return a.is_accepting(q); });
  return {accepted, w.size()};
}

bool run_word(const Nfa& a, const Trace& w, Mode mode) {
  return simulate(a, w, mode, coreachable(a)).accepted;
}

// ---------------------------------------------------------------------------
// Regular operations

namespace {

std::vector<Action> merged_alphabet(const Nfa& a, const Nfa& b) {
  std::vector<Action> out;
  std::set_union(a.alphabet().begin(), a.alphabet().end(), b.alphabet().begin(),
                 b.alphabet().end(), std::back_inserter(out));
  return out;
}

// Copies every state and edge of `a` into `b`, returning the id offset.
StateId embed(NfaBuilder& b, const Nfa& a) {
  auto base = static_cast<StateId>(b.state_count());
  for (StateId q = 0; q < a.state_count(); ++q) b.add_state(a.is_accepting(q));
  for (StateId q = 0; q < a.state_count(); ++q) {
    for (const auto& e : a.edges(q)) b.add_edge(base + q, e.symbol, base + e.target);
  }
  return base;
}

void copy_out_edges(NfaBuilder& b, StateId to, const Nfa& a, StateId from, StateId base) {
  for (const auto& e : a.edges(from)) b.add_edge(to, e.symbol, base + e.target);
}

Nfa restrict_to(const Nfa& a, const std::vector<char>& keep) {
  std::vector<StateId> id(a.state_count(), 0);
  NfaBuilder b(a.alphabet());
  for (StateId q = 0; q < a.state_count(); ++q) {
    if (keep[q]) id[q] = b.add_state(a.is_accepting(q));
  }
  b.set_initial(id[a.initial()]);
  for (StateId q = 0; q < a.state_count(); ++q) {
    if (!keep[q]) continue;
    for (const auto& e : a.edges(q)) {
      if (keep[e.target]) b.add_edge(id[q], e.symbol, id[e.target]);
    }
  }
  return std::move(b).build();
}

std::vector<char> reachable(const Nfa& a) {
  std::vector<char> seen(a.state_count(), 0);
  std::vector<StateId> stack{a.initial()};
  seen[a.initial()] = 1;
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (const auto& e : a.edges(q)) {
      if (!seen[e.target]) {
        seen[e.target] = 1;
        stack.push_back(e.target);
      }
    }
  }
  return seen;
}

}  // namespace

Nfa with_alphabet(const Nfa& a, std::vector<Action> alphabet) {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  if (alphabet == a.alphabet()) return a;
  std::vector<Symbol> remap(a.alphabet().size());
  for (std::size_t s = 0; s < remap.size(); ++s) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), a.alphabet()[s]);
    if (it == alphabet.end() || *it != a.alphabet()[s]) {
      throw InputError("target alphabet misses an action of the automaton");
    }
    remap[s] = static_cast<Symbol>(it - alphabet.begin());
  }
  NfaBuilder b(std::move(alphabet));
  for (StateId q = 0; q < a.state_count(); ++q) b.add_state(a.is_accepting(q));
  b.set_initial(a.initial());
  for (StateId q = 0; q < a.state_count(); ++q) {
    for (const auto& e : a.edges(q)) b.add_edge(q, remap[e.symbol], e.target);
  }
  return std::move(b).build();
}

Nfa nfa_union(const Nfa& a0, const Nfa& b0) {
  auto alphabet = merged_alphabet(a0, b0);
  auto a = with_alphabet(a0, alphabet);
  auto c = with_alphabet(b0, alphabet);
  NfaBuilder b(alphabet);
  auto start = b.add_state(a.is_accepting(a.initial()) || c.is_accepting(c.initial()));
  auto base_a = embed(b, a);
  auto base_c = embed(b, c);
  copy_out_edges(b, start, a, a.initial(), base_a);
  copy_out_edges(b, start, c, c.initial(), base_c);
  b.set_initial(start);
  return accessible(std::move(b).build());
}

Nfa concat(const Nfa& a0, const Nfa& b0) {
  auto alphabet = merged_alphabet(a0, b0);
  auto a = with_alphabet(a0, alphabet);
  auto c = with_alphabet(b0, alphabet);
  NfaBuilder b(alphabet);
  auto base_a = embed(b, a);
  auto base_c = embed(b, c);
  const bool c_nullable = c.is_accepting(c.initial());
  for (StateId q = 0; q < a.state_count(); ++q) {
    if (!a.is_accepting(q)) continue;
    copy_out_edges(b, base_a + q, c, c.initial(), base_c);
    b.set_accepting(base_a + q, c_nullable);
  }
  b.set_initial(base_a + a.initial());
  return accessible(std::move(b).build());
}

Nfa star(const Nfa& a) {
  NfaBuilder b(a.alphabet());
  auto start = b.add_state(true);
  auto base = embed(b, a);
  copy_out_edges(b, start, a, a.initial(), base);
  for (StateId q = 0; q < a.state_count(); ++q) {
    if (a.is_accepting(q)) copy_out_edges(b, base + q, a, a.initial(), base);
  }
  b.set_initial(start);
  return accessible(std::move(b).build());
}

Nfa shuffle(const Nfa& a0, const Nfa& b0) {
  auto alphabet = merged_alphabet(a0, b0);
  auto a = with_alphabet(a0, alphabet);
  auto c = with_alphabet(b0, alphabet);
  NfaBuilder b(alphabet);
  std::unordered_map<std::uint64_t, StateId> ids;
  std::deque<std::pair<StateId, StateId>> queue;
  auto intern = [&](StateId p, StateId q) {
    auto key = (std::uint64_t{p} << 32) | q;
    auto [it, fresh] = ids.try_emplace(key, 0);
    if (fresh) {
      it->second = b.add_state(a.is_accepting(p) && c.is_accepting(q));
      queue.emplace_back(p, q);
    }
    return it->second;
  };
  b.set_initial(intern(a.initial(), c.initial()));
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    auto from = ids.at((std::uint64_t{p} << 32) | q);
    for (const auto& e : a.edges(p)) b.add_edge(from, e.symbol, intern(e.target, q));
    for (const auto& e : c.edges(q)) b.add_edge(from, e.symbol, intern(p, e.target));
  }
  return std::move(b).build();
}

Nfa accessible(const Nfa& a) {
  auto keep = reachable(a);
  if (std::all_of(keep.begin(), keep.end(), [](char c) { return c != 0; })) return a;
  return restrict_to(a, keep);
}

Nfa trim(const Nfa& a) {
  auto keep = reachable(a);
  auto live = coreachable(a);
  for (std::size_t q = 0; q < keep.size(); ++q) keep[q] = keep[q] && live[q];
  keep[a.initial()] = 1;
  return restrict_to(a, keep);
}

// ---------------------------------------------------------------------------
// Determinization and minimization

namespace {

// Adjacency in CSR form with an arbitrary set of initial states; lets the
// subset construction run on reversed automata.
struct Graph {
  std::size_t states = 0;
  std::vector<std::uint32_t> offsets;
  std::vector<Edge> edges;
  std::vector<char> accepting;
  std::vector<StateId> initials;
};

Graph graph_of(const Nfa& a) {
  Graph g;
  g.states = a.state_count();
  g.offsets.assign(g.states + 1, 0);
  for (StateId q = 0; q < g.states; ++q) {
    auto es = a.edges(q);
    g.edges.insert(g.edges.end(), es.begin(), es.end());
    g.offsets[q + 1] = static_cast<std::uint32_t>(g.edges.size());
    g.accepting.push_back(a.is_accepting(q) ? 1 : 0);
  }
  g.initials = {a.initial()};
  return g;
}

Graph reversed(const Nfa& a) {
  Graph g;
  g.states = a.state_count();
  std::vector<std::pair<StateId, Edge>> rev;
  for (StateId q = 0; q < g.states; ++q) {
    for (const auto& e : a.edges(q)) rev.push_back({e.target, Edge{e.symbol, q}});
  }
  std::sort(rev.begin(), rev.end());
  g.offsets.assign(g.states + 1, 0);
  for (const auto& [source, e] : rev) {
    ++g.offsets[source + 1];
    g.edges.push_back(e);
  }
  std::partial_sum(g.offsets.begin(), g.offsets.end(), g.offsets.begin());
  g.accepting.assign(g.states, 0);
  g.accepting[a.initial()] = 1;
  g.initials = a.accepting_states();
  return g;
}

struct SubsetHash {
  std::size_t operator()(const std::vector<StateId>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h = h * 0x100000001B3ull ^ x;
    return h;
  }
};

Dfa subset_construction(const std::vector<Action>& alphabet, const Graph& g,
                        const DeterminizeLimits& limits) {
  NfaBuilder b(alphabet);
  auto initial = g.initials;
  std::sort(initial.begin(), initial.end());
  initial.erase(std::unique(initial.begin(), initial.end()), initial.end());
  if (initial.empty()) return Dfa(std::move(b).build());

  std::unordered_map<std::vector<StateId>, StateId, SubsetHash> ids;
  std::vector<std::vector<StateId>> subsets;
  auto intern = [&](std::vector<StateId>&& set) {
    auto it = ids.find(set);
    if (it != ids.end()) return it->second;
    if (subsets.size() >= limits.state_cap) {
      throw ResourceError("determinization exceeded the cap of " +
                          std::to_string(limits.state_cap) + " states");
    }
    bool acc = std::any_of(set.begin(), set.end(), [&](StateId q) { return g.accepting[q]; });
    auto id = b.add_state(acc);
    ids.emplace(set, id);
    subsets.push_back(std::move(set));
    return id;
  };
  b.set_initial(intern(std::move(initial)));

  std::vector<std::vector<StateId>> buckets(alphabet.size());
  std::vector<Symbol> touched;
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    for (StateId q : subsets[k]) {
      for (auto e = g.offsets[q]; e < g.offsets[q + 1]; ++e) {
        auto& bucket = buckets[g.edges[e].symbol];
        if (bucket.empty()) touched.push_back(g.edges[e].symbol);
        bucket.push_back(g.edges[e].target);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (Symbol s : touched) {
      auto set = std::move(buckets[s]);
      buckets[s].clear();
      std::sort(set.begin(), set.end());
      set.erase(std::unique(set.begin(), set.end()), set.end());
      auto target = intern(std::move(set));
      b.add_edge(static_cast<StateId>(k), s, target);
    }
    touched.clear();
  }
  return Dfa(std::move(b).build());
}

// Refinable partition of 0..n-1 with per-block marking.
class Partition {
public:
  explicit Partition(std::size_t n) : elems_(n), loc_(n), block_(n, 0) {
    std::iota(elems_.begin(), elems_.end(), 0);
    std::iota(loc_.begin(), loc_.end(), 0);
    first_.push_back(0);
    end_.push_back(static_cast<std::uint32_t>(n));
    marked_.push_back(0);
  }

  std::size_t blocks() const noexcept { return first_.size(); }
  std::uint32_t block_of(std::uint32_t e) const { return block_[e]; }
  std::uint32_t size(std::uint32_t b) const { return end_[b] - first_[b]; }
  std::span<const std::uint32_t> members(std::uint32_t b) const {
    return {elems_.data() + first_[b], elems_.data() + end_[b]};
  }

  void mark(std::uint32_t e) {
    auto b = block_[e];
    auto i = loc_[e];
    auto j = first_[b] + marked_[b];
    if (i < j) return;
    std::swap(elems_[i], elems_[j]);
    loc_[elems_[i]] = i;
    loc_[elems_[j]] = j;
    if (marked_[b]++ == 0) touched_.push_back(b);
  }

  /// Splits every touched block into marked and unmarked parts. The marked
  /// part becomes a new block; calls on_split(old, new) for each split.
  template <typename F>
  void split(F&& on_split) {
    for (auto b : touched_) {
      auto m = marked_[b];
      marked_[b] = 0;
      if (m == size(b)) continue;
      auto nb = static_cast<std::uint32_t>(first_.size());
      first_.push_back(first_[b]);
      end_.push_back(first_[b] + m);
      marked_.push_back(0);
      first_[b] += m;
      for (auto k = first_[nb]; k < end_[nb]; ++k) block_[elems_[k]] = nb;
      on_split(b, nb);
    }
    touched_.clear();
  }

private:
  std::vector<std::uint32_t> elems_, loc_, block_;
  std::vector<std::uint32_t> first_, end_, marked_;
  std::vector<std::uint32_t> touched_;
};

Dfa hopcroft(const Dfa& d) {
  const auto& a = d.nfa();
  const auto k = a.alphabet().size();
  const auto n = a.state_count() + 1;  // the last state is the sink
  const auto sink = static_cast<StateId>(n - 1);

  // Inverse transition lists of the completed automaton, indexed by (symbol, target).
  std::vector<std::uint32_t> inv_off(k * n + 1, 0);
  auto target_of = [&](StateId q, Symbol s) -> StateId {
    if (q == sink) return sink;
    auto t = d.next(q, s);
    return t ? *t : sink;
  };
  for (StateId q = 0; q < n; ++q) {
    for (Symbol s = 0; s < k; ++s) ++inv_off[s * n + target_of(q, s) + 1];
  }
  std::partial_sum(inv_off.begin(), inv_off.end(), inv_off.begin());
  std::vector<StateId> inv(k * n);
  {
    auto fill = inv_off;
    for (StateId q = 0; q < n; ++q) {
      for (Symbol s = 0; s < k; ++s) inv[fill[s * n + target_of(q, s)]++] = q;
    }
  }

  Partition p(n);
  for (StateId q = 0; q + 1 < n; ++q) {
    if (a.is_accepting(q)) p.mark(q);
  }
  std::vector<std::pair<std::uint32_t, Symbol>> work;
  std::vector<char> in_work;  // (block * k + symbol)
  auto push = [&](std::uint32_t b, Symbol s) {
    if (in_work.size() < (b + 1) * k) in_work.resize((b + 1) * k, 0);
    if (!in_work[b * k + s]) {
      in_work[b * k + s] = 1;
      work.emplace_back(b, s);
    }
  };
  p.split([&](std::uint32_t old_b, std::uint32_t new_b) {
    auto smaller = p.size(new_b) <= p.size(old_b) ? new_b : old_b;
    for (Symbol s = 0; s < k; ++s) push(smaller, s);
  });

  std::vector<StateId> splitter;
  while (!work.empty()) {
    auto [b, s] = work.back();
    work.pop_back();
    in_work[b * k + s] = 0;
    auto ms = p.members(b);
    splitter.assign(ms.begin(), ms.end());
    for (StateId q : splitter) {
      for (auto j = inv_off[s * n + q]; j < inv_off[s * n + q + 1]; ++j) p.mark(inv[j]);
    }
    p.split([&](std::uint32_t old_b, std::uint32_t new_b) {
      for (Symbol c = 0; c < k; ++c) {
        if (in_work.size() > old_b * k + c && in_work[old_b * k + c]) {
          push(new_b, c);
        } else {
          push(p.size(new_b) <= p.size(old_b) ? new_b : old_b, c);
        }
      }
    });
  }

  const auto sink_block = p.block_of(sink);
  NfaBuilder out(a.alphabet());
  std::vector<StateId> id(p.blocks(), 0);
  for (std::uint32_t b = 0; b < p.blocks(); ++b) {
    if (b != sink_block) id[b] = out.add_state(a.is_accepting(p.members(b)[0]));
  }
  if (p.block_of(a.initial()) == sink_block) return Dfa(Nfa(a.alphabet(), 1, 0, {}, {}));
  out.set_initial(id[p.block_of(a.initial())]);
  for (std::uint32_t b = 0; b < p.blocks(); ++b) {
    if (b == sink_block) continue;
    auto rep = p.members(b)[0];
    for (const auto& e : a.edges(rep)) {
      auto tb = p.block_of(e.target);
      if (tb != sink_block) out.add_edge(id[b], e.symbol, id[tb]);
    }
  }
  return Dfa(std::move(out).build());
}

Dfa brzozowski(const Dfa& d, const DeterminizeLimits& limits) {
  const auto& a = d.nfa();
  auto once = subset_construction(a.alphabet(), reversed(a), limits);
  return subset_construction(a.alphabet(), reversed(once.nfa()), limits);
}

}  // namespace

Dfa determinize(const Nfa& a, const DeterminizeLimits& limits) {
  return subset_construction(a.alphabet(), graph_of(a), limits);
}

Dfa minimize_dfa(const Dfa& d, MinimizeAlgorithm algorithm, const DeterminizeLimits& limits) {
  auto reach = Dfa(accessible(d.nfa()));
  if (algorithm == MinimizeAlgorithm::Brzozowski) return canonicalize(brzozowski(reach, limits));
  return canonicalize(hopcroft(reach));
}

Dfa canonicalize(const Dfa& d) {
  const auto& a = d.nfa();
  constexpr auto unseen = static_cast<StateId>(-1);
  std::vector<StateId> id(a.state_count(), unseen);
  std::vector<StateId> order{a.initial()};
  id[a.initial()] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto& e : a.edges(order[k])) {
      if (id[e.target] == unseen) {
        id[e.target] = static_cast<StateId>(order.size());
        order.push_back(e.target);
      }
    }
  }
  NfaBuilder b(a.alphabet());
  for (StateId q : order) b.add_state(a.is_accepting(q));
  for (StateId q : order) {
    for (const auto& e : a.edges(q)) b.add_edge(id[q], e.symbol, id[e.target]);
  }
  return Dfa(std::move(b).build());
}

bool isomorphic(const Dfa& a, const Dfa& b) { return canonicalize(a) == canonicalize(b); }

bool equivalent(const Nfa& a, const Nfa& b, const DeterminizeLimits& limits) {
  auto alphabet = merged_alphabet(a, b);
  auto ma = minimize_dfa(determinize(with_alphabet(a, alphabet), limits),
                         MinimizeAlgorithm::Hopcroft, limits);
  auto mb = minimize_dfa(determinize(with_alphabet(b, alphabet), limits),
                         MinimizeAlgorithm::Hopcroft, limits);
  return ma == mb;
}

// ---------------------------------------------------------------------------
// Inspection and export

std::set<Trace> enumerate_language(const Nfa& a, std::size_t max_len, std::size_t cap) {
  std::set<Trace> out;
  std::size_t nodes = 0;
  Trace word;
  std::vector<StateId> start{a.initial()};

  auto visit = [&](auto& self, const std::vector<StateId>& set) -> void {
    if (++nodes > cap) {
      throw ResourceError("language enumeration exceeded " + std::to_string(cap) + " nodes");
    }
    if (std::any_of(set.begin(), set.end(), [&](StateId q) { return a.is_accepting(q); })) {
      out.insert(word);
    }
    if (word.size() == max_len) return;
    for (Symbol s = 0; s < a.alphabet().size(); ++s) {
      std::vector<StateId> next;
      for (StateId q : set) {
        auto es = a.edges(q);
        auto it = std::lower_bound(es.begin(), es.end(), Edge{s, 0});
        for (; it != es.end() && it->symbol == s; ++it) next.push_back(it->target);
      }
      if (next.empty()) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      word.push_back(a.alphabet()[s]);
      self(self, next);
      word.pop_back();
    }
  };
  visit(visit, start);
  return out;
}

std::string to_dot(const Nfa& a, const Signature& sig) {
  std::ostringstream out;
  out << "digraph nfa {\n  rankdir=LR;\n  node [shape=circle];\n";
  out << "  __start [shape=point];\n  __start -> " << a.initial() << ";\n";
  for (StateId q = 0; q < a.state_count(); ++q) {
    out << "  " << q;
    if (a.is_accepting(q)) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (StateId q = 0; q < a.state_count(); ++q) {
    for (const auto& e : a.edges(q)) {
      out << "  " << q << " -> " << e.target << " [label=\""
          << sig.format(a.action_of(e.symbol)) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string stats_json(const Nfa& a, std::int64_t build_time_us) {
  nlohmann::ordered_json j;
  j["states"] = a.state_count();
  j["transitions"] = a.transition_count();
  j["accepting"] = a.accepting_count();
  j["build_time_us"] = build_time_us;
  return j.dump();
}

}  // namespace intnfa
