#include "intnfa/locks.hpp"

#include <algorithm>
#include <charconv>

#include "intnfa/errors.hpp"

namespace intnfa {

void parse_topology(std::string_view text, LockSpec& spec) {
  if (text == "diamond4") {
    spec.topology = Topology::Diamond4;
    spec.locks = 4;
    return;
  }
  if (text == "diamond8") {
    spec.topology = Topology::Diamond8;
    spec.locks = 8;
    return;
  }
  constexpr std::string_view prefix = "chain:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1) {
      spec.topology = Topology::Chain;
      spec.locks = n;
      return;
    }
  }
  throw InputError("unknown topology '" + std::string(text) +
                   "' (expected chain:N, diamond4 or diamond8)");
}

std::string topology_name(const LockSpec& spec) {
  switch (spec.topology) {
    case Topology::Diamond4:
      return "diamond4";
    case Topology::Diamond8:
      return "diamond8";
    case Topology::Chain:
      break;
  }
  return "chain:" + std::to_string(spec.locks);
}

std::vector<std::vector<std::size_t>> lock_stages(const LockSpec& spec) {
  switch (spec.topology) {
    case Topology::Diamond4:
      return {{1}, {2, 3}, {4}};
    case Topology::Diamond8:
      return {{1}, {2, 3}, {4}, {5, 6}, {7}, {8}};
    case Topology::Chain:
      break;
  }
  if (spec.locks == 0) throw InputError("a chain needs at least one lock");
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 1; k <= spec.locks; ++k) out.push_back({k});
  return out;
}

namespace {

class NetworkBuilder {
public:
  NetworkBuilder(const LockSpec& spec, std::size_t lock_count) : spec_(spec) {
    if (spec.digits.empty()) throw InputError("a lock needs at least one digit");
    for (const auto& c : spec.code) {
      if (std::find(spec.digits.begin(), spec.digits.end(), c) == spec.digits.end()) {
        throw InputError("code digit '" + c + "' is not a declared digit");
      }
    }
    std::vector<std::string> lifelines;
    if (lock_count == 1) {
      lifelines.push_back("l");
    } else {
      for (std::size_t k = 1; k <= lock_count; ++k) lifelines.push_back("l" + std::to_string(k));
    }
    auto messages = spec.digits;
    if (std::find(messages.begin(), messages.end(), "u") == messages.end()) {
      messages.push_back("u");
    }
    sig_ = Signature(std::move(lifelines), std::move(messages));
    unlock_ = *sig_.find_message("u");
  }

  const Signature& signature() const { return sig_; }

  Interaction receive(std::size_t lock, MessageId m) const {
    return Interaction::act({lifeline(lock), Direction::Reception, m});
  }
  Interaction unlock_emit(std::size_t lock) const {
    return Interaction::act({lifeline(lock), Direction::Emission, unlock_});
  }
  Interaction unlock_receive(std::size_t lock) const { return receive(lock, unlock_); }

  /// Input phase of one lock without its unlock emission, as a list of
  /// consecutive parts: the free loop, the code digits, the wildcards.
  std::vector<Interaction> body_parts(std::size_t lock) const {
    std::vector<Interaction> parts{Interaction::loop_s(any_digit(lock))};
    for (const auto& c : spec_.code) parts.push_back(receive(lock, *sig_.find_message(c)));
    for (std::size_t k = 0; k < spec_.wildcards; ++k) parts.push_back(any_digit(lock));
    return parts;
  }

  Interaction seq_all(std::vector<Interaction> parts) const { return fold(parts, false); }
  Interaction strict_all(std::vector<Interaction> parts) const { return fold(parts, true); }
  Interaction par_all(std::vector<Interaction> parts) const {
    Interaction acc = parts.back();
    for (auto k = parts.size() - 1; k-- > 0;) acc = Interaction::par(sig_, parts[k], acc);
    return acc;
  }

private:
  LifelineId lifeline(std::size_t lock) const { return static_cast<LifelineId>(lock - 1); }

  Interaction any_digit(std::size_t lock) const {
    Interaction acc = receive(lock, static_cast<MessageId>(spec_.digits.size() - 1));
    for (auto k = spec_.digits.size() - 1; k-- > 0;) {
      acc = Interaction::alt(receive(lock, static_cast<MessageId>(k)), acc);
    }
    return acc;
  }

  static Interaction fold(const std::vector<Interaction>& parts, bool strict) {
    Interaction acc = parts.back();
    for (auto k = parts.size() - 1; k-- > 0;) {
      acc = strict ? Interaction::strict(parts[k], acc) : Interaction::seq(parts[k], acc);
    }
    return acc;
  }

  const LockSpec& spec_;
  Signature sig_;
  MessageId unlock_ = 0;
};

// Weakly sequenced network: every lock body, and between consecutive stages
// the exchange of `u` from each sender to each receiver.
Interaction seq_network(const NetworkBuilder& b,
                        const std::vector<std::vector<std::size_t>>& stages) {
  std::vector<Interaction> parts;
  for (std::size_t s = 0; s < stages.size(); ++s) {
    for (auto lock : stages[s]) {
      auto body = b.body_parts(lock);
      parts.insert(parts.end(), body.begin(), body.end());
    }
    if (s + 1 == stages.size()) {
      for (auto lock : stages[s]) parts.push_back(b.unlock_emit(lock));
      break;
    }
    const auto& next = stages[s + 1];
    if (stages[s].size() == 1) {
      std::vector<Interaction> receivers;
      for (auto lock : next) receivers.push_back(b.unlock_receive(lock));
      auto rx = receivers.size() == 1 ? receivers[0] : b.par_all(receivers);
      parts.push_back(Interaction::strict(b.unlock_emit(stages[s][0]), rx));
    } else {
      if (next.size() != 1) throw InputError("stages cannot fan out and in at once");
      for (auto lock : stages[s]) {
        parts.push_back(Interaction::strict(b.unlock_emit(lock), b.unlock_receive(next[0])));
      }
    }
  }
  return b.seq_all(std::move(parts));
}

// Strict/par network: strictly ordered stages, concurrent locks within a
// stage, each lock a strict sequence ending with its own unlock emission.
Interaction strict_par_network(const NetworkBuilder& b,
                               const std::vector<std::vector<std::size_t>>& stages) {
  auto lock_term = [&](std::size_t lock) {
    auto parts = b.body_parts(lock);
    parts.push_back(b.unlock_emit(lock));
    return b.strict_all(std::move(parts));
  };
  std::vector<Interaction> stage_terms;
  std::size_t senders = 0;
  for (const auto& stage : stages) {
    std::vector<Interaction> members;
    for (auto lock : stage) {
      auto term = lock_term(lock);
      if (senders > 0) {
        // One reception per sender of the previous stage.
        std::vector<Interaction> receptions(senders, b.unlock_receive(lock));
        auto rx = senders == 1 ? receptions[0] : b.par_all(receptions);
        term = Interaction::strict(rx, term);
      }
      members.push_back(term);
    }
    stage_terms.push_back(members.size() == 1 ? members[0] : b.par_all(members));
    senders = stage.size();
  }
  return b.strict_all(std::move(stage_terms));
}

}  // namespace

Model lock_model(const LockSpec& spec) {
  auto stages = lock_stages(spec);
  std::size_t count = 0;
  for (const auto& s : stages) count += s.size();
  NetworkBuilder b(spec, count);
  Model m;
  m.signature = b.signature();
  m.term = spec.scheduling == Scheduling::Seq ? seq_network(b, stages)
                                              : strict_par_network(b, stages);
  return m;
}

}  // namespace intnfa
