#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace intnfa {

using LifelineId = std::uint32_t;
using MessageId = std::uint32_t;

enum class Direction : std::uint8_t { Emission, Reception };

/// An atomic communication action `l!m` or `l?m`.
struct Action {
  LifelineId lifeline = 0;
  Direction direction = Direction::Emission;
  MessageId message = 0;

  friend auto operator<=>(const Action&, const Action&) = default;
};

/// The lifeline an action occurs on.
inline LifelineId lifeline_of(const Action& a) noexcept { return a.lifeline; }

/// Finite sequence of actions.
using Trace = std::vector<Action>;

/// Sorted, duplicate-free set of lifeline ids.
class LifelineSet {
public:
  LifelineSet() = default;
  LifelineSet(std::initializer_list<LifelineId> ids);
  explicit LifelineSet(std::vector<LifelineId> ids);

  static LifelineSet single(LifelineId id) { return LifelineSet{id}; }

  bool contains(LifelineId id) const noexcept;
  bool empty() const noexcept { return ids_.empty(); }
  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<LifelineId>& ids() const noexcept { return ids_; }

  /// `{id} \ *this`, which is either empty or the singleton.
  LifelineSet singleton_minus(LifelineId id) const;

  bool is_subset_of(const LifelineSet& other) const noexcept;

  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  friend bool operator==(const LifelineSet&, const LifelineSet&) = default;
  friend auto operator<=>(const LifelineSet&, const LifelineSet&) = default;

private:
  std::vector<LifelineId> ids_;
};

/// Declared lifelines and messages. Induces the alphabet of
/// |L| * 2 * |M| actions, indexed in (lifeline, direction, message) order.
class Signature {
public:
  Signature() = default;

  /// Throws InputError on empty, duplicate or non-identifier names.
  Signature(std::vector<std::string> lifelines, std::vector<std::string> messages);

  std::size_t lifeline_count() const noexcept { return lifelines_.size(); }
  std::size_t message_count() const noexcept { return messages_.size(); }
  const std::vector<std::string>& lifelines() const noexcept { return lifelines_; }
  const std::vector<std::string>& messages() const noexcept { return messages_; }

  std::optional<LifelineId> find_lifeline(std::string_view name) const;
  std::optional<MessageId> find_message(std::string_view name) const;
  const std::string& lifeline_name(LifelineId id) const { return lifelines_.at(id); }
  const std::string& message_name(MessageId id) const { return messages_.at(id); }

  LifelineSet all_lifelines() const;

  std::size_t alphabet_size() const noexcept { return lifelines_.size() * 2 * messages_.size(); }
  std::vector<Action> alphabet() const;
  std::size_t index_of(const Action& a) const noexcept;
  Action action_at(std::size_t index) const;
  bool valid(const Action& a) const noexcept;

  /// Renders `l!m` / `l?m`.
  std::string format(const Action& a) const;
  std::string format(const Trace& t) const;

  /// Parses a `l!m` / `l?m` token. Throws InputError for malformed or
  /// undeclared tokens.
  Action parse_action(std::string_view token) const;

  /// Whitespace-separated tokens; `.` alone denotes the empty trace.
  Trace parse_trace(std::string_view line) const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.lifelines_ == b.lifelines_ && a.messages_ == b.messages_;
  }

private:
  std::vector<std::string> lifelines_;
  std::vector<std::string> messages_;
  std::unordered_map<std::string, LifelineId> lifeline_ids_;
  std::unordered_map<std::string, MessageId> message_ids_;
};

bool is_identifier(std::string_view s) noexcept;

}  // namespace intnfa

template <>
struct std::hash<intnfa::Action> {
  std::size_t operator()(const intnfa::Action& a) const noexcept {
    return (std::size_t{a.lifeline} * 0x9E3779B97F4A7C15ull) ^
           (std::size_t{a.message} << 1) ^ static_cast<std::size_t>(a.direction);
  }
};
