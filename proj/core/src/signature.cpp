#include "intnfa/signature.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "intnfa/errors.hpp"

namespace intnfa {

LifelineSet::LifelineSet(std::initializer_list<LifelineId> ids)
    : LifelineSet(std::vector<LifelineId>(ids)) {}

LifelineSet::LifelineSet(std::vector<LifelineId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool LifelineSet::contains(LifelineId id) const noexcept {
  // Sets are tiny; a linear scan beats binary search here.
  for (LifelineId x : ids_) {
    if (x == id) return true;
    if (x > id) return false;
  }
  return false;
}

LifelineSet LifelineSet::singleton_minus(LifelineId id) const {
  if (contains(id)) return {};
  return single(id);
}

bool LifelineSet::is_subset_of(const LifelineSet& other) const noexcept {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

bool is_identifier(std::string_view s) noexcept {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

namespace {

template <typename Id>
std::unordered_map<std::string, Id> index_names(const std::vector<std::string>& names,
                                                std::string_view what) {
  std::unordered_map<std::string, Id> ids;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (!is_identifier(names[k])) {
      throw InputError("invalid " + std::string(what) + " name '" + names[k] + "'");
    }
    if (!ids.emplace(names[k], static_cast<Id>(k)).second) {
      throw InputError("duplicate " + std::string(what) + " '" + names[k] + "'");
    }
  }
  return ids;
}

}  // namespace

Signature::Signature(std::vector<std::string> lifelines, std::vector<std::string> messages)
    : lifelines_(std::move(lifelines)), messages_(std::move(messages)) {
  lifeline_ids_ = index_names<LifelineId>(lifelines_, "lifeline");
  message_ids_ = index_names<MessageId>(messages_, "message");
}

std::optional<LifelineId> Signature::find_lifeline(std::string_view name) const {
  auto it = lifeline_ids_.find(std::string(name));
  if (it == lifeline_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<MessageId> Signature::find_message(std::string_view name) const {
  auto it = message_ids_.find(std::string(name));
  if (it == message_ids_.end()) return std::nullopt;
  return it->second;
}

LifelineSet Signature::all_lifelines() const {
  std::vector<LifelineId> ids(lifelines_.size());
  for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = static_cast<LifelineId>(k);
  return LifelineSet(std::move(ids));
}

std::vector<Action> Signature::alphabet() const {
  std::vector<Action> out;
  out.reserve(alphabet_size());
  for (std::size_t k = 0; k < alphabet_size(); ++k) out.push_back(action_at(k));
  return out;
}

std::size_t Signature::index_of(const Action& a) const noexcept {
  auto dir = a.direction == Direction::Emission ? 0u : 1u;
  return (std::size_t{a.lifeline} * 2 + dir) * messages_.size() + a.message;
}

Action Signature::action_at(std::size_t index) const {
  if (index >= alphabet_size()) throw InputError("action index out of range");
  auto m = static_cast<MessageId>(index % messages_.size());
  auto rest = index / messages_.size();
  auto dir = rest % 2 == 0 ? Direction::Emission : Direction::Reception;
  return Action{static_cast<LifelineId>(rest / 2), dir, m};
}

bool Signature::valid(const Action& a) const noexcept {
  return a.lifeline < lifelines_.size() && a.message < messages_.size();
}

std::string Signature::format(const Action& a) const {
  std::string out = lifeline_name(a.lifeline);
  out += a.direction == Direction::Emission ? '!' : '?';
  out += message_name(a.message);
  return out;
}

std::string Signature::format(const Trace& t) const {
  if (t.empty()) return ".";
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) out += ' ';
    out += format(t[k]);
  }
  return out;
}

Action Signature::parse_action(std::string_view token) const {
  auto pos = token.find_first_of("!?");
  if (pos == std::string_view::npos) {
    throw InputError("malformed action token '" + std::string(token) + "'");
  }
  auto lifeline = token.substr(0, pos);
  auto message = token.substr(pos + 1);
  if (!is_identifier(lifeline) || !is_identifier(message)) {
    throw InputError("malformed action token '" + std::string(token) + "'");
  }
  auto l = find_lifeline(lifeline);
  if (!l) throw InputError("undeclared lifeline '" + std::string(lifeline) + "'");
  auto m = find_message(message);
  if (!m) throw InputError("undeclared message '" + std::string(message) + "'");
  return Action{*l, token[pos] == '!' ? Direction::Emission : Direction::Reception, *m};
}

Trace Signature::parse_trace(std::string_view line) const {
  Trace out;
  std::istringstream in{std::string(line)};
  std::string token;
  bool epsilon = false;
  while (in >> token) {
    if (token == ".") {
      epsilon = true;
      continue;
    }
    out.push_back(parse_action(token));
  }
  if (epsilon && !out.empty()) throw InputError("'.' must stand alone on its line");
  return out;
}

}  // namespace intnfa
