#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "intnfa/model.hpp"

namespace intnfa {

enum class Topology { Chain, Diamond4, Diamond8 };
enum class Scheduling { Seq, StrictPar };

/// A network of digital locks. Each lock reads digits forever, opens after
/// the code followed by `wildcards` arbitrary digits, and then emits `u`.
struct LockSpec {
  std::vector<std::string> digits{"a", "b"};
  std::vector<std::string> code{"a", "a", "b"};
  std::size_t wildcards = 3;
  Topology topology = Topology::Chain;
  /// Number of locks for Topology::Chain.
  std::size_t locks = 1;
  Scheduling scheduling = Scheduling::Seq;
};

/// Parses "chain:N", "diamond4" or "diamond8" into the topology fields.
void parse_topology(std::string_view text, LockSpec& spec);
std::string topology_name(const LockSpec& spec);

/// Stages of the network: locks are numbered from 1, each stage unlocks the
/// next. diamond4 is {1} {2 3} {4}; diamond8 is {1} {2 3} {4} {5 6} {7} {8}.
std::vector<std::vector<std::size_t>> lock_stages(const LockSpec& spec);

/// Interaction model of the network. A single lock uses lifeline `l`;
/// networks use `l1` ... `ln`.
Model lock_model(const LockSpec& spec);

}  // namespace intnfa
