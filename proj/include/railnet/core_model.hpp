#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "railnet/error.hpp"

namespace railnet {

// A switch is a Y-shaped junction with one stem end and two branch ends.
// The two branch ends are structurally interchangeable.
enum class EndKind : std::uint8_t { Stem = 0, BranchA = 1, BranchB = 2 };

const char* to_string(EndKind kind);  // "stem" / "branch_a" / "branch_b"
std::optional<EndKind> end_kind_from_string(std::string_view name);

using SwitchIndex = std::uint32_t;
using TrackIndex = std::uint32_t;

// One of the three ends of a switch. Switch indices are assigned in
// lexicographic name order, so the derived EndRef order (switch, then
// Stem < BranchA < BranchB) is the canonical one used for serialization.
struct EndRef {
  SwitchIndex sw = 0;
  EndKind kind = EndKind::Stem;

  std::uint32_t slot() const { return sw * 3u + static_cast<std::uint32_t>(kind); }
  friend auto operator<=>(const EndRef&, const EndRef&) = default;
};

// Unordered pair of distinct ends, possibly of the same switch. The pair
// keeps the order it was written in (arc direction names refer to it);
// equality is order-insensitive.
struct Track {
  EndRef a, b;

  std::pair<EndRef, EndRef> canonical() const {
    return a <= b ? std::pair{a, b} : std::pair{b, a};
  }
  bool operator==(const Track& other) const { return canonical() == other.canonical(); }
  bool contains(EndRef e) const { return a == e || b == e; }
  EndRef other_end(EndRef e) const { return a == e ? b : a; }
  bool is_self_loop() const { return a.sw == b.sw; }
};

// Pre-validation description of a network: switch names plus end pairings.
struct RawTrack {
  std::string switch_a;
  EndKind kind_a = EndKind::Stem;
  std::string switch_b;
  EndKind kind_b = EndKind::Stem;
};

struct RawNetwork {
  std::vector<std::string> switches;
  std::vector<RawTrack> tracks;
};

// A validated rail network: a 3-regular connected multigraph where every end
// of every switch belongs to exactly one track. Immutable after validation.
class RailNetwork {
public:
  std::size_t switch_count() const { return names_.size(); }
  std::size_t track_count() const { return tracks_.size(); }
  std::size_t end_count() const { return names_.size() * 3; }

  const std::string& switch_name(SwitchIndex s) const { return names_[s]; }
  const std::vector<std::string>& switch_names() const { return names_; }
  std::optional<SwitchIndex> find_switch(std::string_view name) const;

  const Track& track(TrackIndex t) const { return tracks_[t]; }
  const std::vector<Track>& tracks() const { return tracks_; }

  // The unique track owning the given end.
  TrackIndex track_at(EndRef end) const { return end_to_track_[end.slot()]; }

private:
  RailNetwork() = default;
  void rebuild_end_index();

  friend RailNetwork validate_network(const RawNetwork& raw);
  friend RailNetwork branch_swap(const RailNetwork& net, SwitchIndex s);

  std::vector<std::string> names_;        // sorted lexicographically
  std::vector<Track> tracks_;             // input order, end pairs as written
  std::vector<TrackIndex> end_to_track_;  // slot -> owning track
};

// Checks the perfect-pairing and connectivity axioms and returns the network.
// Throws Error with codes OddSwitchCount, UnknownSwitch, SelfPairedEnd,
// DuplicateEnd, MissingEnd, or Disconnected.
RailNetwork validate_network(const RawNetwork& raw);

// One step of a walk: leave the current switch through exit_end, traverse
// track, arrive at the next switch through entry_end. Recording both ends
// keeps self-loop traversals unambiguous.
struct WalkStep {
  TrackIndex track = 0;
  EndRef exit_end;
  EndRef entry_end;
};

// Alternating switch/track sequence. Closed iff it ends on its start switch.
struct Walk {
  SwitchIndex start = 0;
  std::vector<WalkStep> steps;

  bool closed() const { return !steps.empty() && steps.back().entry_end.sw == start; }
  SwitchIndex end_switch() const { return steps.empty() ? start : steps.back().entry_end.sw; }
  Walk reversed() const;
};

// Throws NotAWalk unless every step's ends match its track and the switch
// chain is consistent.
void validate_walk(const RailNetwork& net, const Walk& walk);

// True iff at every interior switch exactly one of (entry end, exit end) is a
// stem end. The wrap-around transition of closed walks is NOT checked here;
// closed-walk callers decide whether it matters (analyze_cycle always counts it).
bool is_railway_line(const RailNetwork& net, const Walk& walk);

// Exchanges BranchA and BranchB of switch s in every track. Involution.
RailNetwork branch_swap(const RailNetwork& net, SwitchIndex s);

}  // namespace railnet
