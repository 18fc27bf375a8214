#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "railnet/core_model.hpp"

namespace railnet {

// Each switch is represented twice: travelling branch->stem (converging) and
// stem->branch (diverging).
enum class VertexRole : std::uint8_t { Converging = 0, Diverging = 1 };

struct VertexId {
  std::uint32_t value = 0;

  SwitchIndex sw() const { return value >> 1; }
  VertexRole role() const { return static_cast<VertexRole>(value & 1u); }
  static VertexId of(SwitchIndex s, VertexRole r) {
    return VertexId{(s << 1) | static_cast<std::uint32_t>(r)};
  }
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

// Arc ids are track*2 + direction. Direction 0 runs track.a -> track.b as the
// pair was written, so the reverse involution is a single bit flip.
using ArcId = std::uint32_t;

constexpr ArcId reverse_arc(ArcId a) { return a ^ 1u; }
constexpr TrackIndex arc_track(ArcId a) { return a >> 1; }
constexpr ArcId forward_arc(TrackIndex t) { return t << 1; }

// Expanded view of one arc.
struct Arc {
  ArcId id = 0;
  TrackIndex track = 0;
  VertexId tail, head;
  EndRef tail_end, head_end;
};

// The double-track digraph: two directed vertices per switch, two opposite
// arcs per track. An arc leaves through its tail end (stem end -> converging
// vertex, branch end -> diverging vertex) and arrives through its head end
// (stem end -> diverging vertex, branch end -> converging vertex).
// Immutable after construction; the network must outlive it.
class DoubleTrackGraph {
public:
  explicit DoubleTrackGraph(const RailNetwork& net);

  const RailNetwork& network() const { return *net_; }
  std::size_t vertex_count() const { return net_->switch_count() * 2; }
  std::size_t arc_count() const { return net_->track_count() * 2; }

  EndRef tail_end(ArcId a) const {
    const Track& t = net_->track(arc_track(a));
    return (a & 1u) ? t.b : t.a;
  }
  EndRef head_end(ArcId a) const {
    const Track& t = net_->track(arc_track(a));
    return (a & 1u) ? t.a : t.b;
  }
  VertexId tail(ArcId a) const { return tail_vertex(tail_end(a)); }
  VertexId head(ArcId a) const { return head_vertex(head_end(a)); }
  Arc arc(ArcId a) const {
    return Arc{a, arc_track(a), tail(a), head(a), tail_end(a), head_end(a)};
  }

  // The arc leaving (arriving) through the given end.
  ArcId arc_out_of(EndRef end) const {
    TrackIndex t = net_->track_at(end);
    return (t << 1) | (net_->track(t).a == end ? 0u : 1u);
  }
  ArcId arc_into(EndRef end) const {
    TrackIndex t = net_->track_at(end);
    return (t << 1) | (net_->track(t).b == end ? 0u : 1u);
  }

  std::span<const ArcId> out_arcs(VertexId v) const {
    return {out_arcs_.data() + out_offsets_[v.value],
            out_arcs_.data() + out_offsets_[v.value + 1]};
  }
  // Arcs incident in the underlying undirected graph (tail or head here).
  std::span<const ArcId> incident_arcs(VertexId v) const {
    return {inc_arcs_.data() + inc_offsets_[v.value],
            inc_arcs_.data() + inc_offsets_[v.value + 1]};
  }

  static VertexId tail_vertex(EndRef end) {
    return VertexId::of(end.sw, end.kind == EndKind::Stem ? VertexRole::Converging
                                                          : VertexRole::Diverging);
  }
  static VertexId head_vertex(EndRef end) {
    return VertexId::of(end.sw, end.kind == EndKind::Stem ? VertexRole::Diverging
                                                          : VertexRole::Converging);
  }

private:
  const RailNetwork* net_;
  std::vector<std::uint32_t> out_offsets_;
  std::vector<ArcId> out_arcs_;
  std::vector<std::uint32_t> inc_offsets_;
  std::vector<ArcId> inc_arcs_;
};

// Connected components of the underlying undirected graph. At most two blocks
// exist on valid input; block 0 is the one containing the converging vertex
// of switch 0. Throws InternalInvariantViolation if a third block appears.
struct ComponentPartition {
  std::vector<std::uint8_t> block;  // indexed by VertexId::value
  int count = 0;
};

ComponentPartition underlying_components(const DoubleTrackGraph& d);

// One arc chosen per track.
class Orientation {
public:
  explicit Orientation(std::vector<ArcId> chosen);

  std::size_t track_count() const { return chosen_.size(); }
  ArcId chosen(TrackIndex t) const { return chosen_[t]; }
  bool contains(ArcId a) const { return chosen_[arc_track(a)] == a; }
  const std::vector<ArcId>& arcs() const { return chosen_; }

  Orientation reversed() const;

  bool operator==(const Orientation&) const = default;

private:
  std::vector<ArcId> chosen_;
};

// On a disconnected double-track graph, the arcs lying in seed_arc's block
// form an orientation: the one-way orientation (or its reverse, depending on
// the seed). Throws NotOneWay when the graph is connected.
Orientation extract_orientation(const DoubleTrackGraph& d, ArcId seed_arc);
Orientation extract_orientation(const DoubleTrackGraph& d, const ComponentPartition& parts,
                                ArcId seed_arc);

enum class Polarity : std::uint8_t { Upward, Downward };

const char* to_string(Polarity p);

struct PolarityMap {
  std::vector<Polarity> by_switch;
};

// Uniform iff every switch has all three arcs at one of its directed vertices
// inside the orientation. `offending` is the lowest-index switch that is
// neither upward nor downward.
struct PolarityResult {
  std::optional<PolarityMap> map;
  std::optional<SwitchIndex> offending;

  bool uniform() const { return map.has_value(); }
};

PolarityResult polarity_of(const DoubleTrackGraph& d, const Orientation& o);

}  // namespace railnet
