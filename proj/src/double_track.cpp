#include "railnet/double_track.hpp"

#include <algorithm>

namespace railnet {

namespace {

// CSR construction shared by the out- and incident-adjacency tables.
template <typename EmitFn>
void build_csr(std::size_t vertex_count, std::size_t arc_count, EmitFn&& emit,
               std::vector<std::uint32_t>& offsets, std::vector<ArcId>& arcs) {
  std::vector<std::uint32_t> degree(vertex_count, 0);
  emit([&](std::uint32_t v, ArcId) { ++degree[v]; });
  offsets.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) offsets[v + 1] = offsets[v] + degree[v];
  arcs.resize(offsets.back());
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  emit([&](std::uint32_t v, ArcId a) { arcs[cursor[v]++] = a; });
  (void)arc_count;
}

}  // namespace

const char* to_string(Polarity p) {
  return p == Polarity::Upward ? "upward" : "downward";
}

DoubleTrackGraph::DoubleTrackGraph(const RailNetwork& net) : net_(&net) {
  const std::size_t nv = vertex_count();
  const std::size_t na = arc_count();

  build_csr(
      nv, na,
      [&](auto&& sink) {
        for (ArcId a = 0; a < na; ++a) sink(tail(a).value, a);
      },
      out_offsets_, out_arcs_);

  build_csr(
      nv, na,
      [&](auto&& sink) {
        for (ArcId a = 0; a < na; ++a) {
          VertexId t = tail(a), h = head(a);
          sink(t.value, a);
          if (h != t) sink(h.value, a);
        }
      },
      inc_offsets_, inc_arcs_);
}

ComponentPartition underlying_components(const DoubleTrackGraph& d) {
  const std::size_t nv = d.vertex_count();
  constexpr std::uint8_t kUnseen = 0xff;
  ComponentPartition parts;
  parts.block.assign(nv, kUnseen);

  std::vector<std::uint32_t> queue;
  queue.reserve(nv);
  for (std::uint32_t root = 0; root < nv; ++root) {
    if (parts.block[root] != kUnseen) continue;
    if (parts.count >= 2) {
      throw Error(Errc::InternalInvariantViolation,
                  "double-track graph has more than two components");
    }
    const std::uint8_t id = static_cast<std::uint8_t>(parts.count++);
    parts.block[root] = id;
    queue.clear();
    queue.push_back(root);
    while (!queue.empty()) {
      VertexId v{queue.back()};
      queue.pop_back();
      for (ArcId a : d.incident_arcs(v)) {
        VertexId other = d.tail(a) == v ? d.head(a) : d.tail(a);
        if (parts.block[other.value] == kUnseen) {
          parts.block[other.value] = id;
          queue.push_back(other.value);
        }
      }
    }
  }
  return parts;
}

Orientation::Orientation(std::vector<ArcId> chosen) : chosen_(std::move(chosen)) {
  for (TrackIndex t = 0; t < chosen_.size(); ++t) {
    if (arc_track(chosen_[t]) != t) {
      throw Error(Errc::InternalInvariantViolation,
                  "orientation entry " + std::to_string(t) + " names an arc of another track");
    }
  }
}

Orientation Orientation::reversed() const {
  std::vector<ArcId> rev(chosen_.size());
  for (TrackIndex t = 0; t < chosen_.size(); ++t) rev[t] = reverse_arc(chosen_[t]);
  return Orientation(std::move(rev));
}

Orientation extract_orientation(const DoubleTrackGraph& d, const ComponentPartition& parts,
                                ArcId seed_arc) {
  if (parts.count != 2) {
    throw Error(Errc::NotOneWay, "double-track graph is connected; no one-way orientation");
  }
  const std::uint8_t want = parts.block[d.tail(seed_arc).value];
  std::vector<ArcId> chosen(d.network().track_count());
  for (TrackIndex t = 0; t < chosen.size(); ++t) {
    ArcId fwd = forward_arc(t);
    chosen[t] = parts.block[d.tail(fwd).value] == want ? fwd : reverse_arc(fwd);
  }
  return Orientation(std::move(chosen));
}

Orientation extract_orientation(const DoubleTrackGraph& d, ArcId seed_arc) {
  return extract_orientation(d, underlying_components(d), seed_arc);
}

PolarityResult polarity_of(const DoubleTrackGraph& d, const Orientation& o) {
  const RailNetwork& net = d.network();
  PolarityMap map;
  map.by_switch.reserve(net.switch_count());

  for (SwitchIndex s = 0; s < net.switch_count(); ++s) {
    const EndRef stem{s, EndKind::Stem};
    const EndRef ba{s, EndKind::BranchA};
    const EndRef bb{s, EndKind::BranchB};
    // The three arc incidences at the converging vertex: out through the
    // stem, in through each branch. Dually for the diverging vertex.
    const bool upward = o.contains(d.arc_out_of(stem)) && o.contains(d.arc_into(ba)) &&
                        o.contains(d.arc_into(bb));
    const bool downward = o.contains(d.arc_into(stem)) && o.contains(d.arc_out_of(ba)) &&
                          o.contains(d.arc_out_of(bb));
    if (upward) {
      map.by_switch.push_back(Polarity::Upward);
    } else if (downward) {
      map.by_switch.push_back(Polarity::Downward);
    } else {
      return PolarityResult{std::nullopt, s};
    }
  }
  return PolarityResult{std::move(map), std::nullopt};
}

}  // namespace railnet
