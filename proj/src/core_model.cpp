#include "railnet/core_model.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace railnet {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::DuplicateEnd: return "DuplicateEnd";
    case Errc::MissingEnd: return "MissingEnd";
    case Errc::SelfPairedEnd: return "SelfPairedEnd";
    case Errc::Disconnected: return "Disconnected";
    case Errc::OddSwitchCount: return "OddSwitchCount";
    case Errc::UnknownSwitch: return "UnknownSwitch";
    case Errc::NotAWalk: return "NotAWalk";
    case Errc::NotClosed: return "NotClosed";
    case Errc::NotOneWay: return "NotOneWay";
    case Errc::MethodDisagreement: return "MethodDisagreement";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

const char* to_string(EndKind kind) {
  switch (kind) {
    case EndKind::Stem: return "stem";
    case EndKind::BranchA: return "branch_a";
    case EndKind::BranchB: return "branch_b";
  }
  return "?";
}

std::optional<EndKind> end_kind_from_string(std::string_view name) {
  if (name == "stem") return EndKind::Stem;
  if (name == "branch_a") return EndKind::BranchA;
  if (name == "branch_b") return EndKind::BranchB;
  return std::nullopt;
}

std::optional<SwitchIndex> RailNetwork::find_switch(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<SwitchIndex>(it - names_.begin());
}

void RailNetwork::rebuild_end_index() {
  constexpr TrackIndex kUnset = ~TrackIndex{0};
  end_to_track_.assign(end_count(), kUnset);
  for (TrackIndex t = 0; t < tracks_.size(); ++t) {
    for (EndRef e : {tracks_[t].a, tracks_[t].b}) {
      if (end_to_track_[e.slot()] != kUnset) {
        throw Error(Errc::DuplicateEnd, "end " + names_[e.sw] + "." + to_string(e.kind) +
                                            " appears in more than one track");
      }
      end_to_track_[e.slot()] = t;
    }
  }
  for (std::uint32_t slot = 0; slot < end_to_track_.size(); ++slot) {
    if (end_to_track_[slot] == kUnset) {
      throw Error(Errc::MissingEnd, "end " + names_[slot / 3] + "." +
                                        to_string(static_cast<EndKind>(slot % 3)) +
                                        " belongs to no track");
    }
  }
}

RailNetwork validate_network(const RawNetwork& raw) {
  RailNetwork net;
  net.names_ = raw.switches;
  std::sort(net.names_.begin(), net.names_.end());
  net.names_.erase(std::unique(net.names_.begin(), net.names_.end()), net.names_.end());

  if (net.names_.empty()) {
    throw Error(Errc::SchemaError, "network has no switches");
  }
  if (net.names_.size() % 2 != 0) {
    throw Error(Errc::OddSwitchCount, std::to_string(net.names_.size()) +
                                          " switches leave an odd number of ends; "
                                          "a perfect pairing is impossible");
  }

  auto resolve = [&](const std::string& name) -> SwitchIndex {
    auto idx = net.find_switch(name);
    if (!idx) throw Error(Errc::UnknownSwitch, "track references unknown switch '" + name + "'");
    return *idx;
  };

  net.tracks_.reserve(raw.tracks.size());
  for (const RawTrack& rt : raw.tracks) {
    EndRef a{resolve(rt.switch_a), rt.kind_a};
    EndRef b{resolve(rt.switch_b), rt.kind_b};
    if (a == b) {
      throw Error(Errc::SelfPairedEnd, "track pairs end " + rt.switch_a + "." +
                                           to_string(rt.kind_a) + " with itself");
    }
    net.tracks_.push_back(Track{a, b});
  }

  net.rebuild_end_index();

  // Connectivity of the underlying multigraph.
  const std::size_t n = net.switch_count();
  std::vector<std::vector<SwitchIndex>> adj(n);
  for (const Track& t : net.tracks_) {
    adj[t.a.sw].push_back(t.b.sw);
    adj[t.b.sw].push_back(t.a.sw);
  }
  std::vector<char> seen(n, 0);
  std::vector<SwitchIndex> queue{0};
  seen[0] = 1;
  std::size_t visited = 1;
  while (!queue.empty()) {
    SwitchIndex s = queue.back();
    queue.pop_back();
    for (SwitchIndex nb : adj[s]) {
      if (!seen[nb]) {
        seen[nb] = 1;
        ++visited;
        queue.push_back(nb);
      }
    }
  }
  if (visited != n) {
    throw Error(Errc::Disconnected, "underlying multigraph has more than one component (" +
                                        std::to_string(visited) + " of " + std::to_string(n) +
                                        " switches reachable from " + net.names_[0] + ")");
  }
  return net;
}

Walk Walk::reversed() const {
  Walk r;
  r.start = end_switch();
  r.steps.reserve(steps.size());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    r.steps.push_back(WalkStep{it->track, it->entry_end, it->exit_end});
  }
  return r;
}

void validate_walk(const RailNetwork& net, const Walk& walk) {
  if (walk.start >= net.switch_count()) {
    throw Error(Errc::NotAWalk, "start switch index out of range");
  }
  SwitchIndex at = walk.start;
  for (std::size_t i = 0; i < walk.steps.size(); ++i) {
    const WalkStep& step = walk.steps[i];
    if (step.track >= net.track_count()) {
      throw Error(Errc::NotAWalk, "step " + std::to_string(i) + " names a track out of range");
    }
    const Track& t = net.track(step.track);
    const bool matches = (step.exit_end == t.a && step.entry_end == t.b) ||
                         (step.exit_end == t.b && step.entry_end == t.a);
    if (!matches) {
      throw Error(Errc::NotAWalk,
                  "step " + std::to_string(i) + " ends do not match its track's end pair");
    }
    if (step.exit_end.sw != at) {
      throw Error(Errc::NotAWalk, "step " + std::to_string(i) +
                                      " exits through an end not on the current switch");
    }
    at = step.entry_end.sw;
  }
}

bool is_railway_line(const RailNetwork& net, const Walk& walk) {
  validate_walk(net, walk);
  for (std::size_t i = 1; i < walk.steps.size(); ++i) {
    const bool entry_stem = walk.steps[i - 1].entry_end.kind == EndKind::Stem;
    const bool exit_stem = walk.steps[i].exit_end.kind == EndKind::Stem;
    if (entry_stem == exit_stem) return false;
  }
  return true;
}

RailNetwork branch_swap(const RailNetwork& net, SwitchIndex s) {
  if (s >= net.switch_count()) {
    throw Error(Errc::UnknownSwitch, "switch index " + std::to_string(s) + " out of range");
  }
  auto swap_end = [s](EndRef e) {
    if (e.sw == s && e.kind == EndKind::BranchA) return EndRef{s, EndKind::BranchB};
    if (e.sw == s && e.kind == EndKind::BranchB) return EndRef{s, EndKind::BranchA};
    return e;
  };
  RailNetwork out;
  out.names_ = net.names_;
  out.tracks_.reserve(net.tracks_.size());
  for (const Track& t : net.tracks_) {
    out.tracks_.push_back(Track{swap_end(t.a), swap_end(t.b)});
  }
  out.rebuild_end_index();  // relabeling preserves pairing and connectivity
  return out;
}

}  // namespace railnet
