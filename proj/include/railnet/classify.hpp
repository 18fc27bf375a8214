#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "railnet/core_model.hpp"
#include "railnet/double_track.hpp"

namespace railnet {

// Parallel: exactly one end is a stem end. Cross: both stems or both branches.
enum class TrackClass : std::uint8_t { Parallel, Cross };

const char* to_string(TrackClass c);
TrackClass track_class(const Track& t);

enum class Verdict : std::uint8_t { OneWay, TwoWay };

const char* to_string(Verdict v);

// Symbols of the state sequence: sigma for stem ends, beta for branch ends,
// out/in for leaving or entering a switch.
enum class StateSymbol : std::uint8_t { SigmaOut, SigmaIn, BetaOut, BetaIn };

const char* to_string(StateSymbol s);

// True for symbols in the {sigma_out, beta_in} half of the state diagram;
// cross tracks and angles are exactly the transitions that change halves.
bool state_half(StateSymbol s);

struct CycleAnalysis {
  Walk cycle;
  std::uint64_t cross_count = 0;
  std::uint64_t angle_count = 0;  // includes the wrap-around switch
  std::vector<StateSymbol> state_sequence;  // length 2*steps+1, first == last

  // Adjacent state pairs that switch halves; equals cross_count + angle_count.
  std::uint64_t half_transitions() const;
};

// Counts cross tracks, angles (branch-in/branch-out switches, wrap-around
// included) and builds the state sequence of a closed walk.
CycleAnalysis analyze_cycle(const RailNetwork& net, const Walk& cycle);

struct ComponentOutcome {
  Verdict verdict = Verdict::OneWay;
  ComponentPartition partition;
};

// One-way iff the double-track graph is disconnected.
ComponentOutcome classify_by_components(const DoubleTrackGraph& d);
ComponentOutcome classify_by_components(const RailNetwork& net);

struct ParityOutcome {
  Verdict verdict = Verdict::OneWay;
  std::optional<Walk> witness;  // closed walk with an odd cross count
};

// Union-find with parity over switches: parallel tracks force equal parity,
// cross tracks opposite. A conflict yields a witness cycle (the conflicting
// track plus the union-forest path between its endpoints).
ParityOutcome classify_by_parity(const RailNetwork& net);

// Builds the chord cycles of a breadth-first spanning tree and checks each
// for an even number of angles.
Verdict classify_by_angles(const RailNetwork& net);

// The spanning-tree chord cycles used by classify_by_angles, as closed walks
// (one per non-tree track, self-loops included).
std::vector<Walk> basis_cycles(const RailNetwork& net);

struct MethodVerdicts {
  Verdict components = Verdict::OneWay;
  Verdict parity = Verdict::OneWay;
  Verdict angles = Verdict::OneWay;
};

struct ClassificationReport {
  Verdict verdict = Verdict::OneWay;
  int component_count = 0;
  // Present when one-way: the canonical orientation (the one containing the
  // forward arc of track 0) and its reverse, plus the polarity map of the
  // canonical member.
  std::optional<std::pair<Orientation, Orientation>> orientation_pair;
  std::optional<PolarityMap> polarity;
  // Present when two-way.
  std::optional<CycleAnalysis> witness;
  MethodVerdicts methods;
};

// Runs all three classifiers and asserts they agree (the theorems guarantee
// it; disagreement is an implementation bug surfacing as MethodDisagreement).
ClassificationReport classify(const RailNetwork& net);

inline constexpr std::size_t kOracleDefaultMaxTracks = 16;

// Definition 3.4's closure condition for the given orientation alone: every
// one-step continuation of an arc in o stays in o.
bool orientation_closed(const DoubleTrackGraph& d, const Orientation& o);

// Brute force over all 2^|tracks| orientations, keeping those closed together
// with their reverse. Returns 0 orientations (two-way) or 2 (a reverse pair).
std::vector<Orientation> oracle_enumerate(const RailNetwork& net,
                                          std::size_t max_tracks = kOracleDefaultMaxTracks);

}  // namespace railnet
