#pragma once
#include <array>
#include <cstdint>

namespace trafficlab {

// Two-group signal cycle. Group A covers one axis's approaches, group B the
// other; each green is followed by a fixed yellow and a fixed all-red before
// the opposite group releases.
enum class SignalPhase : std::uint8_t {
    GreenA = 0,
    YellowA,
    AllRedA,
    GreenB,
    YellowB,
    AllRedB,
};
inline constexpr int kSignalPhaseCount = 6;

inline constexpr double kYellowSeconds = 3.0;
inline constexpr double kAllRedSeconds = 1.0;
inline constexpr double kGreenMin = 5.0;
inline constexpr double kGreenMax = 60.0;

// Gating geometry: red/yellow approaches press the brake scale linearly within
// this distance of the stop line; yellow exempts vehicles already closer than
// the dilemma distance (they clear the junction instead of braking).
inline constexpr double kGateDistance = 12.0;
inline constexpr double kYellowExemptDistance = 6.0;

struct SignalController {
    std::uint32_t id = 0;
    SignalPhase phase = SignalPhase::GreenA;
    double phase_elapsed = 0.0;   // seconds in the current phase
    double green_a = 30.0;        // active duration of group A's green
    double green_b = 30.0;
    double pending_green_a = 30.0;  // adopted at that green's next onset
    double pending_green_b = 30.0;
    std::uint64_t pass_through_count = 0;
    std::array<double, kSignalPhaseCount> phase_time = {};  // dwell per phase
};

// Advance a controller by dt, adopting pending durations at green onsets.
void tick_signal(SignalController& s, double dt);

// Schedule a new green duration for one group, effective from that group's
// next green onset; never shortens a phase already running.
// Throws OutOfRange outside [5, 60] seconds.
void set_green_duration(SignalController& s, bool group_a, double seconds);

// Duration of the controller's current phase.
double phase_duration(const SignalController& s);

// True when the group's approaches face a green.
bool group_green(const SignalController& s, bool group_a);

// True when the group faces green or yellow (i.e., not red).
bool group_non_red(const SignalController& s, bool group_a);

// Observation code for the phase: 0 during group A green, 2 during group B
// green, 1 through every yellow and all-red.
int phase_code(const SignalController& s);

// Green duration of the phase family currently cycling (group A's while in
// its green/yellow/all-red, group B's otherwise); the duration observations
// report.
double current_family_green(const SignalController& s);

// Brake demand for a red approach at `distance` from the stop line: full scale
// on the line, fading linearly to nothing at the gate distance.
double gate_factor(double distance);

// Gate decision for one approach vehicle. `group_a` names the approach group,
// `distance` its along-path distance to the stop line.
double approach_gate(const SignalController& s, bool group_a, double distance);

}  // namespace trafficlab
