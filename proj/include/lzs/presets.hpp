#pragma once

#include <string>
#include <vector>

#include "lzs/core.hpp"
#include "lzs/gate.hpp"
#include "lzs/sweeps.hpp"

namespace lzs::presets {

/// Named drive parameter set, ready for trajectory/gate runs. Dimensionless
/// presets measure every frequency in units of v_dd and times in 1/v_dd;
/// physical presets are in rad/us and us.
struct DrivePreset {
  std::string name;
  std::string description;
  DriveParams drive;
  double duration;  ///< nominal run/gate time
};

const std::vector<DrivePreset>& drive_presets();
const DrivePreset* find_drive_preset(const std::string& name);

/// The Cs pair-state channel used for the physical-unit runs: 90S+96S
/// coupled to 90P+95P, c3 = -154968 MHz um^3 at r = 20 um, static defect
/// delta0/2pi = 75.6 MHz.
struct ChannelPreset {
  std::string name;
  PhysicalChannel channel;
  double delta0;  ///< rad/us
};

const ChannelPreset& cs_channel();

/// Double power-law sweep baseline with its published operating point
/// (v_dd/2pi = 2.1 MHz).
struct AdiabaticPreset {
  std::string name;
  AdiabaticPulse pulse;
  double v_dd;
};

const AdiabaticPreset& adiabatic_beterov();

/// dc+rf Stark drive for the Rb n = 37 channel, back-solved so the field
/// stack lands on the m = 16 multi-photon resonance in the intermediate
/// regime (a/delta0 = 13/12) at omega/2pi = 1 MHz.
struct StarkPreset {
  std::string name;
  StarkField field;
  double omega;
  double v_dd;
};

const StarkPreset& rb_n37_stark();

}  // namespace lzs::presets
