#include "lzs/presets.hpp"

namespace lzs::presets {

namespace {

DriveParams dimensionless(double a, double delta0, double omega) {
  DriveParams p;
  p.v_dd = 1.0;
  p.a = a;
  p.delta0 = delta0;
  p.omega = omega;
  p.phi = 0.0;
  p.units = UnitSystem::Dimensionless;
  return p;
}

}  // namespace

const std::vector<DrivePreset>& drive_presets() {
  static const std::vector<DrivePreset> presets = [] {
    std::vector<DrivePreset> v;
    v.push_back({"fig2", "avoided-crossing spectrum demo (10, 5, 1)", dimensionless(10, 5, 1),
                 two_pi});
    v.push_back({"fig3", "weak driving (4, 20, 20)", dimensionless(4, 20, 20), 180.0});
    v.push_back({"fig4_abc", "strong driving, high frequency (18, 6, 6)", dimensionless(18, 6, 6),
                 40.0});
    v.push_back({"fig4_def", "strong driving (18, 6, 3)", dimensionless(18, 6, 3), two_pi * 4});
    v.push_back({"fig4_ghi", "strong driving, slow passage (18, 6, 0.75)",
                 dimensionless(18, 6, 0.75), two_pi * 7});
    v.push_back({"fig5_abc", "intermediate driving, high frequency (13, 12, 12)",
                 dimensionless(13, 12, 12), 30.0});
    v.push_back({"fig5_def", "intermediate driving (13, 12, 3)", dimensionless(13, 12, 3),
                 two_pi * 4});
    v.push_back({"fig5_ghi", "intermediate driving, slow passage (13, 12, 0.75)",
                 dimensionless(13, 12, 0.75), two_pi * 7});

    // Cs operating point for the robustness maps; gate time set to four
    // pair-state cycles.
    DriveParams cs;
    cs.v_dd = two_pi * 3.2;
    cs.a = two_pi * 83.2;
    cs.delta0 = two_pi * 76.8;
    cs.omega = two_pi * 3.15;
    cs.phi = 0.0;
    cs.units = UnitSystem::RadPerMicrosecond;
    v.push_back({"cs_robustness_base", "Cs channel drive, rad/us (gate time in us)", cs,
                 two_pi * 4 / cs.v_dd});
    return v;
  }();
  return presets;
}

const DrivePreset* find_drive_preset(const std::string& name) {
  for (const auto& p : drive_presets())
    if (p.name == name) return &p;
  return nullptr;
}

const ChannelPreset& cs_channel() {
  static const ChannelPreset preset = [] {
    ChannelPreset c;
    c.name = "cs_channel";
    c.channel.c3 = -154968.0;  // MHz um^3
    c.channel.r = 20.0;        // um
    c.channel.geometric_prefactor = default_geometric_prefactor;
    c.channel.lifetimes = {270.0, 314.0, 361.0, 406.0};  // us
    c.channel.label = "Cs 90S+96S -> 90P+95P";
    c.delta0 = two_pi * 75.6;  // rad/us
    return c;
  }();
  return preset;
}

const AdiabaticPreset& adiabatic_beterov() {
  static const AdiabaticPreset preset = [] {
    AdiabaticPreset a;
    a.name = "adiabatic_beterov";
    a.pulse.s1 = -two_pi * 10.0;      // rad/us^2
    a.pulse.s2 = -two_pi * 2600.0;    // rad/us^6
    a.pulse.total_t = 1.8;            // us
    a.pulse.t1 = 1.8 / 4.0;
    a.pulse.t2 = 3.0 * 1.8 / 4.0;
    a.v_dd = two_pi * 2.1;
    return a;
  }();
  return preset;
}

const StarkPreset& rb_n37_stark() {
  static const StarkPreset preset = [] {
    StarkPreset s;
    s.name = "rb_n37_stark";
    s.omega = two_pi * 1.0;         // rad/us
    s.v_dd = s.omega / 0.75;        // intermediate slow-passage point
    const double delta0_prime = 12.0 * s.v_dd;  // = 16 * omega, m = 16
    const double a_prime = 13.0 * s.v_dd;
    s.field.e_dc = 1.69;            // V/cm
    s.field.e_rf = 0.169;
    s.field.kappa = a_prime / (2.0 * s.field.e_rf * s.field.e_dc);
    s.field.delta0_bare = delta0_prime - s.field.kappa * s.field.e_dc * s.field.e_dc;
    return s;
  }();
  return preset;
}

}  // namespace lzs::presets
