#ifndef LAGRHD_FUZZ_HPP
#define LAGRHD_FUZZ_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lagrhd/state.hpp"

namespace lagrhd {

struct FuzzReport {
  long samples = 0;
  long violations = 0;
  std::vector<std::string> counterexamples;  // first few, verbatim inputs
  double max_roundtrip_error = 0.0;          // recovery suite only
  double max_cs2_excess = 0.0;               // cs^2 - (gamma - 1), should stay negative

  bool ok() const { return violations == 0; }
};

// Randomised checks of the seven wave-speed/coefficient inequalities and the
// admissibility of both intermediate states, for the 1D solver. With
// corrupt_wave_bounds the acoustic bounds are deliberately shrunk so the
// harness must report violations.
FuzzReport fuzz_hllc_1d(std::uint64_t seed, long samples, bool corrupt_wave_bounds = false);

// Same for the normal-split 2D solver, including the tangential-momentum term.
FuzzReport fuzz_hllc_2d(std::uint64_t seed, long samples, bool corrupt_wave_bounds = false);

// Conserved -> primitive -> conserved roundtrips over admissible states with
// Lorentz factor up to 100, plus the sound-speed bound.
FuzzReport fuzz_recovery(std::uint64_t seed, long samples);

} // namespace lagrhd

#endif
