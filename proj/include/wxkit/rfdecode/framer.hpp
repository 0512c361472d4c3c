// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 wxkit contributors

#pragma once

#include <vector>

#include "wxkit/core/station.hpp"
#include "wxkit/rfdecode/pulse_train.hpp"
#include "wxkit/rfdecode/timing.hpp"

namespace wxkit::rf {

/// Extract every maximal run of classified bits from a capture.
///
/// A5N1 runs start after at least `sync_pairs` sync pairs; the bit clock is
/// scaled by the measured sync duration.  LCW runs are gap-separated highs
/// classified by their ratio to the adjacent gap.  Both make the result
/// invariant under uniform time scaling within the tolerance.  The final
/// bit of a run may be followed by a long trailer low.
std::vector<BitString> frame_pulses(const PulseTrain& train, const TimingSpec& spec,
                                    Protocol protocol);

/// Inverse direction: turn bits into the nominal pulse pattern.
PulseTrain modulate(const BitString& bits, const TimingSpec& spec, Protocol protocol);

} // namespace wxkit::rf
