#pragma once

namespace localcert {

// Calibrated constants for the numeric bound checkers.  None of these come
// from a closed-form derivation; each was fixed by sweeping the matching
// checker over its parameter range and frozen once the bound held with
// visible pressure (worst observed ratio close to, but below, 1).

// midpoint_shortcut_check: additive C/x term.  Sweep: x in {100..800},
// delta in {0, 0.25, 0.5, 1}, rho in {1, 2, 4}, 1e5 samples per cell.
// Worst ratio 0.87 (x=800, delta=1, rho=2); midpoint-directed detours
// saturate the square-root term as x grows, so the ratio trends to 1 and
// the C/x slack is what keeps small-x cells and the collinear limit safe.
inline constexpr double kMidpointShortcutC = 8.0;

// tight_path_regularity_check: additive C/sqrt(len) term on the deviation
// law.  Circular-arc paths realize sqrt(len*delta/2) up to discretization;
// worst ratio 0.86 over 400-path runs across seeds.
inline constexpr double kRegularityC = 1.0;

// ring_separation_check: subtractive C'*sqrt(n) term on the planar
// separation of the marked ring vertices.  Desk-scale rings (n <= 4) beat
// the linear term outright (the bound is negative there), so this constant
// only needs to be nonnegative; kept at the value used while sizing the
// packing ledger.
inline constexpr double kRingSeparationC = 4.0;

// ring_separation_check: subtractive C''*n term on the half-plane packing
// count.  Canonical rings at n in {1..4} discard fewer than 9n + 6 disks of
// the 4(n+1)^2 independent sites (cut band plus ring band), splitting the
// rest near-evenly.
inline constexpr double kRingPackingC = 16.0;

}  // namespace localcert
