#pragma once

#include <string>
#include <vector>

#include "algebroid/frame.hpp"
#include "super/form.hpp"

namespace vaw {

// Which odd transition factor accompanies an even change of frame.
enum class BundleKind { tangent, cotangent, general };

// Recipe for the odd half of a frame built from a coordinate map: the
// tangent kind reuses the even factor, the cotangent kind its inverse
// transpose, and the general kind takes an explicit invertible matrix.
struct BundleSpec {
  BundleKind kind = BundleKind::tangent;

  static BundleSpec tangent() { return {BundleKind::tangent}; }
  static BundleSpec cotangent() { return {BundleKind::cotangent}; }
  static BundleSpec general() { return {BundleKind::general}; }

  // Frame induced by a coordinate map under this recipe; `odd` is consulted
  // only by the general kind (and must be invertible there).
  Frame frame(const std::string& id, const std::vector<RatFunc>& coords,
              const RatMatrix* odd = nullptr) const;

  // True when a change's odd factor is the one this recipe dictates.
  bool matches(const FrameChange& fc) const;
};

// Same even data, odd factor replaced by its inverse transpose.
Frame dual_frame(const Frame& F);

// One-form-valued map attached to a change of frame: row i gives the value
// on the i-th lifted derivation as coefficients against the source
// one-forms; the lifted odd basis is sent to zero.  The two stored parts
// split the map by which transition factor produced them:
// full = from_even - from_odd.
struct HMap {
  RatMatrix from_even;
  RatMatrix from_odd;
  RatMatrix full;
};

// The map of a holonomic change.  Throws DomainError when the change is not
// holonomic or its odd factor does not match the bundle recipe.
HMap h_of_change(const FrameChange& fc, const BundleSpec& spec);

// Value of the map on an element written in destination data, extended over
// coefficients by the module rules.  Even-slot coefficients must be
// generator-free and odd-slot coefficients carry at most one generator;
// anything else throws UnsupportedShape.  The value is a one-form in source
// data.
SuperCovector hmap_apply(const FrameChange& fc, const HMap& h,
                         const SuperVector& v);

// Exact check of <x', h(y')> = -1/2 <x', y'> over all pairs of lifted basis
// elements, with both sides taken in the source structure tables.
bool hmap_defining_condition(const FrameChange& fc, const HMap& h);

// Degree-3 cocycle form of one change, assembled over the chart's
// coordinate basis.  Computed along two independent routes — the structure
// maps on the lifted basis, and the closed trace formula — and any
// disagreement throws Error.
PolyForm b_of_change(const FrameChange& fc, const BundleSpec& spec);

// Degree-2 cocycle form of a composable pair of changes (fc2 continuing
// fc1), assembled over the chart's coordinate basis.  Computed along two
// independent routes — the telescoped maps of the three changes involved,
// and the closed trace formula — and any disagreement throws Error.
PolyForm a_of_triple(const FrameChange& fc1, const FrameChange& fc2,
                     const BundleSpec& spec);

// Odd-factor contributions alone, each computed along two independent
// routes (term-by-term expansion against the closed trace formula) with any
// disagreement throwing Error.  Used by the duality comparison.
PolyForm b_odd_part(const FrameChange& fc);
PolyForm a_odd_part(const FrameChange& fc1, const FrameChange& fc2);

// The two cocycle forms of a composable pair of changes over one chart.
struct CocyclePair {
  PolyForm a;  // degree 2
  PolyForm b;  // degree 3, of the first change; always closed
};

CocyclePair cocycle_pair(const FrameChange& fc1, const FrameChange& fc2,
                         const BundleSpec& spec);

struct DualReport {
  bool b_parts_equal = false;
  bool a_parts_equal = false;
};

// Compare the odd-factor contributions of a frame triple with those of the
// dual triple (every odd factor replaced by its inverse transpose).
DualReport dual_compare(const Frame& f1, const Frame& f2, const Frame& f3);

struct CechCheck {
  std::string label;
  bool ok = false;
};

// Exactness checks over a system of at least four frames on one chart:
// every pairwise degree-3 form is closed, the differential of each
// degree-2 form matches the signed sum of the three pairwise degree-3
// forms (orientation constants fixed once below), and every four-frame
// alternating sum of degree-2 forms cancels.
std::vector<CechCheck> cech_consistency(const std::vector<Frame>& frames,
                                        const BundleSpec& spec);

// Orientation constants of the pair-sum check, determined once on a system
// with all three pairwise degree-3 forms nonzero and frozen as regression
// values: d a(F1,F2,F3) = kPairSum[0]*b(F2,F3) + kPairSum[1]*b(F1,F3)
//                       + kPairSum[2]*b(F1,F2).
extern const int kPairSum[3];

}  // namespace vaw
