#pragma once
#include <string>
#include <vector>

#include "pairsplit/materials.hpp"
#include "pairsplit/slab_solver.hpp"

namespace pairsplit {

struct StackLayer {
  double x;  // aluminum fraction
  double t;  // thickness [m]
};

// Epitaxial layer sequence, bottom-first, between a semi-infinite substrate
// and the superstrate (air unless overridden). etch_depth is the thickness
// removed from the top outside the ridge; it may end inside a layer.
struct LayerStack {
  std::vector<StackLayer> layers;
  double substrate_x = 0.80;
  double superstrate_index = 1.0;
  double etch_depth = 0.0;
  // additive correction applied to the raw pump-mode index; fixed once
  // against the two phase-matching anchors
  double bragg_offset = 0.0;

  // 6-period lower mirror, 351 nm core, 2-period upper mirror,
  // quarter-wave mirror layers (110 nm / 290 nm), 800 nm etch
  static LayerStack builtin();
  static LayerStack load(const std::string& path);
  void save(const std::string& path) const;

  // empty iff valid; each entry names field, constraint, actual value.
  // The etch bound is checked against the total thickness above the
  // thickest layer (the core is the thickest layer by construction).
  std::vector<std::string> validate() const;
  void require_valid() const;  // throws std::invalid_argument on first issue

  double total_thickness() const;
  double thickness_above_core() const;

  // copy with `depth` removed from the top (layers split as needed)
  LayerStack etched(double depth) const;

  // refractive-index realization at one wavelength
  SlabProblem slab(const AlloyDispersion& disp, double lambda) const;
};

}  // namespace pairsplit
