#include "pairsplit/layer_stack.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pairsplit/kvfile.hpp"
#include "pairsplit/units.hpp"

namespace pairsplit {

LayerStack LayerStack::builtin() {
  LayerStack s;
  for (int i = 0; i < 6; ++i) {
    s.layers.push_back({0.80, 290.0 * nm});
    s.layers.push_back({0.25, 110.0 * nm});
  }
  s.layers.push_back({0.45, 351.0 * nm});
  for (int i = 0; i < 2; ++i) {
    s.layers.push_back({0.25, 110.0 * nm});
    s.layers.push_back({0.80, 290.0 * nm});
  }
  s.substrate_x = 0.80;
  s.superstrate_index = 1.0;
  s.etch_depth = 800.0 * nm;
  s.bragg_offset = -0.0285;
  return s;
}

LayerStack LayerStack::load(const std::string& path) {
  KvFile kv = KvFile::parse_file(path);
  LayerStack s;
  const long count = kv.get_long_or("layer_count", -1);
  if (count < 0)
    throw std::invalid_argument(path + ": missing layer_count");
  for (long i = 0; i < count; ++i) {
    std::ostringstream key;
    key << "layer_" << i;
    const std::string raw = kv.get_or_throw(key.str());
    std::istringstream is(raw);
    StackLayer L{};
    double t_nm = 0.0;
    if (!(is >> L.x >> t_nm))
      throw std::invalid_argument(path + ": bad layer entry '" + raw +
                                  "' for " + key.str());
    L.t = t_nm * nm;
    s.layers.push_back(L);
  }
  s.substrate_x = kv.get_double("substrate_x");
  s.superstrate_index = kv.get_double("superstrate_index");
  s.etch_depth = kv.get_double("etch_depth_nm") * nm;
  s.bragg_offset = kv.get_double("bragg_offset");
  return s;
}

void LayerStack::save(const std::string& path) const {
  KvFile kv;
  kv.set("layer_count", std::to_string(layers.size()));
  for (size_t i = 0; i < layers.size(); ++i) {
    std::ostringstream key, val;
    key << "layer_" << i;
    val << format_double(layers[i].x) << " "
        << format_double(layers[i].t / nm);
    kv.set(key.str(), val.str());
  }
  kv.set_double("substrate_x", substrate_x);
  kv.set_double("superstrate_index", superstrate_index);
  kv.set_double("etch_depth_nm", etch_depth / nm);
  kv.set_double("bragg_offset", bragg_offset);
  kv.save(path);
}

std::vector<std::string> LayerStack::validate() const {
  std::vector<std::string> out;
  auto complain = [&](const std::string& msg) { out.push_back(msg); };
  if (layers.empty()) complain("layers: at least one layer required");
  for (size_t i = 0; i < layers.size(); ++i) {
    std::ostringstream os;
    if (!(layers[i].t > 0.0)) {
      os << "layer_" << i << ".thickness: must be > 0, got " << layers[i].t;
      complain(os.str());
    }
    if (!(layers[i].x >= 0.0 && layers[i].x <= 1.0)) {
      os.str("");
      os << "layer_" << i << ".x: must be in [0,1], got " << layers[i].x;
      complain(os.str());
    }
  }
  if (!(substrate_x >= 0.0 && substrate_x <= 1.0))
    complain("substrate_x: must be in [0,1]");
  if (!(superstrate_index >= 1.0))
    complain("superstrate_index: must be >= 1");
  if (!(etch_depth >= 0.0)) complain("etch_depth: must be >= 0");
  if (!layers.empty() && etch_depth > 0.0) {
    const double above = thickness_above_core();
    if (etch_depth > above + 1e-15) {
      std::ostringstream os;
      os << "etch_depth: must not cut into the core layer; max "
         << above / nm << " nm, got " << etch_depth / nm << " nm";
      complain(os.str());
    }
  }
  return out;
}

void LayerStack::require_valid() const {
  const auto v = validate();
  if (!v.empty()) throw std::invalid_argument("layer stack: " + v.front());
}

double LayerStack::total_thickness() const {
  double t = 0.0;
  for (const auto& L : layers) t += L.t;
  return t;
}

double LayerStack::thickness_above_core() const {
  size_t core = 0;
  for (size_t i = 1; i < layers.size(); ++i)
    if (layers[i].t > layers[core].t) core = i;
  double above = 0.0;
  for (size_t i = core + 1; i < layers.size(); ++i) above += layers[i].t;
  return above;
}

LayerStack LayerStack::etched(double depth) const {
  if (depth < 0.0)
    throw std::invalid_argument("etch depth must be >= 0");
  LayerStack s = *this;
  s.etch_depth = 0.0;
  double remaining = depth;
  while (remaining > 1e-15 && !s.layers.empty()) {
    StackLayer& top = s.layers.back();
    if (top.t <= remaining + 1e-15) {
      remaining -= top.t;
      s.layers.pop_back();
    } else {
      top.t -= remaining;
      remaining = 0.0;
    }
  }
  if (remaining > 1e-15)
    throw std::invalid_argument("etch depth exceeds stack thickness");
  return s;
}

SlabProblem LayerStack::slab(const AlloyDispersion& disp,
                             double lambda) const {
  SlabProblem p;
  p.n_sub = disp.index(substrate_x, lambda);
  p.n_sup = superstrate_index;
  p.layers.reserve(layers.size());
  for (const auto& L : layers)
    p.layers.push_back({disp.index(L.x, lambda), L.t});
  return p;
}

}  // namespace pairsplit
