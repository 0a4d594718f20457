#include "pairsplit/materials.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pairsplit/kvfile.hpp"
#include "pairsplit/units.hpp"

namespace pairsplit {

AlloyDispersion AlloyDispersion::builtin() {
  AlloyDispersion d;
  d.e0_0 = 3.65;
  d.e0_1 = 0.871;
  d.e0_2 = 0.179;
  d.ed_0 = 36.1;
  d.ed_1 = -2.45;
  d.eg_0 = 1.424;
  d.eg_1 = 1.266;
  d.eg_2 = 0.26;
  d.lambda_min = 730.0 * nm;
  d.lambda_max = 2300.0 * nm;
  d.gap_margin_ev = 0.08;
  return d;
}

AlloyDispersion AlloyDispersion::load(const std::string& path) {
  KvFile kv = KvFile::parse_file(path);
  AlloyDispersion d;
  d.e0_0 = kv.get_double("e0_const");
  d.e0_1 = kv.get_double("e0_linear");
  d.e0_2 = kv.get_double("e0_quadratic");
  d.ed_0 = kv.get_double("ed_const");
  d.ed_1 = kv.get_double("ed_linear");
  d.eg_0 = kv.get_double("eg_const");
  d.eg_1 = kv.get_double("eg_linear");
  d.eg_2 = kv.get_double("eg_quadratic");
  d.lambda_min = kv.get_double("lambda_min_nm") * nm;
  d.lambda_max = kv.get_double("lambda_max_nm") * nm;
  d.gap_margin_ev = kv.get_double("gap_margin_ev");
  return d;
}

void AlloyDispersion::save(const std::string& path) const {
  KvFile kv;
  kv.set_double("e0_const", e0_0);
  kv.set_double("e0_linear", e0_1);
  kv.set_double("e0_quadratic", e0_2);
  kv.set_double("ed_const", ed_0);
  kv.set_double("ed_linear", ed_1);
  kv.set_double("eg_const", eg_0);
  kv.set_double("eg_linear", eg_1);
  kv.set_double("eg_quadratic", eg_2);
  kv.set_double("lambda_min_nm", lambda_min / nm);
  kv.set_double("lambda_max_nm", lambda_max / nm);
  kv.set_double("gap_margin_ev", gap_margin_ev);
  kv.save(path);
}

bool AlloyDispersion::in_window(double x, double lambda) const {
  if (!(x >= 0.0 && x <= 1.0)) return false;
  if (!(lambda >= lambda_min && lambda <= lambda_max)) return false;
  const double e = HC_EV_NM / (lambda / nm);
  const double eg = eg_0 + eg_1 * x + eg_2 * x * x;
  return e + gap_margin_ev < eg;
}

double AlloyDispersion::index(double x, double lambda) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    std::ostringstream os;
    os << "alloy fraction out of range: x = " << x;
    throw std::invalid_argument(os.str());
  }
  if (!(lambda >= lambda_min && lambda <= lambda_max)) {
    std::ostringstream os;
    os << "wavelength " << lambda / nm << " nm outside fit window ["
       << lambda_min / nm << ", " << lambda_max / nm << "] nm";
    throw std::invalid_argument(os.str());
  }
  const double e = HC_EV_NM / (lambda / nm);
  const double e0 = e0_0 + e0_1 * x + e0_2 * x * x;
  const double ed = ed_0 + ed_1 * x;
  const double eg = eg_0 + eg_1 * x + eg_2 * x * x;
  if (!(e + gap_margin_ev < eg)) {
    std::ostringstream os;
    os << "photon energy " << e << " eV too close to gap " << eg
       << " eV at x = " << x << " (margin " << gap_margin_ev << " eV)";
    throw std::invalid_argument(os.str());
  }
  const double ef2 = 2.0 * e0 * e0 - eg * eg;
  const double eta = PI * ed / (2.0 * e0 * e0 * e0 * (e0 * e0 - eg * eg));
  const double m1 = eta / (2.0 * PI) * (ef2 * ef2 - eg * eg * eg * eg);
  const double m3 = eta / PI * (ef2 - eg * eg);
  const double e2 = e * e;
  const double n2 = 1.0 + m1 + m3 * e2 +
                    eta / PI * e2 * e2 *
                        std::log((2.0 * e0 * e0 - eg * eg - e2) /
                                 (eg * eg - e2));
  return std::sqrt(n2);
}

double refractive_index(double x, double lambda) {
  static const AlloyDispersion d = AlloyDispersion::builtin();
  return d.index(x, lambda);
}

}  // namespace pairsplit
