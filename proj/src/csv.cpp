#include "pairsplit/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pairsplit/units.hpp"

namespace pairsplit {

namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

double parse_field(const std::string& field, const std::string& path,
                   std::size_t lineno) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != field.size() || field.empty()) {
    std::ostringstream os;
    os << path << ":" << lineno << ": not a number: '" << field << "'";
    throw std::runtime_error(os.str());
  }
  return v;
}

}  // namespace

SplittingSpectrum read_splitting_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error(path + ": empty file");
  if (strip_cr(line) != "wavelength_nm,s_te,s_tm")
    throw std::runtime_error(path +
                             ": expected header 'wavelength_nm,s_te,s_tm'");

  SplittingSpectrum out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, c, extra;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') ||
        !std::getline(row, c, ',') || std::getline(row, extra, ',')) {
      std::ostringstream os;
      os << path << ":" << lineno << ": expected 3 comma-separated fields";
      throw std::runtime_error(os.str());
    }
    const double lam = parse_field(a, path, lineno) * nm;
    const double s_te = parse_field(b, path, lineno);
    const double s_tm = parse_field(c, path, lineno);
    if (!out.lambda.empty() && !(lam > out.lambda.back())) {
      std::ostringstream os;
      os << path << ":" << lineno
         << ": wavelengths must be strictly increasing";
      throw std::runtime_error(os.str());
    }
    if (!(s_te >= 0.0 && s_te <= 1.0) || !(s_tm >= 0.0 && s_tm <= 1.0)) {
      std::ostringstream os;
      os << path << ":" << lineno << ": splitting ratio outside [0, 1]";
      throw std::runtime_error(os.str());
    }
    out.lambda.push_back(lam);
    out.s_te.push_back(s_te);
    out.s_tm.push_back(s_tm);
  }
  if (out.lambda.size() < 2)
    throw std::runtime_error(path + ": needs at least 2 data rows");
  return out;
}

void write_splitting_csv(const std::string& path,
                         const SplittingSpectrum& spectrum) {
  const std::size_t n = spectrum.lambda.size();
  if (spectrum.s_te.size() != n || spectrum.s_tm.size() != n)
    throw std::invalid_argument("splitting spectrum has inconsistent lengths");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "wavelength_nm,s_te,s_tm\n";
  char buf[96];
  for (std::size_t i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof(buf), "%.6f,%.9f,%.9f\n",
                  spectrum.lambda[i] / nm, spectrum.s_te[i], spectrum.s_tm[i]);
    out << buf;
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace pairsplit
