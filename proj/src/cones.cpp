#include "hssys/cones.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hssys {

std::vector<TableViolation> validate_table(const ConeConstantTable& table) {
  if (table.entries.size() < 2)
    throw std::invalid_argument("validate_table: need at least 2 entries");
  std::vector<TableViolation> out;
  for (std::size_t i = 0; i < table.entries.size(); ++i)
    for (std::size_t j = i + 1; j < table.entries.size(); ++j) {
      const auto& a = table.entries[i];
      const auto& b = table.entries[j];
      if (a.theta < b.theta && a.S_value < b.S_value) out.push_back({i, j});
      if (b.theta < a.theta && b.S_value < a.S_value) out.push_back({j, i});
    }
  return out;
}

ConeEntry rn_anchor_entry(double sharp_ratio, double mu_s) {
  if (!(sharp_ratio > 0.0) || !(mu_s > 0.0))
    throw std::domain_error("rn_anchor_entry: inputs must be positive");
  return {std::numbers::pi, sharp_ratio * mu_s, "rn-derived"};
}

ThetaBracket intermediate_value_locate(const ConeConstantTable& table, double tau) {
  if (table.entries.empty())
    throw std::invalid_argument("intermediate_value_locate: empty table");
  std::vector<ConeEntry> e = table.entries;
  std::sort(e.begin(), e.end(),
            [](const ConeEntry& a, const ConeEntry& b) { return a.theta < b.theta; });

  // S is non-increasing in theta; the largest-aperture entry is the floor.
  if (tau < e.back().S_value)
    throw std::domain_error("intermediate_value_locate: target below the aperture-pi infimum");
  if (tau > e.front().S_value) {
    // tau exceeds every sample; S(theta) -> infinity as theta -> 0.
    return {0.0, e.front().theta, true};
  }
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i].S_value >= tau && tau >= e[i + 1].S_value)
      return {e[i].theta, e[i + 1].theta, false};
  // tau == S at the smallest aperture
  return {e.front().theta, e.front().theta, false};
}

double gluing_energy(int k, int N, double two_star_s, double S_subcone) {
  if (k < 1) throw std::domain_error("gluing_energy: k must be >= 1");
  if (N < 3) throw std::domain_error("gluing_energy: N must be >= 3");
  if (!(S_subcone > 0.0)) throw std::domain_error("gluing_energy: S_subcone must be > 0");
  const double coeff = 0.5 - 1.0 / two_star_s;
  return coeff * std::pow(S_subcone, 2.0 / (two_star_s - 2.0)) *
         std::pow(2.0, static_cast<double>(k) * (N - 1));
}

Attainment attainment_calculus(double S_omega, double S0, double Sinf) {
  if (!(S_omega > 0.0 && S0 > 0.0 && Sinf > 0.0))
    throw std::domain_error("attainment_calculus: constants must be positive");
  const double bound = std::min(S0, Sinf);
  if (S_omega > bound + 1e-9)
    throw std::domain_error(
        "attainment_calculus: S_omega exceeds min(S0, Sinf); inconsistent inputs");
  if (S_omega < bound - 1e-12) return Attainment::Attained;
  return Attainment::NotDecidable;
}

void write_table_csv(std::ostream& os, const ConeConstantTable& table) {
  char buf[96];
  os << "theta,S,provenance\n";
  for (const auto& e : table.entries) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,", e.theta, e.S_value);
    os << buf << e.provenance << '\n';
  }
}

ConeConstantTable read_table_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("theta,S,provenance", 0) != 0)
    throw std::runtime_error("read_table_csv: missing 'theta,S,provenance' header");
  ConeConstantTable table;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::runtime_error("read_table_csv: malformed row");
    ConeEntry e;
    e.theta = std::stod(line.substr(0, c1));
    e.S_value = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    e.provenance = line.substr(c2 + 1);
    table.entries.push_back(std::move(e));
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const ConeEntry& a, const ConeEntry& b) { return a.theta < b.theta; });
  return table;
}

}  // namespace hssys
