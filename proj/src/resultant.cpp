#include "quotmaps/resultant.hpp"

namespace quot {

std::string stratum_label(const StratumReport& report) {
  if (report.interior()) return "interior";
  const std::size_t k = *report.stratum;
  std::string d = std::to_string(report.d);
  if (k == 0) return "C_{" + d + ",0}";
  return "C_{" + d + "," + std::to_string(k) + "}\\C_{" + d + "," + std::to_string(k - 1) + "}";
}

}  // namespace quot
