#ifndef FAREYLAB_SERIALIZE_HPP
#define FAREYLAB_SERIALIZE_HPP

#include <json.hpp>
#include <sstream>
#include <string>

#include "fareylab/constant.hpp"
#include "fareylab/farey.hpp"
#include "fareylab/geometry.hpp"
#include "fareylab/lattice.hpp"

namespace fareylab {

// Rationals persist as decimal strings for numerator and denominator,
// never as floats.

inline nlohmann::ordered_json rational_json(const Rational& r) {
  return {{"num", num_string(r)}, {"den", den_string(r)}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
  return Rational(BigInt(j.at("num").get<std::string>()),
                  BigInt(j.at("den").get<std::string>()));
}

inline nlohmann::ordered_json histogram_json(const GapHistogram& h) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [k, c] : h.counts) counts[std::to_string(k)] = c;
  return {{"Q", h.Q}, {"d", h.d}, {"counts", counts}};
}

inline GapHistogram histogram_from_json(const nlohmann::json& j) {
  GapHistogram h;
  h.Q = j.at("Q").get<std::int64_t>();
  h.d = j.at("d").get<std::int64_t>();
  for (const auto& [key, value] : j.at("counts").items())
    h.counts[std::stoll(key)] = value.get<std::int64_t>();
  return h;
}

inline std::string histogram_csv(const GapHistogram& h) {
  std::ostringstream os;
  os << "k,count\n";
  for (const auto& [k, c] : h.counts) os << k << "," << c << "\n";
  return os.str();
}

inline nlohmann::ordered_json polygon_json(const ConvexPolygon& p) {
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (const auto& v : p.vertices())
    verts.push_back({rational_json(v.x), rational_json(v.y)});
  return verts;
}

inline nlohmann::ordered_json pair_set_json(const ResiduePairSet& s) {
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const auto& [a, b] : s.pairs) pairs.push_back({a, b});
  return {{"d", s.d}, {"pairs", pairs}};
}

inline nlohmann::ordered_json constant_report_json(const ConstantReport& r) {
  nlohmann::ordered_json breakdown = nlohmann::ordered_json::array();
  for (const auto& rec : r.breakdown) {
    breakdown.push_back({{"l", rec.ell},
                         {"xs", rec.xs},
                         {"area", rational_json(rec.area)},
                         {"pairs", rec.pair_set.size()},
                         {"contribution", rec.contribution}});
  }
  return {{"d", r.d},
          {"k", r.k},
          {"c", r.c_value},
          {"exact_factor", rational_json(r.exact_factor)},
          {"L_used", r.L_used},
          {"K_max_used", r.K_max_used},
          {"breakdown", breakdown}};
}

inline nlohmann::ordered_json tuple_record_json(const TupleRecord& rec) {
  return {{"l", rec.ell},
          {"xs", rec.xs},
          {"vertices", polygon_json(rec.region)},
          {"area", rational_json(rec.area)},
          {"pair_set", pair_set_json(rec.pair_set)},
          {"contribution", rec.contribution}};
}

inline std::string count_report_csv_header() {
  return "Q,d,area_num,area_den,pairs,exact,main_term,residual,normalized_residual";
}

inline std::string count_report_csv_row(const CountReport& r, std::int64_t pairs) {
  std::ostringstream os;
  os << r.Q << "," << r.d << "," << numerator(r.area) << ","
     << denominator(r.area) << "," << pairs << "," << r.exact << "," << r.main
     << "," << r.residual << "," << r.normalized_residual;
  return os.str();
}

inline std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  os << "Q,count,density,c,residual,residual_per_QlogQ\n";
  os.precision(15);
  for (const auto& r : rows)
    os << r.Q << "," << r.count << "," << r.density << "," << r.c << ","
       << r.residual << "," << r.normalized << "\n";
  return os.str();
}

inline nlohmann::ordered_json convergence_json(const std::vector<ConvergenceRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"Q", r.Q},
                   {"count", r.count},
                   {"density", r.density},
                   {"c", r.c},
                   {"residual", r.residual},
                   {"residual_per_QlogQ", r.normalized}});
  return arr;
}

/// FNV-1a 64-bit digest used by run manifests.
inline std::string fnv1a_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace fareylab

#endif
