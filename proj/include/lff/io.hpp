#pragma once

// File formats:
//  - StepFunction JSON: {"p","c","modulus","M","N","values":[[re,im],...]},
//    values ordered by cell index.
//  - generator file (.lfgen.json): {"field":{"p","c","modulus"},
//    "generators":[StepFunction,...]}, field parameters repeated in each
//    generator and checked for consistency.
//  - BoundsReport JSON and decay-table CSV as emitted by the CLI.
// Doubles round-trip bit-exactly (shortest-round-trip serialization).
// Writers go through a temp file and an atomic rename.

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lff/frames.hpp"

namespace lff {

using Json = nlohmann::ordered_json;

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline const Json& require_field(const Json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    throw ValidationError(std::string(where) + ": missing field \"" + key + "\"");
  return *it;
}

}  // namespace detail

inline Json step_function_to_json(const StepFunction& f) {
  const auto& fp = f.params();
  Json j;
  j["p"] = fp->p();
  j["c"] = fp->c();
  j["modulus"] = fp->modulus();
  j["M"] = f.support_level();
  j["N"] = f.resolution_level();
  Json vals = Json::array();
  for (const auto& v : f.values()) vals.push_back(Json::array({v.real(), v.imag()}));
  j["values"] = std::move(vals);
  return j;
}

inline FieldParamsPtr field_params_from_json(const Json& j, const char* where) {
  const int p = detail::require_field(j, "p", where).get<int>();
  const int c = detail::require_field(j, "c", where).get<int>();
  const auto mod = detail::require_field(j, "modulus", where).get<std::vector<int>>();
  try {
    return make_field(p, c, mod);
  } catch (const FieldError& e) {
    throw ValidationError(std::string(where) + ": invalid field parameters (" + e.what() + ")");
  }
}

inline StepFunction step_function_from_json(const Json& j, const char* where = "step function") {
  const FieldParamsPtr fp = field_params_from_json(j, where);
  const int M = detail::require_field(j, "M", where).get<int>();
  const int N = detail::require_field(j, "N", where).get<int>();
  if (M < 0 || N < 0) throw ValidationError(std::string(where) + ": M and N must be >= 0");
  const Json& vals = detail::require_field(j, "values", where);
  const long long expect = detail::ipow(fp->q(), M + N);
  if (!vals.is_array() || static_cast<long long>(vals.size()) != expect)
    throw ValidationError(std::string(where) + ": \"values\" must hold exactly q^(M+N) = " +
                          std::to_string(expect) + " entries, got " +
                          std::to_string(vals.size()));
  std::vector<Complex> v;
  v.reserve(vals.size());
  for (const auto& e : vals) {
    if (!e.is_array() || e.size() != 2)
      throw ValidationError(std::string(where) + ": \"values\" entries must be [re, im] pairs");
    v.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return StepFunction(fp, M, N, std::move(v));
}

inline void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

inline void save_generators(const std::string& path, const std::vector<StepFunction>& gens) {
  if (gens.empty()) throw ValidationError("generator list is empty");
  Json j;
  const auto& fp = gens[0].params();
  j["field"] = {{"p", fp->p()}, {"c", fp->c()}, {"modulus", fp->modulus()}};
  Json arr = Json::array();
  for (const auto& g : gens) arr.push_back(step_function_to_json(g));
  j["generators"] = std::move(arr);
  atomic_write(path, j.dump(2) + "\n");
}

inline std::vector<StepFunction> load_generators(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": not valid JSON (" + e.what() + ")");
  }
  const FieldParamsPtr fp = field_params_from_json(detail::require_field(j, "field", "field"),
                                                   "field");
  const Json& arr = detail::require_field(j, "generators", "generator file");
  if (!arr.is_array() || arr.empty())
    throw ValidationError("generator file: \"generators\" must be a nonempty array");
  std::vector<StepFunction> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    StepFunction g = step_function_from_json(arr[i], ("generators[" + std::to_string(i) + "]").c_str());
    if (!(*g.params() == *fp))
      throw ValidationError("generators[" + std::to_string(i) +
                            "]: field parameters disagree with the file header");
    out.push_back(std::move(g));
  }
  return out;
}

/// Weight table file: {"default":[re,im] (optional),
///                     "entries":[{"l":int,"j":int,"c":[re,im]},...]}.
/// Without "default", weights outside the listed entries are undefined.
inline WeightTable load_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": not valid JSON (" + e.what() + ")");
  }
  WeightTable table = WeightTable::explicit_only();
  if (j.contains("default")) {
    const auto& d = j["default"];
    if (!d.is_array() || d.size() != 2)
      throw ValidationError(path + ": \"default\" must be [re, im]");
    table = WeightTable(Complex{d[0].get<double>(), d[1].get<double>()});
  }
  if (j.contains("entries")) {
    for (const auto& e : j["entries"]) {
      const auto& c = detail::require_field(e, "c", "weight entry");
      if (!c.is_array() || c.size() != 2)
        throw ValidationError(path + ": weight entry \"c\" must be [re, im]");
      table.set(detail::require_field(e, "l", "weight entry").get<int>(),
                detail::require_field(e, "j", "weight entry").get<int>(),
                Complex{c[0].get<double>(), c[1].get<double>()});
    }
  }
  return table;
}

inline Json bounds_report_to_json(const BoundsReport& r) {
  Json j;
  j["system"] = r.system;
  j["q"] = r.q;
  j["M"] = r.M;
  j["N"] = r.N;
  j["lambda_min"] = r.lambda_min;
  j["lambda_max"] = r.lambda_max;
  j["spectrum"] = r.spectrum;
  j["index_count"] = r.index_count;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

inline std::string decay_table_to_csv(const std::vector<DecayRow>& rows) {
  std::ostringstream os;
  os << "m,avg_time_side,avg_fourier_side,predicted\n";
  os.precision(17);
  for (const auto& r : rows)
    os << r.m << ',' << r.avg_time << ',' << r.avg_fourier << ',' << r.predicted << '\n';
  return os.str();
}

}  // namespace lff
