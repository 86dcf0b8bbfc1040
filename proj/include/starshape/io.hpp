// Copyright 2026 The starshape Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "starshape/error.hpp"
#include "starshape/gauge.hpp"
#include "starshape/linalg.hpp"
#include "starshape/radial.hpp"
#include "starshape/stats.hpp"

namespace starshape::io {

using Json = nlohmann::json;

/// Round-trip exact decimal form (17 significant digits).
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline void reject_unknown(const Json& obj, const std::string& path,
                           std::initializer_list<const char*> allowed) {
  require(obj.is_object(), ErrorCode::ParseError, path + ": expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* a : allowed) known = known || it.key() == a;
    require(known, ErrorCode::ParseError,
            "unknown field '" + path + "." + it.key() + "'");
  }
}

inline const Json& field(const Json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  require(it != obj.end(), ErrorCode::ParseError,
          "missing field '" + path + "." + key + "'");
  return *it;
}

inline double number(const Json& v, const std::string& path) {
  require(v.is_number(), ErrorCode::ParseError, "field '" + path + "' must be a number");
  return v.get<double>();
}

inline std::vector<double> number_array(const Json& v, const std::string& path) {
  require(v.is_array(), ErrorCode::ParseError, "field '" + path + "' must be an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(number(v[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

inline Matrix matrix(const Json& v, const std::string& path) {
  require(v.is_array() && !v.empty(), ErrorCode::ParseError,
          "field '" + path + "' must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(v.size());
  Matrix m;
  for (Eigen::Index i = 0; i < rows; ++i) {
    auto row = number_array(v[i], path + "[" + std::to_string(i) + "]");
    if (i == 0) m.resize(rows, static_cast<Eigen::Index>(row.size()));
    require(static_cast<Eigen::Index>(row.size()) == m.cols(), ErrorCode::ParseError,
            "field '" + path + "' has ragged rows");
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = row[j];
  }
  return m;
}

// Re-throw library validation errors with the JSON path attached.
template <class F>
auto with_path(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(e.code(), "field '" + path + "': " + e.message());
  }
}

}  // namespace detail

//---------------------------------------------------------------------------//
// Gauges
//---------------------------------------------------------------------------//

inline GaugeDescriptor gauge_from_json(const Json& j, const std::string& path = "gauge") {
  detail::reject_unknown(j, path, {"dim", "variant", "params"});
  const Json& dim_field = detail::field(j, path, "dim");
  require(dim_field.is_number_integer() && dim_field.get<int>() >= 1,
          ErrorCode::ParseError, "field '" + path + ".dim' must be a positive integer");
  const int dim = dim_field.get<int>();
  const Json& variant_field = detail::field(j, path, "variant");
  require(variant_field.is_string(), ErrorCode::ParseError,
          "field '" + path + ".variant' must be a string");
  const std::string variant = variant_field.get<std::string>();
  const Json empty = Json::object();
  const Json& params = j.contains("params") ? j.at("params") : empty;
  const std::string pp = path + ".params";

  GaugeDescriptor desc = [&] {
    if (variant == "elliptical") {
      detail::reject_unknown(params, pp, {"sigma"});
      Matrix sigma = detail::matrix(detail::field(params, pp, "sigma"), pp + ".sigma");
      return detail::with_path(pp + ".sigma", [&] { return GaugeDescriptor::elliptical(sigma); });
    }
    if (variant == "sup") {
      detail::reject_unknown(params, pp, {});
      return GaugeDescriptor::sup_norm(dim);
    }
    if (variant == "l1") {
      detail::reject_unknown(params, pp, {});
      return GaugeDescriptor::l1_norm(dim);
    }
    if (variant == "polytope") {
      detail::reject_unknown(params, pp, {"facets"});
      Matrix a = detail::matrix(detail::field(params, pp, "facets"), pp + ".facets");
      std::vector<Vector> facets;
      for (Eigen::Index i = 0; i < a.rows(); ++i) facets.emplace_back(a.row(i).transpose());
      return detail::with_path(pp + ".facets", [&] { return GaugeDescriptor::polytope(facets); });
    }
    if (variant == "tabulated") {
      detail::reject_unknown(params, pp, {"angles", "radii"});
      auto angles = detail::number_array(detail::field(params, pp, "angles"), pp + ".angles");
      auto radii = detail::number_array(detail::field(params, pp, "radii"), pp + ".radii");
      return detail::with_path(pp, [&] { return GaugeDescriptor::tabulated(angles, radii); });
    }
    fail(ErrorCode::ParseError, "field '" + path + ".variant' has unknown value '" +
                                    variant + "'");
  }();
  require(desc.dim() == dim, ErrorCode::ParseError,
          "field '" + path + ".dim' does not match the parameters (" +
              std::to_string(desc.dim()) + ")");
  return desc;
}

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline Json to_json(const GaugeDescriptor& desc) {
  Json j;
  j["dim"] = desc.dim();
  Json params = Json::object();
  switch (desc.kind()) {
    case GaugeKind::Elliptical:
      j["variant"] = "elliptical";
      params["sigma"] = to_json(desc.as<gauges::Elliptical>().sigma);
      break;
    case GaugeKind::SupNorm: j["variant"] = "sup"; break;
    case GaugeKind::L1Norm: j["variant"] = "l1"; break;
    case GaugeKind::Polytope: {
      j["variant"] = "polytope";
      Json facets = Json::array();
      for (const auto& a : desc.as<gauges::Polytope>().facets)
        facets.push_back(std::vector<double>(a.data(), a.data() + a.size()));
      params["facets"] = facets;
      break;
    }
    case GaugeKind::TabulatedRadial: {
      j["variant"] = "tabulated";
      const auto& t = desc.as<gauges::TabulatedRadial>();
      params["angles"] = t.angles;
      params["radii"] = t.radii;
      break;
    }
    case GaugeKind::DirectionDerived:
      fail(ErrorCode::InvalidParameter,
           "direction-derived gauges hold a function and cannot be serialized");
  }
  j["params"] = params;
  return j;
}

//---------------------------------------------------------------------------//
// Profiles and distributions
//---------------------------------------------------------------------------//

inline RadialProfile profile_from_json(const Json& j, const std::string& path = "profile") {
  detail::reject_unknown(j, path, {"family", "params"});
  const Json& fam = detail::field(j, path, "family");
  require(fam.is_string(), ErrorCode::ParseError,
          "field '" + path + ".family' must be a string");
  const std::string family = fam.get<std::string>();
  const Json empty = Json::object();
  const Json& params = j.contains("params") ? j.at("params") : empty;
  const std::string pp = path + ".params";
  auto get = [&](const char* key, double fallback) {
    return params.contains(key) ? detail::number(params.at(key), pp + "." + key) : fallback;
  };
  std::optional<double> norm;
  if (params.is_object() && params.contains("norm"))
    norm = detail::number(params.at("norm"), pp + ".norm");
  auto build = [&](auto&& make) { return detail::with_path(pp, make); };
  if (family == "gaussian") {
    detail::reject_unknown(params, pp, {"sigma", "norm"});
    return build([&] { return RadialProfile::gaussian(get("sigma", 1.0), norm); });
  }
  if (family == "exponential") {
    detail::reject_unknown(params, pp, {"rate", "norm"});
    return build([&] { return RadialProfile::exponential(get("rate", 1.0), norm); });
  }
  if (family == "kotz") {
    detail::reject_unknown(params, pp, {"s", "r", "t", "norm"});
    return build([&] {
      return RadialProfile::kotz(get("s", 0.0), get("r", 1.0), get("t", 1.0), norm);
    });
  }
  if (family == "heavytail") {
    detail::reject_unknown(params, pp, {"nu", "norm"});
    return build([&] { return RadialProfile::heavy_tail(get("nu", 1.0), norm); });
  }
  fail(ErrorCode::ParseError,
       "field '" + path + ".family' has unknown value '" + family + "'");
}

inline Json to_json(const RadialProfile& profile) {
  Json j;
  j["family"] = std::string(to_string(profile.family));
  Json params = Json::object();
  switch (profile.family) {
    case RadialFamily::Gaussian: params["sigma"] = profile.sigma; break;
    case RadialFamily::Exponential: params["rate"] = profile.rate; break;
    case RadialFamily::Kotz:
      params["s"] = profile.s;
      params["r"] = profile.r;
      params["t"] = profile.t;
      break;
    case RadialFamily::HeavyTail: params["nu"] = profile.nu; break;
  }
  if (profile.norm) params["norm"] = *profile.norm;
  j["params"] = params;
  return j;
}

struct DistributionConfig {
  GaugeDescriptor gauge;
  RadialProfile profile;
};

inline DistributionConfig distribution_from_json(const Json& j) {
  detail::reject_unknown(j, "distribution", {"gauge", "profile"});
  return DistributionConfig{gauge_from_json(detail::field(j, "distribution", "gauge")),
                            profile_from_json(detail::field(j, "distribution", "profile"))};
}

inline Json to_json(const DistributionConfig& cfg) {
  return Json{{"gauge", to_json(cfg.gauge)}, {"profile", to_json(cfg.profile)}};
}

inline Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::ParseError, origin + ": " + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::ParseError, "cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_text(text, path);
}

/// Accepts a file path or an inline JSON document (first char '{').
inline DistributionConfig load_distribution(const std::string& path_or_inline) {
  if (!path_or_inline.empty() && path_or_inline.front() == '{')
    return distribution_from_json(parse_text(path_or_inline, "inline distribution"));
  return distribution_from_json(read_json_file(path_or_inline));
}

//---------------------------------------------------------------------------//
// Reports and tables
//---------------------------------------------------------------------------//

inline Json to_json(const stats::TestReport& r) {
  Json j{{"name", r.name},   {"statistic", r.statistic}, {"p_value", r.p_value},
         {"n", r.n},         {"method", r.method},       {"alpha", r.alpha},
         {"pass", r.pass}};
  if (r.dof > 0.0) j["dof"] = r.dof;
  return j;
}

/// Upper triangle in row order: w11, w12, ..., w1p, w22, ..., wpp.
inline std::vector<double> vech_upper(const Matrix& m) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

inline std::vector<std::string> vech_upper_names(const std::string& prefix, int p) {
  std::vector<std::string> out;
  for (int i = 1; i <= p; ++i)
    for (int j = i; j <= p; ++j)
      out.push_back(prefix + std::to_string(i) + std::to_string(j));
  return out;
}

/// Minimal CSV writer: a header line then rows of 17-digit floats.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::vector<std::string>& header) : out_(out) {
    for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
    out_ << '\n';
  }
  void row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
      out_ << (i ? "," : "") << format_double(values[i]);
    out_ << '\n';
  }

 private:
  std::ostream& out_;
};

}  // namespace starshape::io
