#include "core/scattering_data.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace nft {
namespace {

using nlohmann::json;

json complex_array(const std::vector<cplx>& v) {
  json out = json::array();
  for (const cplx& c : v) out.push_back({c.real(), c.imag()});
  return out;
}

std::vector<cplx> parse_complex_array(const json& j, const char* field) {
  require(j.is_array(), errc::parse, std::string("scattering data: ") + field +
                                         " must be an array of [re, im] pairs");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    require(e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number(),
            errc::parse,
            std::string("scattering data: ") + field + " entries must be [re, im]");
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

}  // namespace

double ScatteringData::unitarity_defect() const {
  double worst = 0;
  for (std::size_t k = 0; k < rho.size(); ++k) {
    const double s = std::norm(a[k]) + std::norm(b[k]);
    worst = std::max(worst, std::abs(s - 1.0));
  }
  return worst;
}

void ScatteringData::check() const {
  require(a.size() == rho.size() && b.size() == rho.size(), errc::parse,
          "scattering data: sample arrays must share one length");
  require(norming_constants.size() == eigenvalues.size(), errc::parse,
          "scattering data: one norming constant per eigenvalue");
  for (const cplx& ev : eigenvalues)
    require(ev.imag() > 0, errc::parse,
            "scattering data: eigenvalues must lie in the upper half-plane");
  for (const cplx& c : norming_constants)
    require(std::abs(c) > 0, errc::parse, "scattering data: norming constants are nonzero");
}

std::string scattering_to_json(const ScatteringData& sd) {
  json j;
  j["rho"] = sd.rho;
  j["a"] = complex_array(sd.a);
  j["b"] = complex_array(sd.b);
  j["eigenvalues"] = complex_array(sd.eigenvalues);
  j["norming_constants"] = complex_array(sd.norming_constants);
  j["meta"] = {{"N", sd.meta.order},
               {"nodes_per_unit", sd.meta.nodes_per_unit},
               {"domain", {sd.meta.x_min, sd.meta.x_max}},
               {"t", sd.meta.time},
               {"K", sd.rho.size()},
               {"unitarity_defect", sd.meta.unitarity_defect}};
  return j.dump(1);
}

ScatteringData scattering_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(errc::parse, std::string("scattering data: invalid JSON: ") + e.what());
  }
  ScatteringData sd;
  try {
    sd.rho = j.at("rho").get<std::vector<double>>();
    sd.a = parse_complex_array(j.at("a"), "a");
    sd.b = parse_complex_array(j.at("b"), "b");
    sd.eigenvalues = parse_complex_array(j.at("eigenvalues"), "eigenvalues");
    sd.norming_constants = parse_complex_array(j.at("norming_constants"), "norming_constants");
    const auto& meta = j.at("meta");
    sd.meta.order = meta.at("N").get<int>();
    sd.meta.nodes_per_unit = meta.at("nodes_per_unit").get<double>();
    sd.meta.x_min = meta.at("domain").at(0).get<double>();
    sd.meta.x_max = meta.at("domain").at(1).get<double>();
    sd.meta.time = meta.at("t").get<double>();
  } catch (const json::exception& e) {
    fail(errc::parse, std::string("scattering data: missing or malformed field: ") + e.what());
  }
  sd.check();
  // Recomputed on load so stale stored values cannot mask drift.
  sd.meta.unitarity_defect = sd.unitarity_defect();
  return sd;
}

void save_scattering(const ScatteringData& sd, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), errc::io, "cannot open for writing: " + path);
  out << scattering_to_json(sd) << "\n";
  require(out.good(), errc::io, "write failed: " + path);
}

ScatteringData load_scattering(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::io, "cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return scattering_from_json(buf.str());
}

}  // namespace nft
