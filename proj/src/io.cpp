#include "spinent/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spinent/error.hpp"
#include "spinent/states.hpp"

namespace spinent::io {

using nlohmann::json;

namespace {

constexpr const char* kToolName = "spinent";

json moments_json(const CollectiveMoments& m) {
  return {{"jx", m.jx},   {"jy", m.jy},   {"jz", m.jz},         {"jx2", m.jx2},
          {"jy2", m.jy2}, {"jz2", m.jz2}, {"sym_xy", m.sym_xy}, {"sym_xz", m.sym_xz},
          {"sym_yz", m.sym_yz}};
}

CollectiveMoments moments_from(const json& j) {
  CollectiveMoments m;
  m.jx = j.at("jx").get<double>();
  m.jy = j.at("jy").get<double>();
  m.jz = j.at("jz").get<double>();
  m.jx2 = j.at("jx2").get<double>();
  m.jy2 = j.at("jy2").get<double>();
  m.jz2 = j.at("jz2").get<double>();
  m.sym_xy = j.at("sym_xy").get<double>();
  m.sym_xz = j.at("sym_xz").get<double>();
  m.sym_yz = j.at("sym_yz").get<double>();
  return m;
}

}  // namespace

StateFile parse_state_file(std::string_view text) {
  StateFile file;
  try {
    const json j = json::parse(text);
    file.n = j.at("n").get<int>();
    for (const auto& pair : j.at("coefficients")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw ParseError("each coefficient must be a [re, im] pair");
      }
      file.coefficients.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    if (j.contains("renormalize")) file.renormalize = j.at("renormalize").get<bool>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed state file: ") + e.what());
  }
  return file;
}

StateFile read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_state_file(buffer.str());
}

DickeState to_state(const StateFile& file) {
  return custom_state(file.n, file.coefficients, file.renormalize);
}

std::string serialize_state(const DickeState& state) {
  json coeffs = json::array();
  for (const auto& c : state.coefficients()) coeffs.push_back({c.real(), c.imag()});
  const json j = {{"n", state.n_atoms()}, {"coefficients", coeffs}, {"renormalize", false}};
  return j.dump(2) + "\n";
}

std::string serialize_report(const Analysis& a) {
  json j;
  j["tool"] = kToolName;
  j["version"] = SPINENT_VERSION;
  j["n_atoms"] = a.n_atoms;
  j["moments"] = moments_json(a.moments);
  j["mean_spin"] = {{"jx", a.mean.jx},
                    {"jy", a.mean.jy},
                    {"jz", a.mean.jz},
                    {"magnitude", a.mean.magnitude},
                    {"transverse", a.mean.transverse}};
  if (a.frame) {
    j["frame"] = {{"cos_theta", a.frame->cos_theta},
                  {"sin_theta", a.frame->sin_theta},
                  {"cos_phi", a.frame->cos_phi},
                  {"sin_phi", a.frame->sin_phi}};
  } else {
    j["frame"] = nullptr;
  }
  j["degenerate_frame"] = !a.frame.has_value();
  j["degenerate_phi"] = a.frame ? a.frame->degenerate_phi : false;
  if (a.metrics) {
    const auto& r = *a.metrics;
    j["metrics"] = {{"var_xp", r.var_xp}, {"var_yp", r.var_yp}, {"corr_x", r.corr_x},
                    {"corr_y", r.corr_y}, {"s_param", r.s_param}, {"q_x", r.q_x},
                    {"q_y", r.q_y},       {"xi_rx", r.xi_rx},   {"xi_ry", r.xi_ry}};
  } else {
    j["metrics"] = nullptr;
  }
  j["classification"] = std::string(to_string(a.classification));
  return j.dump(2) + "\n";
}

ReportFile parse_report(std::string_view text) {
  ReportFile out;
  try {
    const json j = json::parse(text);
    out.tool = j.at("tool").get<std::string>();
    out.version = j.at("version").get<std::string>();
    Analysis& a = out.analysis;
    a.n_atoms = j.at("n_atoms").get<int>();
    a.moments = moments_from(j.at("moments"));
    const auto& ms = j.at("mean_spin");
    a.mean.jx = ms.at("jx").get<double>();
    a.mean.jy = ms.at("jy").get<double>();
    a.mean.jz = ms.at("jz").get<double>();
    a.mean.magnitude = ms.at("magnitude").get<double>();
    a.mean.transverse = ms.at("transverse").get<double>();
    if (!j.at("frame").is_null()) {
      const auto& f = j.at("frame");
      Frame frame;
      frame.cos_theta = f.at("cos_theta").get<double>();
      frame.sin_theta = f.at("sin_theta").get<double>();
      frame.cos_phi = f.at("cos_phi").get<double>();
      frame.sin_phi = f.at("sin_phi").get<double>();
      frame.degenerate_phi = j.at("degenerate_phi").get<bool>();
      a.frame = frame;
    }
    a.classification = classification_from_string(j.at("classification").get<std::string>());
    if (!j.at("metrics").is_null()) {
      const auto& m = j.at("metrics");
      MetricsReport r;
      r.var_xp = m.at("var_xp").get<double>();
      r.var_yp = m.at("var_yp").get<double>();
      r.corr_x = m.at("corr_x").get<double>();
      r.corr_y = m.at("corr_y").get<double>();
      r.s_param = m.at("s_param").get<double>();
      r.q_x = m.at("q_x").get<double>();
      r.q_y = m.at("q_y").get<double>();
      r.xi_rx = m.at("xi_rx").get<double>();
      r.xi_ry = m.at("xi_ry").get<double>();
      r.classification = a.classification;
      a.metrics = r;
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  return out;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string sweep_csv_header() {
  return "parameter,var_xp,var_yp,corr_x,corr_y,s_param,q_x,q_y,xi_rx,xi_ry,classification\n";
}

std::string sweep_csv_row(double parameter, const Analysis& analysis) {
  std::string row = format_double(parameter);
  if (analysis.metrics) {
    const auto& r = *analysis.metrics;
    for (double v : {r.var_xp, r.var_yp, r.corr_x, r.corr_y, r.s_param, r.q_x, r.q_y, r.xi_rx,
                     r.xi_ry}) {
      row += ',';
      row += format_double(v);
    }
  } else {
    row += ",,,,,,,,,";
  }
  row += ',';
  row += to_string(analysis.classification);
  row += '\n';
  return row;
}

}  // namespace spinent::io
