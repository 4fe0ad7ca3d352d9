#include "abtk/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace abtk {

using nlohmann::json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

ScatterInput parse_initial_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("initial data JSON parse error: ") + e.what());
  }
  ScatterInput in;
  try {
    in.params.alpha = j.at("alpha").get<double>();
    in.params.beta = j.at("beta").get<double>();
    in.params.gamma = j.at("gamma").get<double>();
    const auto& grid = j.at("grid");
    const double lo = grid.at("min").get<double>();
    const double hi = grid.at("max").get<double>();
    const int n = grid.at("n").get<int>();
    if (!(hi > lo) || n < 2) throw InvalidInput("bad grid block");
    const auto& prof = j.at("profile");
    if (prof.contains("name")) {
      const double L = 0.5 * (hi - lo);
      const double center = 0.5 * (hi + lo);
      in.data = make_initial_data(prof.at("name").get<std::string>(),
                                  prof.value("amplitude", 0.3), L, n, 0.0);
      if (center != 0.0) throw InvalidInput("named profiles require a symmetric grid");
    } else {
      InitialData d;
      d.x_grid.resize(n);
      for (int i = 0; i < n; ++i) d.x_grid[i] = lo + (hi - lo) * i / (n - 1);
      for (const auto& s : prof.at("samples"))
        d.A0.emplace_back(s.at(0).get<double>(), s.at(1).get<double>());
      if (prof.contains("B0"))
        for (const auto& b : prof.at("B0")) d.B0.push_back(b.get<double>());
      else
        d.B0.assign(n, 0.0);
      d.validate();
      in.data = std::move(d);
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("initial data JSON schema error: ") + e.what());
  }
  in.params.validate();
  return in;
}

ScatterInput read_initial_json(const std::string& path) {
  return parse_initial_json(read_text_file(path));
}

void write_scattering_csv(const std::string& path, const ScatteringData& sd) {
  std::ostringstream out;
  out << "z,Re s11,Im s11,Re s21,Im s21,Re r,Im r\n";
  for (std::size_t i = 0; i < sd.z_grid.size(); ++i) {
    out << fmt17(sd.z_grid[i]) << ',' << fmt17(sd.s11[i].real()) << ','
        << fmt17(sd.s11[i].imag()) << ',' << fmt17(sd.s21[i].real()) << ','
        << fmt17(sd.s21[i].imag()) << ',' << fmt17(sd.r[i].real()) << ','
        << fmt17(sd.r[i].imag()) << '\n';
  }
  write_text_file(path, out.str());
}

ScatteringData read_scattering_csv(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("empty scattering CSV");
  ScatteringData sd;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    double v[7];
    char comma;
    for (int c = 0; c < 7; ++c) {
      if (!(row >> v[c])) throw InvalidInput("bad scattering CSV row: " + line);
      if (c < 6) row >> comma;
    }
    sd.z_grid.push_back(v[0]);
    sd.s11.emplace_back(v[1], v[2]);
    sd.s21.emplace_back(v[3], v[4]);
    sd.r.emplace_back(v[5], v[6]);
    sd.r_abs.push_back(std::abs(Complex(v[5], v[6])));
  }
  sd.validate();
  sd.h11_norm = sobolev_norm_h11(sd);
  return sd;
}

void write_scattering_metadata(const std::string& path, const ScatteringData& sd,
                               const ScatterInput& in) {
  json j;
  j["h11_norm"] = sd.h11_norm;
  j["winding"] = sd.winding;
  j["nodes"] = sd.z_grid.size();
  j["z_min"] = sd.z_grid.empty() ? 0.0 : sd.z_grid.front();
  j["z_max"] = sd.z_grid.empty() ? 0.0 : sd.z_grid.back();
  j["b0_nonzero"] = sd.b0_flag;
  j["alpha"] = in.params.alpha;
  j["beta"] = in.params.beta;
  j["gamma"] = in.params.gamma;
  write_text_file(path, j.dump(2) + "\n");
}

void write_asymptotics_csv(const std::string& path,
                           const std::vector<AsymptoticRow>& rows) {
  std::ostringstream out;
  out << "x,t,z0,Re A,Im A,abs A,B,error_order\n";
  for (const auto& r : rows) {
    out << fmt17(r.x) << ',' << fmt17(r.t) << ',' << fmt17(r.z0) << ','
        << fmt17(r.A.real()) << ',' << fmt17(r.A.imag()) << ','
        << fmt17(std::abs(r.A)) << ',' << fmt17(r.B) << ',' << r.error_order
        << '\n';
  }
  write_text_file(path, out.str());
}

void write_snapshot_csv(const std::string& path, const FieldState& s) {
  std::ostringstream out;
  out << "x,Re A,Im A,abs A,B\n";
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    out << fmt17(s.x[i]) << ',' << fmt17(s.A[i].real()) << ','
        << fmt17(s.A[i].imag()) << ',' << fmt17(std::abs(s.A[i])) << ','
        << fmt17(s.B[i]) << '\n';
  }
  write_text_file(path, out.str());
}

}  // namespace abtk
