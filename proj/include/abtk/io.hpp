#pragma once

#include <string>
#include <vector>

#include "abtk/evolution.hpp"
#include "abtk/scattering.hpp"

namespace abtk {

// 17 significant digits: doubles round-trip losslessly and reruns are
// byte-identical.
std::string fmt17(double v);

struct ScatterInput {
  ModelParameters params;
  InitialData data;
};

// InitialData JSON: {"alpha","beta","gamma","grid":{"min","max","n"},
// "profile":{"name","amplitude"} | {"samples":[[re,im],...],"B0":[...]}}
ScatterInput read_initial_json(const std::string& path);
ScatterInput parse_initial_json(const std::string& text);

void write_scattering_csv(const std::string& path, const ScatteringData& sd);
ScatteringData read_scattering_csv(const std::string& path);
void write_scattering_metadata(const std::string& path, const ScatteringData& sd,
                               const ScatterInput& in);

struct AsymptoticRow {
  double x, t, z0;
  Complex A;
  double B;
  std::string error_order;
};
void write_asymptotics_csv(const std::string& path,
                           const std::vector<AsymptoticRow>& rows);

void write_snapshot_csv(const std::string& path, const FieldState& s);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace abtk
