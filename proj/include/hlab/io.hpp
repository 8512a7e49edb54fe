#pragma once

#include <string>
#include <vector>

#include "hlab/casimir.hpp"
#include "hlab/invariants.hpp"
#include "hlab/run.hpp"

namespace hlab {

/// Binary field dump: "HLAB1\n", then the ASCII line
/// "dims n0 n1 n2 L0 L1 L2\n", then little-endian float64 blocks in
/// row-major (x fastest) order, one block per component.
void write_field_dump(const std::string& path, const ScalarField& f);
void write_field_dump(const std::string& path, const VectorField& v);

struct FieldDump {
  Grid grid;
  std::vector<std::vector<double>> blocks;
};

FieldDump read_field_dump(const std::string& path);

/// Formats a double with 17 significant digits (exact float64 round-trip).
std::string csv_double(double v);

void write_report_csv(const std::string& path, const ConservationReport& rep);
void write_casimir_csv(const std::string& path,
                       const std::vector<CasimirDriftReport>& reps);
/// Columns: t,id,x0x,x0y,x0z,x,y,z,J then carried scalars sorted by name.
void write_tracer_csv(const std::string& path, const RunResult& run);

void write_checkpoint(const std::string& dir, const FluidState& fs);

}  // namespace hlab
