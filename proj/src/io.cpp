#include "hlab/io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hlab {

namespace {

void write_block(std::ofstream& out, const std::vector<double>& values) {
  static_assert(sizeof(double) == 8);
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size() * 8));
  } else {
    for (double v : values) {
      std::uint64_t bits;
      std::memcpy(&bits, &v, 8);
      char b[8];
      for (int i = 0; i < 8; ++i) b[i] = char((bits >> (8 * i)) & 0xff);
      out.write(b, 8);
    }
  }
}

void write_header(std::ofstream& out, const Grid& g) {
  out << "HLAB1\n";
  char line[256];
  std::snprintf(line, sizeof line, "%d %d %d %d %.17g %.17g %.17g\n", g.dims,
                g.n[0], g.n[1], g.n[2], g.length[0], g.length[1],
                g.length[2]);
  out << line;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

}  // namespace

void write_field_dump(const std::string& path, const ScalarField& f) {
  std::ofstream out = open_out(path);
  write_header(out, f.grid);
  write_block(out, f.values);
}

void write_field_dump(const std::string& path, const VectorField& v) {
  std::ofstream out = open_out(path);
  write_header(out, v.grid);
  for (int c = 0; c < 3; ++c) write_block(out, v.comp[c].values);
}

FieldDump read_field_dump(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string magic;
  std::getline(in, magic);
  if (magic != "HLAB1") throw std::runtime_error(path + ": not an HLAB1 dump");
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  int dims;
  std::array<int, 3> n;
  std::array<double, 3> L;
  if (!(hs >> dims >> n[0] >> n[1] >> n[2] >> L[0] >> L[1] >> L[2]))
    throw std::runtime_error(path + ": malformed header line");

  FieldDump dump;
  dump.grid = Grid::make(dims, n, L);
  const std::size_t count = dump.grid.size();
  while (true) {
    std::vector<double> block(count);
    in.read(reinterpret_cast<char*>(block.data()),
            static_cast<std::streamsize>(count * 8));
    if (in.gcount() == 0) break;
    if (static_cast<std::size_t>(in.gcount()) != count * 8)
      throw std::runtime_error(path + ": truncated block");
    if constexpr (std::endian::native != std::endian::little) {
      for (double& v : block) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, 8);
        std::uint64_t sw = 0;
        for (int i = 0; i < 8; ++i)
          sw |= ((bits >> (8 * i)) & 0xff) << (8 * (7 - i));
        std::memcpy(&v, &sw, 8);
      }
    }
    dump.blocks.push_back(std::move(block));
  }
  if (dump.blocks.empty()) throw std::runtime_error(path + ": no data blocks");
  return dump;
}

std::string csv_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_report_csv(const std::string& path, const ConservationReport& rep) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "name,t,integral,res_L2,res_Linf\n";
  for (std::size_t i = 0; i < rep.times.size(); ++i)
    out << rep.name << ',' << csv_double(rep.times[i]) << ','
        << csv_double(rep.integral[i]) << ',' << csv_double(rep.res_l2[i])
        << ',' << csv_double(rep.res_linf[i]) << '\n';
}

void write_casimir_csv(const std::string& path,
                       const std::vector<CasimirDriftReport>& reps) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "name,t,C,drift\n";
  for (const auto& rep : reps)
    for (std::size_t i = 0; i < rep.times.size(); ++i)
      out << rep.name << ',' << csv_double(rep.times[i]) << ','
          << csv_double(rep.value[i]) << ',' << csv_double(rep.drift[i])
          << '\n';
}

void write_tracer_csv(const std::string& path, const RunResult& run) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  if (run.tracer_snaps.empty()) {
    out << "t,id\n";
    return;
  }
  std::vector<std::string> names;
  for (const auto& [name, vals] : run.tracer_snaps.front().carried)
    names.push_back(name);

  out << "t,id,x0x,x0y,x0z,x,y,z,J";
  for (const auto& n : names) out << ',' << n;
  out << '\n';
  for (std::size_t s = 0; s < run.tracer_snaps.size(); ++s) {
    const TracerCloud& tc = run.tracer_snaps[s];
    const double t = run.snaps[s].t;
    const std::vector<double> J = tc.jacobian();
    for (std::size_t p = 0; p < tc.size(); ++p) {
      out << csv_double(t) << ',' << p;
      for (int c = 0; c < 3; ++c) out << ',' << csv_double(tc.x0[p][c]);
      for (int c = 0; c < 3; ++c) out << ',' << csv_double(tc.x[p][c]);
      out << ',' << csv_double(J[p]);
      for (const auto& n : names) out << ',' << csv_double(tc.carried.at(n)[p]);
      out << '\n';
    }
  }
}

void write_checkpoint(const std::string& dir, const FluidState& fs) {
  std::filesystem::create_directories(dir);
  write_field_dump(dir + "/rho.hlab", fs.rho);
  write_field_dump(dir + "/u.hlab", fs.u);
  write_field_dump(dir + "/S.hlab", fs.S);
  write_field_dump(dir + "/B.hlab", fs.B);
  if (fs.has_A) write_field_dump(dir + "/A.hlab", fs.A);
}

}  // namespace hlab
