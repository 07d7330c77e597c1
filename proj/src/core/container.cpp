#include "simbench/core/container.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include <json.hpp>

namespace simbench {

namespace {

static_assert(std::endian::native == std::endian::little,
              "container payloads assume a little-endian host");

std::filesystem::path sidecar_path(const std::filesystem::path& p) {
  std::filesystem::path s = p;
  s += ".json";
  return s;
}

}  // namespace

void write_container(const Stack3D& s, const std::filesystem::path& path,
                     const std::string& kind, int frames_per_plane) {
  s.validate();
  std::vector<float> payload(s.voxels.size());
  for (std::size_t i = 0; i < s.voxels.size(); ++i)
    payload[i] = static_cast<float>(s.voxels[i]);

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("write_container: cannot open " + path.string());
  out.write(reinterpret_cast<const char*>(payload.data()),
            static_cast<std::streamsize>(payload.size() * sizeof(float)));
  if (!out) throw std::runtime_error("write_container: write failed for " + path.string());
  out.close();

  nlohmann::json meta;
  meta["dims"] = {s.nx, s.ny, s.nz};
  meta["spacing_nm"] = {s.dx_nm, s.dy_nm, s.dz_nm};
  meta["frames_per_plane"] = frames_per_plane;
  meta["kind"] = kind;
  std::ofstream side(sidecar_path(path), std::ios::trunc);
  if (!side) throw std::runtime_error("write_container: cannot open sidecar for " + path.string());
  side << meta.dump(2) << "\n";
}

ContainerMeta read_container_meta(const std::filesystem::path& path) {
  std::ifstream side(sidecar_path(path));
  if (!side)
    throw std::runtime_error("read_container: missing sidecar " + sidecar_path(path).string());
  nlohmann::json meta;
  try {
    side >> meta;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("read_container: bad sidecar " + sidecar_path(path).string() +
                             ": " + e.what());
  }
  ContainerMeta m;
  try {
    m.nx = meta.at("dims").at(0).get<int>();
    m.ny = meta.at("dims").at(1).get<int>();
    m.nz = meta.at("dims").at(2).get<int>();
    m.dx_nm = meta.at("spacing_nm").at(0).get<double>();
    m.dy_nm = meta.at("spacing_nm").at(1).get<double>();
    m.dz_nm = meta.at("spacing_nm").at(2).get<double>();
    m.frames_per_plane = meta.at("frames_per_plane").get<int>();
    m.kind = meta.at("kind").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("read_container: incomplete sidecar " +
                             sidecar_path(path).string() + ": " + e.what());
  }
  if (m.nx < 1 || m.ny < 1 || m.nz < 1)
    throw std::runtime_error("read_container: invalid dims in sidecar");
  return m;
}

Stack3D read_container(const std::filesystem::path& path) {
  const ContainerMeta m = read_container_meta(path);
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw std::runtime_error("read_container: cannot open " + path.string());
  const std::uint64_t bytes = static_cast<std::uint64_t>(in.tellg());
  const std::uint64_t expected =
      static_cast<std::uint64_t>(m.nx) * m.ny * m.nz * sizeof(float);
  if (bytes != expected)
    throw std::runtime_error("read_container: payload length " + std::to_string(bytes) +
                             " does not match metadata dims (" + std::to_string(expected) +
                             " bytes) for " + path.string());
  in.seekg(0);
  std::vector<float> payload(static_cast<std::size_t>(m.nx) * m.ny * m.nz);
  in.read(reinterpret_cast<char*>(payload.data()), static_cast<std::streamsize>(expected));
  if (!in) throw std::runtime_error("read_container: short read on " + path.string());

  Stack3D s(m.nx, m.ny, m.nz, m.dx_nm, m.dy_nm, m.dz_nm);
  for (std::size_t i = 0; i < payload.size(); ++i)
    s.voxels[i] = static_cast<double>(payload[i]);
  return s;
}

void write_raw_container(const RawSimStack& raw, const std::filesystem::path& path) {
  raw.validate();
  write_container(raw_as_stack(raw), path, "rawsim", raw.frames_per_plane);
}

RawSimStack read_raw_container(const std::filesystem::path& path) {
  const ContainerMeta m = read_container_meta(path);
  if (m.kind != "rawsim")
    throw std::runtime_error("read_raw_container: kind is '" + m.kind + "', expected 'rawsim'");
  if (m.frames_per_plane < 1 || m.nz % m.frames_per_plane != 0)
    throw std::runtime_error("read_raw_container: nz not divisible by frames_per_plane");
  return stack_as_raw(read_container(path), m.frames_per_plane);
}

}  // namespace simbench
