#include "sectorlab/instance.hpp"

#include <cstdio>
#include <cstring>

#include "sectorlab/matrix_io.hpp"

namespace sectorlab {

using nlohmann::json;

const Matrix& Instance::matrix(const std::string& name) const {
  const auto it = matrices.find(name);
  if (it == matrices.end()) throw Error(ErrorKind::Parse, "instance: missing matrix '" + name + "'");
  return it->second;
}

double Instance::scalar(const std::string& name) const {
  const auto it = scalars.find(name);
  if (it == scalars.end()) throw Error(ErrorKind::Parse, "instance: missing scalar '" + name + "'");
  return it->second;
}

Index Instance::max_dim() const {
  Index n = 0;
  for (const auto& [name, m] : matrices)
    if (m.rows() == m.cols()) n = std::max(n, m.rows());
  return n;
}

json Instance::to_json() const {
  json j;
  json ms = json::object();
  for (const auto& [name, m] : matrices) ms[name] = matrix_to_json(m);
  j["matrices"] = std::move(ms);
  j["scalars"] = scalars;
  j["map"] = map_id;
  j["function"] = function_id;
  j["means"] = mean_ids;
  return j;
}

Instance Instance::from_json(const json& j) {
  Instance inst;
  try {
    for (const auto& [name, m] : j.at("matrices").items()) inst.matrices.emplace(name, matrix_from_json(m));
    for (const auto& [name, v] : j.at("scalars").items()) inst.scalars.emplace(name, v.get<double>());
    inst.map_id = j.value("map", std::string());
    inst.function_id = j.value("function", std::string());
    inst.mean_ids = j.value("means", std::vector<std::string>{});
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("instance: ") + e.what());
  }
  return inst;
}

std::uint64_t fnv1a(const void* data, std::size_t size, std::uint64_t h) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t Instance::digest() const {
  std::uint64_t h = fnv1a(nullptr, 0);
  auto mix_str = [&h](const std::string& s) { h = fnv1a(s.data(), s.size() + 1, h); };
  auto mix_double = [&h](double d) { h = fnv1a(&d, sizeof d, h); };
  for (const auto& [name, m] : matrices) {
    mix_str(name);
    const std::int64_t shape[2] = {m.rows(), m.cols()};
    h = fnv1a(shape, sizeof shape, h);
    for (Index c = 0; c < m.cols(); ++c)
      for (Index r = 0; r < m.rows(); ++r) {
        mix_double(m(r, c).real());
        mix_double(m(r, c).imag());
      }
  }
  for (const auto& [name, v] : scalars) {
    mix_str(name);
    mix_double(v);
  }
  mix_str(map_id);
  mix_str(function_id);
  for (const auto& id : mean_ids) mix_str(id);
  return h;
}

}  // namespace sectorlab
