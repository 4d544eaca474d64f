#include "lindpur/problem_spec.hpp"

#include <cstdio>

namespace lindpur {

nlohmann::json matrix_to_json(const Operator& op) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index r = 0; r < op.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Index c = 0; c < op.dim(); ++c) {
      const Complex z = op.mat()(r, c);
      row.push_back({z.real(), z.imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Operator matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw SpecParseError("matrix must be a non-empty array of rows");
  }
  const auto n_rows = static_cast<Index>(j.size());
  Matrix m(n_rows, static_cast<Index>(j.front().size()));
  for (Index r = 0; r < n_rows; ++r) {
    const auto& row = j.at(r);
    if (!row.is_array() || static_cast<Index>(row.size()) != m.cols()) {
      throw SpecParseError("matrix rows must all have the same length");
    }
    for (Index c = 0; c < m.cols(); ++c) {
      const auto& entry = row.at(c);
      if (!entry.is_array() || entry.size() != 2 || !entry.at(0).is_number() ||
          !entry.at(1).is_number()) {
        throw SpecParseError("matrix entries must be [re, im] pairs");
      }
      m(r, c) = Complex{entry.at(0).get<double>(), entry.at(1).get<double>()};
    }
  }
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("matrix must be square");
  }
  return Operator(std::move(m));
}

namespace {

ControlSchedule schedule_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("segments") || !j.at("segments").is_array()) {
    throw SpecParseError("schedule must be an object with a segments array");
  }
  ControlSchedule schedule;
  std::size_t n_controls = 0;
  for (const auto& seg : j.at("segments")) {
    if (!seg.is_object() || !seg.contains("duration") || !seg.contains("controls")) {
      throw SpecParseError("schedule segment needs duration and controls");
    }
    ControlSegment out;
    out.duration = seg.at("duration").get<double>();
    if (out.duration < 0.0) {
      throw std::invalid_argument("segment durations must be non-negative");
    }
    for (const auto& u : seg.at("controls")) {
      out.controls.push_back(u.get<double>());
    }
    if (schedule.segments.empty()) {
      n_controls = out.controls.size();
    } else if (out.controls.size() != n_controls) {
      throw std::invalid_argument("all segments must carry the same number of controls");
    }
    schedule.segments.push_back(std::move(out));
  }
  return schedule;
}

}  // namespace

ProblemSpec parse_problem_spec(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw SpecParseError("problem spec must be a JSON object");
  }
  if (!j.contains("dim") || !j.at("dim").is_number_integer()) {
    throw SpecParseError("problem spec needs an integer dim");
  }
  if (!j.contains("generators") || !j.at("generators").is_array() ||
      j.at("generators").empty()) {
    throw SpecParseError("problem spec needs a non-empty generators array");
  }
  ProblemSpec spec;
  spec.dim = j.at("dim").get<Index>();
  if (spec.dim < 1) {
    throw std::invalid_argument("dim must be positive");
  }
  for (const auto& gen : j.at("generators")) {
    if (!gen.is_object() || !gen.contains("hamiltonian")) {
      throw SpecParseError("each generator needs a hamiltonian");
    }
    Operator h = matrix_from_json(gen.at("hamiltonian"));
    std::vector<Operator> ls;
    if (gen.contains("lindblad_ops")) {
      for (const auto& lj : gen.at("lindblad_ops")) {
        ls.push_back(matrix_from_json(lj));
      }
    }
    if (h.dim() != spec.dim) {
      throw std::invalid_argument("generator dimension differs from dim");
    }
    for (const auto& l : ls) {
      if (l.dim() != spec.dim) {
        throw std::invalid_argument("Lindblad operator dimension differs from dim");
      }
    }
    // GklsGenerator enforces Hermiticity of the Hamiltonian
    spec.generators.emplace_back(std::move(h), std::move(ls), 1e-8);
  }
  if (j.contains("schedule")) {
    spec.schedule = schedule_from_json(j.at("schedule"));
  }
  auto& p = spec.params;
  if (j.contains("t")) p.t = j.at("t").get<double>();
  if (j.contains("n_steps")) {
    p.n_steps.clear();
    for (const auto& n : j.at("n_steps")) {
      const int v = n.get<int>();
      if (v < 1) throw std::invalid_argument("n_steps entries must be >= 1");
      p.n_steps.push_back(v);
    }
  }
  if (j.contains("tol")) p.tol = j.at("tol").get<double>();
  if (j.contains("seed")) p.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("max_dim")) p.max_dim = j.at("max_dim").get<Index>();
  if (j.contains("j")) p.generator_index = j.at("j").get<Index>();
  if (p.generator_index < 0 ||
      p.generator_index >= static_cast<Index>(spec.generators.size())) {
    throw std::invalid_argument("generator index j out of range");
  }
  return spec;
}

ProblemSpec parse_problem_spec_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SpecParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return parse_problem_spec(j);
  } catch (const nlohmann::json::exception& e) {
    throw SpecParseError(std::string("invalid spec: ") + e.what());
  }
}

std::string content_hash(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace lindpur
