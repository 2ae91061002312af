#include <fstream>
#include <sstream>

#include "gibbslab/model.hpp"

#include <json.hpp>

namespace gibbslab {

namespace {

Potential potential_from_json(const nlohmann::json& j) {
  const std::string name = j.at("name").get<std::string>();
  Potential p;
  if (name == "gaussian") {
    p = Potential::gaussian();
  } else if (name == "double_well") {
    p = Potential::double_well(j.value("a", 1.0), j.value("b", 1.0));
  } else if (name == "quartic_plus_quadratic") {
    p = Potential::quartic_plus_quadratic(j.at("a").get<double>(), j.at("c").get<double>());
  } else {
    throw input_error("model file: unknown potential '" + name + "'");
  }
  if (j.contains("kappa")) p.convexity_floor = j.at("kappa").get<double>();
  if (j.contains("a_V")) p.growth_a = j.at("a_V").get<double>();
  if (j.contains("b_V")) p.growth_b = j.at("b_V").get<double>();
  if (j.contains("d_V")) p.growth_exponent = j.at("d_V").get<double>();
  if (j.contains("a_V_prime")) p.grad_square_coeff = j.at("a_V_prime").get<double>();
  return p;
}

}  // namespace

ModelSpec parse_model_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("model file: invalid JSON: ") + e.what());
  }
  try {
    Potential pot = potential_from_json(j.at("potential"));
    const int dim = j.at("dimension").get<int>();
    std::vector<std::pair<Site, double>> entries;
    for (const auto& e : j.value("interaction", nlohmann::json::array())) {
      Site s;
      const auto& off = e.at("offset");
      if (!off.is_array() || off.size() < 1 || off.size() > 4)
        throw input_error("model file: offset must be a 1..4 vector");
      for (std::size_t k = 0; k < off.size(); ++k) s.c[k] = off[k].get<int>();
      entries.emplace_back(s, e.at("J").get<double>());
    }
    return ModelSpec(pot, Interaction(dim, std::move(entries)));
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("model file: ") + e.what());
  }
}

ModelSpec load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("model file: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model_json(ss.str());
}

}  // namespace gibbslab
