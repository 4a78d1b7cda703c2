#include "legendrian/dga_json.hpp"

#include <sstream>
#include <stdexcept>

namespace legendrian {

namespace {

Json rho_value(int twice) {
  if (twice % 2 == 0) return Json(twice / 2);
  return Json(twice / 2.0);
}

int twice_rho(const Json& v) {
  const double x = v.get<double>() * 2;
  const int r = static_cast<int>(x < 0 ? x - 0.5 : x + 0.5);
  if (r != x) throw std::invalid_argument("rho must be an integer or half-integer");
  return r;
}

}  // namespace

Json to_json(const DGA& p) {
  Json j;
  j["format"] = 1;
  j["components"] = p.components;
  j["ring"] = p.mode.ring == Ring::Z ? "Z" : "Z2";
  j["t_variables"] = p.mode.num_t;
  j["link_mode"] = p.link_mode;
  j["modulus"] = p.modulus;
  j["rho"] = Json::array();
  for (int r : p.rho2) j["rho"].push_back(rho_value(r));
  j["t_degrees"] = p.t_degrees;
  j["generators"] = Json::array();
  for (const auto& g : p.gens)
    j["generators"].push_back({{"name", g.name}, {"degree", g.degree}, {"u", g.u + 1}, {"l", g.l + 1}});
  j["differential"] = Json::array();
  for (const auto& x : p.d) {
    Json terms = Json::array();
    for (const auto& [term, c] : x.terms()) {
      Json w = Json::array();
      for (int g : term.word) w.push_back(p.gens[g].name);
      terms.push_back({{"scalar", c}, {"t", term.t}, {"word", w}});
    }
    j["differential"].push_back(terms);
  }
  return j;
}

DGA dga_from_json(const Json& j) {
  try {
    if (j.value("format", 1) != 1) throw std::invalid_argument("unsupported DGA format version");
    DGA p;
    const std::string ring = j.value("ring", std::string("Z"));
    if (ring != "Z" && ring != "Z2") throw std::invalid_argument("ring must be Z or Z2");
    p.components = j.value("components", 1);
    p.link_mode = j.value("link_mode", p.components > 1);
    p.mode = Mode{ring == "Z" ? Ring::Z : Ring::Z2, j.value("t_variables", 0)};
    p.modulus = j.value("modulus", 0);
    if (j.contains("rho"))
      for (const auto& r : j["rho"]) p.rho2.push_back(twice_rho(r));
    p.rho2.resize(p.components, 0);
    if (j.contains("t_degrees")) p.t_degrees = j["t_degrees"].get<std::vector<int>>();
    p.t_degrees.resize(p.mode.num_t, 0);
    for (const auto& g : j.at("generators")) {
      Generator gen;
      gen.name = g.at("name").get<std::string>();
      gen.degree = g.value("degree", 0);
      gen.u = g.value("u", 1) - 1;
      gen.l = g.value("l", 1) - 1;
      if (gen.u < 0 || gen.u >= p.components || gen.l < 0 || gen.l >= p.components)
        throw std::invalid_argument("generator " + gen.name + " has a component label out of range");
      p.gens.push_back(gen);
    }
    const auto names = p.names();
    const auto& diff = j.at("differential");
    if (diff.size() != p.gens.size()) throw std::invalid_argument("differential must list one entry per generator");
    for (const auto& entry : diff) {
      if (entry.is_string()) {
        p.d.push_back(parse_element(entry.get<std::string>(), names, p.mode));
        continue;
      }
      AlgebraElement x(p.mode);
      for (const auto& t : entry) {
        Word w;
        for (const auto& n : t.at("word")) {
          const auto it = std::find(names.begin(), names.end(), n.get<std::string>());
          if (it == names.end()) throw std::invalid_argument("unknown generator " + n.get<std::string>());
          w.push_back(static_cast<int>(it - names.begin()));
        }
        std::vector<int> texp = t.value("t", std::vector<int>{});
        if (static_cast<int>(texp.size()) > p.mode.num_t) throw std::invalid_argument("too many t exponents");
        x.add_term(w, texp, t.value("scalar", 1LL));
      }
      p.d.push_back(std::move(x));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed DGA JSON: ") + e.what());
  }
}

std::string dump_dga(const DGA& p) { return to_json(p).dump(2) + "\n"; }

DGA parse_dga(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed DGA JSON: ") + e.what());
  }
  return dga_from_json(j);
}

std::string format_dga(const DGA& p) {
  std::ostringstream out;
  const auto names = p.names();
  out << "ring " << (p.mode.ring == Ring::Z ? "Z" : "Z/2");
  if (p.mode.num_t > 0) out << ", " << p.mode.num_t << " t variable" << (p.mode.num_t > 1 ? "s" : "");
  out << ", grading " << (p.modulus == 0 ? std::string("Z") : "Z/" + std::to_string(p.modulus)) << "\n";
  for (int i = 0; i < p.size(); ++i) {
    out << "d " << names[i] << " = " << to_string(p.d[i], names) << "    [deg " << p.gens[i].degree;
    if (p.components > 1) out << ", u " << p.gens[i].u + 1 << ", l " << p.gens[i].l + 1;
    out << "]\n";
  }
  return out.str();
}

DGA make_dga(Mode mode, int modulus, const std::vector<std::string>& names, const std::vector<int>& degrees,
             const std::vector<std::string>& differentials) {
  DGA p;
  p.mode = mode;
  p.modulus = modulus;
  p.rho2 = {0};
  p.t_degrees.assign(mode.num_t, 0);
  for (std::size_t i = 0; i < names.size(); ++i) p.gens.push_back({names[i], p.reduce_degree(degrees.at(i)), 0, 0});
  for (const auto& s : differentials) p.d.push_back(parse_element(s, names, mode));
  if (p.d.size() != p.gens.size()) throw std::invalid_argument("make_dga: one differential per generator");
  return p;
}

}  // namespace legendrian
