#include "macsat/jobio.hpp"

#include <fstream>

namespace macsat {

Json element_to_json(const GroupAlgebraElement& f) {
  Json terms = Json::array();
  const auto& names = f.space()->names;
  for (const auto& [w, c] : f.terms()) {
    Json weight = Json::array();
    for (long long x : w) weight.push_back(x);
    Json coeffs = Json::array();
    for (const auto& [e, q] : c.terms()) {
      Json q2 = Json::object();
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) q2[names[i]] = e[i];
      Int num = numerator(q), den = denominator(q);
      if (num > std::numeric_limits<long long>::max() || num < std::numeric_limits<long long>::min() ||
          den > std::numeric_limits<long long>::max())
        throw ConfigError("coefficient too large for the JSON schema");
      coeffs.push_back({{"q2exp", q2}, {"num", num.convert_to<long long>()},
                        {"den", den.convert_to<long long>()}});
    }
    terms.push_back({{"weight", weight}, {"coeff", coeffs}});
  }
  return terms;
}

GroupAlgebraElement element_from_json(const Json& j, const Lattice* lat, ParamSpacePtr space) {
  GroupAlgebraElement f(lat, space);
  for (const auto& term : j) {
    IVec w;
    for (const auto& x : term.at("weight")) w.push_back(x.get<long long>());
    ParamScalar c(space);
    for (const auto& mono : term.at("coeff")) {
      ParamScalar::Exp e(space->names.size(), 0);
      for (const auto& [name, he] : mono.at("q2exp").items()) {
        int idx = space->index_of(name);
        if (idx < 0) throw ConfigError("unknown parameter name '" + name + "'");
        e[idx] = he.get<int>();
      }
      c.add_term(e, Rational(Int(mono.at("num").get<long long>()),
                             Int(mono.at("den").get<long long>())));
    }
    f.add_term(w, c);
  }
  return f;
}

namespace {

void reject_unknown_keys(const Json& j, const std::vector<std::string>& known,
                         const std::string& where) {
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (std::find(known.begin(), known.end(), k) == known.end())
      throw ConfigError("unknown key '" + k + "' in " + where);
  }
}

}  // namespace

JobConfig JobConfig::from_json(const Json& j) {
  reject_unknown_keys(j, {"type", "rank", "lattice", "lattice_basis", "satake", "lambda", "box",
                          "char", "out", "format", "jobs"},
                      "job config");
  JobConfig cfg;
  if (!j.contains("type") || !j.contains("rank")) throw ConfigError("config needs type and rank");
  cfg.type_label = j.at("type").get<std::string>();
  cfg.rank = j.at("rank").get<int>();
  if (j.contains("lattice")) cfg.lattice = j.at("lattice").get<std::string>();
  if (j.contains("lattice_basis")) {
    cfg.lattice = "custom";
    for (const auto& row : j.at("lattice_basis"))
      cfg.lattice_basis.push_back(row.get<std::vector<long long>>());
  }
  if (j.contains("satake")) {
    const Json& s = j.at("satake");
    if (s.is_string() && s.get<std::string>() == "generic") {
      cfg.generic = true;
    } else {
      reject_unknown_keys(s, {"tau", "d", "d2"}, "satake block");
      cfg.generic = false;
      if (s.contains("tau")) {
        try {
          cfg.satake.tau = parse_rational(s.at("tau").is_number() ? s.at("tau").dump()
                                                                  : s.at("tau").get<std::string>());
        } catch (const std::exception&) {
          throw ConfigError("tau must be a rational number like 9 or 9/2");
        }
      }
      if (s.contains("d")) cfg.satake.d = s.at("d").get<std::vector<int>>();
      if (s.contains("d2")) cfg.satake.d2 = s.at("d2").get<std::vector<int>>();
      if (cfg.satake.d.empty()) cfg.satake.d.assign(cfg.rank + 1, 1);
      if (cfg.satake.d2.empty()) cfg.satake.d2.assign(cfg.rank + 1, 0);
    }
  }
  if (j.contains("lambda")) {
    for (const auto& l : j.at("lambda")) cfg.lambdas.push_back(l.get<IVec>());
  }
  if (j.contains("box")) cfg.box = j.at("box").get<int>();
  if (cfg.box < 0 && cfg.lambdas.empty())
    throw ConfigError("config needs either lambda list or box radius");
  if (cfg.box >= 0 && !cfg.lambdas.empty())
    throw ConfigError("config must give exactly one of lambda and box");
  if (j.contains("char")) {
    const Json& c = j.at("char");
    reject_unknown_keys(c, {"exact", "float"}, "char block");
    if (c.contains("exact") && c.contains("float"))
      throw ConfigError("character must be exact or float, not both");
    if (c.contains("exact")) {
      for (const auto& v : c.at("exact")) {
        if (!v.is_array() || v.size() != 2) throw ConfigError("exact character value must be [re, im]");
        cfg.char_exact.emplace_back(parse_rational(v[0].is_string() ? v[0].get<std::string>() : v[0].dump()),
                                    parse_rational(v[1].is_string() ? v[1].get<std::string>() : v[1].dump()));
      }
    } else if (c.contains("float")) {
      for (const auto& v : c.at("float")) {
        if (!v.is_array() || v.size() != 2) throw ConfigError("float character value must be [re, im]");
        cfg.char_float.emplace_back(v[0].get<double>(), v[1].get<double>());
      }
    }
  }
  if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
  if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
  if (cfg.format != "json" && cfg.format != "csv") throw ConfigError("format must be json or csv");
  if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<int>();
  if (cfg.jobs < 1) throw ConfigError("jobs must be >= 1");
  return cfg;
}

Json JobConfig::to_json() const {
  Json j;
  j["type"] = type_label;
  j["rank"] = rank;
  j["lattice"] = lattice;
  if (!lattice_basis.empty()) j["lattice_basis"] = lattice_basis;
  if (!generic) {
    Json s;
    if (satake.tau) s["tau"] = satake.tau->str();
    s["d"] = satake.d;
    s["d2"] = satake.d2;
    j["satake"] = s;
  }
  if (box >= 0)
    j["box"] = box;
  else {
    Json ls = Json::array();
    for (const auto& l : lambdas) ls.push_back(l);
    j["lambda"] = ls;
  }
  j["format"] = format;
  return j;
}

JobConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return JobConfig::from_json(j);
}

Session Session::open(const JobConfig& cfg) {
  Session s;
  s.rs = std::make_unique<RootSystem>(build_root_system(cfg.type_label, cfg.rank));
  s.orbits = std::make_unique<OrbitTable>(orbit_table(*s.rs));
  if (cfg.lattice == "custom")
    s.lattice = std::make_unique<Lattice>(make_lattice_custom(*s.rs, cfg.lattice_basis));
  else
    s.lattice = std::make_unique<Lattice>(make_lattice(*s.rs, cfg.lattice));
  s.W = std::make_unique<WeylGroup>(*s.rs, *s.lattice);
  s.generic_ctx = std::make_unique<HeckeContext>(*s.W, *s.orbits);
  s.macdonald = std::make_unique<MacdonaldEngine>(*s.generic_ctx);
  if (!cfg.generic) s.satake = std::make_unique<SatakeEngine>(*s.W, *s.orbits, cfg.satake);
  return s;
}

std::vector<IVec> Session::job_weights(const JobConfig& cfg) const {
  if (!cfg.lambdas.empty()) return cfg.lambdas;
  return coord_box(rs->rank, cfg.box);
}

}  // namespace macsat
