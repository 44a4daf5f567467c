// JSON schemas: group-algebra term lists (bit-exact round trip), Satake
// tables, matrix-coefficient tables, and the JobConfig driving the CLI.
#pragma once

#include "macsat/satake.hpp"

// vendored single-header json
#include "json.hpp"

namespace macsat {

using Json = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"weight":[ints], "coeff":[{"q2exp":{"t1":int,...},"num":int,"den":int}]}
Json element_to_json(const GroupAlgebraElement& f);
GroupAlgebraElement element_from_json(const Json& j, const Lattice* lat, ParamSpacePtr space);

struct JobConfig {
  std::string type_label = "A";
  int rank = 1;
  std::string lattice = "P";                     // "P" | "Q" | custom basis below
  std::vector<std::vector<long long>> lattice_basis;  // optional custom basis rows
  bool generic = true;                           // no SatakeData block
  SatakeData satake;                             // valid when !generic
  std::vector<IVec> lambdas;                     // explicit weights, or
  int box = -1;                                  //   all |coords| <= box
  std::vector<std::pair<Rational, Rational>> char_exact;  // Gaussian rational values (re,im)
  std::vector<std::complex<double>> char_float;
  std::string out;                               // output path ("" = stdout)
  std::string format = "json";                   // json | csv
  int jobs = 1;

  static JobConfig from_json(const Json& j);
  Json to_json() const;
};

JobConfig load_config_file(const std::string& path);

// Assembled context for one run. Core objects are heap-held so internal
// cross-references stay valid when the session moves.
struct Session {
  std::unique_ptr<RootSystem> rs;
  std::unique_ptr<OrbitTable> orbits;
  std::unique_ptr<Lattice> lattice;
  std::unique_ptr<WeylGroup> W;
  std::unique_ptr<HeckeContext> generic_ctx;
  std::unique_ptr<MacdonaldEngine> macdonald;
  std::unique_ptr<SatakeEngine> satake;  // null for generic jobs

  static Session open(const JobConfig& cfg);
  std::vector<IVec> job_weights(const JobConfig& cfg) const;
};

}  // namespace macsat
