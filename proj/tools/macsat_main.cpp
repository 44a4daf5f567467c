// macsat: exact q->infinity Macdonald polynomials, Satake-basis tables and
// unramified matrix coefficients from a group-datum configuration.
#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "macsat/jobio.hpp"

namespace {

using namespace macsat;

struct CliFlags {
  std::string config;
  std::string type = "A";
  int rank = 1;
  std::string lattice = "P";
  std::vector<std::string> lambda;
  int box = -1;
  std::string tau;
  std::vector<int> d, d2;
  std::vector<std::string> char_exact;
  std::vector<double> char_float;
  std::string out;
  std::string format = "json";
  int jobs = 1;
  bool corrupt_t0 = false;
  bool flags_used = false;
};

IVec parse_ivec(const std::string& s) {
  IVec v;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) v.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return v;
}

JobConfig config_from(const CliFlags& fl, bool needs_satake, bool needs_char) {
  if (!fl.config.empty()) {
    if (fl.flags_used)
      throw ConfigError("a config file and per-run flags were both given; use one source of truth");
    return load_config_file(fl.config);
  }
  JobConfig cfg;
  cfg.type_label = fl.type;
  cfg.rank = fl.rank;
  cfg.lattice = fl.lattice;
  for (const auto& l : fl.lambda) cfg.lambdas.push_back(parse_ivec(l));
  cfg.box = fl.box;
  if (cfg.box >= 0 && !cfg.lambdas.empty())
    throw ConfigError("give exactly one of --lambda and --box");
  if (cfg.box < 0 && cfg.lambdas.empty()) throw ConfigError("give --lambda or --box");
  cfg.out = fl.out;
  cfg.format = fl.format;
  cfg.jobs = fl.jobs;
  if (needs_satake || !fl.d.empty() || !fl.tau.empty()) {
    cfg.generic = false;
    cfg.satake.d = fl.d.empty() ? std::vector<int>(cfg.rank + 1, 1) : fl.d;
    cfg.satake.d2 = fl.d2.empty() ? std::vector<int>(cfg.rank + 1, 0) : fl.d2;
    if (!fl.tau.empty()) cfg.satake.tau = parse_rational(fl.tau);
  }
  if (needs_char) {
    if (!fl.char_exact.empty() && !fl.char_float.empty())
      throw ConfigError("character values: mixed exact and float inputs rejected");
    for (const auto& s : fl.char_exact) {
      auto comma = s.find(',');
      Rational re = parse_rational(comma == std::string::npos ? s : s.substr(0, comma));
      Rational im = comma == std::string::npos ? Rational(0) : parse_rational(s.substr(comma + 1));
      cfg.char_exact.emplace_back(re, im);
    }
    for (size_t i = 0; i + 1 < fl.char_float.size(); i += 2)
      cfg.char_float.emplace_back(fl.char_float[i], fl.char_float[i + 1]);
  }
  return cfg;
}

void write_output(const JobConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file " + cfg.out);
  out << text;
}

// deterministic parallel map over weights; fn(index, weight) -> row
template <typename F>
std::vector<Json> parallel_rows(const std::vector<IVec>& weights, int jobs, F&& fn) {
  std::vector<Json> rows(weights.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < weights.size(); ++i) rows[i] = fn(i, weights[i]);
    return rows;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(jobs);
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      try {
        for (size_t i = next++; i < weights.size(); i = next++) rows[i] = fn(i, weights[i]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string csv_escape(const Json& j) {
  std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  std::string out;
  for (char c : s) {
    if (c == ';') out += ' ';
    else out += c;
  }
  return out;
}

std::string ivec_str(const IVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

// csv: one line per (lambda, weight) with the coefficient flattened to a string
std::string render_csv(const std::vector<IVec>& weights,
                       const std::vector<GroupAlgebraElement>& rows) {
  std::ostringstream os;
  os << "lambda;weight;coeff\n";
  for (size_t i = 0; i < weights.size(); ++i)
    for (const auto& [w, c] : rows[i].terms())
      os << ivec_str(weights[i]) << ";" << ivec_str(w) << ";" << c.str() << "\n";
  return os.str();
}

std::string render(const JobConfig& cfg, const Json& doc) {
  if (cfg.format == "json") return doc.dump(1) + "\n";
  // generic csv fallback: one line per row with scalar fields flattened
  std::ostringstream os;
  os << "lambda;field;value\n";
  for (const auto& row : doc.at("rows"))
    for (const auto& [k, v] : row.items())
      if (k != "lambda" && k != "terms")
        os << csv_escape(row.at("lambda")) << ";" << k << ";" << csv_escape(v) << "\n";
  return os.str();
}

int cmd_E(const CliFlags& fl) {
  JobConfig cfg = config_from(fl, false, false);
  Session s = Session::open(cfg);
  auto weights = s.job_weights(cfg);
  std::vector<GroupAlgebraElement> elems(weights.size());
  auto rows = parallel_rows(weights, cfg.jobs, [&](size_t idx, const IVec& lam) {
    GroupAlgebraElement e = s.macdonald->E(lam);
    Json row;
    row["lambda"] = lam;
    row["monic"] = e.coeff(lam).is_one();
    row["terms"] = element_to_json(e);
    elems[idx] = std::move(e);
    return row;
  });
  if (cfg.format == "csv") {
    write_output(cfg, render_csv(weights, elems));
    return 0;
  }
  Json doc;
  doc["kind"] = "macdonald_E";
  doc["type"] = cfg.type_label;
  doc["rank"] = cfg.rank;
  doc["lattice"] = cfg.lattice;
  doc["rows"] = rows;
  write_output(cfg, render(cfg, doc));
  return 0;
}

int cmd_satake(const CliFlags& fl) {
  JobConfig cfg = config_from(fl, true, false);
  if (cfg.generic) throw ConfigError("satake tables need a SatakeData block (--d/--d2/--tau)");
  Session s = Session::open(cfg);
  auto weights = s.job_weights(cfg);
  std::vector<GroupAlgebraElement> elems(weights.size());
  auto rows = parallel_rows(weights, cfg.jobs, [&](size_t idx, const IVec& lam) {
    GroupAlgebraElement se = s.satake->satake_E(lam);
    GroupAlgebraElement rhs =
        s.satake->specialize_params(s.macdonald->E(lam)).scaled(s.satake->j_tau(lam));
    GroupAlgebraElement residual = se - rhs;
    Json terms = Json::array();
    for (const auto& [w, c] : se.terms())
      for (const auto& [e, q] : c.terms())
        terms.push_back({{"weight", w},
                         {"t_num_halfexp", e[0]},
                         {"coeff", q.str()}});
    Json row;
    row["lambda"] = lam;
    row["terms"] = terms;
    row["thm2_residual_terms"] = (long long)residual.terms().size();
    elems[idx] = std::move(se);
    return row;
  });
  if (cfg.format == "csv") {
    write_output(cfg, render_csv(weights, elems));
    for (const auto& row : rows)
      if (row.at("thm2_residual_terms").get<long long>() != 0) return 3;
    return 0;
  }
  Json doc;
  doc["kind"] = "satake_E";
  doc["type"] = cfg.type_label;
  doc["rank"] = cfg.rank;
  doc["lattice"] = cfg.lattice;
  Json data;
  if (!cfg.satake.tau)
    data["tau"] = "formal";
  else if (denominator(*cfg.satake.tau) == 1)
    data["tau"] = numerator(*cfg.satake.tau).convert_to<long long>();
  else
    data["tau"] = cfg.satake.tau->str();
  data["d"] = cfg.satake.d;
  data["d2"] = cfg.satake.d2;
  doc["data"] = data;
  doc["rows"] = rows;
  write_output(cfg, render(cfg, doc));
  for (const auto& row : rows)
    if (row.at("thm2_residual_terms").get<long long>() != 0) return 3;
  return 0;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int cmd_coeff(const CliFlags& fl) {
  JobConfig cfg = config_from(fl, true, true);
  if (cfg.generic || !cfg.satake.tau)
    throw ConfigError("matrix coefficients need numeric tau (--tau) and SatakeData");
  if (cfg.char_exact.empty() && cfg.char_float.empty())
    throw ConfigError("matrix coefficients need a character (--char or --char-float)");
  Session s = Session::open(cfg);
  if ((int)std::max(cfg.char_exact.size(), cfg.char_float.size()) != cfg.rank)
    throw ConfigError("character needs one value per lattice basis vector");

  UnramifiedCharacter chi;
  if (!cfg.char_exact.empty()) {
    std::vector<GaussianRational> vals;
    for (auto& [re, im] : cfg.char_exact) vals.push_back({re, im});
    chi = make_exact_character(std::move(vals));
  } else {
    chi = make_float_character(cfg.char_float);
  }

  auto weights = s.job_weights(cfg);
  auto rows = parallel_rows(weights, cfg.jobs, [&](size_t, const IVec& lam) {
    MatrixCoefficient mc = matrix_coefficient(lam, chi, *s.satake, *s.macdonald);
    GroupAlgebraElement residual =
        s.satake->satake_E(lam) -
        s.satake->specialize_params(s.macdonald->E(lam)).scaled(s.satake->j_tau(lam));
    Json row;
    row["lambda"] = lam;
    row["value_re"] = fmt_double(mc.value.real());
    row["value_im"] = fmt_double(mc.value.imag());
    if (mc.exact) {
      row["exact"] = {{"a_re", mc.exact->a.re.str()},
                      {"a_im", mc.exact->a.im.str()},
                      {"b_re", mc.exact->b.re.str()},
                      {"b_im", mc.exact->b.im.str()}};
    }
    row["vol"] = s.satake->vol_ItlamK(lam).str();
    row["j_tau_halfexp"] = s.satake->j_tau_halfexp(lam);
    row["thm2_residual_terms"] = (long long)residual.terms().size();
    return row;
  });
  Json doc;
  doc["kind"] = "matrix_coefficient";
  doc["type"] = cfg.type_label;
  doc["rank"] = cfg.rank;
  doc["lattice"] = cfg.lattice;
  if (denominator(*cfg.satake.tau) == 1)
    doc["tau"] = numerator(*cfg.satake.tau).convert_to<long long>();
  else
    doc["tau"] = cfg.satake.tau->str();
  doc["rows"] = rows;
  write_output(cfg, render(cfg, doc));
  for (const auto& row : rows)
    if (row.at("thm2_residual_terms").get<long long>() != 0) return 3;
  return 0;
}

int cmd_verify(const CliFlags& fl) {
  JobConfig cfg = config_from(fl, false, false);
  Session s = Session::open(cfg);
  const int n = cfg.rank;
  if (fl.corrupt_t0) s.generic_ctx->corrupt_T0_for_tests();

  std::vector<std::pair<std::string, RelationReport>> checks;
  for (int node = 0; node <= n; ++node)
    checks.push_back({"quadratic_T" + std::to_string(node),
                      check_quadratic(*s.generic_ctx, node, 2)});
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      checks.push_back({"braid_T" + std::to_string(a) + "_T" + std::to_string(b),
                        check_braid(*s.generic_ctx, a, b, 1)});
  {
    RelationReport r{true, ""};
    auto box = coord_box(n, 1);
    for (const IVec& lam : box) {
      for (const IVec& mu : box) {
        for (int i = 1; i <= n && r.ok; ++i) r = check_bernstein_lusztig(*s.generic_ctx, i, lam, mu);
        if (!r.ok) break;
      }
      if (!r.ok) break;
    }
    checks.push_back({"bernstein_lusztig", r});
  }
  {
    RelationReport r{true, ""};
    for (const IVec& lam : s.job_weights(cfg)) {
      GroupAlgebraElement e = s.macdonald->E(lam);
      if (!e.coeff(lam).is_one()) {
        r = {false, "E not monic"};
        break;
      }
      if (s.rs->nonreduced) {
        for (const auto& [w, c] : e.terms()) {
          (void)w;
          if (c.mentions(s.orbits->p_t02)) {
            r = {false, "E mentions t02"};
            break;
          }
        }
      }
      auto one = s.macdonald->collapse_all_one(e);
      if (one.size() != 1 || one.begin()->first != lam || one.begin()->second != 1) {
        r = {false, "t=1 collapse failed"};
        break;
      }
      if (!(s.macdonald->limit_t_infinity(e, lam) == s.macdonald->demazure_limit(lam))) {
        r = {false, "Demazure limit mismatch"};
        break;
      }
    }
    checks.push_back({"macdonald_oracles", r});
  }
  if (s.satake) {
    RelationReport r{true, ""};
    for (const IVec& lam : s.job_weights(cfg)) {
      GroupAlgebraElement lhs = s.satake->satake_E(lam);
      GroupAlgebraElement rhs =
          s.satake->specialize_params(s.macdonald->E(lam)).scaled(s.satake->j_tau(lam));
      if (!(lhs == rhs)) {
        r = {false, "thm2 identity failed"};
        break;
      }
    }
    checks.push_back({"thm2_cross_path", r});
  }
  // orbit structure sanity
  {
    RelationReport r{true, ""};
    if (s.rs->nonreduced) {
      int expect = s.rs->rank == 1 ? 4 : 5;
      if (s.orbits->num_orbits != expect) r = {false, "unexpected orbit count"};
    }
    checks.push_back({"orbit_table", r});
  }

  Json doc;
  doc["kind"] = "verify";
  doc["type"] = cfg.type_label;
  doc["rank"] = cfg.rank;
  doc["lattice"] = cfg.lattice;
  bool all = true;
  Json rows = Json::array();
  for (auto& [name, rep] : checks) {
    rows.push_back({{"name", name}, {"pass", rep.ok}, {"detail", rep.detail}});
    all = all && rep.ok;
  }
  doc["checks"] = rows;
  doc["pass"] = all;
  write_output(cfg, doc.dump(1) + "\n");
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q->infinity Macdonald / Satake engine"};
  app.require_subcommand(1);

  CliFlags fl;
  auto add_common = [&](CLI::App* sub, bool with_char) {
    sub->add_option("--config", fl.config, "JSON config file (exclusive with other flags)");
    auto* t = sub->add_option("--type", fl.type, "root system type (A,B,C,D,E,F,G,BC)");
    auto* r = sub->add_option("--rank", fl.rank, "rank");
    auto* l = sub->add_option("--lattice", fl.lattice, "lattice selector P|Q");
    auto* lm = sub->add_option("--lambda", fl.lambda, "weight, comma-separated coords (repeatable)");
    auto* b = sub->add_option("--box", fl.box, "all weights with |coords| <= box");
    auto* tu = sub->add_option("--tau", fl.tau, "residue cardinality (numeric)");
    auto* dd = sub->add_option("--d", fl.d, "Tits d(a_i) for nodes 0..n");
    auto* d2 = sub->add_option("--d2", fl.d2, "Tits d(2a_i) for nodes 0..n");
    auto* o = sub->add_option("--out", fl.out, "output path (default stdout)");
    auto* f = sub->add_option("--format", fl.format, "json|csv");
    auto* j = sub->add_option("--jobs", fl.jobs, "worker threads");
    std::vector<CLI::Option*> opts{t, r, l, lm, b, tu, dd, d2, o, f, j};
    if (with_char) {
      opts.push_back(sub->add_option("--char", fl.char_exact,
                                     "exact character value re[,im] per basis vector"));
      opts.push_back(sub->add_option("--char-float", fl.char_float,
                                     "float character values re im re im ..."));
    }
    sub->callback([&fl, opts] {
      for (auto* o2 : opts)
        if (o2->count() > 0) fl.flags_used = true;
    });
  };

  auto* cE = app.add_subcommand("E", "compute nonsymmetric Macdonald polynomials E_lambda");
  add_common(cE, false);
  auto* cS = app.add_subcommand("satake", "compute Satake basis tables");
  add_common(cS, false);
  auto* cC = app.add_subcommand("coeff", "compute matrix-coefficient tables");
  add_common(cC, true);
  auto* cV = app.add_subcommand("verify", "run the verification suite");
  add_common(cV, false);
  cV->add_flag("--corrupt-t0", fl.corrupt_t0,
               "test hook: corrupt the T0 normalization (negative control)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cE)) return cmd_E(fl);
    if (app.got_subcommand(cS)) return cmd_satake(fl);
    if (app.got_subcommand(cC)) return cmd_coeff(fl);
    if (app.got_subcommand(cV)) return cmd_verify(fl);
  } catch (const macsat::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const macsat::LatticeError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const macsat::ConstructionError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
