#include "dfm/cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dfm/report.hpp"

#ifndef DFMAT_VERSION
#define DFMAT_VERSION "0.0.0"
#endif

namespace dfm {

namespace {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

struct Options {
  bool json = false;
  bool timing = false;
  std::string file;
  std::optional<int> root_bound;
  std::vector<std::string> exprs;
  // newton-experiment
  std::size_t n = 3, r = 3, trials = 50;
  std::uint64_t seed = 0;
  bool near_type2 = false;
  bool verbose = false;
  newton::NewtonConfig newton;
  double perturbation = 1e-2;
  // make-type2
  std::string f_list;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int check_commute(const Options& o) {
    auto [m, digest] = load(o.file);
    const bool ok = commutes_with_derivative(m);
    if (o.json) {
      emit("check-commute", digest, Json{{"n", m.rows()}, {"commutes_c1", ok}}, o);
    } else {
      out_ << "M M' " << (ok ? "==" : "!=") << " M' M (" << (ok ? "commutes" : "does not commute") << ")\n";
    }
    return ok ? kExitOk : kExitNotCommuting;
  }

  int classify_cmd(const Options& o) {
    auto [m, digest] = load(o.file);
    TypeReport rep = classify(m);
    if (o.json) {
      emit("classify", digest, to_json(rep), o);
      return kExitOk;
    }
    out_ << "n = " << rep.n << "\n";
    out_ << "M M' = M' M: " << (rep.commutes_c1 ? "yes" : "no") << "\n";
    out_ << "rank over F: " << rep.rank_over_F << "\n";
    out_ << "minimal polynomial: " << polyf_to_string(rep.minimal_polynomial) << "\n";
    out_ << "nilpotent: " << (rep.nilpotent ? "yes" : "no")
         << ", nonderogatory: " << (rep.nonderogatory ? "yes" : "no") << "\n";
    out_ << "Type 1: ";
    if (rep.type1) {
      out_ << "yes, M = sum f_i C_i with f = (";
      for (std::size_t k = 0; k < rep.type1->basis.size(); ++k) out_ << (k ? ", " : "") << rep.type1->basis[k].str();
      out_ << ")\n";
    } else {
      out_ << "no\n";
    }
    out_ << "Type 2: ";
    if (rep.type2) {
      out_ << "yes, f = " << vec_to_json(rep.type2->f).dump() << ", g = " << vec_to_json(rep.type2->g).dump() << "\n";
    } else {
      out_ << "no\n";
    }
    out_ << "Type 3: ";
    if (rep.type3) {
      out_ << "yes, h = " << rep.type3->h.str() << "\n";
    } else {
      out_ << "no\n";
    }
    if (!rep.type1 && !rep.type2 && !rep.type3) out_ << "none of Types 1/2/3\n";
    return kExitOk;
  }

  int decompose(const Options& o) {
    auto [m, digest] = load(o.file);
    const int bound = o.root_bound.value_or(default_root_bound(m));
    Decomposition dec = block_decompose(m, bound);
    if (o.json) {
      Json j = to_json(dec);
      j["root_bound"] = bound;
      emit("decompose", digest, j, o);
      return kExitOk;
    }
    out_ << dec.blocks.blocks.size() << " block(s), root bound " << bound << "\n";
    out_ << "T = " << matrix_to_json(dec.blocks.T).dump() << "\n";
    for (std::size_t k = 0; k < dec.blocks.blocks.size(); ++k) {
      out_ << "block " << k + 1 << ": size " << dec.blocks.blocks[k].rows()
           << ", minimal polynomial " << polyf_to_string(dec.blocks.block_min_polys[k]) << "\n";
      out_ << "  E = " << matrix_to_json(dec.projectors.projectors[k]).dump() << "\n";
      out_ << "  M = " << matrix_to_json(dec.blocks.blocks[k]).dump() << "\n";
    }
    return kExitOk;
  }

  int diagonalize(const Options& o) {
    auto [m, digest] = load(o.file);
    const int bound = o.root_bound.value_or(default_root_bound(m));
    auto d = k_diagonalize(m, bound);
    if (o.json) {
      emit("diagonalize", digest, diagonalization_json(d, bound), o);
      return kExitOk;
    }
    if (!d) {
      out_ << "not K-diagonalizable within root bound " << bound << "\n";
      return kExitOk;
    }
    out_ << "T = " << matrix_to_json(d->T).dump() << "\n";
    out_ << "diagonal = " << vec_to_json(d->diagonal).dump() << "\n";
    return kExitOk;
  }

  int wronskian(const Options& o) {
    std::vector<RatFunc> fs;
    std::string joined;
    for (const auto& e : o.exprs) {
      fs.push_back(parse_ratfunc(e));
      joined += e;
      joined += '\n';
    }
    IndependenceReport rep = constant_rank(fs);
    if (o.json) {
      emit("wronskian", sha256_hex(joined), to_json(rep, fs), o);
      return kExitOk;
    }
    out_ << "rank over K: " << rep.rank << "\n";
    out_ << "basis indices:";
    for (auto i : rep.basis_indices) out_ << " " << i;
    out_ << "\nWronskian of basis: " << rep.wronskian.str() << "\n";
    return kExitOk;
  }

  int experiment(const Options& o) {
    newton::NewtonConfig cfg = o.newton;
    cfg.seed = o.seed;
    if (!(cfg.residual_tol > 0) || !(cfg.commute_tol > 0)) throw CLI::ValidationError("tolerances must be > 0");
    if (!(cfg.step_damping > 0 && cfg.step_damping <= 1)) throw CLI::ValidationError("--damping must be in (0, 1]");
    newton::ExperimentOptions eo;
    eo.near_type2 = o.near_type2;
    eo.perturbation = o.perturbation;
    eo.keep_trials = o.verbose;
    auto s = newton::run_experiment(o.n, o.r, o.trials, cfg, eo);
    std::ostringstream params;
    params << "n=" << o.n << ";r=" << o.r << ";trials=" << o.trials << ";seed=" << o.seed
           << ";near_type2=" << o.near_type2 << ";max_iters=" << cfg.max_iters
           << ";residual_tol=" << cfg.residual_tol << ";commute_tol=" << cfg.commute_tol
           << ";damping=" << cfg.step_damping << ";perturbation=" << o.perturbation;
    if (o.json) {
      emit("newton-experiment", sha256_hex(params.str()), to_json(s), o);
      return kExitOk;
    }
    out_ << "n = " << s.n << ", r = " << s.r << ", trials = " << s.trials << ", seed = " << s.seed
         << (s.near_type2 ? " (near type 2)" : "") << "\n";
    out_ << "converged: " << s.converged_count << "/" << s.trials << " (rate " << s.convergence_rate << ")\n";
    out_ << "type 1 among converged: " << s.type1_among_converged << "/" << s.converged_count << "\n";
    out_ << "breakdowns: " << s.breakdown_count << "\n";
    out_ << "residual max " << s.residual_max << ", commutator max " << s.commutator_max << "\n";
    return kExitOk;
  }

  int make_type2_cmd(const Options& o) {
    VecF f;
    std::stringstream ss(o.f_list);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(parse_ratfunc(item));
    if (f.empty()) throw CLI::ValidationError("--f must list at least one expression");
    out_ << serialize_matrix(make_type2(f, o.seed));
    return kExitOk;
  }

 private:
  std::pair<MatF, std::string> load(const std::string& path) {
    std::string text = read_file(path);
    return {parse_matrix_json(text), sha256_hex(text)};
  }

  void emit(const std::string& command, const std::string& digest, Json result, const Options& o) {
    Json j;
    j["tool"] = "dfmat";
    j["version"] = DFMAT_VERSION;
    j["command"] = command;
    j["input_digest"] = digest;
    j["result"] = std::move(result);
    if (o.timing) {
      j["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }
    out_ << j.dump(2) << "\n";
  }

  std::ostream& out_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of rational-function matrices that commute with their derivative", "dfmat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", DFMAT_VERSION);
  Options o;

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit a JSON report");
    sub->add_flag("--timing", o.timing, "Include wall-clock timing in the JSON report");
  };

  auto* cc = app.add_subcommand("check-commute", "Exit 0 if M M' = M' M, 2 otherwise");
  cc->add_option("file", o.file, "Matrix file")->required();
  add_json(cc);

  auto* cl = app.add_subcommand("classify", "Types 1/2/3 with witnesses");
  cl->add_option("file", o.file, "Matrix file")->required();
  add_json(cl);

  auto* de = app.add_subcommand("decompose", "Constant projector block decomposition");
  de->add_option("file", o.file, "Matrix file")->required();
  de->add_option("--root-bound", o.root_bound, "Degree bound for roots in Q(t)")->check(CLI::NonNegativeNumber);
  add_json(de);

  auto* di = app.add_subcommand("diagonalize", "Diagonalization by a constant similarity");
  di->add_option("file", o.file, "Matrix file")->required();
  di->add_option("--root-bound", o.root_bound, "Degree bound for roots in Q(t)")->check(CLI::NonNegativeNumber);
  add_json(di);

  auto* wr = app.add_subcommand("wronskian", "Linear independence over the constants");
  wr->add_option("exprs", o.exprs, "Rational functions of t")->required();
  add_json(wr);

  auto* ne = app.add_subcommand("newton-experiment", "Gauss-Newton on the polynomial commutator equations");
  ne->add_option("--n", o.n, "Matrix size")->check(CLI::PositiveNumber);
  ne->add_option("--r", o.r, "Polynomial degree")->check(CLI::PositiveNumber);
  ne->add_option("--trials", o.trials, "Number of random starts")->check(CLI::PositiveNumber);
  ne->add_option("--seed", o.seed, "Random seed");
  ne->add_flag("--near-type2", o.near_type2, "Start near type 2 matrices");
  ne->add_option("--perturbation", o.perturbation, "Noise scale for --near-type2 starts");
  ne->add_option("--max-iters", o.newton.max_iters, "Iteration cap")->check(CLI::NonNegativeNumber);
  ne->add_option("--residual-tol", o.newton.residual_tol, "Convergence tolerance");
  ne->add_option("--commute-tol", o.newton.commute_tol, "Tolerance for commuting coefficients");
  ne->add_option("--damping", o.newton.step_damping, "Step damping in (0, 1]");
  ne->add_flag("--verbose", o.verbose, "Include per-trial records");
  add_json(ne);

  auto* mk = app.add_subcommand("make-type2", "Emit a type 2 matrix file f g^T");
  mk->add_option("--f", o.f_list, "Comma-separated entries of f")->required();
  mk->add_option("--seed", o.seed, "Seed for the choice of g");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Runner run(out, err);
  try {
    if (*cc) return run.check_commute(o);
    if (*cl) return run.classify_cmd(o);
    if (*de) return run.decompose(o);
    if (*di) return run.diagonalize(o);
    if (*wr) return run.wronskian(o);
    if (*ne) return run.experiment(o);
    if (*mk) return run.make_type2_cmd(o);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace dfm
