#pragma once

// Command-line front end. Every subcommand reads and writes the certificate
// JSON format; exit codes are
//   0  success / certificate valid
//   1  domain failure (invalid certificate, violated precondition), JSON error on stdout
//   2  internal inconsistency (engine disagreement, failed postcondition)
//   64 usage error

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "core.hpp"
#include "generate.hpp"
#include "layers.hpp"
#include "oracle.hpp"
#include "shrink.hpp"
#include "tensor.hpp"
#include "verify.hpp"

namespace orsrs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitInternal = 2;
inline constexpr int kExitUsage = 64;

namespace detail {

class IoError : public Error {
 public:
  using Error::Error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("failed writing " + path);
}

inline void emit(const Certificate& c, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << serialize(c);
  else
    write_file(path, serialize(c));
}

inline std::string error_json(const std::string& kind, const std::string& detail) {
  return nlohmann::json{{"error", kind}, {"detail", detail}}.dump() + "\n";
}

// "out.json" -> "out.s3.json"
inline std::string layer_path(const std::string& path, std::size_t s) {
  std::filesystem::path p(path);
  std::string name = p.stem().string() + ".s" + std::to_string(s) + p.extension().string();
  return (p.parent_path() / name).string();
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ORS/RS certificate toolkit"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for verify/tensor/oracle")->check(CLI::Range(1u, 1024u));
  app.fallthrough();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check the ORS or RS property");
  std::string kind = "ors";
  std::string engine = "fast";
  std::string verify_in;
  verify_cmd->add_option("--kind", kind)->check(CLI::IsMember({"ors", "rs"}))->required();
  verify_cmd->add_option("--engine", engine)->check(CLI::IsMember({"naive", "fast", "both"}));
  verify_cmd->add_option("cert", verify_in)->required();

  // tensor
  auto* tensor_cmd = app.add_subcommand("tensor", "Tensor power of an ORS certificate at one label-sum layer");
  std::size_t tensor_k = 0;
  std::optional<std::size_t> tensor_s;
  bool all_layers = false;
  bool no_verify = false;
  bool allow_large = false;
  std::string tensor_in;
  std::string tensor_out;
  tensor_cmd->add_option("--k", tensor_k)->required()->check(CLI::PositiveNumber);
  auto* s_opt = tensor_cmd->add_option("--s", tensor_s);
  tensor_cmd->add_flag("--all-layers", all_layers)->excludes(s_opt);
  tensor_cmd->add_flag("--no-verify", no_verify);
  tensor_cmd->add_flag("--allow-large", allow_large, "Lift the 10^7 vertex/edge caps");
  tensor_cmd->add_option("in", tensor_in)->required();
  tensor_cmd->add_option("-o,--output", tensor_out);

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "Delete vertices down to exactly N, then trim to uniform size");
  Vertex fit_n = 0;
  std::vector<Vertex> fit_vertices;
  std::string fit_in;
  std::string fit_out;
  fit_cmd->add_option("--n", fit_n)->required()->check(CLI::PositiveNumber);
  fit_cmd->add_option("--vertices", fit_vertices, "Explicit deletion set")->delimiter(',');
  fit_cmd->add_option("in", fit_in)->required();
  fit_cmd->add_option("-o,--output", fit_out);

  // delete
  auto* delete_cmd = app.add_subcommand("delete", "Delete vertices (output is ragged)");
  std::vector<Vertex> delete_vertices_arg;
  std::string delete_in;
  std::string delete_out;
  delete_cmd->add_option("--vertices", delete_vertices_arg)->delimiter(',')->required();
  delete_cmd->add_option("in", delete_in)->required();
  delete_cmd->add_option("-o,--output", delete_out);

  // trim
  auto* trim_cmd = app.add_subcommand("trim", "Trim a ragged certificate to equal matching sizes");
  std::optional<std::size_t> trim_rmin;
  std::string trim_in;
  std::string trim_out;
  trim_cmd->add_option("--rmin", trim_rmin);
  trim_cmd->add_option("in", trim_in)->required();
  trim_cmd->add_option("-o,--output", trim_out);

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate certificates");
  gen_cmd->require_subcommand(1);
  std::string gen_out;
  gen_cmd->add_option("-o,--output", gen_out);
  auto* gen_behrend = gen_cmd->add_subcommand("behrend", "RS graph from a 3-AP-free set in [1,m]");
  Vertex behrend_m = 0;
  std::string behrend_set = "exhaustive";
  gen_behrend->add_option("--m", behrend_m)->required()->check(CLI::PositiveNumber);
  gen_behrend->add_option("--set", behrend_set)->check(CLI::IsMember({"greedy", "exhaustive"}));
  gen_behrend->add_option("-o,--output", gen_out);
  auto* gen_complete = gen_cmd->add_subcommand("complete", "K_n as singleton matchings");
  Vertex complete_n = 0;
  gen_complete->add_option("--n", complete_n)->required();
  gen_complete->add_option("-o,--output", gen_out);
  auto* gen_random = gen_cmd->add_subcommand("random", "Seeded random edge-disjoint decomposition");
  Vertex random_n = 0;
  std::size_t random_r = 0;
  std::size_t random_t = 0;
  std::uint64_t random_seed = 0;
  gen_random->add_option("--n", random_n)->required();
  gen_random->add_option("--r", random_r)->required();
  gen_random->add_option("--t", random_t)->required();
  gen_random->add_option("--seed", random_seed)->required();
  gen_random->add_option("-o,--output", gen_out);

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact ORS(n,r) or RS(n,r) by exhaustive search");
  Vertex oracle_n = 0;
  std::size_t oracle_r = 0;
  std::string oracle_kind;
  std::optional<double> budget_sec;
  std::string oracle_out;
  oracle_cmd->add_option("--n", oracle_n)->required();
  oracle_cmd->add_option("--r", oracle_r)->required();
  oracle_cmd->add_option("--kind", oracle_kind)->required()->check(CLI::IsMember({"ors", "rs"}));
  oracle_cmd->add_option("--budget-sec", budget_sec)->check(CLI::PositiveNumber);
  oracle_cmd->add_option("-o,--output", oracle_out, "Witness certificate path");

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Print n, t, r, r/n and edge count");
  std::string stats_in;
  stats_cmd->add_option("cert", stats_in)->required();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("orsrs");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*verify_cmd) {
      const Certificate c = load_certificate(detail::read_file(verify_in));
      const Property p = kind == "ors" ? Property::ors : Property::rs;
      VerifyReport report;
      if (engine == "both") {
        const CrossCheck cc = cross_check(c, p, threads);
        if (!cc.agree()) {
          out << nlohmann::json{{"error", "engine disagreement"},
                                {"naive", cc.naive.valid() ? nlohmann::json(nullptr) : to_json(*cc.naive.witness)},
                                {"fast", cc.fast.valid() ? nlohmann::json(nullptr) : to_json(*cc.fast.witness)}}
                     .dump()
              << "\n";
          return kExitInternal;
        }
        report = cc.fast;
      } else {
        report = verify(c, p, engine == "naive" ? Engine::naive : Engine::fast, threads);
      }
      if (report.valid()) return kExitOk;
      out << to_json(*report.witness).dump() << "\n";
      return kExitDomain;
    }

    if (*tensor_cmd) {
      const Certificate c = load_certificate(detail::read_file(tensor_in));
      const LayerTable table(c.matching_count(), tensor_k);
      err << "s\tcount\n";
      for (std::size_t s = table.min_sum(); s <= table.max_sum(); ++s) err << s << '\t' << table.count(s) << '\n';
      err << "s*\t" << table.best_sum() << '\n';

      TensorOptions opt;
      opt.k = tensor_k;
      opt.verify_output = !no_verify;
      opt.threads = threads;
      opt.allow_large = allow_large;
      if (all_layers) {
        for (std::size_t s = table.min_sum(); s <= table.max_sum(); ++s) {
          opt.s = s;
          const Certificate product = tensor_power(c, opt);
          detail::emit(product, tensor_out.empty() ? "" : detail::layer_path(tensor_out, s), out);
        }
      } else {
        opt.s = tensor_s;
        detail::emit(tensor_power(c, opt), tensor_out, out);
      }
      return kExitOk;
    }

    if (*fit_cmd) {
      const Certificate c = load_certificate(detail::read_file(fit_in));
      std::optional<std::vector<Vertex>> doomed;
      if (!fit_vertices.empty()) doomed = fit_vertices;
      detail::emit(fit_to_n(c, fit_n, doomed), fit_out, out);
      return kExitOk;
    }

    if (*delete_cmd) {
      const Certificate c = load_certificate(detail::read_file(delete_in));
      detail::emit(delete_vertices(c, delete_vertices_arg), delete_out, out);
      return kExitOk;
    }

    if (*trim_cmd) {
      const Certificate c = load_certificate(detail::read_file(trim_in));
      detail::emit(trim_to_uniform(c, trim_rmin), trim_out, out);
      return kExitOk;
    }

    if (*gen_cmd) {
      if (*gen_behrend) {
        const APFreeSet set = behrend_set == "greedy" ? ap_free_greedy(behrend_m) : ap_free_exhaustive(behrend_m);
        detail::emit(behrend_rs(set), gen_out, out);
      } else if (*gen_complete) {
        detail::emit(complete_graph_singletons(complete_n), gen_out, out);
      } else {
        detail::emit(random_ordered_decomposition(random_n, random_r, random_t, random_seed), gen_out, out);
      }
      return kExitOk;
    }

    if (*oracle_cmd) {
      OracleOptions opt;
      opt.threads = threads;
      if (budget_sec) opt.budget = std::chrono::duration<double>(*budget_sec);
      const OracleResult res =
          max_t_exhaustive(oracle_n, oracle_r, oracle_kind == "ors" ? Property::ors : Property::rs, opt);
      out << nlohmann::json{{"t_max", res.t_max}}.dump() << "\n";
      if (!oracle_out.empty() && res.witness) detail::write_file(oracle_out, serialize(*res.witness));
      return kExitOk;
    }

    if (*stats_cmd) {
      const Stats s = stats(load_certificate(detail::read_file(stats_in)));
      nlohmann::ordered_json j;
      j["n"] = s.n;
      j["t"] = s.t;
      j["r"] = s.r;
      j["fraction"] = std::to_string(s.fraction_num) + "/" + std::to_string(s.fraction_den);
      j["edges"] = s.edges;
      if (s.ragged) j["ragged"] = true;
      out << j.dump() << "\n";
      return kExitOk;
    }
  } catch (const CertificateError& e) {
    out << detail::error_json(CertificateError::name(e.kind()), e.detail());
    return kExitDomain;
  } catch (const PreconditionError& e) {
    out << detail::error_json("precondition", e.what());
    return kExitDomain;
  } catch (const detail::IoError& e) {
    out << detail::error_json("io", e.what());
    return kExitDomain;
  } catch (const PostconditionError& e) {
    out << detail::error_json("postcondition", e.what());
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace orsrs::cli
