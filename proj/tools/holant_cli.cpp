// Command-line front end: classify, approx, exact, coeffs, zeros, gadget, gen.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <boost/crc.hpp>

#include "holant/barvinok.hpp"
#include "holant/classifier.hpp"
#include "holant/coeffs.hpp"
#include "holant/gadget.hpp"
#include "holant/graph.hpp"
#include "holant/oracle.hpp"
#include "holant/serialize.hpp"
#include "holant/stability.hpp"

using namespace holant;

namespace {

enum Exit { kOk = 0, kError = 1, kGuard = 2, kFerro = 3, kPM = 4, kTypeI = 5 };

struct Common {
  bool quiet = false;
  bool timing = false;
  unsigned threads = 0;
};

std::string crc32_hex(const std::string& data) {
  boost::crc_32_type crc;
  crc.process_bytes(data.data(), data.size());
  std::ostringstream os;
  os << std::hex << std::setw(8) << std::setfill('0') << crc.checksum();
  return os.str();
}

class Report {
 public:
  Report(std::string command, const Common& common)
      : common_(common), start_(std::chrono::steady_clock::now()) {
    json_["command"] = std::move(command);
    json_["inputs"] = Json::object();
  }

  std::string input(const std::string& role, const std::string& path) {
    std::string content = read_file(path);
    json_["inputs"][role] = Json{{"path", path}, {"crc32", crc32_hex(content)}};
    return content;
  }

  void emit(const Json& result, const std::string& quiet_line) {
    if (common_.quiet) {
      std::cout << quiet_line << '\n';
      return;
    }
    json_["result"] = result;
    if (common_.timing) {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
      json_["wall_ms"] = ms;
    }
    std::cout << json_.dump(2) << '\n';
  }

 private:
  const Common& common_;
  std::chrono::steady_clock::time_point start_;
  Json json_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

int outcome_exit(const ClassificationOutcome& o) {
  if (std::holds_alternative<outcome::FerroIsing>(o)) return kFerro;
  if (std::holds_alternative<outcome::PMEquivalent>(o)) return kPM;
  if (std::holds_alternative<outcome::TypeI>(o)) return kTypeI;
  return kOk;
}

OracleOptions oracle_options(const Common& c, bool force) {
  return OracleOptions{force, c.threads > 0 ? c.threads : default_threads()};
}

Multigraph load_graph(Report& report, const std::string& path) {
  std::istringstream in(report.input("graph", path));
  return read_edge_list(in);
}

Json exact_value(const ParsedSignature& sig, const Multigraph& g, const OracleOptions& opts, std::string& quiet) {
  if (sig.exact) {
    const Rational z = brute_force_Z(g, *sig.exact, opts);
    quiet = z.str();
    return Json{{"Z", z.str()}, {"Z_float", z.convert_to<double>()}, {"mode", "rational"}};
  }
  const double z = brute_force_Z(g, sig.numeric, opts);
  quiet = fmt(z);
  return Json{{"Z", z}, {"Z_float", z}, {"mode", "double"}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holant partition functions: classification, approximation and exact oracles"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--quiet", common.quiet, "Print only the main scalar");
  app.add_flag("--timing", common.timing, "Add wall time to the JSON report");
  app.add_option("--threads", common.threads, "Oracle worker threads (default: HOLANT_THREADS or 1)");

  std::string sig_path, graph_path, gadget_path, out_path, engine = "naive", kind, family, edge_sig;
  double eps = 0.05;
  int k = 4, n = 0, d = 3, family_n = 0;
  std::uint64_t seed = 0;
  bool force = false, debug = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a signature");
  classify_cmd->add_option("signature", sig_path, "Signature file")->required();

  auto* approx_cmd = app.add_subcommand("approx", "Approximate Z(G; f)");
  approx_cmd->add_option("signature", sig_path)->required();
  approx_cmd->add_option("graph", graph_path)->required();
  approx_cmd->add_option("--eps", eps, "Relative accuracy in (0,1)");

  auto* exact_cmd = app.add_subcommand("exact", "Exact Z(G; f) by enumeration");
  exact_cmd->add_option("signature", sig_path)->required();
  exact_cmd->add_option("graph", graph_path)->required();
  exact_cmd->add_flag("--force", force, "Allow up to 40 edges");

  auto* coeffs_cmd = app.add_subcommand("coeffs", "Low-order coefficients Z_0..Z_k of P_G");
  coeffs_cmd->add_option("signature", sig_path)->required();
  coeffs_cmd->add_option("graph", graph_path)->required();
  coeffs_cmd->add_option("--k", k, "Truncation order");
  coeffs_cmd->add_option("--engine", engine, "naive or additive")->check(CLI::IsMember({"naive", "additive"}));
  coeffs_cmd->add_flag("--debug", debug, "Include per-class additive contributions");

  auto* zeros_cmd = app.add_subcommand("zeros", "CSV of the roots of P_G");
  zeros_cmd->add_option("signature", sig_path)->required();
  zeros_cmd->add_option("graph", graph_path);
  zeros_cmd->add_option("--family", family, "Generated graph family instead of a file")->check(CLI::IsMember({"cycle"}));
  zeros_cmd->add_option("--n", family_n, "Family size");
  zeros_cmd->add_flag("--force", force, "Allow up to 40 edges");

  auto* gadget_cmd = app.add_subcommand("gadget", "Effective signature of a gadget");
  gadget_cmd->add_option("gadget", gadget_path, "Gadget JSON")->required();
  gadget_cmd->add_option("--edge-signature", edge_sig, "Override as a JSON array, e.g. [1,0,0.3]");

  auto* gen_cmd = app.add_subcommand("gen", "Write a graph file");
  gen_cmd->add_option("--kind", kind)->required()->check(
      CLI::IsMember({"cycle", "complete", "petersen", "random-regular"}));
  gen_cmd->add_option("--n", n);
  gen_cmd->add_option("--d", d);
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("-o,--output", out_path, "Output file (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) {
      Report report("classify", common);
      const ParsedSignature sig = parse_signature(report.input("signature", sig_path));
      const ClassificationOutcome o = classify(sig.numeric);
      report.emit(outcome_to_json(o), tag_name(o));
      return outcome_exit(o);
    }

    if (*approx_cmd) {
      Report report("approx", common);
      const ParsedSignature sig = parse_signature(report.input("signature", sig_path));
      const Multigraph g = load_graph(report, graph_path);
      const ClassificationOutcome o = classify(sig.numeric);
      Json result{{"classification", outcome_to_json(o)}};
      if (std::holds_alternative<outcome::StableTransform>(o)) {
        const ApproxResult r = approximate_Z(g, sig.numeric, eps);
        result["approximation"] = approx_result_to_json(r);
        report.emit(result, fmt(r.estimate));
        return kOk;
      }
      if (std::holds_alternative<outcome::IdenticallyZero>(o)) {
        result["approximation"] = Json{{"estimate", 0.0}};
        report.emit(result, "0");
        return kOk;
      }
      if (std::holds_alternative<outcome::ExactPolyTime>(o) || std::holds_alternative<outcome::Degenerate>(o)) {
        if (g.m() > kOracleSoftEdgeLimit) {
          result["refusal"] = "exactly tractable class, but no polynomial-time routine is implemented and the "
                              "graph exceeds the 26-edge oracle guard";
          report.emit(result, "refused");
          return kGuard;
        }
        std::string quiet;
        result["exact"] = exact_value(sig, g, oracle_options(common, false), quiet);
        report.emit(result, quiet);
        return kOk;
      }
      if (std::holds_alternative<outcome::NoRecurrence>(o)) {
        result["refusal"] = "no second-order recurrence; outside the supported class";
        report.emit(result, "refused");
        return kGuard;
      }
      report.emit(result, tag_name(o));
      return outcome_exit(o);
    }

    if (*exact_cmd) {
      Report report("exact", common);
      const ParsedSignature sig = parse_signature(report.input("signature", sig_path));
      const Multigraph g = load_graph(report, graph_path);
      std::string quiet;
      const Json result = exact_value(sig, g, oracle_options(common, force), quiet);
      report.emit(result, quiet);
      return kOk;
    }

    if (*coeffs_cmd) {
      Report report("coeffs", common);
      const ParsedSignature sig = parse_signature(report.input("signature", sig_path));
      const Multigraph g = load_graph(report, graph_path);
      SymmetricSignature f = sig.numeric;
      if (!(f[0] > 0.0)) throw ArgumentError("coeffs: requires f_0 > 0 (the series is normalized by f_0)");
      const double scale = f[0];
      for (double& v : f.values) v /= scale;
      f[0] = 1.0;
      Json result{{"engine", engine}, {"k", k}, {"scale", scale}};
      ComplexPoly c;
      if (engine == "additive") {
        const AdditiveResult a = additive_power_sums_detailed(g, f, k);
        c = coeffs_from_power_sums(a.sums, k);
        if (debug) result["debug"] = additive_debug_json(a);
      } else {
        const auto z = naive_low_coeffs(g, f, k);
        c = ComplexPoly(k + 1);
        for (int j = 0; j <= k; ++j) c(j) = z[static_cast<std::size_t>(j)];
      }
      const PowerSums p = power_sums_from_coeffs(c, g.m());
      Json cj = Json::array(), pj = Json::array();
      std::string quiet;
      for (int j = 0; j <= k; ++j) {
        cj.push_back(c(j).real());
        pj.push_back(p.p(j).real());
        quiet += (j ? " " : "") + fmt(c(j).real());
      }
      result["coefficients"] = cj;
      result["power_sums"] = pj;
      report.emit(result, quiet);
      return kOk;
    }

    if (*zeros_cmd) {
      Common csv = common;
      Report report("zeros", csv);
      const ParsedSignature sig = parse_signature(report.input("signature", sig_path));
      Multigraph g;
      std::string id;
      if (!family.empty()) {
        g = cycle(family_n);
        id = "cycle" + std::to_string(family_n);
      } else if (!graph_path.empty()) {
        g = load_graph(report, graph_path);
        id = graph_path;
      } else {
        throw ArgumentError("zeros: give a graph file or --family cycle --n N");
      }
      const auto z = brute_force_coeffs(g, sig.numeric, oracle_options(common, force));
      ComplexPoly p(static_cast<Eigen::Index>(z.size()));
      for (std::size_t i = 0; i < z.size(); ++i) p(static_cast<Eigen::Index>(i)) = z[i];
      write_roots_csv(std::cout, find_roots(p), id);
      return kOk;
    }

    if (*gadget_cmd) {
      Report report("gadget", common);
      GadgetSpec spec = parse_gadget_json(Json::parse(report.input("gadget", gadget_path)));
      if (!edge_sig.empty()) {
        const Json b = Json::parse(edge_sig);
        if (!b.is_array() || b.size() != 3) throw ArgumentError("gadget: --edge-signature needs three entries");
        spec.edge_signature = BinarySignature{{b[0].get<double>(), b[1].get<double>(), b[2].get<double>()}};
      }
      const ComplexSignature eff = compose_gadget(spec.gadget, spec.edge_signature);
      std::string quiet;
      for (int i = 0; i <= eff.arity(); ++i) quiet += (i ? " " : "") + fmt(eff[i].real());
      report.emit(signature_to_json(eff), quiet);
      return kOk;
    }

    if (*gen_cmd) {
      Multigraph g;
      if (kind == "cycle") {
        g = cycle(n);
      } else if (kind == "complete") {
        g = complete(n);
      } else if (kind == "petersen") {
        g = petersen();
      } else {
        const RandomRegular r = random_regular(n, d, seed);
        if (r.multigraph) std::cerr << "warning: kept a multigraph sample after 1000 rejections\n";
        g = r.graph;
      }
      if (out_path.empty()) {
        write_edge_list(std::cout, g);
      } else {
        std::ofstream out(out_path);
        if (!out) throw ArgumentError("cannot write '" + out_path + "'");
        write_edge_list(out, g);
      }
      return kOk;
    }
  } catch (const GuardError& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kOk;
}
