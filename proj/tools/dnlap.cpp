// Command-line front end: graph files in, JSON run reports out.
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dnlap/audit.hpp"
#include "dnlap/combinatorial.hpp"
#include "dnlap/comparisons.hpp"
#include "dnlap/curvature.hpp"
#include "dnlap/graph.hpp"
#include "dnlap/graph_io.hpp"
#include "dnlap/operators.hpp"
#include "dnlap/report.hpp"
#include "dnlap/rigidity.hpp"

namespace {

using dnlap::Json;

constexpr const char* kToolVersion = "0.1.0";

enum Exit { kOk = 0, kUsage = 1, kFails = 2, kNotApplicable = 3, kInvalidGraph = 4 };

const char* kTheoremHelp =
    "Comparison certificates (--theorems):\n"
    "  NeuVsLap                nu_i >= mu_i\n"
    "  DiriVsInteriorTwoSided  mu_i(Omega) + min Deg_b <= lambda_i <= mu_i(Omega) + max Deg_b\n"
    "  NeuVsInterior           nu_i >= mu_i(Omega)\n"
    "  DiriVsNeuTwoSided       nu_i + s_1^2 <= lambda_i <= nu_i + s_max^2\n"
    "  LapVsDiri               mu_{i+|B|} >= lambda_i, never equal at every i\n"
    "Optional families: LichnerowiczBE (nu_2, lambda_2 >= nK/(n-1) [+ ...]),\n"
    "  LichnerowiczOllivier (nu_2, lambda_2 >= kappa [+ ...]),\n"
    "  FiedlerType (2e(1 - cos(pi/N)) bounds), FriedmanType (path-eigenvalue bounds).\n";

const char* kRigidityHelp =
    "Rigidity characterizations (--theorem):\n"
    "  NeuVsLap             nu_i = mu_i for all i  <=>  w = rho m m on B x Omega + spectral bound\n"
    "  DiriVsInterior       two-sided equality     <=>  Deg_b constant on Omega\n"
    "  NeuVsInterior        nu_i = mu_i(Omega)     <=>  one interior neighbour per boundary vertex\n"
    "  DiriVsNeu            two-sided equality     <=>  one neighbour each and constant s(z)\n"
    "  LapVsDiri            equality except j      =>   j components, rho-factorization, lambda levels\n"
    "                       (iff with constant rho)\n"
    "  UnitWeightCorollary  LapVsDiri pattern on unit-weight graphs\n"
    "  NormalizedCorollary  LapVsDiri pattern on normalized graphs\n"
    "Exit: 0 conclusion true, 2 false, 3 unsupported pattern or not applicable.\n";

struct Loaded {
  dnlap::Graph graph;
  std::string digest;
};

// Throws Exit on failure after reporting to stderr.
Loaded load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    throw kInvalidGraph;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    Loaded l{dnlap::parse_graph(text), dnlap::sha256_hex(text)};
    if (auto err = dnlap::validate(l.graph)) {
      std::cerr << "error: invalid graph: " << err->message() << "\n";
      throw kInvalidGraph;
    }
    return l;
  } catch (const dnlap::GraphFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    throw kInvalidGraph;
  }
}

Json run_report(const std::string& subcommand, Json flags, const std::string& digest, Json results,
                std::optional<std::uint64_t> seed = std::nullopt) {
  Json r;
  r["tool_version"] = kToolVersion;
  r["invocation"] = {{"subcommand", subcommand}, {"flags", std::move(flags)}};
  r["graph_digest"] = digest.empty() ? Json(nullptr) : Json(digest);
  r["seed"] = seed ? Json(*seed) : Json(nullptr);
  r["results"] = std::move(results);
  return r;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

double parse_dimension(const std::string& s) {
  if (s == "inf" || s == "infinity") return INFINITY;
  std::size_t used = 0;
  const double n = std::stod(s, &used);
  if (used != s.size() || !(n > 1.0)) throw CLI::ValidationError("--n", "must be a number > 1 or 'inf'");
  return n;
}

std::string dimension_label(double n) {
  if (std::isinf(n)) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << n;
  return os.str();
}

void print_table(const std::vector<dnlap::ComparisonCertificate>& certs) {
  for (const auto& c : certs) {
    std::cout << dnlap::to_string(c.theorem) << ": " << dnlap::to_string(c.verdict);
    if (!c.note.empty()) std::cout << " (" << c.note << ")";
    std::cout << "\n";
    for (const auto& r : c.records) {
      std::ostringstream line;
      line.precision(10);
      line << "  i=" << r.index << "  " << r.item << "  value=" << r.value;
      if (r.lower) line << "  lower=" << *r.lower;
      if (r.upper) line << "  upper=" << *r.upper;
      line << "  margin=" << r.margin << (r.equality ? "  [equal]" : "");
      std::cout << line.str() << "\n";
    }
  }
}

int certificates_exit(const std::vector<dnlap::ComparisonCertificate>& certs) {
  bool any_applicable = false;
  for (const auto& c : certs) {
    if (c.verdict == dnlap::Verdict::FailsAt) return kFails;
    if (c.verdict == dnlap::Verdict::Holds) any_applicable = true;
  }
  return any_applicable ? kOk : kNotApplicable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet, Neumann and Laplacian spectra of weighted graphs with boundary"};
  app.require_subcommand(1);
  app.footer(std::string(kTheoremHelp) + "\n" + kRigidityHelp);

  std::string graph_path;
  double tol = dnlap::kDefaultTolerance;

  auto* validate_cmd = app.add_subcommand("validate", "Check the structural axioms of a graph with boundary");
  validate_cmd->add_option("--graph", graph_path, "graph JSON file")->required();

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues of -Delta, -Delta^D, -Delta^N, -Delta_Omega");
  spectrum_cmd->add_option("--graph", graph_path, "graph JSON file")->required();

  std::string theorems = "all";
  bool table = false;
  bool json = true;
  bool with_curvature = false;
  bool with_bounds = false;
  std::string dimension = "inf";
  auto* compare_cmd = app.add_subcommand("compare", "Certify the eigenvalue comparisons");
  compare_cmd->footer(kTheoremHelp);
  compare_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
  compare_cmd->add_option("--theorems", theorems, "'all' or a comma-separated list of theorem ids");
  compare_cmd->add_option("--tol", tol, "relative tolerance");
  compare_cmd->add_flag("--table", table, "human-readable table instead of JSON");
  compare_cmd->add_flag("--json", json, "JSON output (default)");
  compare_cmd->add_flag("--curvature", with_curvature, "add the six Lichnerowicz-type certificates");
  compare_cmd->add_flag("--bounds", with_bounds, "add Fiedler- and Friedman-type certificates (unit weight)");
  compare_cmd->add_option("--n", dimension, "Bakry-Emery dimension for --curvature, number > 1 or 'inf'");

  std::string theorem;
  double rigidity_tol = dnlap::kRigidityTolerance;
  auto* certify_cmd = app.add_subcommand("certify", "Evaluate a rigidity characterization");
  certify_cmd->footer(kRigidityHelp);
  certify_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
  certify_cmd->add_option("--theorem", theorem, "rigidity id")->required();
  certify_cmd->add_option("--tol", rigidity_tol, "cross-check tolerance");

  std::string kind = "be";
  std::string on = "g";
  auto* curvature_cmd = app.add_subcommand("curvature", "Bakry-Emery or Ollivier curvature");
  curvature_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
  curvature_cmd->add_option("--kind", kind, "be | ollivier")->check(CLI::IsMember({"be", "ollivier"}));
  curvature_cmd->add_option("--n", dimension, "Bakry-Emery dimension, number > 1 or 'inf'");
  curvature_cmd->add_option("--on", on, "g (whole graph) | interior (G restricted to Omega)")
      ->check(CLI::IsMember({"g", "interior"}));
  curvature_cmd->add_flag("--json", json, "JSON output (default)");

  std::string family = "all";
  auto* bounds_cmd = app.add_subcommand("bounds", "Fiedler- and Friedman-type bounds (unit weight)");
  bounds_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
  bounds_cmd->add_option("--family", family, "fiedler | friedman | all")
      ->check(CLI::IsMember({"fiedler", "friedman", "all"}));
  bounds_cmd->add_option("--tol", tol, "relative tolerance");

  dnlap::AuditConfig audit;
  audit.threads = std::max(1u, std::thread::hardware_concurrency());
  auto* audit_cmd = app.add_subcommand("random-audit", "Run every check on seeded random graphs");
  audit_cmd->add_option("--n", audit.count, "number of graphs");
  audit_cmd->add_option("--max-v", audit.max_vertices, "maximum vertex count")->check(CLI::Range(3, 64));
  audit_cmd->add_option("--seed", audit.seed, "generator seed");
  audit_cmd->add_option("--threads", audit.threads, "worker threads")->check(CLI::PositiveNumber);
  audit_cmd->add_option("--tol", audit.tol, "relative tolerance");
  audit_cmd->add_flag("--curvature", audit.curvature, "include Lichnerowicz-type certificates");
  audit_cmd->add_flag("--bounds", audit.bounds, "include Fiedler- and Friedman-type certificates");

  std::string op = "full";
  auto* dump_cmd = app.add_subcommand("dump-operator", "Print an operator matrix as row-major JSON");
  dump_cmd->add_option("--graph", graph_path, "graph JSON file")->required();
  dump_cmd->add_option("--operator", op, "full | dirichlet | neumann | interior | coupling")
      ->check(CLI::IsMember({"full", "dirichlet", "neumann", "interior", "coupling"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) {
      std::ifstream in(graph_path, std::ios::binary);
      if (!in) {
        std::cerr << "error: cannot open " << graph_path << "\n";
        return kInvalidGraph;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      Json result{{"type", "validation"}};
      int code = kOk;
      std::string digest = dnlap::sha256_hex(buf.str());
      try {
        const dnlap::Graph g = dnlap::parse_graph(buf.str());
        if (auto err = dnlap::validate(g)) {
          result["valid"] = false;
          result["error"] = dnlap::to_string(err->kind);
          result["vertices"] = err->vertices;
          result["message"] = err->message();
          code = kInvalidGraph;
        } else {
          result["valid"] = true;
        }
      } catch (const dnlap::GraphFormatError& e) {
        result["valid"] = false;
        result["error"] = "Format";
        result["message"] = e.what();
        code = kInvalidGraph;
      }
      emit(run_report("validate", {{"graph", graph_path}}, digest, Json::array({result})));
      return code;
    }

    if (*spectrum_cmd) {
      const Loaded l = load(graph_path);
      emit(run_report("spectrum", {{"graph", graph_path}}, l.digest,
                      Json::array({dnlap::to_json(dnlap::compute_spectra(l.graph))})));
      return kOk;
    }

    if (*compare_cmd) {
      const Loaded l = load(graph_path);
      const dnlap::GraphSpectra s = dnlap::compute_spectra(l.graph);
      std::vector<dnlap::TheoremId> wanted;
      if (theorems == "all") {
        wanted = {dnlap::TheoremId::NeuVsLap, dnlap::TheoremId::DiriVsInteriorTwoSided,
                  dnlap::TheoremId::NeuVsInterior, dnlap::TheoremId::DiriVsNeuTwoSided,
                  dnlap::TheoremId::LapVsDiri};
        if (with_curvature) {
          wanted.push_back(dnlap::TheoremId::LichnerowiczBE);
          wanted.push_back(dnlap::TheoremId::LichnerowiczOllivier);
        }
        if (with_bounds) {
          wanted.push_back(dnlap::TheoremId::FiedlerType);
          wanted.push_back(dnlap::TheoremId::FriedmanType);
        }
      } else {
        std::stringstream list(theorems);
        std::string item;
        while (std::getline(list, item, ',')) {
          auto id = dnlap::theorem_from_string(item);
          if (!id) {
            std::cerr << "error: unknown theorem id '" << item << "'\n" << kTheoremHelp;
            return kUsage;
          }
          wanted.push_back(*id);
        }
      }
      const double n = parse_dimension(dimension);
      std::vector<dnlap::ComparisonCertificate> certs;
      for (dnlap::TheoremId id : wanted) {
        switch (id) {
          case dnlap::TheoremId::NeuVsLap: certs.push_back(dnlap::compare_neumann_laplacian(s, tol)); break;
          case dnlap::TheoremId::DiriVsInteriorTwoSided:
            certs.push_back(dnlap::compare_dirichlet_interior(s, tol));
            break;
          case dnlap::TheoremId::NeuVsInterior: certs.push_back(dnlap::compare_neumann_interior(s, tol)); break;
          case dnlap::TheoremId::DiriVsNeuTwoSided:
            certs.push_back(dnlap::compare_dirichlet_neumann(s, tol));
            break;
          case dnlap::TheoremId::LapVsDiri: certs.push_back(dnlap::compare_laplacian_dirichlet(s, tol)); break;
          case dnlap::TheoremId::LichnerowiczBE:
          case dnlap::TheoremId::LichnerowiczOllivier:
            for (dnlap::LichnerowiczVariant v : dnlap::kAllLichnerowiczVariants) {
              auto c = dnlap::certify_lichnerowicz(l.graph, s, v, n, tol);
              if (c.theorem == id) certs.push_back(std::move(c));
            }
            break;
          case dnlap::TheoremId::FiedlerType:
          case dnlap::TheoremId::FriedmanType:
            if (!dnlap::has_unit_weight(l.graph)) {
              certs.push_back(dnlap::not_applicable(id, "graph does not carry the unit weight"));
            } else {
              certs.push_back(id == dnlap::TheoremId::FiedlerType ? dnlap::fiedler_bounds(l.graph, s, tol)
                                                                 : dnlap::friedman_bounds(l.graph, s, tol));
            }
            break;
        }
      }
      if (table) {
        print_table(certs);
      } else {
        Json results = Json::array();
        for (const auto& c : certs) results.push_back(dnlap::to_json(c));
        Json flags{{"graph", graph_path}, {"theorems", theorems}, {"tol", tol}};
        if (with_curvature) flags["n"] = dimension_label(n);
        emit(run_report("compare", flags, l.digest, results));
      }
      return certificates_exit(certs);
    }

    if (*certify_cmd) {
      const auto id = dnlap::rigidity_from_string(theorem);
      if (!id) {
        std::cerr << "error: unknown rigidity id '" << theorem << "'\n" << kRigidityHelp;
        return kUsage;
      }
      const Loaded l = load(graph_path);
      dnlap::RigidityReport r;
      try {
        r = dnlap::check_rigidity(l.graph, *id, rigidity_tol);
      } catch (const dnlap::PreconditionError& e) {
        r.id = *id;
        r.status = dnlap::RigidityStatus::NotApplicable;
        r.note = e.what();
      }
      emit(run_report("certify", {{"graph", graph_path}, {"theorem", theorem}, {"tol", rigidity_tol}}, l.digest,
                      Json::array({dnlap::to_json(r)})));
      if (r.status != dnlap::RigidityStatus::Evaluated) return kNotApplicable;
      return r.conclusion ? kOk : kFails;
    }

    if (*curvature_cmd) {
      const Loaded l = load(graph_path);
      const dnlap::Graph target = on == "interior" ? dnlap::interior_subgraph(l.graph) : l.graph;
      Json flags{{"graph", graph_path}, {"kind", kind}, {"on", on}};
      dnlap::CurvatureResult r;
      if (kind == "be") {
        const double n = parse_dimension(dimension);
        flags["n"] = dimension_label(n);
        r = dnlap::bakry_emery_curvature(target, n);
      } else {
        r = dnlap::ollivier_curvature(target);
      }
      emit(run_report("curvature", flags, l.digest, Json::array({dnlap::to_json(r)})));
      return kOk;
    }

    if (*bounds_cmd) {
      const Loaded l = load(graph_path);
      if (!dnlap::has_unit_weight(l.graph)) {
        std::cerr << "error: bounds need the unit weight (m = 1, w in {0, 1})\n";
        return kNotApplicable;
      }
      const dnlap::GraphSpectra s = dnlap::compute_spectra(l.graph);
      std::vector<dnlap::ComparisonCertificate> certs;
      if (family != "friedman") certs.push_back(dnlap::fiedler_bounds(l.graph, s, tol));
      if (family != "fiedler") certs.push_back(dnlap::friedman_bounds(l.graph, s, tol));
      Json results = Json::array();
      for (const auto& c : certs) results.push_back(dnlap::to_json(c));
      emit(run_report("bounds", {{"graph", graph_path}, {"family", family}, {"tol", tol}}, l.digest, results));
      return certificates_exit(certs);
    }

    if (*audit_cmd) {
      const dnlap::AuditReport r = dnlap::run_audit(audit);
      // Thread count does not affect the result, so it is left out of the report.
      Json flags{{"n", audit.count}, {"max_v", audit.max_vertices}, {"tol", audit.tol},
                 {"curvature", audit.curvature}, {"bounds", audit.bounds}};
      emit(run_report("random-audit", flags, "", Json::array({dnlap::to_json(r)}), audit.seed));
      return r.passed() ? kOk : kFails;
    }

    if (*dump_cmd) {
      const Loaded l = load(graph_path);
      Json result{{"type", "operator"}, {"operator", op}};
      dnlap::Matrix m;
      std::vector<double> measure;
      if (op == "full") {
        auto a = dnlap::full_laplacian(l.graph);
        m = a.matrix;
        measure = a.measure;
      } else if (op == "dirichlet") {
        auto a = dnlap::dirichlet_laplacian(l.graph);
        m = a.matrix;
        measure = a.measure;
      } else if (op == "neumann") {
        auto a = dnlap::neumann_laplacian(l.graph);
        m = a.matrix;
        measure = a.measure;
      } else if (op == "interior") {
        auto a = dnlap::interior_laplacian(l.graph);
        m = a.matrix;
        measure = a.measure;
      } else {
        m = dnlap::boundary_coupling(l.graph);
        measure = l.graph.interior_measures();
      }
      Json vertices = Json::array();
      if (op == "full")
        for (std::size_t x = 0; x < l.graph.size(); ++x) vertices.push_back(x);
      else
        for (auto y : l.graph.interior()) vertices.push_back(y);
      result["vertices"] = vertices;
      Json mj = Json::array();
      for (double v : measure) mj.push_back(dnlap::number(v));
      result["measure"] = mj;
      result["matrix"] = dnlap::to_json(m);
      emit(run_report("dump-operator", {{"graph", graph_path}, {"operator", op}}, l.digest, Json::array({result})));
      return kOk;
    }
  } catch (Exit code) {
    return code;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFails;
  }
  return kUsage;
}
