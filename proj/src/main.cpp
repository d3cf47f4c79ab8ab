#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "hopfish/enumerate.hpp"
#include "hopfish/fusion.hpp"
#include "hopfish/hopf.hpp"
#include "hopfish/json_io.hpp"
#include "hopfish/morita.hpp"

namespace {

using hopfish::Rat;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInputError = 2;

struct Output {
  std::string out_path;
  bool json_only = false;

  void emit(const json& report, const std::string& human) const {
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      f << report.dump(2) << "\n";
    }
    if (json_only)
      std::cout << report.dump(2) << "\n";
    else
      std::cout << human;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw hopfish::ParseError("", "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json interval_json(const hopfish::RootInterval& iv) {
  json j;
  j["lo"] = hopfish::rational_to_string(iv.lo);
  j["hi"] = hopfish::rational_to_string(iv.hi);
  j["decimal"] = hopfish::rational_to_decimal(iv.lo, 12);
  if (iv.integer_value) j["integer"] = iv.integer_value->get_str();
  return j;
}

json failure_json(const hopfish::AxiomFailure& f) {
  json j;
  j["axiom"] = f.axiom;
  j["witness"] = f.witness;
  j["message"] = f.message;
  return j;
}

json verdict_json(const hopfish::Verdict& v) {
  json checks = json::array();
  for (const auto& c : v.checks) {
    json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  json j;
  j["ok"] = v.ok;
  j["checks"] = std::move(checks);
  return j;
}

int cmd_verify(const std::string& path, const Output& out) {
  hopfish::StructureTensor t =
      hopfish::structure_from_json(read_file(path));
  hopfish::ValidationResult r = hopfish::validate(t);
  json report;
  report["command"] = "verify";
  report["input"] = json::parse(hopfish::structure_to_json(t));
  report["valid"] = r.ok();
  std::ostringstream human;
  if (r.ok()) {
    report["is_groupoid"] = hopfish::is_groupoid(*r.value);
    report["sigma"] = r.value->sigma;
    report["units"] = r.value->units;
    report["sigma_involutive"] = hopfish::involution_scan(*r.value);
    human << "valid hypergroupoid: units " << json(r.value->units).dump()
          << ", sigma " << json(r.value->sigma).dump() << "\n";
  } else {
    report["stage"] = r.stage == hopfish::ValidationStage::not_sesquialgebra
                          ? "not a sesquialgebra"
                          : "not hopfish of finite free type";
    if (r.failure) report["failure"] = failure_json(*r.failure);
    human << "invalid: " << (r.failure ? r.failure->message : "") << "\n";
  }
  out.emit(report, human.str());
  return r.ok() ? kExitOk : kExitFailed;
}

int cmd_analyze(const std::string& path, const Output& out) {
  hopfish::StructureTensor t =
      hopfish::structure_from_json(read_file(path));
  hopfish::ValidationResult r = hopfish::validate(t);
  json report;
  report["command"] = "analyze";
  report["input"] = json::parse(hopfish::structure_to_json(t));
  if (!r.ok()) {
    if (r.failure) report["failure"] = failure_json(*r.failure);
    out.emit(report, "not a valid hypergroupoid; nothing to analyze\n");
    return kExitFailed;
  }
  hopfish::FpReport fp = hopfish::fp_dimensions(*r.value);
  json dims = json::array();
  std::ostringstream human;
  for (const auto& e : fp.entries) {
    json je = interval_json(e.dimension);
    je["element"] = e.element;
    dims.push_back(std::move(je));
    human << "FPdim(" << e.element
          << ") = " << hopfish::rational_to_decimal(e.dimension.lo, 12)
          << (e.dimension.integer_value
                  ? " (integer " + e.dimension.integer_value->get_str() + ")"
                  : " (not an integer)")
          << "\n";
  }
  report["fp_dimensions"] = std::move(dims);
  report["obstruction"] = fp.obstructed ? "obstructed" : "no FP obstruction";
  report["witnesses"] = fp.witnesses;
  auto table = hopfish::representation_ring_table(*r.value);
  report["fusion_table"] = table;
  human << "quasi-Hopf verdict: "
        << (fp.obstructed ? "obstructed" : "no FP obstruction") << "\n";
  const std::size_t n = t.n;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      human << g << " (x) " << h << " =";
      bool first = true;
      for (std::size_t k = 0; k < n; ++k)
        if (auto m = table[(g * n + h) * n + k]) {
          human << (first ? " " : " + ");
          if (m > 1) human << m << "*";
          human << k;
          first = false;
        }
      if (first) human << " 0";
      human << "\n";
    }
  out.emit(report, human.str());
  return kExitOk;
}

int cmd_enumerate(const hopfish::SearchConfig& cfg, const Output& out) {
  hopfish::Census census = hopfish::enumerate_census(cfg);
  json entries = json::array();
  for (const auto& e : census.entries) {
    json je;
    je["tensor"] = json::parse(hopfish::structure_to_json(e.canonical));
    je["is_hypergroupoid"] = e.flags.is_hypergroupoid;
    je["is_groupoid"] = e.flags.is_groupoid;
    je["is_group"] = e.flags.is_group;
    je["sigma_involutive"] = e.flags.sigma_involutive;
    json dims = json::array();
    for (const auto& iv : e.fp_dims) dims.push_back(interval_json(iv));
    je["fp_dims"] = std::move(dims);
    entries.push_back(std::move(je));
  }
  json report;
  report["command"] = "enumerate";
  report["count"] = census.entries.size();
  report["complete"] = census.complete;
  report["entries"] = std::move(entries);
  std::ostringstream human;
  human << census.entries.size() << " classes ("
        << (census.complete ? "complete" : "INCOMPLETE: budget exceeded")
        << ")\n";
  out.emit(report, human.str());
  return census.complete ? kExitOk : kExitFailed;
}

json transport_json(const hopfish::TransportResult& tr) {
  json j;
  j["hopfish"] = tr.hopfish;
  j["antipode_dim"] = tr.data.antipode.dim;
  j["counit_dim"] = tr.data.counit.dim;
  j["coproduct_dim"] = tr.data.coproduct.dim;
  // Right-module freeness is informational only; it never enters the
  // hopfish verdict.
  j["antipode_free_right"] = hopfish::free_rank1_right(tr.data.antipode).free;
  return j;
}

int cmd_morita_z3(std::size_t r, std::size_t s, std::size_t t,
                  const Output& out) {
  hopfish::Z3Example ex = hopfish::build_z3_example(r, s, t);
  hopfish::TransportResult tr =
      hopfish::transport(ex.source, ex.pair, /*coproduct_left_actions=*/false);
  auto dims =
      hopfish::block_dimensions(tr.data.antipode, ex.central_idempotents);
  bool conj = hopfish::self_conjugate(ex.source.antipode, ex.pair.q);
  json report;
  report["command"] = "morita z3";
  report["r"] = r;
  report["s"] = s;
  report["t"] = t;
  report["antipode_block_dims"] = dims;
  report["b_block_dims"] = ex.b_block_dims;
  report["hopfish"] = tr.hopfish;
  report["self_conjugate"] = conj;
  report["transport"] = transport_json(tr);
  std::ostringstream human;
  human << "transported antipode blocks: " << json(dims).dump()
        << " vs algebra blocks " << json(ex.b_block_dims).dump() << "\n"
        << "verdict: " << (tr.hopfish ? "hopfish" : "not hopfish")
        << "; self-conjugate: " << (conj ? "yes" : "no") << "\n";
  out.emit(report, human.str());
  return tr.hopfish ? kExitOk : kExitFailed;
}

int cmd_morita_matrix(std::size_t n, std::size_t m, const Output& out) {
  hopfish::MatrixExample ex = hopfish::build_matrix_example(n, m);
  hopfish::TransportResult tr = hopfish::transport(ex.source, ex.pair);
  hopfish::Verdict sesqui = hopfish::check_sesquialgebra(
      tr.data.algebra, tr.data.coproduct, tr.data.counit);
  json report;
  report["command"] = "morita matrix";
  report["n"] = n;
  report["group"] = "Z/" + std::to_string(m);
  report["hopfish"] = tr.hopfish;
  report["sesquialgebra"] = verdict_json(sesqui);
  report["transport"] = transport_json(tr);
  std::ostringstream human;
  human << "M_" << n << "(k^{Z/" << m << "}): "
        << (tr.hopfish && sesqui.ok ? "hopfish" : "FAILED") << "\n";
  out.emit(report, human.str());
  return tr.hopfish && sesqui.ok ? kExitOk : kExitFailed;
}

int cmd_morita_transport(const std::string& path, std::size_t n,
                         const Output& out) {
  hopfish::StructureTensor t =
      hopfish::structure_from_json(read_file(path));
  hopfish::HopfishData src = hopfish::hopfish_from_tensor(t);
  hopfish::MoritaPair pair = hopfish::matrix_morita_pair(src.algebra, n);
  hopfish::TransportResult tr =
      hopfish::transport(src, pair, /*coproduct_left_actions=*/false);
  json report;
  report["command"] = "morita transport";
  report["matrix_size"] = n;
  report["input"] = json::parse(hopfish::structure_to_json(t));
  report["transport"] = transport_json(tr);
  report["hopfish"] = tr.hopfish;
  std::ostringstream human;
  human << "transport to M_" << n << ": "
        << (tr.hopfish ? "hopfish" : "not hopfish") << " (antipode dim "
        << tr.data.antipode.dim << ")\n";
  out.emit(report, human.str());
  return tr.hopfish ? kExitOk : kExitFailed;
}

hopfish::Mat mat_from_json_file(const std::string& path) {
  json j = json::parse(read_file(path), nullptr, false);
  if (j.is_discarded() || !j.is_array() || j.empty() || !j[0].is_array())
    throw hopfish::ParseError(path, "expected a 2D array of rationals");
  hopfish::Mat m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols())
      throw hopfish::ParseError(path, "ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c)
      m(r, c) = hopfish::parse_rational(j[r][c].get<std::string>());
  }
  return m;
}

struct HopfFiles {
  std::string algebra, delta, epsilon, antipode;
};

hopfish::HopfData hopf_data_from_files(const HopfFiles& f) {
  hopfish::Algebra a = hopfish::algebra_from_json(read_file(f.algebra));
  hopfish::HopfData data;
  data.algebra = a;
  data.coproduct = {a, hopfish::Algebra::tensor(a, a),
                    mat_from_json_file(f.delta)};
  data.counit = {a, hopfish::Algebra::scalars(),
                 mat_from_json_file(f.epsilon)};
  data.antipode = {hopfish::Algebra::opposite(a), a,
                   mat_from_json_file(f.antipode)};
  return data;
}

int cmd_hopf_check(const std::string& family, std::size_t n,
                   bool identity_antipode, const HopfFiles& files,
                   const Output& out) {
  hopfish::HopfData data;
  if (!files.algebra.empty()) {
    if (files.delta.empty() || files.epsilon.empty() || files.antipode.empty())
      throw hopfish::ParseError(
          "", "--algebra requires --delta, --epsilon and --antipode");
    data = hopf_data_from_files(files);
  } else {
    data = family == "group" ? hopfish::group_algebra_hopf_data(n)
                             : hopfish::function_hopf_data(n);
  }
  if (identity_antipode)
    data.antipode.matrix = hopfish::Mat::identity(data.algebra.dim());
  hopfish::Verdict v = hopfish::hopf_verify(data);
  json report;
  report["command"] = "hopf-check";
  report["family"] = files.algebra.empty() ? family : "file";
  report["n"] = n;
  report["verdict"] = verdict_json(v);
  std::ostringstream human;
  human << (v.ok ? "hopfish: all checks pass" : "FAILED:") << "\n";
  for (const auto& c : v.checks)
    human << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
  out.emit(report, human.str());
  return v.ok ? kExitOk : kExitFailed;
}

int cmd_quasi_hopf_check(bool twisted, bool negate_alpha, const Output& out) {
  hopfish::QuasiHopfData data =
      twisted ? hopfish::twisted_z2_quasi_hopf()
              : hopfish::as_quasi_hopf(hopfish::function_hopf_data(2));
  if (negate_alpha)
    for (auto& c : data.alpha) c = -c;
  hopfish::Verdict v = hopfish::quasi_hopf_verify(data);
  json report;
  report["command"] = "quasi-hopf-check";
  report["associator"] = twisted ? "3-cocycle" : "trivial";
  report["verdict"] = verdict_json(v);
  std::ostringstream human;
  human << (v.ok ? "hopfish: all checks pass" : "FAILED:") << "\n";
  for (const auto& c : v.checks)
    human << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
  out.emit(report, human.str());
  return v.ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computational engine for hypergroupoids and "
               "bimodule-valued Hopf structures"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  std::size_t workers = 1;
  if (const char* env = std::getenv("HOPFISH_WORKERS"))
    workers = static_cast<std::size_t>(std::max(1, std::atoi(env)));
  app.add_option("--out", out.out_path, "write the JSON report to this path");
  app.add_flag("--json", out.json_only, "print the JSON report on stdout");
  app.add_option("--workers", workers,
                 "enumeration workers (env HOPFISH_WORKERS)");

  std::string in_path;
  auto* verify = app.add_subcommand("verify", "validate a structure tensor");
  verify->add_option("--in", in_path, "structure JSON file")->required();

  auto* analyze =
      app.add_subcommand("analyze", "Perron-Frobenius + obstruction report");
  analyze->add_option("--in", in_path, "structure JSON file")->required();

  hopfish::SearchConfig cfg;
  std::string mode = "hyper";
  auto* enumerate =
      app.add_subcommand("enumerate", "census of structures up to relabeling");
  enumerate->add_option("--n", cfg.n, "set size")->required();
  enumerate->add_option("--max-mult", cfg.max_mult, "multiplicity bound")
      ->required();
  enumerate->add_option("--mode", mode, "sesqui | hyper");

  auto* morita = app.add_subcommand("morita", "Morita transport drivers");
  morita->require_subcommand(1);
  std::size_t zr = 1, zs = 1, zt = 1, mat_n = 2;
  std::string group = "Z/2";
  auto* z3 = morita->add_subcommand("z3", "graded projective module family");
  z3->add_option("--r", zr)->required();
  z3->add_option("--s", zs)->required();
  z3->add_option("--t", zt)->required();
  auto* matrix = morita->add_subcommand("matrix", "M_n of a function algebra");
  matrix->add_option("--n", mat_n)->required();
  matrix->add_option("--group", group, "cyclic group, e.g. Z/2");
  auto* mtransport =
      morita->add_subcommand("transport", "transport along the M_n pair");
  mtransport->add_option("--in", in_path, "structure JSON file")->required();
  mtransport->add_option("--n", mat_n, "matrix size");

  std::string family = "functions";
  std::size_t hopf_n = 2;
  bool identity_antipode = false;
  auto* hopf = app.add_subcommand("hopf-check",
                                  "Hopf-to-hopfish verification");
  HopfFiles files;
  hopf->add_option("--family", family, "functions | group");
  hopf->add_option("--n", hopf_n, "cyclic group order");
  hopf->add_flag("--identity-antipode", identity_antipode,
                 "replace the antipode by the identity map");
  hopf->add_option("--algebra", files.algebra, "algebra JSON file");
  hopf->add_option("--delta", files.delta, "coproduct matrix (dim^2 x dim)");
  hopf->add_option("--epsilon", files.epsilon, "counit matrix (1 x dim)");
  hopf->add_option("--antipode", files.antipode,
                   "antipode matrix (dim x dim), map out of the opposite");

  bool twisted = true, negate_alpha = false;
  auto* quasi = app.add_subcommand("quasi-hopf-check",
                                   "quasi-Hopf-to-hopfish verification");
  quasi->add_flag("!--trivial", twisted, "use the trivial associator");
  quasi->add_flag("--negate-alpha", negate_alpha, "corrupt alpha");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(in_path, out);
    if (analyze->parsed()) return cmd_analyze(in_path, out);
    if (enumerate->parsed()) {
      if (mode != "sesqui" && mode != "hyper") {
        std::cerr << "unknown mode: " << mode << "\n";
        return kExitInputError;
      }
      cfg.mode = mode == "sesqui" ? hopfish::SearchConfig::Mode::sesquialgebra
                                  : hopfish::SearchConfig::Mode::hypergroupoid;
      cfg.workers = workers;
      return cmd_enumerate(cfg, out);
    }
    if (z3->parsed()) return cmd_morita_z3(zr, zs, zt, out);
    if (matrix->parsed()) {
      std::size_t m = 0;
      if (group.rfind("Z/", 0) == 0) m = std::atoi(group.c_str() + 2);
      if (m < 1) {
        std::cerr << "unsupported group (expect Z/m): " << group << "\n";
        return kExitInputError;
      }
      return cmd_morita_matrix(mat_n, m, out);
    }
    if (mtransport->parsed()) return cmd_morita_transport(in_path, mat_n, out);
    if (hopf->parsed()) {
      if (family != "functions" && family != "group") {
        std::cerr << "unknown family: " << family << "\n";
        return kExitInputError;
      }
      return cmd_hopf_check(family, hopf_n, identity_antipode, files, out);
    }
    if (quasi->parsed())
      return cmd_quasi_hopf_check(twisted, negate_alpha, out);
  } catch (const hopfish::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
