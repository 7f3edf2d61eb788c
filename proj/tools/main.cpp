// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ancillary/adder.hpp"
#include "ancillary/bexp.hpp"
#include "ancillary/circuit.hpp"
#include "ancillary/circuit_json.hpp"
#include "ancillary/corpus.hpp"
#include "ancillary/derivation_json.hpp"
#include "ancillary/oracle_compiler.hpp"
#include "ancillary/semantics.hpp"
#include "ancillary/symmetry.hpp"
#include "ancillary/validity.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream ss(csv);
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::vector<bool> parse_bits(const std::string& text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw std::runtime_error("bits must be 0s and 1s");
    bits.push_back(ch == '1');
  }
  return bits;
}

std::string bits_to_string(const std::vector<bool>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

bool circuit_is_classical(const anc::Circuit& c) {
  for (const auto& g : c.gates()) {
    if (const auto* u = std::get_if<anc::UnitaryGate>(&g)) {
      if (!anc::is_classical_unitary(u->kind)) return false;
    } else if (std::holds_alternative<anc::MeasGate>(g) ||
               std::holds_alternative<anc::DiscardGate>(g)) {
      return false;
    }
  }
  return true;
}

json validity_to_json(const anc::ValidityReport& report) {
  json j;
  j["valid"] = report.valid;
  j["worst_trace_defect"] = report.worst_trace_defect;
  if (report.witness) {
    j["witness"] = {report.witness->first, report.witness->second};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

struct CompileArgs {
  std::string expr;
  std::string vars_csv;
  std::string out_path;
  std::string derivation_path;
};

int run_compile(const CompileArgs& a, bool as_json) {
  anc::Bexp b = anc::parse_bexp(a.expr);
  std::vector<std::string> names = a.vars_csv.empty() ? anc::vars(b) : split_csv(a.vars_csv);
  anc::VarContext ctx(names);
  anc::CompileResult result = anc::compile_bexp(b, ctx);
  std::string text = anc::serialize_circuit(result.circuit);
  if (a.out_path.empty()) {
    std::cout << text << "\n";
  } else {
    write_file(a.out_path, text + "\n");
  }
  if (!a.derivation_path.empty()) {
    write_file(a.derivation_path, anc::serialize_derivation(result.derivation) + "\n");
  }
  if (as_json && !a.out_path.empty()) {
    json j;
    j["wires"] = result.circuit.in_size();
    j["gates"] = result.circuit.gates().size();
    j["out"] = a.out_path;
    std::cout << j.dump() << "\n";
  } else if (!a.out_path.empty()) {
    std::cout << "compiled " << a.expr << " onto " << result.circuit.in_size() << " wires ("
              << result.circuit.gates().size() << " gates) -> " << a.out_path << "\n";
  }
  return 0;
}

int run_simulate(const std::string& path, const std::string& bits_text, const std::string& mode_name,
                 double tol_eps, bool as_json) {
  anc::Circuit c = anc::parse_circuit(read_file(path));
  std::vector<bool> bits = parse_bits(bits_text);
  if (bits.size() != c.in_size()) {
    throw std::runtime_error("circuit expects " + std::to_string(c.in_size()) + " input bits, got " +
                             std::to_string(bits.size()));
  }
  anc::SemanticsMode mode =
      mode_name == "unsafe" ? anc::SemanticsMode::Unsafe : anc::SemanticsMode::Safe;
  if (circuit_is_classical(c)) {
    anc::BasisResult r = anc::denote_basis(c, bits);
    if (as_json) {
      json j;
      j["bits"] = bits_to_string(r.bits);
      j["valid"] = r.valid;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << bits_to_string(r.bits) << "\n";
      if (!r.valid) std::cerr << "assertion failed during simulation\n";
    }
    return r.valid ? 0 : 1;
  }
  // general path: report the diagonal of the output density matrix
  anc::DensityMatrix rho = anc::denote(c, anc::DensityMatrix::basis(bits), mode);
  json diag = json::object();
  std::size_t dim = rho.mat.rows();
  for (std::size_t r = 0; r < dim; ++r) {
    double p = rho.mat.at(r, r).real();
    if (p > tol_eps) {
      std::string key;
      for (std::size_t i = 0; i < rho.n_wires; ++i) {
        key.push_back((r >> (rho.n_wires - 1 - i)) & 1 ? '1' : '0');
      }
      diag[key] = p;
    }
  }
  if (as_json) {
    json j;
    j["diagonal"] = diag;
    j["trace"] = rho.trace_real();
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& [key, p] : diag.items()) {
      std::cout << key << " " << p.get<double>() << "\n";
    }
    std::cout << "trace " << rho.trace_real() << "\n";
  }
  return 1.0 - rho.trace_real() <= tol_eps ? 0 : 1;
}

int run_check_validity(const std::string& path, double tol_eps, bool as_json) {
  anc::Circuit c = anc::parse_circuit(read_file(path));
  anc::ValidityReport report = anc::is_valid(c, anc::Tolerance(tol_eps));
  if (as_json) {
    std::cout << validity_to_json(report).dump() << "\n";
  } else if (report.valid) {
    std::cout << "valid: every assertion holds on every input\n";
  } else {
    std::cout << "invalid: worst trace defect " << report.worst_trace_defect << " at matrix unit ("
              << report.witness->first << ", " << report.witness->second << ")\n";
  }
  return report.valid ? 0 : 1;
}

int run_check_symmetry(const std::string& path, double tol_eps, bool as_json) {
  anc::SymmetryDerivation d = anc::parse_derivation(read_file(path));
  anc::Tolerance tol(tol_eps);
  anc::Circuit c = anc::realize(d);
  bool witnesses_ok = anc::check_witnesses(d, tol);
  anc::ValidityReport report = anc::is_valid(c, tol);
  bool ok = witnesses_ok && report.valid;
  if (as_json) {
    json j;
    j["n_source"] = d.n_source();
    j["n_target"] = d.n_target();
    j["gates"] = c.gates().size();
    j["witnesses_ok"] = witnesses_ok;
    j["realized_valid"] = report.valid;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (ok ? "symmetric" : "check failed") << ": " << d.n_source() << " source and "
              << d.n_target() << " target wires, " << c.gates().size() << " gates"
              << (witnesses_ok ? "" : "; an equivalence witness does not match")
              << (report.valid ? "" : "; realized circuit has a failing assertion") << "\n";
  }
  return ok ? 0 : 1;
}

int run_invert(const std::string& in_path, const std::string& out_path) {
  anc::SymmetryDerivation d = anc::parse_derivation(read_file(in_path));
  write_file(out_path, anc::serialize_derivation(anc::invert(d)) + "\n");
  return 0;
}

struct AdderArgs {
  std::size_t n = 1;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  bool cin = false;
  std::string export_path;
};

int run_adder_cmd(const AdderArgs& a, bool as_json) {
  anc::AdderRun r = anc::run_adder(a.n, a.x, a.y, a.cin);
  if (!a.export_path.empty()) {
    write_file(a.export_path, anc::serialize_circuit(anc::adder_circ(a.n)) + "\n");
  }
  if (as_json) {
    json j;
    j["sum"] = r.sum;
    j["cout"] = r.cout;
    j["valid"] = r.valid;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "sum=" << r.sum << " cout=" << (r.cout ? 1 : 0) << "\n";
  }
  return r.valid ? 0 : 1;
}

int run_self_test(std::size_t corpus_size, std::uint64_t seed, double tol_eps) {
  anc::Tolerance tol(tol_eps);
  std::mt19937_64 rng(seed);
  bool all_ok = true;

  std::vector<anc::Bexp> corpus = anc::enumerate_bexps(5, {"x", "y", "z"});
  if (corpus.size() > corpus_size) {
    corpus.erase(corpus.begin() + static_cast<std::ptrdiff_t>(corpus_size), corpus.end());
  }
  anc::VarContext ctx({"x", "y", "z"});
  std::size_t compile_bad = 0;
  for (const anc::Bexp& b : corpus) {
    if (!anc::check_compile_correct(b, ctx, tol)) ++compile_bad;
  }
  std::cout << "compile oracle: " << (corpus.size() - compile_bad) << "/" << corpus.size()
            << " expressions correct\n";
  all_ok = all_ok && compile_bad == 0;

  std::size_t invert_bad = 0;
  for (std::size_t i = 0; i < 20; ++i) {
    anc::SymmetryDerivation d = anc::random_derivation(rng, 4, 5);
    anc::Circuit fwd = anc::realize(d);
    anc::Circuit bwd = anc::realize(anc::invert(d));
    anc::Circuit round = anc::in_seq(bwd, fwd);
    if (!anc::circuits_equivalent(round, anc::id_circ(round.in_type()), anc::SemanticsMode::Unsafe,
                                  tol)) {
      ++invert_bad;
    }
  }
  std::cout << "derivation inverses: " << (20 - invert_bad) << "/20 cancel to the identity\n";
  all_ok = all_ok && invert_bad == 0;

  std::size_t json_bad = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    anc::Circuit c = anc::random_any_circuit(rng);
    if (!(anc::parse_circuit(anc::serialize_circuit(c)) == c)) ++json_bad;
  }
  std::cout << "json round-trips: " << (50 - json_bad) << "/50 exact\n";
  all_ok = all_ok && json_bad == 0;

  bool adder_ok = anc::check_adder_spec(1, tol);
  std::cout << "adder n=1: " << (adder_ok ? "matches" : "differs from") << " the reference\n";
  all_ok = all_ok && adder_ok;

  std::cout << (all_ok ? "self-test passed" : "self-test FAILED") << "\n";
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reversible oracle circuits: compile, simulate, verify"};
  app.require_subcommand(1);
  bool as_json = false;
  double tol_eps = 1e-9;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--tol", tol_eps, "comparison tolerance")
      ->envname("ANCILLARY_TOL")
      ->check(CLI::PositiveNumber);

  CompileArgs compile_args;
  CLI::App* compile_cmd = app.add_subcommand("compile", "compile a boolean expression to an oracle circuit");
  compile_cmd->add_option("--expr", compile_args.expr, "expression, e.g. \"x & ~y ^ t\"")->required();
  compile_cmd->add_option("--vars", compile_args.vars_csv,
                          "comma-separated variable order (default: free variables, sorted)");
  compile_cmd->add_option("-o,--out", compile_args.out_path, "circuit JSON output path (default: stdout)");
  compile_cmd->add_option("--derivation", compile_args.derivation_path,
                          "also write the symmetry derivation JSON here");

  std::string sim_path, sim_bits, sim_mode = "safe";
  CLI::App* simulate_cmd = app.add_subcommand("simulate", "run a circuit on a basis input");
  simulate_cmd->add_option("circuit", sim_path, "circuit JSON path")->required();
  simulate_cmd->add_option("--bits", sim_bits, "input bits, wire 0 first")->required();
  simulate_cmd->add_option("--mode", sim_mode, "safe or unsafe")
      ->check(CLI::IsMember({"safe", "unsafe"}));

  std::string validity_path;
  CLI::App* validity_cmd = app.add_subcommand("check-validity", "verify every assertion always holds");
  validity_cmd->add_option("circuit", validity_path, "circuit JSON path")->required();

  std::string symmetry_path;
  CLI::App* symmetry_cmd = app.add_subcommand("check-symmetry", "verify a source-symmetry derivation");
  symmetry_cmd->add_option("--derivation", symmetry_path, "derivation JSON path")->required();

  std::string invert_in, invert_out;
  CLI::App* invert_cmd = app.add_subcommand("invert", "invert a derivation tree");
  invert_cmd->add_option("--derivation", invert_in, "derivation JSON path")->required();
  invert_cmd->add_option("-o,--out", invert_out, "output path")->required();

  AdderArgs adder_args;
  std::uint64_t adder_cin = 0;
  CLI::App* adder_cmd = app.add_subcommand("adder", "add two integers on the ripple-carry circuit");
  adder_cmd->add_option("--n", adder_args.n, "bit width")->required()->check(CLI::Range(1, 32));
  adder_cmd->add_option("--x", adder_args.x, "first addend")->required();
  adder_cmd->add_option("--y", adder_args.y, "second addend")->required();
  adder_cmd->add_option("--cin", adder_cin, "carry in (0 or 1)")->check(CLI::Range(0, 1));
  adder_cmd->add_option("--export", adder_args.export_path, "also write the circuit JSON here");

  std::size_t corpus_size = 500;
  std::uint64_t seed = 12345;
  CLI::App* selftest_cmd = app.add_subcommand("self-test", "run a quick built-in test battery");
  selftest_cmd->add_option("--corpus-size", corpus_size, "expressions to check");
  selftest_cmd->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compile_cmd->parsed()) return run_compile(compile_args, as_json);
    if (simulate_cmd->parsed()) return run_simulate(sim_path, sim_bits, sim_mode, tol_eps, as_json);
    if (validity_cmd->parsed()) return run_check_validity(validity_path, tol_eps, as_json);
    if (symmetry_cmd->parsed()) return run_check_symmetry(symmetry_path, tol_eps, as_json);
    if (invert_cmd->parsed()) return run_invert(invert_in, invert_out);
    if (adder_cmd->parsed()) {
      adder_args.cin = adder_cin != 0;
      return run_adder_cmd(adder_args, as_json);
    }
    if (selftest_cmd->parsed()) return run_self_test(corpus_size, seed, tol_eps);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
