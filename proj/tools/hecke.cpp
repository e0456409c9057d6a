#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "hecke/hecke.hpp"

namespace {

using hecke::ordered_json;

struct Options {
  int l = 3;
  std::string field = "cyclo";
  int p = 0;
  int k = 1;
  std::string out;
  bool slow = false;
  bool char2 = true;
};

int max_degree() {
  const char* env = std::getenv("HECKE_MAX_N");
  if (!env) return 7;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("HECKE_MAX_N is not an integer: ") + env);
  }
}

class Run {
 public:
  Run(std::string command, const ordered_json& field) : command_(std::move(command)), start_(clock::now()) {
    emit({{"command", command_}, {"field", field}});
  }

  void emit(const ordered_json& line) { std::cout << line.dump() << "\n"; }

  void checks(const hecke::Report& rep) {
    for (const auto& c : rep.checks()) {
      emit({{"check", c.name}, {"status", c.status_name()}, {"witness", c.witness}});
      std::cerr << "  [" << c.status_name() << "] " << c.name << (c.witness.empty() ? "" : "  (" + c.witness + ")")
                << "\n";
    }
    report_.append(rep);
  }

  int finish() {
    const double seconds = std::chrono::duration<double>(clock::now() - start_).count();
    const int code = report_.all_ok() ? 0 : 1;
    emit({{"summary", {{"checks", report_.checks().size()}, {"failures", report_.failures()}, {"seconds", seconds}}},
          {"exit_code", code}});
    std::cerr << command_ << ": " << report_.checks().size() - report_.failures() << "/" << report_.checks().size()
              << " checks ok in " << seconds << " s\n";
    return code;
  }

 private:
  using clock = std::chrono::steady_clock;
  std::string command_;
  clock::time_point start_;
  hecke::Report report_;
};

template <class Field>
int cmd_build(const std::shared_ptr<const Field>& F, const Options& opt) {
  using S = typename Field::element_type;
  const auto block = hecke::BlockConstruction<S>::build(F);
  const auto pres = block.presentation();
  const auto json = hecke::to_json(pres);
  if (opt.out.empty()) {
    std::cout << json.dump() << "\n";
  } else {
    std::ofstream(opt.out + ".json") << json.dump(2) << "\n";
    std::ofstream(opt.out + ".dot") << hecke::to_dot(pres);
  }
  std::cerr << "l=" << pres.l << " over " << pres.field.label() << ": " << pres.vertices.size() << " vertices, "
            << pres.arrows.size() << " arrows, dim " << pres.dimension << "\n";
  return 0;
}

template <class Field>
int cmd_verify(const std::shared_ptr<const Field>& F, const Options& opt) {
  using S = typename Field::element_type;
  Run run("verify", hecke::to_json(F->spec()));
  const auto block = hecke::BlockConstruction<S>::build(F);
  run.emit({{"dims_matrix", block.dims_matrix()}});
  run.checks(block.verify_presentation());
  run.checks(hecke::verify_modrep(block));
  if (opt.slow) run.checks(hecke::run_permmod_demo(true).report);
  return run.finish();
}

int cmd_demo(const Options& opt) {
  if (!opt.char2) throw std::invalid_argument("demo-permmod: only the characteristic 2 scenario over GF(4) exists");
  const auto F = hecke::GaloisField::create(2, 2, 3);
  Run run("demo-permmod", hecke::to_json(F->spec()));
  const auto demo = hecke::run_permmod_demo(opt.slow);
  ordered_json facts{{"dim_M", demo.dim_m},
                     {"hom_K_to_M", demo.embeddings},
                     {"hom_M_to_K", demo.quotients},
                     {"psi_phi_zero", demo.composite_zero},
                     {"dim_V", demo.dim_v},
                     {"annihilator_rank", demo.annihilator_rank},
                     {"trivial_summands_after_restriction", demo.trivial_summands_restricted}};
  if (demo.projective_over_h) facts["projective_over_H"] = *demo.projective_over_h;
  run.emit({{"facts", facts}});
  run.checks(demo.report);
  return run.finish();
}

template <class F>
int with_field(const Options& opt, F&& body) {
  if (opt.l < 2) throw std::invalid_argument("--l must be at least 2");
  if (opt.l > max_degree())
    throw std::invalid_argument("--l " + std::to_string(opt.l) + " exceeds HECKE_MAX_N=" + std::to_string(max_degree()));
  if (opt.field == "cyclo") return body(hecke::CyclotomicField::create(opt.l));
  if (opt.field == "gf") {
    if (opt.p < 2) throw std::invalid_argument("--field gf needs --p");
    return body(hecke::GaloisField::create(opt.p, opt.k, opt.l));
  }
  throw std::invalid_argument("--field must be cyclo or gf");
}

void field_options(CLI::App* sub, Options& opt) {
  sub->add_option("--l", opt.l, "multiplicative order of q (the degree of the block)")->required();
  sub->add_option("--field", opt.field, "cyclo or gf")->check(CLI::IsMember({"cyclo", "gf"}));
  sub->add_option("--p", opt.p, "characteristic for --field gf");
  sub->add_option("--k", opt.k, "degree of GF(p^k) over GF(p)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Iwahori-Hecke algebras at roots of unity"};
  app.require_subcommand(1);
  Options opt;

  auto* build = app.add_subcommand("build", "write the quiver presentation of the principal block as JSON and DOT");
  field_options(build, opt);
  build->add_option("--out", opt.out, "output path prefix; writes <out>.json and <out>.dot");

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  field_options(verify, opt);
  verify->add_flag("--slow", opt.slow, "add the H_q(6) projectivity oracle for the permutation module scenario");

  auto* demo = app.add_subcommand("demo-permmod", "q-permutation module x_(3,3) H_q(6) over GF(4), l = 3");
  demo->add_flag("--char2,!--no-char2", opt.char2, "characteristic 2 scenario (the only one available)");
  demo->add_flag("--slow", opt.slow, "add the H_q(6) projectivity oracle");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return with_field(opt, [&](const auto& F) { return cmd_build(F, opt); });
    if (*verify) return with_field(opt, [&](const auto& F) { return cmd_verify(F, opt); });
    if (max_degree() < 6) throw std::invalid_argument("demo-permmod needs degree 6 but HECKE_MAX_N=" + std::to_string(max_degree()));
    return cmd_demo(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
