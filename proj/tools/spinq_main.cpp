// spinq — quantization characters of S^1-manifolds from fixed-point data.
//
// Subcommands: quantize, up, gen, consum, cut, reduce, qr, check.
// Exit codes: 0 success, 1 check failure, 2 input error, 3 when a
// localization sum fails to reduce to a character.

#include "spinq/character.hpp"
#include "spinq/checks.hpp"
#include "spinq/families.hpp"
#include "spinq/fixed_point_data.hpp"
#include "spinq/localization.hpp"
#include "spinq/surgery.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace spinq;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNotDivisible = 3;

struct ConventionFlags {
  std::string normal_factor = "literal";
  std::string codim_sign = "off";

  Convention to_convention() const {
    return {parse_normal_factor(normal_factor), parse_codim_sign(codim_sign)};
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--normal-factor", normal_factor,
                    "Normal bundle factor: plain representation or inverse Euler form")
        ->check(CLI::IsMember({"literal", "euler"}))
        ->capture_default_str();
    cmd->add_option("--codim-sign", codim_sign,
                    "Include the complex-codimension sign (-1)^{m(F)}")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out)
    throw SchemaError("cannot write file '" + path + "'");
  out << content;
}

int run_quantize(const std::string& path, Convention conv) {
  const ManifoldData m = load_manifest(path);
  VirtualCharacter q;
  if (const auto* odd = std::get_if<OddManifoldData>(&m))
    q = quantize_odd3(*odd, conv);
  else
    q = quantize_even_isolated(std::get<EvenManifoldData>(m));
  std::cout << canonical_string(q) << "\n";
  return kExitOk;
}

int run_up(const std::string& path) {
  const ManifoldData m = load_manifest(path);
  const auto* even = std::get_if<EvenManifoldData>(&m);
  if (even == nullptr)
    throw SpecError("'up' expects an even manifest");
  std::cout << emit_manifest(ManifoldData(up_surface_to_3(*even)));
  return kExitOk;
}

int run_consum(const std::string& path1, const std::string& path2, const ConSumSpec& spec) {
  const ManifoldData m1 = load_manifest(path1);
  const ManifoldData m2 = load_manifest(path2);
  const auto* odd1 = std::get_if<OddManifoldData>(&m1);
  const auto* odd2 = std::get_if<OddManifoldData>(&m2);
  if (odd1 == nullptr || odd2 == nullptr)
    throw SpecError("'consum' expects two odd3 manifests");
  std::string warning;
  const OddManifoldData glued = connected_sum(*odd1, *odd2, spec, &warning);
  if (!warning.empty())
    std::cerr << "warning: " << warning << "\n";
  std::cout << emit_manifest(ManifoldData(glued));
  return kExitOk;
}

int run_cut(const std::string& path, const std::string& spec_path, const std::string& out_plus,
            const std::string& out_minus) {
  const ManifoldData m = load_manifest(path);
  const auto* odd = std::get_if<OddManifoldData>(&m);
  if (odd == nullptr)
    throw SpecError("'cut' expects an odd3 manifest");
  const CutSpec spec = load_cut_spec(spec_path);
  const auto [plus, minus] = cut_split(*odd, spec);

  const std::string plus_text = emit_manifest(ManifoldData(plus));
  const std::string minus_text = emit_manifest(ManifoldData(minus));
  bool wrote_file = false;
  if (!out_plus.empty()) {
    write_file(out_plus, plus_text);
    wrote_file = true;
  }
  if (!out_minus.empty()) {
    write_file(out_minus, minus_text);
    wrote_file = true;
  }
  if (!wrote_file) {
    nlohmann::json both = nlohmann::json::array(
        {nlohmann::json::parse(plus_text), nlohmann::json::parse(minus_text)});
    std::cout << both.dump(2) << "\n";
  }
  return kExitOk;
}

int run_reduce(const std::string& spec_path) {
  std::cout << reduce_circles(load_cut_spec(spec_path)) << "\n";
  return kExitOk;
}

int run_qr(const std::string& path, const std::string& spec_path, Convention conv) {
  const ManifoldData m = load_manifest(path);
  const auto* odd = std::get_if<OddManifoldData>(&m);
  if (odd == nullptr)
    throw SpecError("'qr' expects an odd3 manifest");
  const QrReport report = qr_report(*odd, load_cut_spec(spec_path), conv);
  std::cout << "q_invariant: " << report.q_invariant.str() << "\n";
  std::cout << "q_reduced: " << report.q_reduced << "\n";
  std::cout << "equal: " << (report.equal ? "true" : "false") << "\n";
  std::cout << "result: " << (report.equal ? "pass" : "fail") << "\n";
  return kExitOk;
}

int run_check(const std::string& suite, std::uint64_t seed, std::size_t cases) {
  const checks::CheckReport report = checks::run_check(suite, seed, cases);
  std::cout << checks::render_report(report);
  return report.passed() ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantization characters of S^1-manifolds from fixed-point data"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // quantize
  std::string manifest_path;
  ConventionFlags conv_flags;
  auto* quantize = app.add_subcommand(
      "quantize", "Evaluate the fixed-point character formula for a manifest");
  quantize->add_option("manifest", manifest_path, "Manifest file (JSON)")->required();
  conv_flags.attach(quantize);
  quantize->callback(
      [&] { exit_code = run_quantize(manifest_path, conv_flags.to_convention()); });

  // up
  std::string up_path;
  auto* up = app.add_subcommand("up", "Cross an even manifest with S^1, emitting an odd3 manifest");
  up->add_option("manifest", up_path, "Even manifest file")->required();
  up->callback([&] { exit_code = run_up(up_path); });

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a manifest for a built-in family");
  gen->require_subcommand(1);
  std::int64_t gen_l = 1, gen_mu_n = 1, gen_mu_s = 1, gen_a = 0, gen_n1 = 1, gen_n2 = 1,
               gen_mu = 0;
  auto* gen_sphere = gen->add_subcommand("sphere", "Rotation sphere S^2_l");
  gen_sphere->add_option("--l", gen_l, "rotation speed")->required();
  gen_sphere->add_option("--mu-n", gen_mu_n, "determinant weight at the north pole")->required();
  gen_sphere->add_option("--mu-s", gen_mu_s, "determinant weight at the south pole")->required();
  gen_sphere->callback([&] {
    std::cout << emit_manifest(ManifoldData(make_sphere(gen_l, gen_mu_n, gen_mu_s)));
  });
  auto* gen_s2xs1 = gen->add_subcommand("s2xs1", "S^2_l x S^1 with trivial action on S^1");
  gen_s2xs1->add_option("--l", gen_l, "rotation speed")->required();
  gen_s2xs1->add_option("--mu-n", gen_mu_n, "determinant weight on the north circle")->required();
  gen_s2xs1->add_option("--mu-s", gen_mu_s, "determinant weight on the south circle")->required();
  gen_s2xs1->add_option("--a", gen_a, "alpha integral over both fixed circles")->required();
  gen_s2xs1->callback([&] {
    std::cout << emit_manifest(ManifoldData(make_s2xs1(gen_l, gen_mu_n, gen_mu_s, gen_a)));
  });
  auto* gen_s3 = gen->add_subcommand("s3", "S^3 with the action (z^n1, z^n2)");
  gen_s3->add_option("--n1", gen_n1, "first coordinate speed")->required();
  gen_s3->add_option("--n2", gen_n2, "second coordinate speed")->required();
  gen_s3->add_option("--mu", gen_mu, "determinant weight on the fixed circle, if any")->required();
  gen_s3->callback(
      [&] { std::cout << emit_manifest(ManifoldData(make_s3(gen_n1, gen_n2, gen_mu))); });

  // consum
  std::string consum_m1, consum_m2;
  ConSumSpec consum_spec;
  auto* consum = app.add_subcommand("consum", "Equivariant connected sum of two odd3 manifests");
  consum->add_option("first", consum_m1, "first manifest")->required();
  consum->add_option("second", consum_m2, "second manifest")->required();
  consum->add_option("--left", consum_spec.left_circle, "designated circle in the first manifold")
      ->required();
  consum->add_option("--right", consum_spec.right_circle,
                     "designated circle in the second manifold")
      ->required();
  consum->add_option("--l", consum_spec.l, "spinning speed of the gluing spheres")->required();
  consum->callback([&] { exit_code = run_consum(consum_m1, consum_m2, consum_spec); });

  // cut
  std::string cut_path, cut_spec_path, cut_out_plus, cut_out_minus;
  auto* cut = app.add_subcommand("cut", "Split an odd3 manifest along invariant tori");
  cut->add_option("manifest", cut_path, "odd3 manifest")->required();
  cut->add_option("--spec", cut_spec_path, "cut spec file (JSON)")->required();
  cut->add_option("--out-plus", cut_out_plus, "write the plus piece to this file");
  cut->add_option("--out-minus", cut_out_minus, "write the minus piece to this file");
  cut->callback(
      [&] { exit_code = run_cut(cut_path, cut_spec_path, cut_out_plus, cut_out_minus); });

  // reduce
  std::string reduce_spec_path;
  auto* reduce = app.add_subcommand("reduce", "Quantize the reduced manifold of a cut spec");
  reduce->add_option("--spec", reduce_spec_path, "cut spec file (JSON)")->required();
  reduce->callback([&] { exit_code = run_reduce(reduce_spec_path); });

  // qr
  std::string qr_path, qr_spec_path;
  ConventionFlags qr_conv_flags;
  auto* qr = app.add_subcommand(
      "qr", "Compare the invariant part of Q(M) with the reduced quantization");
  qr->add_option("manifest", qr_path, "odd3 manifest")->required();
  qr->add_option("--spec", qr_spec_path, "cut spec file (JSON)")->required();
  qr_conv_flags.attach(qr);
  qr->callback(
      [&] { exit_code = run_qr(qr_path, qr_spec_path, qr_conv_flags.to_convention()); });

  // check
  std::string check_suite;
  std::uint64_t check_seed = checks::kDefaultSeed;
  std::size_t check_cases = 0;
  auto* check = app.add_subcommand("check", "Run a randomized theorem-check suite");
  check->add_option("suite", check_suite, "one of: ring, linearity, updown, consum, additivity, integrality, s3zero")
      ->required();
  check->add_option("--seed", check_seed, "random seed")->capture_default_str();
  check->add_option("--cases", check_cases, "number of cases (0 = suite default)");
  check->callback([&] { exit_code = run_check(check_suite, check_seed, check_cases); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  } catch (const NotDivisibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotDivisible;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return exit_code;
}
