// Command-line driver: build spaces, print pairing Gram matrices, apply
// integral transforms and run the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <mukai/catalog.hpp>
#include <mukai/serialize.hpp>
#include <mukai/verify.hpp>
#include <mukai/version.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace {

using mukai::Rational;

void write_json_file(const std::string& path, const std::string& payload) {
  if (path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << payload;
}

int run_spaces(const std::string& space_text, const std::string& bundle_text,
               const std::string& json_path) {
  const mukai::SpacePtr space = mukai::space_from_spec_text(space_text);
  const auto& ring = *space->ring;

  std::cout << space->label << "  (dimension " << space->n << ", basis " << ring.dim() << ")\n";
  std::cout << "  name            form  coh  hh\n";
  for (int i = 0; i < ring.dim(); ++i) {
    const auto& el = ring.element(i);
    std::printf("  %-15s %4d %4d %+4d\n", el.name.c_str(), el.degree.form, el.degree.coh,
                mukai::hh_degree(el.degree));
  }
  std::cout << "  td(T)  = " << mukai::format_class(space->todd) << "\n";
  std::cout << "  ch(T)  = " << mukai::format_class(space->tangent_ch) << "\n";
  std::cout << "  chi(O) = " << mukai::pretty_string(mukai::integrate(space->todd)) << "\n";

  nlohmann::json out;
  out["label"] = space->label;
  out["n"] = space->n;
  out["td"] = mukai::class_to_json(space->todd);
  out["ch_tangent"] = mukai::class_to_json(space->tangent_ch);

  if (!bundle_text.empty()) {
    const mukai::BundleData bundle =
        mukai::bundle_from_spec(mukai::parse_json(bundle_text), space);
    const mukai::HodgeClass ch = mukai::chern_character(bundle, *space);
    const mukai::HodgeClass td = mukai::todd_class(bundle, *space);
    std::cout << "  bundle ch = " << mukai::format_class(ch) << "\n";
    std::cout << "  bundle td = " << mukai::format_class(td) << "\n";
    out["bundle"] = {{"ch", mukai::class_to_json(ch)}, {"td", mukai::class_to_json(td)}};
  }
  if (!json_path.empty()) write_json_file(json_path, out.dump(2) + "\n");
  return 0;
}

int run_pairing(const std::string& space_text, const std::string& which,
                const std::string& json_path) {
  const mukai::SpacePtr space = mukai::space_from_spec_text(space_text);
  const bool is_mukai = which == "mukai";
  const mukai::RationalMatrix gram =
      is_mukai ? mukai::mukai_gram(space) : mukai::shklyarov_gram(space);

  std::cout << (is_mukai ? "Mukai" : "Shklyarov") << " pairing on " << space->label
            << " over the basis {";
  for (int i = 0; i < space->ring->dim(); ++i) {
    std::cout << (i ? ", " : "") << space->ring->element(i).name;
  }
  std::cout << "}\n" << mukai::format_matrix(gram) << "\n";

  // blocks by Hochschild degree pair (i, -i)
  std::map<int, std::vector<int>> by_degree;
  for (int i = 0; i < space->ring->dim(); ++i) {
    by_degree[mukai::hh_degree(space->ring->element(i).degree)].push_back(i);
  }
  for (const auto& [deg, rows] : by_degree) {
    auto cols = by_degree.find(-deg);
    if (cols == by_degree.end()) continue;
    mukai::RationalMatrix block(rows.size(), std::vector<Rational>(cols->second.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols->second.size(); ++c) {
        block[r][c] = gram[rows[r]][cols->second[c]];
      }
    }
    std::cout << "  block HH_" << deg << " x HH_" << -deg << ": " << mukai::format_matrix(block)
              << "\n";
  }

  if (!json_path.empty()) {
    nlohmann::json out;
    out["space"] = space->label;
    out["pairing"] = which;
    out["gram"] = mukai::matrix_to_json(gram);
    write_json_file(json_path, out.dump(2) + "\n");
  }
  return 0;
}

int run_transform(const std::string& space_text, const std::string& target_text,
                  const std::string& kernel_text, uint64_t seed, const std::string& json_path) {
  const mukai::SpacePtr source = mukai::space_from_spec_text(space_text);
  const mukai::SpacePtr target =
      target_text.empty() ? source : mukai::space_from_spec_text(target_text);
  const mukai::Kernel kernel =
      mukai::kernel_from_spec(mukai::parse_json(kernel_text), source, target, seed);

  std::cout << "kernel " << kernel.label << ": " << source->label << " -> " << target->label
            << "\n";
  std::cout << "  ch = " << mukai::format_class(kernel.ch.value) << "\n";
  const mukai::RationalMatrix matrix = mukai::transform_matrix(kernel);
  std::cout << "  transform matrix (columns = images of source basis):\n  "
            << mukai::format_matrix(matrix) << "\n";

  if (!json_path.empty()) {
    nlohmann::json out;
    out["source"] = source->label;
    out["target"] = target->label;
    out["kernel"] = kernel.label;
    out["ch"] = mukai::class_to_json(kernel.ch.value);
    out["matrix"] = mukai::matrix_to_json(matrix);
    write_json_file(json_path, out.dump(2) + "\n");
  }
  return 0;
}

int run_verify(const std::string& suite, uint64_t seed, const std::string& json_path) {
  mukai::VerifyOptions opts;
  opts.suite = suite;
  opts.seed = seed;
  const mukai::VerificationReport report = mukai::run_verification(opts);

  for (const auto& check : report.checks) {
    std::printf("[%s] %s (%ld instances, %.2f ms)\n", check.pass ? "PASS" : "FAIL",
                check.name.c_str(), check.instances, check.millis);
    if (!check.pass) std::printf("        witness: %s\n", check.witness.c_str());
  }
  std::printf("%d/%zu checks passed (suite %s, seed %llu)\n", report.passed(),
              report.checks.size(), report.suite.c_str(),
              static_cast<unsigned long long>(report.seed));

  if (!json_path.empty()) write_json_file(json_path, mukai::report_json(report));
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hochschild-homology pairing and integral-transform calculator"};
  app.set_version_flag("--version", std::string(mukai::kEngineVersion));
  app.require_subcommand(1);

  std::string space_text, target_text, bundle_text, kernel_text, json_path;
  std::string pairing_kind = "mukai";
  std::string suite = "all";
  uint64_t seed = mukai::kDefaultSeed;

  auto* spaces = app.add_subcommand("spaces", "build a space and print its basis table");
  spaces->add_option("--space", space_text, "space spec, e.g. {\"kind\":\"projective\",\"n\":2}")
      ->required();
  spaces->add_option("--bundle", bundle_text, "optional bundle spec to evaluate on the space");
  spaces->add_option("--json", json_path, "write a JSON summary to this path ('-' for stdout)");

  auto* pairing = app.add_subcommand("pairing", "print a pairing Gram matrix");
  pairing->add_option("--space", space_text, "space spec")->required();
  pairing->add_option("--pairing", pairing_kind, "mukai or shk")
      ->check(CLI::IsMember({"mukai", "shk"}));
  pairing->add_option("--json", json_path, "write the matrix as JSON");

  auto* transform = app.add_subcommand("transform", "apply an integral-transform kernel");
  transform->add_option("--space", space_text, "source space spec")->required();
  transform->add_option("--target", target_text, "target space spec (defaults to the source)");
  transform->add_option("--kernel", kernel_text, "kernel spec, e.g. {\"kind\":\"identity\"}")
      ->required();
  transform->add_option("--seed", seed, "seed for random kernels");
  transform->add_option("--json", json_path, "write kernel and matrix as JSON");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("suite", suite, "theorem1|prop1|prop2|prop3|theorem2|theorem3|quiver|all")
      ->check(CLI::IsMember(mukai::verification_suites()));
  verify->add_option("--seed", seed, "seed for the reproducible kernel catalog");
  verify->add_option("--json", json_path, "write the full report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (spaces->parsed()) return run_spaces(space_text, bundle_text, json_path);
    if (pairing->parsed()) return run_pairing(space_text, pairing_kind, json_path);
    if (transform->parsed()) {
      return run_transform(space_text, target_text, kernel_text, seed, json_path);
    }
    return run_verify(suite, seed, json_path);
  } catch (const mukai::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
