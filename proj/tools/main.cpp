#include "curvinv/curvature.hpp"
#include "curvinv/documents.hpp"
#include "curvinv/isomorphism.hpp"
#include "curvinv/sl2.hpp"

#include <CLI11.hpp>

#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string quad_string(const std::array<int, 4>& q) {
  std::ostringstream out;
  out << "(" << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << ")";
  return out.str();
}

int run_dim(int n) {
  std::cout << "R(V)=" << curvinv::curvature_space_basis(n).dim()
            << " sl2=" << curvinv::sl2_invariants(n).dim()
            << " sb2=" << curvinv::sb2_invariants(n).dim()
            << " ambient=" << curvinv::wedge_basis(n).size() << "\n";
  return 0;
}

int run_check(const std::string& path, int max_n) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "check: cannot open '" << path << "'\n";
    return kExitUsage;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  const curvinv::FormDocument doc = curvinv::parse_form_document(buffer.str());
  if (doc.n > max_n) {
    std::cerr << "check: document n=" << doc.n << " exceeds the ceiling " << max_n
              << " (see --max-n)\n";
    return kExitUsage;
  }
  const curvinv::TetraForm form = curvinv::to_form(doc);
  const curvinv::FormDiagnostics d = curvinv::diagnose(form);

  std::cout << "property1";
  if (d.property1()) {
    std::cout << " pass\n";
  } else {
    std::cout << " fail";
    if (d.antisym_first) std::cout << " witness=" << quad_string(*d.antisym_first);
    if (d.antisym_second) std::cout << " witness=" << quad_string(*d.antisym_second);
    std::cout << "\n";
  }

  std::cout << "property2";
  if (d.property2()) {
    std::cout << " pass\n";
  } else {
    std::cout << " fail witness=" << quad_string(*d.bianchi) << "\n";
  }

  std::cout << "pair-symmetry";
  if (d.pair_symmetric()) {
    std::cout << " pass\n";
  } else {
    std::cout << " fail witness=" << quad_string(*d.pair_swap) << "\n";
  }

  return (d.property1() && d.property2()) ? 0 : kExitCheckFailed;
}

int run_basis(int n, const std::string& which, const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "basis: cannot create '" << out_dir << "': " << ec.message() << "\n";
    return kExitUsage;
  }

  const auto write_file = [&](const std::string& name, const std::string& body) -> bool {
    const std::filesystem::path path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    out << body << "\n";
    if (!out) {
      std::cerr << "basis: cannot write '" << path.string() << "'\n";
      return false;
    }
    std::cout << path.string() << "\n";
    return true;
  };

  const auto file_name = [](const std::string& stem, std::size_t index) {
    std::ostringstream name;
    name << stem << "_";
    name.width(3);
    name.fill('0');
    name << index;
    return name.str() + ".json";
  };

  if (which == "curvature") {
    const auto forms = curvinv::curvature_basis_forms(n);
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (!write_file(file_name("curvature", i), curvinv::serialize(curvinv::form_document(forms[i])))) {
        return kExitUsage;
      }
    }
  } else {
    const curvinv::SubspaceBasis invariants = curvinv::sl2_invariants(n);
    for (std::size_t i = 0; i < invariants.dim(); ++i) {
      const auto element = curvinv::ExteriorElement::from_coefficients(n, invariants.vectors()[i]);
      if (!write_file(file_name("invariant", i),
                      curvinv::serialize(curvinv::exterior_document(element)))) {
        return kExitUsage;
      }
    }
  }
  return 0;
}

int run_verify(int n, const std::string& suite, bool quiet) {
  curvinv::VerificationReport report;
  if (suite == "lemma") {
    report = curvinv::lemma_report(n);
  } else if (suite == "iso") {
    report = curvinv::verify_isomorphism(n);
  } else if (suite == "bianchi-ekernel") {
    report = curvinv::bianchi_ekernel_report(n);
  } else if (suite == "pair-symmetry") {
    report = curvinv::pair_symmetry_report(n);
  } else if (suite == "basis-independence") {
    report = curvinv::basis_independence_report(n);
  } else {
    report = curvinv::verify_all(n);
  }

  for (const auto& check : report.checks) {
    std::cout << check.name;
    if (check.pass) {
      std::cout << " pass\n";
    } else if (check.detail.empty()) {
      std::cout << " fail\n";
    } else {
      std::cout << " fail witness=" << check.detail << "\n";
    }
  }
  if (!quiet) {
    std::cerr << "verify n=" << n << " suite=" << suite << ": "
              << (report.pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return report.pass() ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the correspondence between curvature-type tetralinear "
               "forms and SL(2)-invariants of the fourth exterior power"};
  app.require_subcommand(1);

  int max_n = 6;
  app.add_option("--max-n", max_n, "largest admissible dimension of V")->capture_default_str();

  int dim_n = 0;
  CLI::App* dim_cmd = app.add_subcommand("dim", "print the dimensions of the curvature and invariant spaces");
  dim_cmd->add_option("--n", dim_n, "dimension of V")->required();

  std::string check_path;
  CLI::App* check_cmd = app.add_subcommand("check", "check the symmetry properties of a form document");
  check_cmd->add_option("file", check_path, "FormDocument JSON file")->required();

  int basis_n = 0;
  std::string basis_which;
  std::string basis_out;
  CLI::App* basis_cmd = app.add_subcommand("basis", "write the canonical basis as JSON documents");
  basis_cmd->add_option("--n", basis_n, "dimension of V")->required();
  basis_cmd->add_option("--which", basis_which, "curvature or invariants")
      ->required()
      ->check(CLI::IsMember({"curvature", "invariants"}));
  basis_cmd->add_option("--out", basis_out, "output directory")->required();

  int verify_n = 0;
  std::string verify_suite;
  bool verify_quiet = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--n", verify_n, "dimension of V")->required();
  verify_cmd->add_option("--suite", verify_suite, "verification suite")
      ->required()
      ->check(CLI::IsMember(
          {"lemma", "iso", "bianchi-ekernel", "pair-symmetry", "basis-independence", "all"}));
  verify_cmd->add_flag("--quiet", verify_quiet, "suppress the summary line on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  const auto validate_n = [&](int n) {
    if (n < 1 || n > max_n) {
      std::cerr << "n must be between 1 and " << max_n << " (see --max-n)\n";
      return false;
    }
    return true;
  };

  try {
    if (*dim_cmd) {
      if (!validate_n(dim_n)) return kExitUsage;
      return run_dim(dim_n);
    }
    if (*check_cmd) {
      return run_check(check_path, max_n);
    }
    if (*basis_cmd) {
      if (!validate_n(basis_n)) return kExitUsage;
      return run_basis(basis_n, basis_which, basis_out);
    }
    if (*verify_cmd) {
      if (!validate_n(verify_n)) return kExitUsage;
      return run_verify(verify_n, verify_suite, verify_quiet);
    }
  } catch (const curvinv::DocumentError& err) {
    std::cerr << err.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
