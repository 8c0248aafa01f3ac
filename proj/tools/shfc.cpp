// Command line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage, parse or gate errors.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "shfc/cohomology.hpp"
#include "shfc/constructions.hpp"
#include "shfc/errors.hpp"
#include "shfc/invariants.hpp"
#include "shfc/module_file.hpp"
#include "shfc/verify.hpp"

namespace {

using namespace shfc;

constexpr int kUsageError = 2;
constexpr int kVerificationFailure = 1;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

AnyPresentation load(const std::string& path) {
  try {
    return parse_module(read_input(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

/// "a:b" or a single integer.
std::pair<int, int> parse_range(const std::string& s) {
  auto colon = s.find(':', s.front() == '-' ? 1 : 0);
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, v};
    }
    std::string lo = s.substr(0, colon), hi = s.substr(colon + 1);
    int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(s);
    int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(s);
    if (a > b) throw std::invalid_argument(s);
    return {a, b};
  } catch (const std::logic_error&) {
    throw DomainError("expected a range a:b with a <= b, got '" + s + "'");
  }
}

std::string regularity_field(const Regularity& r) { return r.to_string(); }

nlohmann::json regularity_json(const Regularity& r) {
  if (r.is_finite()) return r.value();
  return regularity_field(r);
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw Error("cannot write '" + output + "'");
  out << text;
}

template <class K>
void require_same_ring(const Presentation<K>& a, const Presentation<K>& b) {
  if (!(a.ring() == b.ring())) throw RingMismatch();
}

/// Visits two presentations that must live over the same field.
template <class Fn>
auto visit_pair(const AnyPresentation& a, const AnyPresentation& b, Fn&& fn) {
  return std::visit(
      [&](const auto& x, const auto& y) -> AnyPresentation {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<X, Y>) {
          require_same_ring(x, y);
          return fn(x, y);
        } else {
          throw RingMismatch();
        }
      },
      a, b);
}

AnyPresentation koszul_family(const std::string& which, std::uint32_t characteristic, int vars, int index) {
  if (characteristic == 0) {
    auto ring = make_ring<RationalField>(0, vars);
    return which == "omega" ? AnyPresentation(omega(ring, index)) : AnyPresentation(koszul_R(ring, index));
  }
  auto ring = make_ring<PrimeField>(characteristic, vars);
  return which == "omega" ? AnyPresentation(omega(ring, index)) : AnyPresentation(koszul_R(ring, index));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sheaf cohomology on projective space from graded module presentations"};
  app.require_subcommand(1);
  std::string module_path, other_path, format = "json", twists = "", output;

  auto* cohomology = app.add_subcommand("cohomology", "table of h^i(M~(d)) over a twist window");
  cohomology->add_option("--module", module_path, "module JSON file ('-' for stdin)")->required();
  cohomology->add_option("--twists", twists, "twist window a:b (default -n-5:n+5)");
  cohomology->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* betti = app.add_subcommand("betti", "Betti table of the minimal free resolution");
  betti->add_option("--module", module_path)->required();
  betti->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  auto* reg = app.add_subcommand("reg", "sheaf and module regularity");
  reg->add_option("--module", module_path)->required();

  auto* lvl = app.add_subcommand("level", "level with witnesses");
  lvl->add_option("--module", module_path)->required();

  auto* phicert = app.add_subcommand("phicert", "Frobenius amplitude upper bound lambda(E(-n))");
  phicert->add_option("--module", module_path)->required();

  auto* beil = app.add_subcommand("beilinson", "Beilinson E1 dimensions h^b(R_{-a} x E)");
  beil->add_option("--module", module_path)->required();
  beil->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  std::string kind = "symmetric", window = "1:5";
  int probe_q = 0;
  auto* probe = app.add_subcommand("probe", "finite-window amplitude probe (not a certificate)");
  probe->add_option("--module", module_path)->required();
  probe->add_option("--kind", kind, "symmetric, tensor or q-power")
      ->check(CLI::IsMember({"symmetric", "tensor", "q-power"}));
  probe->add_option("--window", window, "range of powers N_min:N_max");
  probe->add_option("--twists", twists, "probe twists a:b")->required();
  probe->add_option("--q", probe_q, "base of the q-power probe (default: characteristic, 2 over Q)");

  auto* construct = app.add_subcommand("construct", "build a module and print its JSON");
  construct->require_subcommand(1);
  int amount = 0;
  std::uint32_t characteristic = 0;
  int vars = 3;
  auto* c_twist = construct->add_subcommand("twist", "M(e)");
  c_twist->add_option("--module", module_path)->required();
  c_twist->add_option("--by", amount, "twist e")->required();
  auto* c_sum = construct->add_subcommand("sum", "M + N");
  c_sum->add_option("--module", module_path)->required();
  c_sum->add_option("--with", other_path)->required();
  auto* c_tensor = construct->add_subcommand("tensor", "M x N");
  c_tensor->add_option("--module", module_path)->required();
  c_tensor->add_option("--with", other_path)->required();
  auto* c_sym = construct->add_subcommand("sym", "Sym^r M");
  c_sym->add_option("--module", module_path)->required();
  c_sym->add_option("--power", amount, "r >= 1")->required();
  auto* c_qpow = construct->add_subcommand("qpow", "q-power pullback");
  c_qpow->add_option("--module", module_path)->required();
  c_qpow->add_option("--q", amount, "q >= 1")->required();
  auto* c_koszul = construct->add_subcommand("koszulR", "R_m = Omega^m(m)");
  c_koszul->add_option("--m", amount)->required();
  auto* c_omega = construct->add_subcommand("omega", "Omega^p");
  c_omega->add_option("--p", amount)->required();
  for (auto* sub : {c_koszul, c_omega}) {
    sub->add_option("--char", characteristic, "0 or a prime");
    sub->add_option("--vars", vars, "number of variables n+1");
  }
  for (auto* sub : construct->get_subcommands()) sub->add_option("--output", output, "write here instead of stdout");

  std::string suite;
  SuiteOptions suite_options;
  auto* verify = app.add_subcommand("verify", "run a theorem verification suite and print its report");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", suite_options.seed);
  verify->add_option("--char", suite_options.characteristic, "characteristic (0 for Q)");
  verify->add_option("--dim", suite_options.dim, "n for P^n");
  verify->add_option("--count", suite_options.count, "instances per dimension");
  verify->add_option("--output", output, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*cohomology) {
      auto m = load(module_path);
      std::visit(
          [&](const auto& p) {
            int n = p.ring().dimension();
            auto [lo, hi] = twists.empty() ? std::pair{-n - 5, n + 5} : parse_range(twists);
            auto table = SheafCohomology(p).table(lo, hi);
            emit(format == "table" ? table.to_grid() : table.to_json().dump() + "\n", output);
          },
          m);
    } else if (*betti) {
      auto m = load(module_path);
      std::visit(
          [&](const auto& p) {
            auto b = minimal_free_resolution(p).betti();
            if (format == "table") {
              emit(b.to_string(), output);
              return;
            }
            nlohmann::json entries = nlohmann::json::array();
            for (const auto& [key, v] : b.entries) entries.push_back({{"i", key.first}, {"j", key.second}, {"beta", v}});
            emit(nlohmann::json{{"betti", entries}}.dump() + "\n", output);
          },
          m);
    } else if (*reg) {
      auto m = load(module_path);
      std::visit(
          [&](const auto& p) {
            SheafCohomology coh(p);
            nlohmann::json j = {{"sheaf_regularity", regularity_json(sheaf_regularity(coh))},
                                {"module_regularity", regularity_json(module_regularity(coh.resolution().betti()))}};
            emit(j.dump() + "\n", output);
          },
          m);
    } else if (*lvl) {
      auto m = load(module_path);
      std::visit([&](const auto& p) { emit(level(p).to_json().dump() + "\n", output); }, m);
    } else if (*phicert) {
      auto m = load(module_path);
      std::visit([&](const auto& p) { emit(phi_certificate(p).to_json().dump() + "\n", output); }, m);
    } else if (*beil) {
      auto m = load(module_path);
      std::visit(
          [&](const auto& p) {
            auto t = beilinson_e1(p);
            emit(format == "table" ? t.to_grid() : t.to_json().dump() + "\n", output);
          },
          m);
    } else if (*probe) {
      auto m = load(module_path);
      auto [n_min, n_max] = parse_range(window);
      auto [b_lo, b_hi] = parse_range(twists);
      std::vector<int> probe_twists;
      for (int b = b_lo; b <= b_hi; ++b) probe_twists.push_back(b);
      std::visit(
          [&](const auto& p) {
            auto r = amplitude_probe(p, parse_probe_kind(kind), n_min, n_max, probe_twists, probe_q);
            emit(r.to_json().dump() + "\n", output);
          },
          m);
    } else if (*construct) {
      AnyPresentation result = [&]() -> AnyPresentation {
        if (*c_koszul) return koszul_family("koszulR", characteristic, vars, amount);
        if (*c_omega) return koszul_family("omega", characteristic, vars, amount);
        auto m = load(module_path);
        if (*c_sum || *c_tensor) {
          auto other = load(other_path);
          bool sum = static_cast<bool>(*c_sum);
          return visit_pair(m, other, [&](const auto& x, const auto& y) {
            return AnyPresentation(sum ? direct_sum(x, y) : tensor(x, y));
          });
        }
        return std::visit(
            [&](const auto& p) -> AnyPresentation {
              if (*c_twist) return twist(p, amount);
              if (*c_sym) return sym_power(p, amount);
              return q_power_pullback(p, amount);
            },
            m);
      }();
      emit(serialize_module(result), output);
    } else if (*verify) {
      auto report = run_suite(suite, suite_options);
      emit(report.to_json().dump(1) + "\n", output);
      std::cerr << suite << ": " << report.instances.size() << " instances, " << report.failures() << " failed\n";
      return report.all_pass() ? 0 : kVerificationFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "shfc: " << e.what() << "\n";
    return kUsageError;
  }
  return 0;
}
