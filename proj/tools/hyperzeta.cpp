#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hz/bench.hpp"
#include "hz/curve_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyMismatch = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInternal = 3;

int exit_code_for(const hz::Error& e) {
  return hz::errc_is_input_error(e.code()) ? kExitInvalidInput : kExitInternal;
}

std::vector<std::string> read_documents(const std::string& path) {
  std::vector<std::string> lines;
  std::istream* in = &std::cin;
  std::ifstream file;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) hz::fail(hz::Errc::InvalidInput, "cannot open " + path);
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    if (line.find_first_not_of(" \t\r\n") != std::string::npos)
      lines.push_back(line);
  }
  if (lines.empty()) hz::fail(hz::Errc::InvalidInput, "no input documents");
  return lines;
}

void print_human(const hz::RunResult& r) {
  const auto& z = r.zeta;
  std::cout << "curve: genus " << z.genus << " over F_" << z.q.get_str()
            << "  (p=" << r.input.p << ", n=" << r.input.n << ")\n";
  std::cout << "L-polynomial: 1";
  for (size_t i = 1; i < z.L.size(); ++i) {
    const mpz_class& c = z.L[i];
    if (c == 0) continue;
    std::cout << (c > 0 ? " + " : " - ");
    mpz_class ac = abs(c);
    if (ac != 1 || i == 0) std::cout << ac.get_str();
    std::cout << "T";
    if (i > 1) std::cout << "^" << i;
  }
  std::cout << "\n";
  std::cout << "frobenius charpoly coefficients a_1..a_2g:";
  for (const auto& c : z.a) std::cout << " " << c.get_str();
  std::cout << "\n";
  for (size_t i = 0; i < z.counts.size(); ++i)
    std::cout << "#C(F_q^" << (i + 1) << ") = " << z.counts[i].get_str() << "\n";
  std::cout << "precision: N1=" << z.profile.N1 << " N=" << z.profile.N
            << " J=" << z.profile.J << "\n";
  if (!r.verify.empty()) {
    for (const auto& e : r.verify)
      std::cout << "verify i=" << e.ext << ": oracle "
                << e.oracle_count.get_str() << (e.match ? " MATCH" : " MISMATCH")
                << "\n";
    for (unsigned i : r.verify_skipped)
      std::cout << "verify i=" << i << ": skipped (over oracle guard)\n";
  }
  std::cout << "total " << r.timings.total_ms << " ms (step1 "
            << r.timings.step1_ms << ", step2 " << r.timings.step2_ms
            << ", step3 " << r.timings.step3_ms << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hyperzeta: zeta-function numerators of hyperelliptic curves y^2 = Q(x) "
      "over odd-characteristic finite fields, via a Frobenius lift on p-adic "
      "cohomology, with a brute-force verification oracle"};
  app.require_subcommand(1);

  std::string input_path;
  unsigned counts_upto = 1;
  unsigned threads = 1;
  unsigned precision_override = 0;
  bool verify = false;
  bool json_out = false;
  uint64_t guard = 10000000;
  uint64_t seed = 0;

  auto* count = app.add_subcommand(
      "count", "compute L-polynomial and point counts for each input curve");
  count->add_option("file", input_path,
                    "line-delimited JSON curve documents (default: stdin)");
  count->add_option("--counts", counts_upto, "report #C(F_{q^i}) for i = 1..k")
      ->default_val(1);
  count->add_flag("--verify", verify, "compare against the brute-force oracle");
  count->add_option("--precision", precision_override,
                    "raise the target precision N1 to at least this");
  count->add_flag("--json", json_out, "emit one JSON result document per line");
  count->add_option("--threads", threads, "worker threads for the matrix columns")
      ->default_val(1);
  count->add_option("--seed", seed, "seed for generated field polynomials")
      ->default_val(0);
  count->add_option("--guard", guard, "oracle enumeration guard")
      ->default_val(10000000);

  unsigned oracle_ext = 1;
  auto* oracle = app.add_subcommand(
      "oracle", "brute-force #C(F_{q^i}) only (no p-adic machinery)");
  oracle->add_option("file", input_path,
                     "line-delimited JSON curve documents (default: stdin)");
  oracle->add_option("--ext", oracle_ext, "extension degree i")->default_val(1);
  oracle->add_flag("--json", json_out, "emit JSON");
  oracle->add_option("--guard", guard, "oracle enumeration guard")
      ->default_val(10000000);
  oracle->add_option("--seed", seed, "seed for generated field polynomials")
      ->default_val(0);

  std::string genus_list_str = "2,4,8";
  std::string n_list_str = "1";
  uint64_t bench_p = 5;
  auto* bench = app.add_subcommand(
      "bench", "time the pipeline over a (genus, n) grid and fit scaling slopes");
  bench->add_option("--genus-list", genus_list_str, "comma-separated genus grid")
      ->default_val("2,4,8");
  bench->add_option("--n-list", n_list_str, "comma-separated field degree grid")
      ->default_val("1");
  bench->add_option("--p", bench_p, "characteristic")->default_val(5);
  bench->add_option("--seed", seed, "curve generation seed")->default_val(0);
  bench->add_option("--threads", threads, "worker threads")->default_val(1);
  bench->add_flag("--json", json_out, "emit JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) {
      hz::RunOptions opt;
      opt.counts_upto = counts_upto;
      opt.threads = std::max(1u, threads);
      opt.n1_override = precision_override;
      opt.verify = verify;
      opt.oracle_guard = guard;
      opt.seed = seed;
      bool all_match = true;
      for (const auto& line : read_documents(input_path)) {
        hz::CurveInput in = hz::parse_curve_line(line);
        hz::RunResult r = hz::run_count(std::move(in), opt);
        if (!r.verified) all_match = false;
        if (json_out)
          std::cout << hz::result_to_json(r).dump() << "\n";
        else
          print_human(r);
      }
      return all_match ? kExitOk : kExitVerifyMismatch;
    }

    if (oracle->parsed()) {
      for (const auto& line : read_documents(input_path)) {
        hz::CurveInput in = hz::parse_curve_line(line);
        hz::CurveData curve = hz::curve_from_input(in, seed);
        uint64_t c = hz::count_points_oracle(curve, oracle_ext, guard);
        if (json_out)
          std::cout << nlohmann::json{{"i", oracle_ext}, {"count", c}}.dump()
                    << "\n";
        else
          std::cout << c << "\n";
      }
      return kExitOk;
    }

    if (bench->parsed()) {
      auto parse_list = [](const std::string& s) {
        std::vector<unsigned> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ','))
          if (!item.empty()) out.push_back(static_cast<unsigned>(std::stoul(item)));
        if (out.empty()) hz::fail(hz::Errc::InvalidInput, "empty grid list");
        return out;
      };
      hz::BenchReport rep = hz::run_bench(bench_p, parse_list(genus_list_str),
                                          parse_list(n_list_str), seed,
                                          std::max(1u, threads));
      if (json_out) {
        nlohmann::json j;
        j["p"] = rep.p;
        j["seed"] = rep.seed;
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& pt : rep.points)
          pts.push_back({{"g", pt.g},
                         {"n", pt.n},
                         {"total_ms", pt.timings.total_ms},
                         {"step1_ms", pt.timings.step1_ms},
                         {"step2_ms", pt.timings.step2_ms},
                         {"step3_ms", pt.timings.step3_ms}});
        j["points"] = pts;
        if (rep.slope_g_defined) j["slope_g"] = rep.slope_g;
        if (rep.slope_n_defined) j["slope_n"] = rep.slope_n;
        std::cout << j.dump() << "\n";
      } else {
        for (const auto& pt : rep.points)
          std::cout << "g=" << pt.g << " n=" << pt.n << ": total "
                    << pt.timings.total_ms << " ms (step1 "
                    << pt.timings.step1_ms << ", step2 " << pt.timings.step2_ms
                    << ", step3 " << pt.timings.step3_ms << ")\n";
        if (rep.slope_g_defined)
          std::cout << "log-log slope in g: " << rep.slope_g << "\n";
        else
          std::cout << "log-log slope in g: undefined (single-point grid)\n";
        if (rep.slope_n_defined)
          std::cout << "log-log slope in n: " << rep.slope_n << "\n";
        else
          std::cout << "log-log slope in n: undefined (single-point grid)\n";
      }
      return kExitOk;
    }
  } catch (const hz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (json_out) std::cout << hz::error_to_json(e).dump() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
