#include "artifact/cascade.hpp"
#include "artifact/certificate.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <thread>

using namespace artifact;
namespace fs = std::filesystem;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

std::string degrees_text(const CaseReport& r) {
  std::string s;
  for (const auto& d : r.pair.degrees) s += (s.empty() ? "" : ",") + d.get_str();
  return "{" + s + "}";
}

std::string case_file(const CaseId& id) {
  return family_name(id.family) + (id.family == Family::B || id.family == Family::D ? std::to_string(id.n) : "") +
         "_s" + std::to_string(id.s) + ".json";
}

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int default_rank(Family f, int rank) {
  if (rank > 0) return rank;
  if (f == Family::E6) return 6;
  if (f == Family::E7) return 7;
  return rank;
}

int cmd_verify(const std::string& family, int rank, int s, const std::string& out, const std::string& format) {
  Family f;
  try {
    f = parse_family(family);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  rank = default_rank(f, rank);
  std::string why;
  if (!in_scope(f, rank, s, &why)) {
    std::cerr << "out of scope: " << why << "\n";
    return kUsage;
  }
  const auto report = run_case(f, rank, s);
  const auto cert = certificate_json(report);
  if (!out.empty() && !write_text(out, cert.dump(2) + "\n")) {
    std::cerr << "cannot write " << out << "\n";
    return kUsage;
  }
  if (format == "json") std::cout << cert.dump(2) << "\n";
  else std::cout << render_report(cert, format == "md");
  return report.passed() ? kPass : kFail;
}

int cmd_sweep(int max_rank, const std::string& out_dir, int jobs) {
  if (max_rank < 4) {
    std::cerr << "--max-rank must be at least 4\n";
    return kUsage;
  }
  if (!out_dir.empty()) fs::create_directories(out_dir);
  const auto cases = enumerate_cases(max_rank);
  struct Row {
    std::string cert;
    bool pass = false;
    std::string first_failure;
    std::string degrees;
    double seconds = 0;
  };
  std::vector<Row> rows(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto r = run_case(cases[k].family, cases[k].n, cases[k].s);
      rows[k].cert = certificate_json(r).dump(2) + "\n";
      rows[k].pass = r.passed();
      if (const auto* f = r.first_failure()) rows[k].first_failure = f->name;
      rows[k].degrees = degrees_text(r);
      rows[k].seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, jobs); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  int failures = 0;
  std::cout << std::left << std::setw(6) << "case" << std::setw(4) << "s" << std::setw(8) << "verdict"
            << std::setw(10) << "time(s)" << "degrees\n";
  for (std::size_t k = 0; k < cases.size(); ++k) {
    const auto& id = cases[k];
    const auto& row = rows[k];
    if (!out_dir.empty()) write_text((fs::path(out_dir) / case_file(id)).string(), row.cert);
    failures += !row.pass;
    std::string name = family_name(id.family);
    if (id.family == Family::B || id.family == Family::D) name += std::to_string(id.n);
    std::cout << std::setw(6) << name << std::setw(4) << id.s << std::setw(8) << (row.pass ? "pass" : "FAIL")
              << std::setw(10) << std::fixed << std::setprecision(3) << row.seconds << row.degrees;
    if (!row.pass) std::cout << "  first failure: " << row.first_failure;
    std::cout << "\n";
  }
  std::cout << cases.size() << " cases, " << failures << " failed\n";
  return failures ? kFail : kPass;
}

int cmd_cascade(const std::string& family, int rank) {
  Family f;
  try {
    f = parse_family(family);
    const RootSystem sys(f, default_rank(f, rank));
    std::vector<int> pos;
    for (int id = 0; id < sys.num_positive(); ++id) pos.push_back(id);
    const auto cascade = kostant_cascade(sys, pos);
    std::vector<int> coeffs;
    for (const auto& it : cascade.items) {
      const auto& c = sys.root(it.root).coeffs;
      std::cout << std::string(2 * it.depth, ' ') << root_label(sys, c) << "  |H| = " << it.heisenberg.size()
                << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kPass;
}

int cmd_report(const std::string& in, const std::string& format) {
  std::ifstream is(in);
  if (!is) {
    std::cerr << "cannot read " << in << "\n";
    return kUsage;
  }
  try {
    const auto cert = nlohmann::ordered_json::parse(is);
    std::cout << render_report(cert, format == "md");
    return cert.at("verdict") == "pass" ? kPass : kFail;
  } catch (const std::exception& e) {
    std::cerr << "malformed certificate: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adapted pairs and polynomiality certificates for truncated maximal parabolics"};
  app.require_subcommand(1);

  std::string family, out, format = "txt", in;
  int rank = 0, s = 0, max_rank = 8;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  auto* verify = app.add_subcommand("verify", "Build and certify one case");
  verify->add_option("--family", family, "B, D, E6 or E7")->required();
  verify->add_option("--rank", rank, "rank n (implied for E6, E7)");
  verify->add_option("--s", s, "index of the removed simple root (Bourbaki labels)")->required();
  verify->add_option("--out", out, "write the JSON certificate here");
  verify->add_option("--format", format, "stdout format")->check(CLI::IsMember({"txt", "md", "json"}));

  auto* sweep = app.add_subcommand("sweep", "Certify every case up to a rank");
  sweep->add_option("--max-rank", max_rank, "largest rank")->required();
  sweep->add_option("--out", out, "directory for certificates");
  sweep->add_option("--jobs", jobs, "worker threads");

  auto* cascade = app.add_subcommand("cascade", "List the Kostant cascade");
  cascade->add_option("--family", family)->required();
  cascade->add_option("--rank", rank);

  auto* report = app.add_subcommand("report", "Render a certificate");
  report->add_option("--in", in, "certificate JSON file")->required();
  report->add_option("--format", format, "output format")->check(CLI::IsMember({"txt", "md"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  if (*verify) return cmd_verify(family, rank, s, out, format);
  if (*sweep) return cmd_sweep(max_rank, out, jobs);
  if (*cascade) return cmd_cascade(family, rank);
  return cmd_report(in, format);
}
