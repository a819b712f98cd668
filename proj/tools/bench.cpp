// Timing comparison of the OpenMP trial sweep against the serial reference
// path, with a byte-identity check of the resulting reports.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "lpcoh/json_io.hpp"
#include "lpcoh/verify.hpp"

using namespace lpcoh;

namespace {

double run_suites(const VerifyOptions& opt, std::string& dump, bool& passed) {
  auto start = std::chrono::steady_clock::now();
  std::vector<VerifyReport> reports = verify_all(opt);
  auto stop = std::chrono::steady_clock::now();
  Json arr = Json::array();
  passed = true;
  for (const VerifyReport& r : reports) {
    passed = passed && r.passed();
    arr.push_back(to_json(r));
  }
  dump = dump_json(arr);
  return std::chrono::duration<double>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
  VerifyOptions opt;
  opt.seed = argc > 1 ? std::stoull(argv[1]) : 7;
  opt.trials = argc > 2 ? std::stoull(argv[2]) : 0;

  std::string serial_dump, parallel_dump;
  bool serial_ok = false, parallel_ok = false;

  opt.parallel = false;
  double serial_s = run_suites(opt, serial_dump, serial_ok);
  opt.parallel = true;
  double parallel_s = run_suites(opt, parallel_dump, parallel_ok);

  std::cout << "| sweep | seconds | passed |\n|---|---|---|\n";
  std::cout << "| serial reference | " << serial_s << " | " << (serial_ok ? "yes" : "no")
            << " |\n";
  std::cout << "| OpenMP | " << parallel_s << " | " << (parallel_ok ? "yes" : "no")
            << " |\n\n";
  bool identical = serial_dump == parallel_dump;
  std::cout << "speedup: " << (parallel_s > 0 ? serial_s / parallel_s : 0)
            << "x, reports byte-identical: " << (identical ? "yes" : "no") << "\n";
  return identical && serial_ok && parallel_ok ? 0 : 1;
}
