// Runs acceptance criteria 1-10 and prints one PASS/FAIL line per criterion.

#include <iostream>
#include <map>

#include "qhopf/repro.hpp"

int main(int argc, char** argv) {
  qhopf::ReproOptions opts;
  opts.fixtures = argc > 1 ? argv[1] : QHOPF_FIXTURE_DIR;
  opts.log = &std::cout;
  try {
    const qhopf::ReproResult r = qhopf::run_repro(opts);
    std::map<int, std::string> titles;
    for (const auto& s : r.steps) titles[s.criterion] += (titles[s.criterion].empty() ? "" : "; ") + s.title;
    std::cout << '\n';
    for (const auto& [n, ok] : r.criteria()) {
      std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << titles[n] << '\n';
    }
    return r.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cout << "FAIL: " << e.what() << '\n';
    return 2;
  }
}
