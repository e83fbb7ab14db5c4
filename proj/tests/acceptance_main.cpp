// acceptance runner: one line per criterion, exit 0 iff everything passes
#include <iostream>

#include "charkummer/verify.hpp"

int main() {
  bool all_ok = true;
  for (auto& c : ck::run_acceptance()) {
    bool ok = c.pass;
    all_ok = all_ok && ok;
    std::cout << "criterion " << (c.number < 10 ? "0" : "") << c.number << " "
              << c.name << ": " << (ok ? "PASS" : "FAIL") << "\n";
    if (!ok)
      for (auto& r : c.records)
        if (!r.pass) std::cout << "    " << ck::format_record(r) << "\n";
  }
  return all_ok ? 0 : 1;
}
