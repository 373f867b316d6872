#include <iostream>

#include "nearconv/acceptance.hpp"

int main() {
  using namespace nearconv::acceptance;
  const auto results = run_all(Config{}, [](const Result& r) {
    print(std::cout, r);
    std::cout.flush();
  });
  int failed = 0;
  for (const auto& r : results) failed += r.pass ? 0 : 1;
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
