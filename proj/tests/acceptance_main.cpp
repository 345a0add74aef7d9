#include <chessgeo/verify.hpp>

#include <iostream>

int main() {
  const bool ok = chessgeo::verify::run_acceptance(std::cout);
  return ok ? 0 : 1;
}
