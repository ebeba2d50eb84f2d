#include <cstdlib>
#include <cstring>
#include <iostream>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  ringcover::acceptance::Options opts;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-large") == 0) {
      opts.skip_large = true;
    } else if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--skip-large] [--criterion K]\n";
      return 2;
    }
  }
  if (only) {
    auto r = ringcover::acceptance::run(only, opts);
    std::cout << ringcover::acceptance::format(r) << std::endl;
    return r.pass || r.known ? 0 : 1;
  }
  return ringcover::acceptance::run_all(opts) ? 0 : 1;
}
