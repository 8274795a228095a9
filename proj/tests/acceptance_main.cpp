#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "odplab/corpus.hpp"

// Runs the full acceptance suite and prints one line per criterion.
// Parallelism comes from the first argument, then ODPLAB_JOBS, then the
// hardware; results are identical at any job count.
int main(int argc, char** argv) {
  unsigned jobs = 0;
  if (argc > 1)
    jobs = (unsigned)std::strtoul(argv[1], nullptr, 10);
  else if (const char* env = std::getenv("ODPLAB_JOBS"))
    jobs = (unsigned)std::strtoul(env, nullptr, 10);
  if (jobs == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    jobs = hw ? std::min(hw, 8u) : 1u;
  }
  bool ok = odplab::corpus_check(std::cout, jobs, true);
  return ok ? 0 : 1;
}
