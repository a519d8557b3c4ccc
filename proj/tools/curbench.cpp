#include "curkit/bench.hpp"

int main(int argc, char** argv) {
  return curkit::cli_main(argc, argv);
}
