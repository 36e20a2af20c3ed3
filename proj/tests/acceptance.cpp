// Acceptance gate: runs the full verification suite and prints one line per
// criterion.  Exit status is 0 exactly when no item fails (skips allowed).

#include <iostream>
#include <string>

#include "foldcob/verify.hpp"

#ifndef FOLDCOB_DATA_DIR
#define FOLDCOB_DATA_DIR ""
#endif

int main(int argc, char** argv) {
  std::string data_dir = argc > 1 ? argv[1] : FOLDCOB_DATA_DIR;
  auto rep = foldcob::run_verification(data_dir);
  std::cout << foldcob::render_verification(rep);
  return rep.ok() ? 0 : 1;
}
