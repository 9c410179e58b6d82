#include "groupfn/cli.hpp"

int main(int argc, char** argv) {
  return groupfn::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
