#include "cli.hpp"

int main(int argc, char** argv) { return rancher::cli::run(argc, argv); }
