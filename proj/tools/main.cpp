#include "hrlab/cli.hpp"

int main(int argc, char** argv) { return hrlab::cli::run_main(argc, argv); }
