#include "goatopt/harness.hpp"

int main(int argc, char** argv) { return goatopt::harness::cli_main(argc, argv); }
