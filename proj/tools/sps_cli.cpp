#include "sps/harness.hpp"

int main(int argc, char** argv) { return sps::harness::run_cli(argc, argv); }
