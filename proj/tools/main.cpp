#include "thuegap/cli.hpp"

int main(int argc, char** argv) { return thuegap::run_cli(argc, argv); }
