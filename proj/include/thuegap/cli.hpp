#pragma once
// Command-line driver: subcommand dispatch, JSON output, run manifests.
// Exit codes: 0 success; 1 solve found solutions; 2 search budget exhausted;
// 3 audit failure; 64 usage errors; 70 internal errors.
namespace thuegap {

int run_cli(int argc, char** argv);

}  // namespace thuegap
