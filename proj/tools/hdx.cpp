#include "hdx/cli.hpp"

int main(int argc, char** argv) { return hdx::run_cli(argc, argv); }
