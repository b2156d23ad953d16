#include "qgarnier/cli.hpp"

int main(int argc, char** argv) { return qgarnier::run_cli(argc, argv); }
