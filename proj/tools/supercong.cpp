#include "supercong/cli.hpp"

int main(int argc, char** argv) { return supercong::parse_and_dispatch(argc, argv); }
