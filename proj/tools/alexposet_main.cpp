#include "alexposet/cli.hpp"

int main(int argc, char** argv) { return alexposet::cli::run(argc, argv); }
