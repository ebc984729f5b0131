#include "goldbach_lab/cli.hpp"

int main(int argc, char** argv) { return goldbach_lab::cli::run(argc, argv); }
