#include "commands.hpp"

int main(int argc, char** argv) { return heatfcs::cli::run(argc, argv); }
