#include "qhom/cli.hpp"

int main(int argc, char** argv) { return qhom::qhom_main(argc, argv); }
