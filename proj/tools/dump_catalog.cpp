// Writes the built-in catalog to a JSON file (default: catalog.json), for
// editing and reloading via the CLI's --catalog flag.
#include <iostream>

#include "grasschar/catalog.hpp"

int main(int argc, char** argv) {
    const std::string path = argc > 1 ? argv[1] : "catalog.json";
    try {
        grasschar::save_catalog(grasschar::build_default_catalog(), path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << "wrote " << path << "\n";
    return 0;
}
