#include "varbico/run.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"varbico: variational-bicomplex calculus on session files"};

    std::string path;
    std::string format = "text";
    std::string bounds = "1,1";
    int depth = 2;

    app.add_option("file", path, "session file to execute")->required();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "latex", "json"}))
        ->capture_default_str();
    app.add_option("--bounds", bounds,
                   "ORDER,DEGREE ansatz bounds for compare")
        ->capture_default_str();
    app.add_option("--depth", depth, "integrability check depth")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    varbico::RunOptions options;
    if (format == "latex") options.format = varbico::Format::latex;
    else if (format == "json") options.format = varbico::Format::json;
    options.depth = depth;

    {
        std::istringstream in(bounds);
        char comma = 0;
        if (!(in >> options.bounds.jet_order >> comma >> options.bounds.poly_degree) ||
            comma != ',' || options.bounds.jet_order < 0 || options.bounds.poly_degree < 0) {
            std::cerr << "error: --bounds expects ORDER,DEGREE\n";
            return 2;
        }
    }

    std::ifstream file(path);
    if (!file) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 2;
    }
    std::stringstream text;
    text << file.rdbuf();

    try {
        varbico::Session session = varbico::parse_session(text.str());
        return varbico::run_session(session, options, std::cout, std::cerr);
    } catch (const varbico::ParseError& e) {
        std::cerr << path << ":" << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
