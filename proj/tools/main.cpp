#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lieclass/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"lieclass: symmetry classification of y'' = A y' + B y + f "
                 "(two linear second-order ODEs, constant coefficients)"};

    lieclass::RunConfig cfg;
    std::string epsilons_csv;

    app.add_option("--input", cfg.input_path, "input JSON file (one system or an array)")
        ->required();
    app.add_option("--output", cfg.output_path, "output file (default: stdout)");
    app.add_option("--format", cfg.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--verify", cfg.verify, "run numeric flow verification");
    app.add_flag("--normalize-lambda", cfg.normalize_lambda,
                 "rescale x so the J1 parameter lambda becomes 1");
    app.add_option("--tol", cfg.tol, "numeric verification tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for verification initial data");
    app.add_option("--epsilons", epsilons_csv,
                   "comma-separated group parameters for flow checks");

    CLI11_PARSE(app, argc, argv);

    if (!epsilons_csv.empty()) {
        cfg.epsilons.clear();
        std::stringstream ss(epsilons_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                cfg.epsilons.push_back(std::stod(tok));
            } catch (const std::exception&) {
                std::cerr << "error: bad --epsilons entry '" << tok << "'\n";
                return lieclass::exit_code_for(lieclass::ErrorKind::MalformedInput);
            }
        }
        if (cfg.epsilons.empty()) {
            std::cerr << "error: --epsilons is empty\n";
            return lieclass::exit_code_for(lieclass::ErrorKind::MalformedInput);
        }
    }

    try {
        return lieclass::run_main(cfg);
    } catch (const lieclass::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return lieclass::exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return lieclass::exit_code_for(lieclass::ErrorKind::Internal);
    }
}
