// Writes the synthetic fixture corpus (generated/ and human/ subdirectories).

#include <iostream>

#include "CLI11.hpp"
#include "gibberline/synthetic.hpp"

int main(int argc, char** argv) {
  gibberline::synthetic::Options options;
  std::string out_dir = "data/corpus";
  CLI::App app{"Write the synthetic fixture corpus"};
  app.add_option("--out", out_dir, "Output root");
  app.add_option("--generated", options.generated_count, "Generated-like papers");
  app.add_option("--human", options.human_count, "Human-like papers");
  app.add_option("--seed", options.seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);

  try {
    gibberline::synthetic::write_corpus(out_dir, options);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::cout << options.generated_count << " generated + " << options.human_count
            << " human papers -> " << out_dir << '\n';
  return 0;
}
