#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gibberline/corpus.hpp"

namespace gibberline::synthetic {

// Fixture papers for tests and demos.
//
// "Generated" papers fill fixed sentence templates with keywords drawn
// uniformly from a shared technical vocabulary, so nothing ties the title,
// body and references together. "Human" papers draw most keywords from a
// small per-paper topic pool (Zipf-weighted) that is shared by the title,
// abstract, body and cited titles.
//
// Sampling uses only raw mt19937_64 output, so a seed produces the same
// text with every standard library.

struct Options {
  std::size_t generated_count = 50;
  std::size_t human_count = 50;
  std::uint64_t seed = 20090907;
};

std::string generated_paper(std::mt19937_64& rng);
std::string human_paper(std::mt19937_64& rng);

// Generated papers first, then human ones. source_id is the file name the
// fixture writer uses ("generated/gen_001.txt", "human/hum_001.txt").
std::vector<corpus::LabeledDocument> make_corpus(const Options& options = {});

// Writes the corpus as <root>/generated/*.txt and <root>/human/*.txt.
void write_corpus(const std::filesystem::path& root, const Options& options = {});

const std::vector<std::string>& technical_nouns();
const std::vector<std::string>& technical_adjectives();

}  // namespace gibberline::synthetic
