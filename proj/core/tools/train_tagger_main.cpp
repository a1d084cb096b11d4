// Trains the shipped tagger model from a token<TAB>tag corpus.
//   newsstyle-train-tagger <corpus.tsv> <closed_class.tsv> <out.model> [epochs] [seed]

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include "newsstyle/postag.hpp"

int main(int argc, char** argv) {
  if (argc < 4 || argc > 6) {
    std::cerr << "usage: " << argv[0]
              << " <corpus.tsv> <closed_class.tsv> <out.model> [epochs] [seed]\n";
    return 1;
  }
  try {
    newsstyle::TrainOptions opts;
    opts.closed_class = newsstyle::load_closed_class(argv[2]);
    if (argc > 4) opts.epochs = std::stoi(argv[4]);
    if (argc > 5) opts.seed = std::stoull(argv[5]);
    opts.version = "newsstyle-ap-oanc-e" + std::to_string(opts.epochs) + "-s" +
                   std::to_string(opts.seed);
    const auto corpus = newsstyle::load_pretagged(argv[1]);
    const auto model = newsstyle::train_tagger(corpus, opts);
    model.save(std::string(argv[3]));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
