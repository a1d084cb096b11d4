#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "newsstyle/error.hpp"

using namespace newsstyle::cli;

int main(int argc, char** argv) {
  CLI::App app{"Stylistic feature analysis of news corpora"};
  app.require_subcommand(1);
  int exit_code = kOk;

  IngestConfig ingest;
  auto* ci = app.add_subcommand("ingest", "Load and validate a corpus, write its manifest");
  ci->add_option("--corpus", ingest.corpus, "Corpus root (<root>/<label>/<id>.txt)")->required();
  ci->add_option("--dataset-id", ingest.dataset_id, "Data set id (1, 2 or 3)")->required();
  ci->add_option("--out", ingest.out, "Output directory")->required();
  ci->callback([&] { exit_code = cmd_ingest(ingest); });

  ExtractConfig extract;
  auto* ce = app.add_subcommand("extract", "Compute the feature matrix for one part");
  ce->add_option("--corpus", extract.corpus, "Corpus root")->required();
  ce->add_option("--dataset-id", extract.dataset_id, "Data set id")->required();
  ce->add_option("--part", extract.part, "title or body")
      ->check(CLI::IsMember({"title", "body"}));
  ce->add_option("--resources", extract.resources, "Resource directory");
  ce->add_option("--out", extract.out, "Output CSV")->required();
  ce->add_option("--tags-dir", extract.tags_dir, "Pre-tagged <id>.<part>.tags files");
  ce->add_option("--trees-dir", extract.trees_dir, "Bracketed <id>.<part>.trees files");
  ce->add_flag("--with-pct", extract.with_pct, "Add per-100-word category columns");
  ce->add_option("--jobs", extract.jobs, "Worker threads")->check(CLI::PositiveNumber);
  ce->callback([&] { exit_code = cmd_extract(extract); });

  AnalyzeConfig analyze;
  auto* ca = app.add_subcommand("analyze", "Compare features across label groups");
  ca->add_option("--matrix", analyze.matrix, "Feature matrix CSV")->required();
  ca->add_option("--groups", analyze.groups, "Labels to compare (default: all present)")
      ->delimiter(',');
  ca->add_option("--dataset-id", analyze.dataset_id, "Data set id for the report");
  ca->add_option("--alpha", analyze.alpha, "Significance level");
  ca->add_option("--bold-threshold", analyze.bold_threshold, "p below which a row is marked");
  ca->add_flag("--bonferroni", analyze.bonferroni, "Divide alpha by the number of features");
  ca->add_flag("--strict", analyze.strict, "Exit 2 when a statistic is degenerate");
  ca->add_option("--out", analyze.out, "Output directory")->required();
  ca->add_option("--jobs", analyze.jobs, "Worker threads")->check(CLI::PositiveNumber);
  ca->callback([&] { exit_code = cmd_analyze(analyze); });

  ClassifyConfig classify;
  auto* cc = app.add_subcommand("classify", "Cross-validate a linear SVM on one label pair");
  cc->add_option("--matrix", classify.matrix, "Feature matrix CSV")->required();
  cc->add_option("--dataset-id", classify.dataset_id, "Data set id for the report");
  cc->add_option("--pair", classify.pair, "positive:negative labels, e.g. fake:real");
  auto* preset = cc->add_option("--preset", classify.preset, "Feature preset")
                     ->check(CLI::IsMember({"body4", "title4"}));
  auto* topk = cc->add_option("--top-k", classify.top_k, "Use the k most significant features")
                   ->check(CLI::PositiveNumber);
  preset->excludes(topk);
  cc->add_option("--folds", classify.folds, "Cross-validation folds")->check(CLI::Range(2, 1000));
  cc->add_option("--C", classify.C, "SVM regularization")->check(CLI::PositiveNumber);
  cc->add_option("--tol", classify.tol, "Optimizer tolerance")->check(CLI::PositiveNumber);
  cc->add_option("--max-epochs", classify.max_epochs, "Optimizer epoch limit")
      ->check(CLI::PositiveNumber);
  cc->add_option("--seed", classify.seed, "Seed for folds and optimizer order");
  cc->add_option("--alpha", classify.alpha, "Significance level for --top-k");
  cc->add_flag("--shuffle-labels", classify.shuffle_labels, "Permute labels (null run)");
  cc->add_flag("--strict", classify.strict, "Exit 2 when a statistic is degenerate");
  cc->add_option("--out", classify.out, "Output directory")->required();
  cc->add_option("--jobs", classify.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cc->callback([&] { exit_code = cmd_classify(classify); });

  ReportConfig report;
  auto* cr = app.add_subcommand("report", "Combine analyses, CV runs and CI plot data");
  cr->add_option("--matrix", report.matrices, "Feature matrices for confidence intervals");
  cr->add_option("--analysis", report.analyses, "ordering.json files");
  cr->add_option("--cv", report.cv_reports, "cv.json files");
  cr->add_option("--ci-features", report.ci_features, "Features for CI rows")->delimiter(',');
  cr->add_option("--level", report.level, "Confidence level")->check(CLI::Range(0.5, 0.9999));
  cr->add_option("--out", report.out, "Output directory")->required();
  cr->callback([&] { exit_code = cmd_report(report); });

  ImportConfig import;
  auto* cim = app.add_subcommand("import", "Convert a <Label>/ + <Label>_titles/ release");
  cim->add_option("--src", import.src, "Release root")->required();
  cim->add_option("--out", import.out, "Corpus root to create")->required();
  cim->callback([&] { exit_code = cmd_import(import); });

  TrainTaggerConfig train;
  auto* ct = app.add_subcommand("train-tagger", "Train a part-of-speech tagger model");
  ct->add_option("--corpus", train.corpus, "token<TAB>tag training file")->required();
  ct->add_option("--closed-class", train.closed_class, "word<TAB>tag list");
  ct->add_option("--epochs", train.epochs, "Training epochs")->check(CLI::PositiveNumber);
  ct->add_option("--seed", train.seed, "Shuffle seed");
  ct->add_option("--heldout-every", train.heldout_every, "Hold out every n-th sentence");
  ct->add_option("--out", train.out, "Model file")->required();
  ct->callback([&] { exit_code = cmd_train_tagger(train); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  } catch (const newsstyle::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return exit_code;
}
