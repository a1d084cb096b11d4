#include "newsstyle/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "newsstyle/error.hpp"
#include "newsstyle/textseg.hpp"

namespace fs = std::filesystem;

namespace newsstyle {

const char* to_string(Label label) {
  switch (label) {
    case Label::real: return "real";
    case Label::fake: return "fake";
    case Label::satire: return "satire";
  }
  return "?";
}

const char* display_name(Label label) {
  switch (label) {
    case Label::real: return "Real";
    case Label::fake: return "Fake";
    case Label::satire: return "Satire";
  }
  return "?";
}

std::optional<Label> parse_label(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "real") return Label::real;
  if (lower == "fake") return Label::fake;
  if (lower == "satire") return Label::satire;
  return std::nullopt;
}

std::vector<Label> allowed_labels(int dataset_id) {
  switch (dataset_id) {
    case 1: return {Label::real, Label::fake};
    case 2: return {Label::real, Label::fake, Label::satire};
    case 3: return {Label::real, Label::satire};
    default:
      throw Error("dataset id must be 1, 2 or 3, got " + std::to_string(dataset_id));
  }
}

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error("read failure on " + path.string());
  return ss.str();
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string read_source(const fs::path& meta) {
  std::istringstream in(read_file(meta));
  std::string line, source;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.rfind("source=", 0) == 0) source = std::string(trim(t.substr(7)));
  }
  return source;
}

}  // namespace

ParsedArticle parse_article(std::string_view contents) {
  // Strip a UTF-8 byte order mark.
  if (contents.size() >= 3 && contents.substr(0, 3) == "\xEF\xBB\xBF")
    contents.remove_prefix(3);
  ParsedArticle out;
  const auto nl = contents.find('\n');
  if (nl == std::string_view::npos) {
    out.title = std::string(trim(contents));
    return out;
  }
  out.title = std::string(trim(contents.substr(0, nl)));
  out.body = std::string(trim(contents.substr(nl + 1)));
  return out;
}

Manifest count_labels(int dataset_id, std::span<const Document> documents) {
  Manifest m;
  m.dataset_id = dataset_id;
  for (const auto& d : documents) ++m.counts[static_cast<std::size_t>(d.label)];
  return m;
}

LoadResult load_corpus(const fs::path& root, int dataset_id) {
  const auto required = allowed_labels(dataset_id);
  std::error_code ec;
  if (!fs::is_directory(root, ec))
    throw StructuralError("corpus root is not a directory: " + root.string());

  LoadResult result;
  bool any_label_dir = false;
  for (const Label label : kAllLabels) {
    const fs::path dir = root / to_string(label);
    if (!fs::is_directory(dir, ec)) {
      if (std::find(required.begin(), required.end(), label) != required.end())
        throw StructuralError("missing label directory: " + dir.string());
      continue;
    }
    any_label_dir = true;

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt")
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    for (const auto& file : files) {
      Document doc;
      doc.id = file.stem().string();
      doc.dataset_id = dataset_id;
      doc.label = label;
      try {
        auto parsed = parse_article(read_file(file));
        doc.title = std::move(parsed.title);
        doc.body = std::move(parsed.body);
        auto meta = file;
        meta.replace_extension(".meta");
        if (fs::is_regular_file(meta, ec)) doc.source = read_source(meta);
      } catch (const Error& e) {
        result.issues.push_back({file, e.what()});
        continue;
      }
      if (doc.body.empty()) {
        result.issues.push_back({file, "empty body"});
        continue;
      }
      result.corpus.documents.push_back(std::move(doc));
    }
  }
  if (!any_label_dir)
    throw StructuralError("no label directories under " + root.string());

  std::stable_sort(result.corpus.documents.begin(), result.corpus.documents.end(),
                   [](const Document& a, const Document& b) {
                     if (a.id != b.id) return a.id < b.id;
                     return a.label < b.label;
                   });
  result.corpus.manifest = count_labels(dataset_id, result.corpus.documents);
  return result;
}

ValidationReport validate_corpus(const Corpus& corpus) {
  ValidationReport report;
  std::map<std::string, int> seen;
  for (const auto& d : corpus.documents) ++seen[d.id];
  for (const auto& [id, n] : seen)
    if (n > 1) report.duplicate_ids.push_back(id);

  std::vector<Label> legal;
  try {
    legal = allowed_labels(corpus.manifest.dataset_id);
  } catch (const Error&) {
    // Unknown data set: every label is illegal.
  }
  for (const auto& d : corpus.documents) {
    if (std::find(legal.begin(), legal.end(), d.label) == legal.end())
      report.illegal_labels.push_back(d.id);
    if (trim(d.body).empty()) {
      report.empty_bodies.push_back(d.id);
    } else if (split_sentences(d.body).empty()) {
      report.zero_sentence_bodies.push_back(d.id);
    }
  }
  report.manifest_mismatch =
      count_labels(corpus.manifest.dataset_id, corpus.documents) != corpus.manifest;
  return report;
}

std::vector<DocumentGroup> split_groups(const Corpus& corpus,
                                        std::span<const Label> labels) {
  std::vector<DocumentGroup> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (labels[i] == labels[j])
        throw Error(std::string("label requested twice: ") + to_string(labels[i]));
    DocumentGroup g{labels[i], {}};
    for (const auto& d : corpus.documents)
      if (d.label == labels[i]) g.documents.push_back(&d);
    if (g.documents.empty())
      throw Error(std::string(to_string(labels[i])) + " absent");
    groups.push_back(std::move(g));
  }
  return groups;
}

std::size_t import_title_body_layout(const fs::path& src_root,
                                     const fs::path& dst_root) {
  std::error_code ec;
  if (!fs::is_directory(src_root, ec))
    throw StructuralError("not a directory: " + src_root.string());

  std::size_t written = 0;
  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(src_root))
    if (entry.is_directory()) dirs.push_back(entry.path());
  std::sort(dirs.begin(), dirs.end());

  for (const auto& dir : dirs) {
    const auto label = parse_label(dir.filename().string());
    if (!label) continue;
    fs::path titles_dir;
    for (const auto& cand : dirs) {
      const auto name = cand.filename().string();
      const auto under = name.find('_');
      if (under == std::string::npos) continue;
      if (parse_label(name.substr(0, under)) == label) {
        std::string rest = name.substr(under + 1);
        std::transform(rest.begin(), rest.end(), rest.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (rest == "titles" || rest == "title") titles_dir = cand;
      }
    }
    const fs::path out_dir = dst_root / to_string(*label);
    fs::create_directories(out_dir);

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".txt")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    for (const auto& file : files) {
      std::string title;
      if (!titles_dir.empty()) {
        const auto tfile = titles_dir / file.filename();
        if (fs::is_regular_file(tfile, ec)) {
          auto t = read_file(tfile);
          std::replace(t.begin(), t.end(), '\n', ' ');
          std::replace(t.begin(), t.end(), '\r', ' ');
          title = std::string(trim(t));
        }
      }
      const std::string body(trim(read_file(file)));
      std::string id = file.stem().string();
      std::replace(id.begin(), id.end(), ' ', '_');
      std::ofstream out(out_dir / (id + ".txt"), std::ios::binary);
      if (!out) throw Error("cannot write into " + out_dir.string());
      out << title << "\n\n" << body << "\n";
      ++written;
    }
  }
  return written;
}

}  // namespace newsstyle
