#include <algorithm>
#include <fstream>

#include "newsstyle/error.hpp"
#include "newsstyle/postag.hpp"

namespace newsstyle {

namespace {

enum class TagClass { det, adj, noun, adv, verb, prep, other };

TagClass classify(std::string_view tag) {
  if (tag == "DT" || tag == "PRP$") return TagClass::det;
  if (tag == "JJ" || tag == "JJR" || tag == "JJS") return TagClass::adj;
  if (tag == "NN" || tag == "NNS" || tag == "NNP" || tag == "NNPS" ||
      tag == "PRP" || tag == "CD")
    return TagClass::noun;
  if (tag == "RB" || tag == "RBR" || tag == "RBS") return TagClass::adv;
  if (tag == "VB" || tag == "VBD" || tag == "VBG" || tag == "VBN" ||
      tag == "VBP" || tag == "VBZ")
    return TagClass::verb;
  if (tag == "IN") return TagClass::prep;
  return TagClass::other;
}

class Chunker {
 public:
  explicit Chunker(const TaggedSentence& s) : s_(s) {
    classes_.reserve(s.size());
    for (const auto& t : s.tokens) classes_.push_back(classify(t.tag));
  }

  ChunkTree run() {
    ChunkTree root{"S", {}, TreeNode::npos};
    std::size_t i = 0;
    while (i < classes_.size()) {
      const auto np = match_np(i);
      const auto vp = match_vp(i);
      const auto pp = match_pp(i);
      const auto best = std::max({np, vp, pp});
      if (best == 0) {
        root.children.push_back(leaf(i));
        ++i;
        continue;
      }
      if (best == np)
        root.children.push_back(build_np(i));
      else if (best == vp)
        root.children.push_back(build_vp(i));
      else
        root.children.push_back(build_pp(i));
      i += best;
    }
    return root;
  }

 private:
  TagClass at(std::size_t i) const {
    return i < classes_.size() ? classes_[i] : TagClass::other;
  }

  // Match lengths; 0 means no match.
  std::size_t match_np(std::size_t i) const {
    std::size_t j = i;
    if (at(j) == TagClass::det) ++j;
    while (at(j) == TagClass::adj) ++j;
    const std::size_t nouns = j;
    while (at(j) == TagClass::noun) ++j;
    return j > nouns ? j - i : 0;
  }

  std::size_t match_pp(std::size_t i) const {
    if (at(i) != TagClass::prep) return 0;
    const auto np = match_np(i + 1);
    return np == 0 ? 0 : np + 1;
  }

  std::size_t vp_head(std::size_t i) const {
    std::size_t j = i;
    while (at(j) == TagClass::adv) ++j;
    const std::size_t verbs = j;
    while (at(j) == TagClass::verb) ++j;
    return j > verbs ? j - i : 0;
  }

  std::size_t match_vp(std::size_t i) const {
    const auto head = vp_head(i);
    if (head == 0) return 0;
    return head + std::max(match_np(i + head), match_pp(i + head));
  }

  TreeNode leaf(std::size_t i) const {
    return TreeNode{s_.tokens[i].token.text, {}, i};
  }

  TreeNode build_np(std::size_t i) const {
    TreeNode node{"NP", {}, TreeNode::npos};
    const auto n = match_np(i);
    for (std::size_t k = i; k < i + n; ++k) node.children.push_back(leaf(k));
    return node;
  }

  TreeNode build_pp(std::size_t i) const {
    TreeNode node{"PP", {}, TreeNode::npos};
    node.children.push_back(leaf(i));
    node.children.push_back(build_np(i + 1));
    return node;
  }

  TreeNode build_vp(std::size_t i) const {
    TreeNode node{"VP", {}, TreeNode::npos};
    const auto head = vp_head(i);
    for (std::size_t k = i; k < i + head; ++k) node.children.push_back(leaf(k));
    const auto np = match_np(i + head);
    const auto pp = match_pp(i + head);
    if (np > 0 && np >= pp)
      node.children.push_back(build_np(i + head));
    else if (pp > 0)
      node.children.push_back(build_pp(i + head));
    return node;
  }

  const TaggedSentence& s_;
  std::vector<TagClass> classes_;
};

bool has_label(const std::string& label, std::string_view base) {
  if (label.compare(0, base.size(), base) != 0) return false;
  if (label.size() == base.size()) return true;
  const char next = label[base.size()];
  return next == '-' || next == '=';
}

// Returns the height of `node` in edges and folds NP/VP statistics into `m`.
int walk(const TreeNode& node, TreeMetrics& m) {
  int height = 0;
  for (const auto& child : node.children) height = std::max(height, walk(child, m) + 1);
  if (!node.is_leaf()) {
    if (has_label(node.label, "NP")) m.np_depth = std::max(m.np_depth, height);
    if (has_label(node.label, "VP")) {
      m.vp_depth = std::max(m.vp_depth, height);
      ++m.vp_count;
    }
  }
  return height;
}

class BracketParser {
 public:
  BracketParser(std::string_view text, const std::string& source, std::size_t line)
      : text_(text), source_(source), line_(line) {}

  TreeNode parse() {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '('");
    TreeNode root = node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing text after tree");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(source_, line_, what + " at column " + std::to_string(pos_ + 1));
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r' ||
            text_[pos_] == '\n'))
      ++pos_;
  }

  std::string atom() {
    const auto start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           text_[pos_] != ' ' && text_[pos_] != '\t' && text_[pos_] != '\r' &&
           text_[pos_] != '\n')
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  TreeNode node() {
    if (++depth_ > kMaxDepth) fail("tree nested too deeply");
    ++pos_;  // '('
    skip_space();
    TreeNode out;
    if (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')') out.label = atom();
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) fail("unbalanced parentheses");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      if (text_[pos_] == '(') {
        out.children.push_back(node());
      } else {
        out.children.push_back(TreeNode{atom(), {}, TreeNode::npos});
      }
    }
    --depth_;
    return out;
  }

  static constexpr int kMaxDepth = 10000;
  std::string_view text_;
  const std::string& source_;
  std::size_t line_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

std::string escape_leaf(const std::string& s) {
  if (s == "(") return "-LRB-";
  if (s == ")") return "-RRB-";
  return s;
}

void print(const TreeNode& node, std::string& out) {
  if (node.is_leaf()) {
    out += escape_leaf(node.label);
    return;
  }
  out += '(';
  out += node.label;
  for (const auto& child : node.children) {
    out += ' ';
    print(child, out);
  }
  out += ')';
}

}  // namespace

ChunkTree chunk(const TaggedSentence& sentence) { return Chunker(sentence).run(); }

TreeMetrics tree_metrics(const TreeNode& tree) {
  TreeMetrics m;
  m.depth = walk(tree, m);
  return m;
}

TreeNode parse_bracketed(std::string_view text, const std::string& source,
                         std::size_t line) {
  return BracketParser(text, source, line).parse();
}

std::vector<TreeNode> read_bracketed_trees(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open tree file " + file.string());
  std::vector<TreeNode> out;
  std::string line;
  std::size_t line_no = 0;
  const auto source = file.string();
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_bracketed(line, source, line_no));
  }
  return out;
}

std::string to_bracketed(const TreeNode& tree) {
  std::string out;
  print(tree, out);
  return out;
}

}  // namespace newsstyle
