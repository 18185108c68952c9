#include "sbci/text_format.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "sbci/error.hpp"

namespace sbci {

namespace {

struct Token {
  std::string_view text;
  std::size_t line, col;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      if (i == raw.size()) break;
      if (line.tokens.empty() && raw[i] == '#') break;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      line.tokens.push_back({raw.substr(i, j - i), number, i + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::size_t to_index(const Token& t, std::size_t limit, const char* what) {
  std::size_t v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [p, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || p != last) {
    throw ParseError(t.line, t.col, std::string("expected ") + what + ", got '" +
                                        std::string(t.text) + "'");
  }
  if (v >= limit) {
    throw ParseError(t.line, t.col, std::string(what) + " " + std::string(t.text) +
                                        " out of range [0, " + std::to_string(limit) + ")");
  }
  return v;
}

// Column of the token at `index`, or just past the last token when the
// line is shorter.
std::size_t position_after(const Line& line, std::size_t index) {
  if (index < line.tokens.size()) return line.tokens[index].col;
  const Token& t = line.tokens.back();
  return t.col + t.text.size();
}

void expect_word(const Token& t, std::string_view word) {
  if (t.text != word) {
    throw ParseError(t.line, t.col,
                     "expected '" + std::string(word) + "', got '" + std::string(t.text) + "'");
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Line> lines, std::size_t last_line)
      : lines_(std::move(lines)), last_line_(last_line) {}

  FiniteAlgebra run() {
    if (lines_.empty()) throw ParseError(1, 1, "empty input, expected 'n <size> top <index>'");
    const Line& head = lines_[0];
    if (head.tokens.size() != 4) {
      throw ParseError(head.number, position_after(head, 4), "header must be 'n <size> top <index>'");
    }
    expect_word(head.tokens[0], "n");
    n_ = to_index(head.tokens[1], kMaxSize + 1, "size");
    if (n_ == 0) throw ParseError(head.number, head.tokens[1].col, "size must be positive");
    expect_word(head.tokens[2], "top");
    const Elem top = static_cast<Elem>(to_index(head.tokens[3], n_, "top index"));
    next_ = 1;

    std::optional<Table> arrow, dbl;
    std::vector<std::string> labels;
    bool have_labels = false;
    while (next_ < lines_.size()) {
      const Line& line = lines_[next_];
      const Token& t = line.tokens[0];
      if (line.tokens.size() != 1) {
        throw ParseError(line.tokens[1].line, line.tokens[1].col,
                         "unexpected token after section name");
      }
      ++next_;
      if (t.text == "arrow:") {
        if (arrow) throw ParseError(t.line, t.col, "duplicate 'arrow:' section");
        arrow = table();
      } else if (t.text == "double_arrow:") {
        if (dbl) throw ParseError(t.line, t.col, "duplicate 'double_arrow:' section");
        dbl = table();
      } else if (t.text == "labels:") {
        if (have_labels) throw ParseError(t.line, t.col, "duplicate 'labels:' section");
        have_labels = true;
        labels = label_tokens(t);
      } else {
        throw ParseError(t.line, t.col, "unknown section '" + std::string(t.text) + "'");
      }
    }
    if (!arrow) throw ParseError(last_line_, 1, "missing 'arrow:' section");
    try {
      return FiniteAlgebra(top, std::move(*arrow), std::move(dbl), std::move(labels));
    } catch (const InvalidAlgebra& e) {
      throw ParseError(head.number, 1, e.what());
    }
  }

 private:
  static constexpr std::size_t kMaxSize = 1u << 16;

  const Line& need_line(std::size_t after_line) {
    if (next_ >= lines_.size()) throw ParseError(after_line + 1, 1, "unexpected end of input");
    return lines_[next_++];
  }

  Table table() {
    Table t(n_);
    std::size_t prev = lines_[next_ - 1].number;
    for (Elem x = 0; x < n_; ++x) {
      const Line& line = need_line(prev);
      prev = line.number;
      if (line.tokens.size() != n_) {
        throw ParseError(line.number, position_after(line, n_),
                         "row has " + std::to_string(line.tokens.size()) + " entries, expected " +
                             std::to_string(n_));
      }
      for (Elem y = 0; y < n_; ++y) {
        t.at(x, y) = static_cast<Elem>(to_index(line.tokens[y], n_, "element index"));
      }
    }
    return t;
  }

  std::vector<std::string> label_tokens(const Token& section) {
    std::vector<std::string> out;
    std::size_t prev = section.line;
    while (out.size() < n_) {
      const Line& line = need_line(prev);
      prev = line.number;
      for (const Token& t : line.tokens) {
        if (out.size() == n_) throw ParseError(t.line, t.col, "too many labels");
        out.emplace_back(t.text);
      }
    }
    return out;
  }

  std::vector<Line> lines_;
  std::size_t last_line_;
  std::size_t next_ = 0;
  std::size_t n_ = 0;
};

}  // namespace

FiniteAlgebra parse_algebra(std::string_view text) {
  auto lines = tokenize(text);
  std::size_t last = 1;
  for (char c : text) last += c == '\n';
  return Parser(std::move(lines), last).run();
}

FiniteAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

std::string render_algebra(const FiniteAlgebra& alg) {
  const std::size_t n = alg.size();
  const std::size_t width = std::to_string(n - 1).size();
  std::ostringstream out;
  out << "n " << n << " top " << alg.top() << "\n";
  auto table = [&](const char* name, const Table& t) {
    out << name << "\n";
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        const std::string v = std::to_string(t(x, y));
        if (y > 0) out << ' ';
        out << std::string(width - v.size(), ' ') << v;
      }
      out << "\n";
    }
  };
  table("arrow:", alg.arrow());
  if (alg.has_double_arrow()) table("double_arrow:", *alg.double_arrow_table());
  if (!alg.labels().empty()) {
    out << "labels:\n";
    for (Elem x = 0; x < n; ++x) {
      const std::string& l = alg.labels()[x];
      if (l.empty() || l.find_first_of(" \t\r\n") != std::string::npos) {
        throw Error("label '" + l + "' cannot be written in the text format");
      }
      out << (x ? " " : "") << l;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace sbci
