#include "qmull/word_parser.hpp"

#include <cctype>
#include <vector>

namespace qmull {

namespace {

class Reader {
 public:
  Reader(const std::string& s, const Split& sp) : s_(s), sp_(sp) {}

  Word word() {
    Word w;
    skip_ws();
    while (pos_ < s_.size()) {
      w.push_back(letter());
      const std::size_t before = pos_;
      skip_ws();
      if (pos_ < s_.size() && pos_ == before) fail("expected whitespace between letters");
    }
    return w;
  }

 private:
  const std::string& s_;
  const Split& sp_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw WordParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int integer() {
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    try {
      return std::stoi(s_.substr(start, pos_ - start));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer out of range");
    }
  }

  std::vector<int> args(std::size_t want) {
    expect('(');
    std::vector<int> out;
    for (std::size_t i = 0; i < want; ++i) {
      skip_ws();
      if (i) {
        expect(',');
        skip_ws();
      }
      out.push_back(integer());
    }
    skip_ws();
    expect(')');
    return out;
  }

  void index(int i, std::size_t at) const {
    if (i < 1 || i > sp_.size()) throw WordParseError("index " + std::to_string(i) + " outside 1.." + std::to_string(sp_.size()), at);
  }

  GenSymbol letter() {
    const std::size_t start = pos_;
    std::string name;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
    if (name == "E") {
      auto v = args(3);
      index(v[0], start);
      index(v[1], start);
      if (v[0] == v[1]) throw WordParseError("E needs a != b", start);
      if (v[2] < 1) throw WordParseError("E exponent must be >= 1", start);
      GenSymbol g = GenSymbol::root(v[0], v[1], v[2]);
      if (g.odd(sp_) && v[2] > 1) throw WordParseError("odd root vector with exponent > 1", start);
      return g;
    }
    if (name == "K") {
      auto v = args(2);
      index(v[0], start);
      return GenSymbol::kpow(v[0], 0, v[1]);
    }
    if (name == "K2") {
      auto v = args(3);
      index(v[0], start);
      index(v[1], start);
      if (v[0] == v[1]) throw WordParseError("K2 needs a != b", start);
      return GenSymbol::kpow(v[0], v[1], v[2]);
    }
    if (name == "KB" || name == "KB2") {
      const bool two = name == "KB2";
      auto v = args(two ? 4 : 3);
      index(v[0], start);
      if (two) {
        index(v[1], start);
        if (v[0] == v[1]) throw WordParseError("KB2 needs a != b", start);
      }
      const int t = v.back();
      if (t < 0) throw WordParseError("binomial needs t >= 0", start);
      return GenSymbol::kbinom(v[0], two ? v[1] : 0, v[two ? 2 : 1], t);
    }
    pos_ = start;
    fail(name.empty() ? "expected a letter E, K, K2, KB or KB2" : "unknown letter '" + name + "'");
  }
};

}  // namespace

Word parse_word(const std::string& text, const Split& split) { return Reader(text, split).word(); }

std::string format_word(const Word& w) {
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += ' ';
    out += s.to_string();
  }
  return out;
}

}  // namespace qmull
