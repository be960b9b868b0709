#include "klyachko/segments/param_parser.hpp"

#include <cctype>
#include <map>

#include "klyachko/error.hpp"

namespace klyachko {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TadicParameter parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty parameter");
    std::vector<TadicBlock> blocks;
    blocks.push_back(block());
    skip_ws();
    while (pos_ < text_.size()) {
      expect('x');
      blocks.push_back(block());
      skip_ws();
    }
    return TadicParameter(std::move(blocks));
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      throw ParseError(pos_, std::string("expected '") + c + "'" +
                                 (pos_ < text_.size() ? "" : " before end of input"));
    }
    ++pos_;
  }

  int positive_int(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) throw ParseError(start, std::string(what) + " too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, std::string("expected ") + what);
    if (v < 1) throw ParseError(start, std::string(what) + " must be positive");
    return static_cast<int>(v);
  }

  Rational rational() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (end < text_.size() && text_[end] == '-') ++end;
    while (end < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[end])) || text_[end] == '/'))
      ++end;
    try {
      Rational r = parse_rational(text_.substr(start, end - start));
      pos_ = end;
      return r;
    } catch (const ParseError& e) {
      throw ParseError(start + e.position(), "malformed rational");
    }
  }

  CuspidalLabel label() {
    skip_ws();
    const std::size_t start = pos_;
    auto ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) throw ParseError(pos_, "expected name");
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    CuspidalLabel rho;
    rho.name = std::string(text_.substr(start, pos_ - start));
    if (pos_ < text_.size() && text_[pos_] == '~') {
      rho.dual = true;
      ++pos_;
    }
    expect(':');
    const std::size_t degree_pos = pos_;
    rho.degree = positive_int("degree");
    auto [it, inserted] = degrees_.emplace(rho.name, rho.degree);
    if (!inserted && it->second != rho.degree) {
      throw Error(ErrorCode::DegreeMismatch,
                  "label '" + rho.name + "' has degree " + std::to_string(it->second) +
                      " and degree " + std::to_string(rho.degree) + " (at position " +
                      std::to_string(degree_pos) + ")");
    }
    return rho;
  }

  SpehBlock speh() {
    expect('U');
    expect('(');
    SpehBlock b;
    b.rho = label();
    expect(',');
    b.d = positive_int("d");
    expect(',');
    b.t = positive_int("t");
    expect(')');
    return b;
  }

  TadicBlock block() {
    skip_ws();
    if (peek('P')) {
      ++pos_;
      expect('(');
      TadicBlock out{speh(), BlockKind::Paired};
      expect(',');
      out.block.alpha = rational();
      expect(')');
      return out;
    }
    if (!peek('U')) throw ParseError(pos_, "expected 'U(' or 'P('");
    TadicBlock out{speh(), BlockKind::Plain};
    if (peek('@')) {
      ++pos_;
      out.block.alpha = rational();
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, int> degrees_;
};

std::string speh_core(const SpehBlock& b) {
  return "U(" + display_name(b.rho) + ":" + std::to_string(b.rho.degree) + "," +
         std::to_string(b.d) + "," + std::to_string(b.t) + ")";
}

}  // namespace

TadicParameter parse_parameter(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const SpehBlock& block) {
  return speh_core(block) + "@" + to_string(block.alpha);
}

std::string to_string(const TadicParameter& param) {
  std::string out;
  for (const auto& b : param.blocks()) {
    if (!out.empty()) out += " x ";
    if (b.kind == BlockKind::Paired) {
      out += "P(" + speh_core(b.block) + "," + to_string(b.block.alpha) + ")";
    } else {
      out += to_string(b.block);
    }
  }
  return out;
}

nlohmann::json block_to_json(const SpehBlock& block, BlockKind kind) {
  return {{"kind", kind == BlockKind::Paired ? "paired" : "plain"},
          {"cuspidal", display_name(block.rho)},
          {"degree", block.rho.degree},
          {"d", block.d},
          {"t", block.t},
          {"alpha", to_string(block.alpha)}};
}

nlohmann::json parameter_to_json(const TadicParameter& param) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : param.blocks()) blocks.push_back(block_to_json(b.block, b.kind));
  const KlyachkoType type = kappa(param);
  return {{"n", param.n()},
          {"parameter", to_string(param)},
          {"blocks", blocks},
          {"kappa", {{"r", type.r}, {"k", type.k}}},
          {"model", model_name(type)},
          {"dual_model", model_name(dual_model_type(type))},
          {"unitary_valid", validate_unitary(param)}};
}

}  // namespace klyachko
