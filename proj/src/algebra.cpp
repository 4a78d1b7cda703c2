#include "legendrian/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace legendrian {

bool deglex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool TermLess::operator()(const Term& a, const Term& b) const {
  if (a.word != b.word) return deglex_less(a.word, b.word);
  return a.t < b.t;
}

AlgebraElement AlgebraElement::scalar(Mode mode, long long c, std::vector<int> t) {
  return word(mode, {}, c, std::move(t));
}

AlgebraElement AlgebraElement::gen(Mode mode, int id) { return word(mode, {id}); }

AlgebraElement AlgebraElement::word(Mode mode, Word w, long long c, std::vector<int> t) {
  AlgebraElement x(mode);
  x.add_term(w, t, c);
  return x;
}

long long AlgebraElement::constant() const {
  const auto it = terms_.find(Term{{}, std::vector<int>(mode_.num_t, 0)});
  return it == terms_.end() ? 0 : it->second;
}

int AlgebraElement::max_length() const {
  int m = -1;
  for (const auto& [k, c] : terms_) m = std::max(m, static_cast<int>(k.word.size()));
  return m;
}

int AlgebraElement::max_generator() const {
  int m = -1;
  for (const auto& [k, c] : terms_)
    for (int g : k.word) m = std::max(m, g);
  return m;
}

long long AlgebraElement::normalize(long long c) const {
  return mode_.ring == Ring::Z2 ? ((c % 2) + 2) % 2 : c;
}

void AlgebraElement::check_mode(const AlgebraElement& o) const {
  if (!(mode_ == o.mode_)) throw std::invalid_argument("algebra elements from different coefficient modes");
}

void AlgebraElement::add_term(const Word& w, const std::vector<int>& t, long long c) {
  c = normalize(c);
  if (c == 0) return;
  Term key{w, t};
  key.t.resize(mode_.num_t, 0);
  if (static_cast<int>(t.size()) > mode_.num_t)
    for (std::size_t i = mode_.num_t; i < t.size(); ++i)
      if (t[i] != 0) throw std::invalid_argument("t variable outside coefficient mode");
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second = normalize(it->second + c);
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_mode(o);
  for (const auto& [k, c] : o.terms_) add_term(k.word, k.t, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_mode(o);
  for (const auto& [k, c] : o.terms_) add_term(k.word, k.t, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const { return scaled(-1); }

AlgebraElement AlgebraElement::scaled(long long c, const std::vector<int>& t) const {
  AlgebraElement out(mode_);
  for (const auto& [k, v] : terms_) {
    std::vector<int> e = k.t;
    for (std::size_t i = 0; i < t.size() && i < e.size(); ++i) e[i] += t[i];
    out.add_term(k.word, e, v * c);
  }
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_mode(b);
  AlgebraElement out(a.mode_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      Word w = ka.word;
      w.insert(w.end(), kb.word.begin(), kb.word.end());
      std::vector<int> t = ka.t;
      for (std::size_t i = 0; i < t.size(); ++i) t[i] += kb.t[i];
      out.add_term(w, t, ca * cb);
    }
  return out;
}

AlgebraElement AlgebraElement::reduce(Ring ring, bool collapse_t) const {
  Mode m{ring, collapse_t ? 0 : mode_.num_t};
  AlgebraElement out(m);
  for (const auto& [k, c] : terms_) out.add_term(k.word, collapse_t ? std::vector<int>{} : k.t, c);
  return out;
}

AlgebraElement substitute(const AlgebraElement& x,
                          const std::vector<std::optional<AlgebraElement>>& images) {
  const Mode mode = x.mode();
  AlgebraElement out(mode);
  for (const auto& [k, c] : x.terms()) {
    AlgebraElement prod = AlgebraElement::scalar(mode, c, k.t);
    for (int g : k.word) {
      if (g < static_cast<int>(images.size()) && images[g]) {
        prod = prod * *images[g];
      } else {
        prod = prod * AlgebraElement::gen(mode, g);
      }
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

AlgebraElement reverse(const AlgebraElement& x) {
  AlgebraElement out(x.mode());
  for (const auto& [k, c] : x.terms()) out.add_term(Word(k.word.rbegin(), k.word.rend()), k.t, c);
  return out;
}

Derivation::Derivation(std::vector<AlgebraElement> images, std::vector<int> degrees)
    : images_(std::move(images)), degrees_(std::move(degrees)) {
  if (images_.size() != degrees_.size()) throw std::invalid_argument("derivation: size mismatch");
}

AlgebraElement Derivation::of_word(const Word& w) const {
  const Mode mode = images_.empty() ? Mode{} : images_.front().mode();
  AlgebraElement out(mode);
  int prefix_degree = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const AlgebraElement& dg = images_.at(w[i]);
    if (!dg.is_zero()) {
      const long long sign = (prefix_degree % 2 == 0) ? 1 : -1;
      const AlgebraElement left = AlgebraElement::word(mode, Word(w.begin(), w.begin() + i), sign);
      const AlgebraElement right = AlgebraElement::word(mode, Word(w.begin() + i + 1, w.end()));
      out += left * dg * right;
    }
    prefix_degree += degrees_[w[i]];
  }
  return out;
}

AlgebraElement Derivation::operator()(const AlgebraElement& x) const {
  AlgebraElement out(x.mode());
  for (const auto& [k, c] : x.terms()) out += of_word(k.word).scaled(c, k.t);
  return out;
}

Derivation leibniz_extend(std::vector<AlgebraElement> images, std::vector<int> degrees) {
  return Derivation(std::move(images), std::move(degrees));
}

std::string word_string(const Word& w, const std::vector<std::string>& names) {
  std::string s;
  for (int g : w) s += g < static_cast<int>(names.size()) ? names[g] : "g" + std::to_string(g + 1);
  return s;
}

std::string to_string(const AlgebraElement& x, const std::vector<std::string>& names) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const int k = x.mode().num_t;
  for (const auto& [term, c] : x.terms()) {
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> parts;
    for (int i = 0; i < k; ++i) {
      if (term.t[i] == 0) continue;
      std::string v = k == 1 ? "t" : "t" + std::to_string(i + 1);
      if (term.t[i] != 1) v += "^" + std::to_string(term.t[i]);
      parts.push_back(v);
    }
    if (!term.word.empty()) parts.push_back(word_string(term.word, names));
    if (mag != 1 || parts.empty()) parts.insert(parts.begin(), std::to_string(mag));
    for (std::size_t i = 0; i < parts.size(); ++i) out << (i ? " " : "") << parts[i];
  }
  return out.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view s, const std::vector<std::string>& names, Mode mode)
      : s_(s), names_(names), mode_(mode) {}

  AlgebraElement parse() {
    AlgebraElement x = expr();
    skip();
    if (i_ != s_.size()) error("unexpected character");
    return x;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    throw std::invalid_argument("cannot parse element at offset " + std::to_string(i_) + ": " + what);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  AlgebraElement expr() {
    AlgebraElement x(mode_);
    skip();
    long long sign = 1;
    if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) sign = s_[i_++] == '-' ? -1 : 1;
    x += term().scaled(sign);
    for (;;) {
      skip();
      if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '-')) return x;
      sign = s_[i_++] == '-' ? -1 : 1;
      x += term().scaled(sign);
    }
  }

  AlgebraElement term() {
    AlgebraElement x = AlgebraElement::one(mode_);
    bool any = false;
    for (;;) {
      skip();
      if (i_ >= s_.size()) break;
      const char c = s_[i_];
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_' || c == '*')) break;
      if (c == '*') {
        ++i_;
        continue;
      }
      x = x * factor();
      any = true;
    }
    if (!any) error("expected a term");
    return x;
  }

  int exponent(bool allow_negative) {
    skip();
    if (i_ >= s_.size() || s_[i_] != '^') return 1;
    ++i_;
    skip();
    bool neg = false;
    if (i_ < s_.size() && s_[i_] == '-') {
      if (!allow_negative) error("negative power of a generator");
      neg = true;
      ++i_;
    }
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) error("expected exponent");
    const int e = std::stoi(std::string(s_.substr(start, i_ - start)));
    return neg ? -e : e;
  }

  AlgebraElement power(const AlgebraElement& base, int e) {
    AlgebraElement out = AlgebraElement::one(mode_);
    for (int k = 0; k < e; ++k) out = out * base;
    return out;
  }

  AlgebraElement factor() {
    const char c = s_[i_];
    if (c == '(') {
      ++i_;
      AlgebraElement x = expr();
      skip();
      if (i_ >= s_.size() || s_[i_] != ')') error("expected ')'");
      ++i_;
      return power(x, exponent(false));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return AlgebraElement::scalar(mode_, std::stoll(std::string(s_.substr(start, i_ - start))));
    }
    const std::size_t start = i_;
    while (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    const std::string id(s_.substr(start, i_ - start));
    const auto it = std::find(names_.begin(), names_.end(), id);
    if (it != names_.end()) {
      const int g = static_cast<int>(it - names_.begin());
      return power(AlgebraElement::gen(mode_, g), exponent(false));
    }
    if (id[0] == 't') {
      int var = -1;
      if (id == "t" && mode_.num_t == 1) var = 0;
      if (id.size() > 1 && std::all_of(id.begin() + 1, id.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); }))
        var = std::stoi(id.substr(1)) - 1;
      if (var >= 0 && var < mode_.num_t) {
        std::vector<int> t(mode_.num_t, 0);
        t[var] = exponent(true);
        return AlgebraElement::scalar(mode_, 1, t);
      }
      if (mode_.num_t == 0 && (id == "t" || var >= 0)) {
        exponent(true);
        return AlgebraElement::one(mode_);
      }
    }
    error("unknown symbol '" + id + "'");
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  Mode mode_;
  std::size_t i_ = 0;
};

}  // namespace

AlgebraElement parse_element(std::string_view text, const std::vector<std::string>& names, Mode mode) {
  return Parser(text, names, mode).parse();
}

}  // namespace legendrian
