#include "singmod/fser.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace singmod {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const std::size_t j = line.find(' ', i);
    const std::size_t end = j == std::string_view::npos ? line.size() : j;
    if (end > i) out.push_back(line.substr(i, end - i));
    i = end;
  }
  return out;
}

std::int64_t parse_int(std::string_view s, std::size_t line_no) {
  std::int64_t v = 0;
  const auto* first = s.data();
  if (!s.empty() && s[0] == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || first == s.data() + s.size())
    throw FserError("line " + std::to_string(line_no) + ": malformed integer '" + std::string(s) + "'");
  return v;
}

Rational parse_coeff(std::string_view s, std::size_t line_no) {
  try {
    return parse_rational(s);
  } catch (const ArithmeticError&) {
    throw FserError("line " + std::to_string(line_no) + ": malformed coefficient '" + std::string(s) + "'");
  }
}

const char* kind_name(FserKind k) {
  switch (k) {
    case FserKind::ortho:
      return "ortho";
    case FserKind::jacobi:
      return "jacobi";
    case FserKind::q:
      return "q";
  }
  return "?";
}

struct Header {
  FserKind kind = FserKind::ortho;
  std::vector<std::int64_t> scales;
  std::int64_t prec = 0;
  std::int64_t minorder = 0;
  std::vector<std::vector<std::string_view>> body;  // split term lines
};

Header parse_header(std::string_view text, FserKind expected, std::size_t term_fields) {
  const auto lines = split_lines(text);
  if (lines.size() < 5) throw FserError("truncated header");
  if (lines[0] != "FSER 1") throw FserError("line 1: expected 'FSER 1'");

  Header h;
  auto field_line = [&](std::size_t i, std::string_view key) {
    auto f = split_fields(lines[i]);
    if (f.empty() || f[0] != key)
      throw FserError("line " + std::to_string(i + 1) + ": expected '" + std::string(key) + "'");
    f.erase(f.begin());
    return f;
  };
  const auto kind = field_line(1, "kind");
  if (kind.size() != 1 || kind[0] != kind_name(expected))
    throw FserError(std::string("line 2: expected kind ") + kind_name(expected));
  h.kind = expected;
  for (auto s : field_line(2, "scales")) h.scales.push_back(parse_int(s, 3));
  const auto prec = field_line(3, "prec");
  if (prec.size() != 1) throw FserError("line 4: expected one precision value");
  h.prec = parse_int(prec[0], 4);
  const auto mo = field_line(4, "minorder");
  if (mo.size() != 1) throw FserError("line 5: expected one minorder value");
  h.minorder = parse_int(mo[0], 5);

  for (std::size_t i = 5; i < lines.size(); ++i) {
    if (lines[i].empty()) {
      if (i + 1 == lines.size()) break;
      throw FserError("line " + std::to_string(i + 1) + ": blank line inside body");
    }
    auto f = split_fields(lines[i]);
    if (f.size() != term_fields)
      throw FserError("line " + std::to_string(i + 1) + ": expected " + std::to_string(term_fields) + " fields");
    h.body.push_back(std::move(f));
  }
  return h;
}

void write_header(std::ostringstream& os, FserKind kind, const std::string& scales, std::int64_t prec,
                  std::int64_t minorder) {
  os << "FSER 1\n"
     << "kind " << kind_name(kind) << '\n'
     << "scales " << scales << '\n'
     << "prec " << prec << '\n'
     << "minorder " << minorder << '\n';
}

void check_coeff(const Rational& c, std::size_t line_no) {
  if (c == 0) throw FserError("line " + std::to_string(line_no) + ": zero coefficient");
}

}  // namespace

std::string to_fser(const OrthoSeries& s) {
  std::ostringstream os;
  write_header(os, FserKind::ortho, "2 2 2", s.prec(), s.min_order());
  for (const auto& [k, c] : s.terms()) os << k.N << ' ' << k.R << ' ' << k.M << ' ' << to_string(c) << '\n';
  return os.str();
}

std::string to_fser(const JacobiSeries& s) {
  std::ostringstream os;
  write_header(os, FserKind::jacobi, std::to_string(s.qscale()) + " " + std::to_string(s.zscale()), s.prec(),
               s.min_q_exponent());
  for (const auto& [e, c] : s.terms()) os << e.first << ' ' << e.second << ' ' << to_string(c) << '\n';
  return os.str();
}

std::string to_fser(const QSeries& s) {
  std::ostringstream os;
  write_header(os, FserKind::q, std::to_string(s.scale()), s.prec(), s.min_exponent());
  for (const auto& [e, c] : s.terms()) os << e << ' ' << to_string(c) << '\n';
  return os.str();
}

FserKind fser_kind(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() < 2 || lines[0] != "FSER 1") throw FserError("not an FSER document");
  const auto f = split_fields(lines[1]);
  if (f.size() == 2 && f[0] == "kind") {
    if (f[1] == "ortho") return FserKind::ortho;
    if (f[1] == "jacobi") return FserKind::jacobi;
    if (f[1] == "q") return FserKind::q;
  }
  throw FserError("line 2: unknown kind");
}

OrthoSeries parse_fser_ortho(std::string_view text) {
  const Header h = parse_header(text, FserKind::ortho, 4);
  if (h.scales != std::vector<std::int64_t>{2, 2, 2}) throw FserError("line 3: ortho scales must be '2 2 2'");
  if (h.prec < -(1 << 28) || h.prec > (1 << 28)) throw FserError("line 4: precision out of range");
  const int prec = static_cast<int>(h.prec);
  OrthoSeries::Terms terms;
  std::size_t line_no = 6;
  for (const auto& f : h.body) {
    std::int64_t v[3];
    for (int i = 0; i < 3; ++i) {
      v[i] = parse_int(f[i], line_no);
      if (v[i] < INT32_MIN || v[i] > INT32_MAX) throw FserError("line " + std::to_string(line_no) + ": index out of range");
    }
    const IndexKey key{static_cast<std::int32_t>(v[0]), static_cast<std::int32_t>(v[1]), static_cast<std::int32_t>(v[2])};
    Rational c = parse_coeff(f[3], line_no);
    check_coeff(c, line_no);
    if (key.order() > 2 * h.prec) throw FserError("line " + std::to_string(line_no) + ": term beyond precision");
    if (!terms.empty() && !(terms.rbegin()->first < key))
      throw FserError("line " + std::to_string(line_no) + ": terms out of order or duplicated");
    terms.emplace_hint(terms.end(), key, std::move(c));
    ++line_no;
  }
  OrthoSeries s;
  try {
    s = OrthoSeries(std::move(terms), prec);
  } catch (const SeriesError& e) {
    throw FserError(e.what());
  }
  if (s.min_order() != h.minorder) throw FserError("line 5: minorder does not match the terms");
  return s;
}

namespace {

template <class Key, class Make>
void read_sorted(const Header& h, std::size_t key_fields, Make make_key, std::map<Key, Rational>& out) {
  std::size_t line_no = 6;
  for (const auto& f : h.body) {
    std::vector<std::int64_t> v;
    for (std::size_t i = 0; i < key_fields; ++i) v.push_back(parse_int(f[i], line_no));
    const Key key = make_key(v);
    Rational c = parse_coeff(f[key_fields], line_no);
    check_coeff(c, line_no);
    if (v[0] > h.prec) throw FserError("line " + std::to_string(line_no) + ": term beyond precision");
    if (!out.empty() && !(out.rbegin()->first < key))
      throw FserError("line " + std::to_string(line_no) + ": terms out of order or duplicated");
    out.emplace_hint(out.end(), key, std::move(c));
    ++line_no;
  }
}

}  // namespace

JacobiSeries parse_fser_jacobi(std::string_view text) {
  const Header h = parse_header(text, FserKind::jacobi, 3);
  if (h.scales.size() != 2) throw FserError("line 3: jacobi scales need two values");
  JacobiSeries::Terms terms;
  read_sorted(h, 2, [](const std::vector<std::int64_t>& v) { return JacobiSeries::Exponent{v[0], v[1]}; }, terms);
  JacobiSeries s;
  try {
    s = JacobiSeries(static_cast<int>(h.scales[0]), static_cast<int>(h.scales[1]), std::move(terms), h.prec);
  } catch (const SeriesError& e) {
    throw FserError(e.what());
  }
  if (s.min_q_exponent() != h.minorder) throw FserError("line 5: minorder does not match the terms");
  return s;
}

QSeries parse_fser_q(std::string_view text) {
  const Header h = parse_header(text, FserKind::q, 2);
  if (h.scales.size() != 1) throw FserError("line 3: q scales need one value");
  QSeries::Terms terms;
  read_sorted(h, 1, [](const std::vector<std::int64_t>& v) { return v[0]; }, terms);
  QSeries s;
  try {
    s = QSeries(static_cast<int>(h.scales[0]), std::move(terms), h.prec);
  } catch (const SeriesError& e) {
    throw FserError(e.what());
  }
  if (s.min_exponent() != h.minorder) throw FserError("line 5: minorder does not match the terms");
  return s;
}

}  // namespace singmod
