#include "polyhankel/io.hpp"

#include "polyhankel/bohr_lift.hpp"
#include "polyhankel/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace polyhankel::io {

Record symbol_to_json(const Symbol& f) {
  Record out = Record::array();
  for (const auto& [kappa, c] : f.terms()) {
    Record term;
    term["exponents"] = std::vector<std::uint32_t>(kappa.exponents().begin(), kappa.exponents().end());
    term["re"] = c.real();
    term["im"] = c.imag();
    out.push_back(std::move(term));
  }
  return out;
}

Symbol symbol_from_json(const nlohmann::json& j) {
  if (!j.is_array())
    throw std::invalid_argument("symbol: expected an array of terms");
  Symbol::Terms terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exponents") || !t["exponents"].is_array())
      throw std::invalid_argument("symbol: each term needs an 'exponents' array");
    std::vector<std::uint32_t> e;
    for (const auto& x : t["exponents"]) {
      if (!x.is_number_integer() || x.get<long long>() < 0)
        throw std::invalid_argument("symbol: exponents must be nonnegative integers");
      e.push_back(x.get<std::uint32_t>());
    }
    const double re = t.value("re", 0.0);
    const double im = t.value("im", 0.0);
    terms[MultiIndex(std::move(e))] += complex(re, im);
  }
  return Symbol(std::move(terms));
}

std::string format_double(double x) {
  if (std::isnan(x))
    return "nan";
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void dump_into(const Record& r, std::string& out) {
  switch (r.type()) {
  case Record::value_t::object: {
    out += '{';
    bool first = true;
    for (const auto& [k, v] : r.items()) {
      if (!first)
        out += ", ";
      first = false;
      out += Record(k).dump();
      out += ": ";
      dump_into(v, out);
    }
    out += '}';
    break;
  }
  case Record::value_t::array: {
    out += '[';
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i != 0)
        out += ", ";
      dump_into(r[i], out);
    }
    out += ']';
    break;
  }
  case Record::value_t::number_float: {
    const double x = r.get<double>();
    out += std::isfinite(x) ? format_double(x) : "\"" + format_double(x) + "\"";
    break;
  }
  default:
    out += r.dump();
  }
}

double parse_real(std::string_view s) {
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("cannot parse number '" + std::string(s) + "'");
  return x;
}

} // namespace

std::string dump(const Record& r) {
  std::string out;
  dump_into(r, out);
  return out;
}

std::string format_complex(complex z) {
  std::string s = format_double(z.real());
  const std::string im = format_double(z.imag());
  if (im.front() != '-')
    s += '+';
  return s + im + "i";
}

complex parse_complex(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (s.empty())
    throw std::invalid_argument("empty complex number");
  if (s.back() != 'i')
    return {parse_real(s), 0.0};
  s.remove_suffix(1);
  auto imag_part = [](std::string_view t) {
    if (t.empty() || t == "+")
      return 1.0;
    if (t == "-")
      return -1.0;
    return parse_real(t);
  };
  // Split at the last sign that is not a leading sign or an exponent sign.
  for (std::size_t pos = s.size(); pos-- > 1;) {
    if ((s[pos] == '+' || s[pos] == '-') && s[pos - 1] != 'e' && s[pos - 1] != 'E')
      return {parse_real(s.substr(0, pos)), imag_part(s.substr(pos))};
  }
  return {0.0, imag_part(s)};
}

std::vector<complex> parse_complex_list(std::string_view s) {
  std::vector<complex> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string_view::npos ? s.size() : comma;
    out.push_back(parse_complex(s.substr(start, end - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

void write_matrix_csv(std::ostream& os, const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j != 0)
        os << ',';
      os << format_complex(m(i, j));
    }
    os << '\n';
  }
}

ComplexMatrix read_matrix_csv(std::istream& is) {
  std::vector<std::vector<complex>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    rows.push_back(parse_complex_list(line));
    if (rows.back().size() != rows.front().size())
      throw std::invalid_argument("matrix CSV: ragged rows");
  }
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = rows.empty() ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
  ComplexMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

void write_labels(std::ostream& os, const std::vector<MultiIndex>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    os << i << ',';
    try {
      os << label(labels[i]);
    } catch (const ComputationError&) {
      // integer label does not fit; the exponents still identify the row
    }
    os << ',';
    const auto e = labels[i].exponents();
    for (std::size_t j = 0; j < e.size(); ++j)
      os << (j ? " " : "") << e[j];
    os << '\n';
  }
}

} // namespace polyhankel::io
