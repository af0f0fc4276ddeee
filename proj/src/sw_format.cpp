#include "knotsurg/sw_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "knotsurg/error.hpp"

namespace knotsurg {

namespace {

std::vector<std::string> split(const std::string &line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok)
    tokens.push_back(tok);
  return tokens;
}

class LineError {
public:
  explicit LineError(int lineno) : lineno_(lineno) {}
  [[noreturn]] void operator()(const std::string &msg) const {
    throw ParseError("SW data line " + std::to_string(lineno_) + ": " + msg);
  }

private:
  int lineno_;
};

std::int64_t to_int64(const std::string &tok, const LineError &fail) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    fail("expected a 64-bit integer, got '" + tok + "'");
  return v;
}

LatticeVector to_vector(const std::vector<std::string> &tokens, std::size_t from,
                        std::size_t count, const LineError &fail) {
  LatticeVector v;
  v.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    v.push_back(to_int64(tokens[from + i], fail));
  return v;
}

void append_ints(std::string &out, const LatticeVector &v) {
  for (auto x : v) {
    out += ' ';
    out += std::to_string(x);
  }
}

} // namespace

TorusClass SWData::torus_class() const {
  if (!torus)
    throw InputError("SW data has no torus line");
  return TorusClass(*torus, form);
}

SWData parse_sw_data(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::pair<int, std::string>> lines;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r')
      raw.pop_back();
    if (raw.find_first_not_of(" \t") == std::string::npos)
      continue;
    lines.emplace_back(lineno, raw);
  }

  std::size_t at = 0;
  if (lines.empty())
    throw ParseError("SW data is empty");
  std::size_t rank = 0;
  {
    const LineError fail(lines[0].first);
    const auto tok = split(lines[0].second);
    if (tok.size() != 2 || tok[0] != "rank")
      fail("first line must be 'rank <b>'");
    const auto r = to_int64(tok[1], fail);
    if (r < 0)
      fail("rank must be nonnegative");
    rank = static_cast<std::size_t>(r);
    ++at;
  }

  SWData data{SWInvariant(rank), std::nullopt, std::nullopt};
  bool seen_class = false;
  for (; at < lines.size(); ++at) {
    const LineError fail(lines[at].first);
    const auto tok = split(lines[at].second);
    const std::string &key = tok[0];
    if (key == "torus") {
      if (seen_class || data.torus)
        fail("'torus' must appear once, before the class lines");
      if (tok.size() != rank + 1)
        throw DimensionError("SW data line " + std::to_string(lines[at].first) + ": torus has " +
                             std::to_string(tok.size() - 1) + " entries, rank is " +
                             std::to_string(rank));
      data.torus = to_vector(tok, 1, rank, fail);
    } else if (key == "form") {
      if (seen_class || data.form)
        fail("'form' must appear once, before the class lines");
      if (tok.size() != 1)
        fail("'form' takes no arguments; rows follow on the next lines");
      IntMatrix q;
      for (std::size_t row = 0; row < rank; ++row) {
        if (++at >= lines.size())
          fail("form needs " + std::to_string(rank) + " rows");
        const LineError row_fail(lines[at].first);
        const auto cells = split(lines[at].second);
        if (cells.size() != rank)
          throw DimensionError("SW data line " + std::to_string(lines[at].first) +
                               ": form row has " + std::to_string(cells.size()) +
                               " entries, rank is " + std::to_string(rank));
        q.push_back(to_vector(cells, 0, rank, row_fail));
      }
      data.form = std::move(q);
    } else if (key == "class") {
      seen_class = true;
      if (tok.size() < 3 || tok[tok.size() - 2] != "coeff")
        fail("expected 'class <b integers> coeff <c>'");
      if (tok.size() != rank + 3)
        throw DimensionError("SW data line " + std::to_string(lines[at].first) + ": class has " +
                             std::to_string(tok.size() - 3) + " entries, rank is " +
                             std::to_string(rank));
      LatticeVector cls = to_vector(tok, 1, rank, fail);
      Integer coeff;
      if (coeff.set_str(tok.back(), 10) != 0)
        fail("bad coefficient '" + tok.back() + "'");
      if (coeff == 0)
        fail("coefficients must be nonzero");
      if (data.sw.coefficient(cls) != 0)
        fail("class listed twice");
      data.sw.add_term(cls, coeff);
    } else {
      fail("unknown keyword '" + key + "'");
    }
  }
  if (data.torus && data.form)
    (void)data.torus_class(); // enforces [T].Q.[T] = 0
  return data;
}

std::string format_sw_data(const SWData &data) {
  std::string out = "rank " + std::to_string(data.sw.rank()) + "\n";
  if (data.torus) {
    out += "torus";
    append_ints(out, *data.torus);
    out += '\n';
  }
  if (data.form) {
    out += "form\n";
    for (const auto &row : *data.form) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j)
          out += ' ';
        out += std::to_string(row[j]);
      }
      out += '\n';
    }
  }
  for (const auto &[cls, coeff] : data.sw.terms()) {
    out += "class";
    append_ints(out, cls);
    out += " coeff ";
    out += coeff.get_str();
    out += '\n';
  }
  return out;
}

SWData read_sw_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open SW data file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_sw_data(buf.str());
  } catch (const ParseError &e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_sw_file(const std::filesystem::path &path, const SWData &data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw InputError("cannot write " + path.string());
  out << format_sw_data(data);
  if (!out)
    throw InputError("failed writing " + path.string());
}

} // namespace knotsurg
