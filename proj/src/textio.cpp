#include "censym/textio.hpp"

#include <fstream>
#include <sstream>

#include "censym/errors.hpp"

namespace censym {

namespace {

std::vector<std::string> tokens(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    while (words >> w) out.push_back(w);
  }
  return out;
}

}  // namespace

Matrix read_matrix(std::istream& in) {
  const auto t = tokens(in);
  if (t.size() < 4 || t[0] != "n" || t[2] != "ring") throw ParseError("expected header 'n <size> ring <literal>'");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    const long value = std::stol(t[1], &used);
    if (used != t[1].size() || value < 1) throw ParseError("bad size");
    n = static_cast<std::size_t>(value);
  } catch (const std::logic_error&) {
    throw ParseError("matrix size '" + t[1] + "' is not a positive integer");
  }
  const Ring ring = Ring::parse(t[3]);
  if (t.size() != 4 + n * n) {
    throw ParseError("expected " + std::to_string(n * n) + " entries, found " + std::to_string(t.size() - 4));
  }
  Matrix m(ring, n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) m.set(i, j, ring.parse_element(t[4 + (i - 1) * n + (j - 1)]));
  return m;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& m) {
  out << "n " << m.size() << " ring " << m.ring().literal() << '\n';
  for (std::size_t i = 1; i <= m.size(); ++i) {
    for (std::size_t j = 1; j <= m.size(); ++j) {
      std::string s = m(i, j).to_string();
      std::erase(s, ' ');
      out << (j > 1 ? " " : "") << s;
    }
    out << '\n';
  }
}

}  // namespace censym
