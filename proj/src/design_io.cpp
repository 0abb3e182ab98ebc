#include "concov/design_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace concov {

namespace {

bool content_line(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return false;
    if (!std::isspace(static_cast<unsigned char>(ch))) return true;
  }
  return false;
}

std::vector<int> parse_ints(const std::string& line, int lineno) {
  std::istringstream iss(line);
  std::vector<int> out;
  int v;
  while (iss >> v) out.push_back(v);
  std::string rest;
  if (iss.bad() || (iss.clear(), iss >> rest)) {
    throw std::runtime_error("design file line " + std::to_string(lineno) +
                             ": expected integers, got '" + line + "'");
  }
  return out;
}

}  // namespace

DesignFamily parse_design(std::istream& in) {
  std::string line;
  int lineno = 0;

  // Header: "n k r covering" or "n m p turan".
  std::optional<DesignFamily::Params> params;
  int ground = 0;
  int width = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!content_line(line)) continue;
    std::istringstream iss(line);
    int n, a, b;
    std::string kind;
    if (!(iss >> n >> a >> b >> kind)) {
      throw std::runtime_error("design file line " + std::to_string(lineno) +
                               ": malformed header '" + line + "'");
    }
    if (kind == "covering") {
      CoverParams p{n, a, b};
      validate(p);
      params = p;
      width = a;
    } else if (kind == "turan") {
      TuranParams p{n, a, b};
      validate(p);
      params = p;
      width = b;
    } else {
      throw std::runtime_error("design file line " + std::to_string(lineno) +
                               ": kind must be 'covering' or 'turan'");
    }
    ground = n;
    break;
  }
  if (!params) throw std::runtime_error("design file: missing header line");

  std::vector<Block> blocks;
  while (std::getline(in, line)) {
    ++lineno;
    if (!content_line(line)) continue;
    const std::vector<int> elems = parse_ints(line, lineno);
    if (static_cast<int>(elems.size()) != width) {
      throw std::runtime_error("design file line " + std::to_string(lineno) + ": expected " +
                               std::to_string(width) + " elements, got " +
                               std::to_string(elems.size()));
    }
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (elems[i] < 1 || elems[i] > ground) {
        throw std::runtime_error("design file line " + std::to_string(lineno) +
                                 ": element outside [1, n]");
      }
      if (i > 0 && elems[i] <= elems[i - 1]) {
        throw std::runtime_error("design file line " + std::to_string(lineno) +
                                 ": elements must be strictly ascending");
      }
    }
    blocks.push_back(Block::of(elems));
  }

  if (std::holds_alternative<CoverParams>(*params)) {
    return DesignFamily(std::get<CoverParams>(*params), std::move(blocks));
  }
  return DesignFamily(std::get<TuranParams>(*params), std::move(blocks));
}

DesignFamily parse_design(const std::string& text) {
  std::istringstream iss(text);
  return parse_design(iss);
}

DesignFamily load_design(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open design file: " + file.string());
  try {
    return parse_design(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }
}

void serialize_design(std::ostream& out, const DesignFamily& fam) {
  if (fam.is_covering_kind()) {
    const CoverParams& p = fam.cover_params();
    out << p.n << ' ' << p.k << ' ' << p.r << " covering\n";
  } else {
    const TuranParams& p = fam.turan_params();
    out << p.n << ' ' << p.m << ' ' << p.p << " turan\n";
  }
  for (const Block& b : fam.blocks()) {
    bool first = true;
    for (int e : b.elements()) {
      if (!first) out << ' ';
      out << e;
      first = false;
    }
    out << '\n';
  }
}

std::string serialize_design(const DesignFamily& fam) {
  std::ostringstream oss;
  serialize_design(oss, fam);
  return oss.str();
}

void save_design(const std::filesystem::path& file, const DesignFamily& fam) {
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write design file: " + file.string());
  serialize_design(out, fam);
}

}  // namespace concov
