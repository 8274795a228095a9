#include "odplab/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace odplab {

namespace {

struct LineReader {
  std::istream& in;
  int lineno = 0;

  // Next significant line: blanks and '#' comments skipped.
  std::optional<std::string> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::size_t i = line.find_first_not_of(" \t");
      if (i == std::string::npos) continue;
      if (line[i] == '#') continue;
      std::size_t j = line.find_last_not_of(" \t");
      return line.substr(i, j - i + 1);
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw StructuralError("parse: line " + std::to_string(lineno) + ": " + msg);
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int parse_index(LineReader& r, const std::string& tok, int m) {
  std::size_t pos = 0;
  int v = -1;
  try {
    v = std::stoi(tok, &pos);
  } catch (...) {
    r.fail("expected an element index, got '" + tok + "'");
  }
  if (pos != tok.size() || v < 0 || v >= m)
    r.fail("element index '" + tok + "' out of range 0.." + std::to_string(m - 1));
  return v;
}

ParsedInstance read_odp(LineReader& r) {
  auto line = r.next();
  if (!line) r.fail("missing 'elements' line");
  auto toks = split_ws(*line);
  if (toks.size() != 2 || toks[0] != "elements") r.fail("expected 'elements <m>'");
  int m = 0;
  try {
    m = std::stoi(toks[1]);
  } catch (...) {
    r.fail("bad element count '" + toks[1] + "'");
  }
  if (m < 1 || m > 4096) r.fail("element count must be 1..4096");

  std::vector<std::string> rows;
  std::vector<int> perp;
  std::vector<std::uint16_t> delta;
  std::vector<std::string> labels;
  bool saw_leq = false, saw_perp = false, saw_delta = false, saw_labels = false;

  while ((line = r.next())) {
    toks = split_ws(*line);
    if (toks[0] == "leq") {
      if (saw_leq) r.fail("duplicate leq section");
      saw_leq = true;
      if (toks.size() != 1) r.fail("leq keyword takes no arguments");
      for (int i = 0; i < m; ++i) {
        auto row = r.next();
        if (!row) r.fail("leq matrix truncated");
        if ((int)row->size() != m)
          r.fail("leq row has " + std::to_string(row->size()) +
                 " characters, expected " + std::to_string(m));
        rows.push_back(*row);
      }
    } else if (toks[0] == "perp") {
      if (saw_perp) r.fail("duplicate perp section");
      saw_perp = true;
      if ((int)toks.size() != m + 1)
        r.fail("perp needs exactly " + std::to_string(m) + " indices");
      for (int i = 1; i <= m; ++i) perp.push_back(parse_index(r, toks[i], m));
    } else if (toks[0] == "delta") {
      if (saw_delta) r.fail("duplicate delta section");
      saw_delta = true;
      if (toks.size() != 1) r.fail("delta keyword takes no arguments");
      for (int i = 0; i < m; ++i) {
        auto row = r.next();
        if (!row) r.fail("delta table truncated");
        auto rt = split_ws(*row);
        if ((int)rt.size() != m)
          r.fail("delta row has " + std::to_string(rt.size()) +
                 " entries, expected " + std::to_string(m));
        for (auto& tok : rt)
          delta.push_back((std::uint16_t)parse_index(r, tok, m));
      }
    } else if (toks[0] == "labels") {
      if (saw_labels) r.fail("duplicate labels section");
      saw_labels = true;
      if ((int)toks.size() != m + 1)
        r.fail("labels needs exactly " + std::to_string(m) + " tokens");
      labels.assign(toks.begin() + 1, toks.end());
    } else {
      r.fail("unknown section '" + toks[0] + "'");
    }
  }
  if (!saw_leq) r.fail("missing leq section");
  if (!saw_perp) r.fail("missing perp section");

  ParsedInstance out{FinOrthoPoset(rows, std::move(perp), std::move(labels)),
                     std::nullopt};
  if (saw_delta) out.delta = DeltaTable(m, std::move(delta));
  return out;
}

ParsedInstance read_family(LineReader& r) {
  auto line = r.next();
  if (!line) r.fail("missing 'universe' line");
  auto toks = split_ws(*line);
  if (toks.size() != 2 || toks[0] != "universe") r.fail("expected 'universe <n>'");
  int n = 0;
  try {
    n = std::stoi(toks[1]);
  } catch (...) {
    r.fail("bad universe size '" + toks[1] + "'");
  }
  if (n < 1 || n > 63) r.fail("universe size must be 1..63");

  SetFamily fam;
  fam.n = n;
  while ((line = r.next())) {
    if ((int)line->size() != n)
      r.fail("subset line has " + std::to_string(line->size()) +
             " characters, expected " + std::to_string(n));
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
      char c = (*line)[i];
      if (c != '0' && c != '1') r.fail("subset lines are '0'/'1' strings");
      if (c == '1') mask |= std::uint64_t{1} << i;
    }
    fam.members.push_back(mask);
  }
  if (fam.members.empty()) r.fail("family has no members");
  fam.canonicalize();
  auto inst = family_instance(fam);  // check_closed runs inside
  return {std::move(inst.poset), std::move(inst.delta)};
}

}  // namespace

ParsedInstance read_instance(std::istream& in) {
  LineReader r{in};
  auto header = r.next();
  if (!header) r.fail("empty input");
  auto toks = split_ws(*header);
  if (toks.size() == 2 && toks[0] == "odp" && toks[1] == "v1") return read_odp(r);
  if (toks.size() == 2 && toks[0] == "family" && toks[1] == "v1")
    return read_family(r);
  r.fail("expected 'odp v1' or 'family v1' header");
}

ParsedInstance read_instance_text(const std::string& text) {
  std::istringstream is(text);
  return read_instance(is);
}

void write_instance(std::ostream& out, const FinOrthoPoset& p,
                    const DeltaTable* d) {
  const int m = p.size();
  out << "odp v1\n" << "elements " << m << "\n" << "leq\n";
  for (int i = 0; i < m; ++i) out << p.up(i).to_string() << "\n";
  out << "perp";
  for (int i = 0; i < m; ++i) out << " " << p.perp(i);
  out << "\n";
  if (d) {
    out << "delta\n";
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) out << (j ? " " : "") << d->at(i, j);
      out << "\n";
    }
  }
  if (!p.labels().empty()) {
    out << "labels";
    for (int i = 0; i < m; ++i) out << " " << p.labels()[i];
    out << "\n";
  }
}

std::string instance_text(const FinOrthoPoset& p, const DeltaTable* d) {
  std::ostringstream os;
  write_instance(os, p, d);
  return os.str();
}

}  // namespace odplab
