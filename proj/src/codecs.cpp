#include "mbf/codecs.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace mbf {

namespace {

struct Lines {
  // (line number, tokens) for content lines; '#' comments stripped.
  std::vector<std::pair<int, std::vector<std::string>>> rows;
};

Lines tokenize(const std::string& text) {
  Lines out;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) out.rows.push_back({no, std::move(toks)});
  }
  return out;
}

int parse_int(const std::string& s, int line) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (...) {
    used = 0;
  }
  if (used != s.size())
    fail(Err::SyntaxError, "expected an integer, got '" + s + "'", line);
  return v;
}

}  // namespace

ButterflyDiagram parse_btf(const std::string& text) {
  Lines lines = tokenize(text);
  if (lines.rows.empty()) fail(Err::SyntaxError, "empty butterfly file", 1);

  size_t i = 0;
  if (lines.rows[0].second[0] == "btf") {
    auto& [no, toks] = lines.rows[0];
    if (toks.size() != 2 || toks[1] != "1")
      fail(Err::SyntaxError, "unsupported btf version", no);
    ++i;
  }

  std::map<int, std::pair<std::vector<Sym>, std::pair<int, int>>> recs;
  for (; i < lines.rows.size(); ++i) {
    auto& [no, toks] = lines.rows[i];
    if (toks[0] != "face")
      fail(Err::SyntaxError, "expected 'face', got '" + toks[0] + "'", no);
    if (toks.size() < 2 || toks[1].back() != ':')
      fail(Err::SyntaxError, "expected 'face <id>:'", no);
    int id = parse_int(toks[1].substr(0, toks[1].size() - 1), no);
    if (recs.count(id)) fail(Err::SyntaxError, "duplicate face id", no);

    std::vector<Sym> word;
    size_t j = 2;
    for (; j < toks.size() && toks[j] != ";"; ++j) {
      std::string s = toks[j];
      int sign = 1;
      if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        sign = s[0] == '-' ? -1 : 1;
        s = s.substr(1);
      }
      if (s.empty())
        fail(Err::SyntaxError, "empty edge symbol", no);
      for (char c : s)
        if (!std::isalnum((unsigned char)c) && c != '_')
          fail(Err::SyntaxError, "bad edge symbol '" + toks[j] + "'", no);
      word.push_back({s, sign});
    }
    if (j + 4 != toks.size() || toks[j] != ";" || toks[j + 1] != "trunk")
      fail(Err::SyntaxError, "expected '; trunk <posC> <posD>'", no);
    int pc = parse_int(toks[j + 2], no);
    int pd = parse_int(toks[j + 3], no);
    if (word.empty()) fail(Err::SyntaxError, "empty face word", no);
    if (pc < 0 || pc >= (int)word.size() || pd < 0 || pd >= (int)word.size())
      fail(Err::SyntaxError, "trunk corner out of range", no);
    recs[id] = {std::move(word), {pc, pd}};
  }

  if (recs.empty()) fail(Err::SyntaxError, "no face records", 1);
  std::vector<std::vector<Sym>> words;
  std::vector<Trunk> trunks;
  int expect = 0;
  for (auto& [id, rec] : recs) {
    if (id != expect)
      fail(Err::SyntaxError,
           "face ids must cover 0..F-1; missing " + std::to_string(expect), 1);
    words.push_back(std::move(rec.first));
    trunks.push_back({id, rec.second.first, rec.second.second});
    ++expect;
  }
  PlanarMap m = build_from_face_words(words);
  return make_butterfly(std::move(m), std::move(trunks));
}

std::string emit_btf(const ButterflyDiagram& b) {
  std::ostringstream os;
  os << "btf 1\n";
  for (int f = 0; f < b.m(); ++f) {
    os << "face " << f << ":";
    for (int d : b.map.faces[f]) {
      os << ' ';
      if (d > b.map.alpha[d]) os << '-';
      os << 'e' << b.map.dart_edge[d];
    }
    os << " ; trunk " << b.trunks[f].pos_c << ' ' << b.trunks[f].pos_d << '\n';
  }
  return os.str();
}

LinkDiagram parse_pd(const std::string& text) {
  Lines lines = tokenize(text);
  std::vector<std::array<int, 4>> xs;
  int loops = 0;
  for (auto& [no, toks] : lines.rows) {
    if (toks[0] == "X") {
      if (toks.size() != 5)
        fail(Err::SyntaxError, "expected 'X <a> <b> <c> <d>'", no);
      xs.push_back({parse_int(toks[1], no), parse_int(toks[2], no),
                    parse_int(toks[3], no), parse_int(toks[4], no)});
    } else if (toks[0] == "O") {
      if (toks.size() != 1) fail(Err::SyntaxError, "expected bare 'O'", no);
      ++loops;
    } else {
      fail(Err::SyntaxError, "expected 'X' or 'O', got '" + toks[0] + "'", no);
    }
  }
  if (xs.empty() && loops == 0) fail(Err::SyntaxError, "empty PD file", 1);
  return make_link_diagram(std::move(xs), loops);
}

std::string emit_pd(const LinkDiagram& d) {
  std::ostringstream os;
  for (auto& x : d.crossings)
    os << "X " << x[0] << ' ' << x[1] << ' ' << x[2] << ' ' << x[3] << '\n';
  for (int i = 0; i < d.loops; ++i) os << "O\n";
  return os.str();
}

std::string emit_gauss(const LinkDiagram& d) {
  std::ostringstream os;
  for (auto& st : d.strands) {
    bool first = true;
    for (auto& p : st.passages) {
      if (!first) os << ' ';
      first = false;
      os << (p.over ? 'O' : 'U') << (p.crossing + 1)
         << (crossing_sign(d, p.crossing, 0) > 0 ? '+' : '-');
    }
    os << '\n';
  }
  for (int i = 0; i < d.loops; ++i) os << "unknot\n";
  return os.str();
}

}  // namespace mbf
