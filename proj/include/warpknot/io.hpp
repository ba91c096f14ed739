#pragma once

// Text formats. All indices in files are 0-based and serialization is
// canonical, so parse(serialize(x)) == x and serialize(parse(t)) is a fixed
// point for canonical text.
//
//   .gauss   one diagram per line, tokens O<k> / U<k>, '#' comments
//   .shadow  one shadow per line, each crossing id appearing twice
//   .arc     like .gauss but the sequence is linear (not cyclic)
//   .curve   passage line with tokens <k> (plain) and <k>L / <k>R (carrying
//            the crossing's chirality flag), then "OUTER <edge> <LEFT|RIGHT>",
//            then optionally "BASE <edge>". A crossingless circle is written
//            with no passage line at all.
//
// Parsers normalize crossing ids to 1..n in order of first appearance. The
// chirality flag may sit on either visit of its crossing in the input; the
// canonical form puts it on the second visit.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "warpknot/curve.hpp"
#include "warpknot/diagram.hpp"
#include "warpknot/errors.hpp"

namespace warpknot {

namespace detail {

struct token {
  std::string text;
  int column = 0;  // 1-based
};

inline std::vector<token> tokenize_line(const std::string& line) {
  std::vector<token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    out.push_back(token{line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

[[noreturn]] inline void token_fail(errc code, const token& t, const std::string& why) {
  fail(code, "col " + std::to_string(t.column) + ": '" + t.text + "': " + why);
}

inline int parse_positive_int(const token& t, std::size_t from, std::size_t to) {
  if (from >= to) token_fail(errc::syntax_error, t, "missing crossing number");
  long v = 0;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
      token_fail(errc::syntax_error, t, "expected a number");
    v = v * 10 + (t.text[i] - '0');
    if (v > 1000000) token_fail(errc::syntax_error, t, "crossing number too large");
  }
  if (v < 1) token_fail(errc::syntax_error, t, "crossing numbers start at 1");
  return static_cast<int>(v);
}

inline std::vector<passage> parse_passage_tokens(const std::vector<token>& tokens) {
  std::vector<passage> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (t.text.size() < 2 || (t.text[0] != 'O' && t.text[0] != 'U'))
      token_fail(errc::syntax_error, t, "expected O<k> or U<k>");
    const int id = parse_positive_int(t, 1, t.text.size());
    out.push_back(passage{id, t.text[0] == 'O' ? strand::over : strand::under});
  }
  return out;
}

inline std::vector<passage> normalize_ids(std::vector<passage> v) {
  std::vector<int> name;
  for (auto& p : v) {
    if (p.crossing_id > static_cast<int>(name.size())) name.resize(p.crossing_id, 0);
    int& slot = name[static_cast<std::size_t>(p.crossing_id - 1)];
    if (slot == 0) slot = static_cast<int>(1 + std::count_if(name.begin(), name.end(),
                                                             [](int x) { return x != 0; }));
    p.crossing_id = slot;
  }
  return v;
}

}  // namespace detail

inline gauss_diagram parse_gauss_code(const std::string& text) {
  auto tokens = detail::tokenize_line(text);
  return gauss_diagram(detail::normalize_ids(detail::parse_passage_tokens(tokens)));
}

inline arc_diagram parse_arc_code(const std::string& text) {
  auto tokens = detail::tokenize_line(text);
  return arc_diagram(detail::normalize_ids(detail::parse_passage_tokens(tokens)));
}

inline shadow parse_shadow_code(const std::string& text) {
  auto tokens = detail::tokenize_line(text);
  std::vector<int> ids;
  ids.reserve(tokens.size());
  for (const auto& t : tokens) ids.push_back(detail::parse_positive_int(t, 0, t.text.size()));
  // normalize to first-appearance order
  std::vector<int> name;
  for (auto& id : ids) {
    if (id > static_cast<int>(name.size())) name.resize(static_cast<std::size_t>(id), 0);
    int& slot = name[static_cast<std::size_t>(id - 1)];
    if (slot == 0)
      slot = static_cast<int>(1 +
                              std::count_if(name.begin(), name.end(), [](int x) { return x != 0; }));
    id = slot;
  }
  return shadow(std::move(ids));
}

inline std::string to_gauss_code(const gauss_diagram& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.passages().size(); ++i) {
    if (i) os << ' ';
    os << (d.passages()[i].kind == strand::over ? 'O' : 'U') << d.passages()[i].crossing_id;
  }
  return os.str();
}

inline std::string to_arc_code(const arc_diagram& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.passages().size(); ++i) {
    if (i) os << ' ';
    os << (a.passages()[i].kind == strand::over ? 'O' : 'U') << a.passages()[i].crossing_id;
  }
  return os.str();
}

inline std::string to_shadow_code(const shadow& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.ids().size(); ++i) {
    if (i) os << ' ';
    os << s.ids()[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Curve files.

struct curve_file {
  planar_curve curve;
  std::optional<int> base_edge;
};

inline curve_file parse_curve_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<detail::token>> content;
  int line_no = 0;
  std::vector<int> content_lines;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = detail::tokenize_line(line);
    if (toks.empty()) continue;
    content.push_back(std::move(toks));
    content_lines.push_back(line_no);
  }
  if (content.empty()) fail(errc::syntax_error, "curve file has no content");

  std::size_t at = 0;
  std::vector<int> seq;
  std::vector<chirality> flags_by_input_id;  // 0 = unset sentinel via separate bool
  std::vector<bool> flag_seen;

  if (content[0][0].text != "OUTER") {
    for (const auto& t : content[at]) {
      std::size_t digits_end = 0;
      while (digits_end < t.text.size() &&
             std::isdigit(static_cast<unsigned char>(t.text[digits_end])))
        ++digits_end;
      const int id = detail::parse_positive_int(t, 0, digits_end);
      std::optional<chirality> fl;
      if (digits_end < t.text.size()) {
        if (t.text.size() != digits_end + 1 ||
            (t.text[digits_end] != 'L' && t.text[digits_end] != 'R'))
          detail::token_fail(errc::syntax_error, t, "expected <k>, <k>L or <k>R");
        fl = t.text[digits_end] == 'L' ? chirality::l : chirality::r;
      }
      if (id > static_cast<int>(flag_seen.size())) {
        flag_seen.resize(static_cast<std::size_t>(id), false);
        flags_by_input_id.resize(static_cast<std::size_t>(id), chirality::l);
      }
      if (fl) {
        if (flag_seen[static_cast<std::size_t>(id - 1)])
          detail::token_fail(errc::syntax_error, t, "chirality given twice for this crossing");
        flag_seen[static_cast<std::size_t>(id - 1)] = true;
        flags_by_input_id[static_cast<std::size_t>(id - 1)] = *fl;
      }
      seq.push_back(id);
    }
    for (std::size_t k = 0; k < flag_seen.size(); ++k)
      if (!flag_seen[k])
        fail(errc::syntax_error,
             "crossing " + std::to_string(k + 1) + " has no chirality flag");
    ++at;
  }

  if (at >= content.size() || content[at][0].text != "OUTER")
    fail(errc::syntax_error, "expected OUTER line");
  if (content[at].size() != 3)
    fail(errc::syntax_error, "OUTER line needs: OUTER <edge> <LEFT|RIGHT>");
  const auto& et = content[at][1];
  std::size_t de = 0;
  while (de < et.text.size() && std::isdigit(static_cast<unsigned char>(et.text[de]))) ++de;
  if (de != et.text.size() || de == 0)
    detail::token_fail(errc::syntax_error, et, "expected edge index");
  const int outer_edge = std::stoi(et.text);
  side outer_side;
  if (content[at][2].text == "LEFT")
    outer_side = side::left;
  else if (content[at][2].text == "RIGHT")
    outer_side = side::right;
  else
    detail::token_fail(errc::syntax_error, content[at][2], "expected LEFT or RIGHT");
  ++at;

  std::optional<int> base;
  if (at < content.size()) {
    if (content[at][0].text != "BASE" || content[at].size() != 2)
      fail(errc::syntax_error, "expected BASE <edge> or end of file");
    const auto& bt = content[at][1];
    std::size_t db = 0;
    while (db < bt.text.size() && std::isdigit(static_cast<unsigned char>(bt.text[db]))) ++db;
    if (db != bt.text.size() || db == 0)
      detail::token_fail(errc::syntax_error, bt, "expected edge index");
    base = std::stoi(bt.text);
    ++at;
    if (at != content.size()) fail(errc::syntax_error, "trailing content after BASE line");
  }

  // Normalize ids to first-appearance order, carrying flags along.
  std::vector<int> name(flag_seen.size(), 0);
  int next = 0;
  std::vector<chirality> flags;
  for (auto& id : seq) {
    int& slot = name[static_cast<std::size_t>(id - 1)];
    if (slot == 0) {
      slot = ++next;
      flags.push_back(flags_by_input_id[static_cast<std::size_t>(id - 1)]);
    }
    id = slot;
  }

  planar_curve c(std::move(seq), std::move(flags), outer_edge, outer_side);
  if (base && (*base < 0 || *base >= c.edge_count()))
    fail(errc::bad_base_edge, "BASE edge " + std::to_string(*base) + " out of range");
  return curve_file{std::move(c), base};
}

inline std::string to_curve_text(const planar_curve& c, std::optional<int> base = std::nullopt) {
  std::ostringstream os;
  if (c.crossing_count() > 0) {
    std::vector<bool> seen(static_cast<std::size_t>(c.crossing_count()), false);
    for (std::size_t i = 0; i < c.seq().size(); ++i) {
      if (i) os << ' ';
      const int id = c.seq()[i];
      os << id;
      if (seen[static_cast<std::size_t>(id - 1)])
        os << (c.flag(id) == chirality::l ? 'L' : 'R');
      seen[static_cast<std::size_t>(id - 1)] = true;
    }
    os << '\n';
  }
  os << "OUTER " << c.outer_edge() << ' '
     << (c.outer_side() == side::left ? "LEFT" : "RIGHT") << '\n';
  if (base) os << "BASE " << *base << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Whole-file loaders; errors gain a "line N" prefix.

namespace detail {

template <class Parse>
auto load_lines(const std::string& path, Parse parse)
    -> std::vector<std::pair<int, decltype(parse(std::string()))>> {
  std::ifstream in(path);
  if (!in) fail(errc::bad_file, "cannot open '" + path + "'");
  std::vector<std::pair<int, decltype(parse(std::string()))>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (tokenize_line(line).empty()) continue;
    try {
      out.emplace_back(line_no, parse(line));
    } catch (const error& e) {
      fail(e.code(), "line " + std::to_string(line_no) + ", " + e.what());
    }
  }
  return out;
}

}  // namespace detail

inline std::vector<std::pair<int, gauss_diagram>> load_gauss_file(const std::string& path) {
  return detail::load_lines(path, [](const std::string& l) { return parse_gauss_code(l); });
}

inline std::vector<std::pair<int, arc_diagram>> load_arc_file(const std::string& path) {
  return detail::load_lines(path, [](const std::string& l) { return parse_arc_code(l); });
}

inline std::vector<std::pair<int, shadow>> load_shadow_file(const std::string& path) {
  return detail::load_lines(path, [](const std::string& l) { return parse_shadow_code(l); });
}

inline curve_file load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_file, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_curve_text(buf.str());
}

}  // namespace warpknot
