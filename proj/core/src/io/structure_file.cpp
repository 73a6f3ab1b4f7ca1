#include "pcm/io/structure_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "pcm/exact/poly_text.hpp"

namespace pcm::io {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      kind_(kind),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

using Kind = ParseError::Kind;

struct Line {
  std::size_t number = 0;
  std::size_t indent = 0;  // 0-based column of first character of `text`
  std::string_view text;   // comment stripped, trimmed
};

struct Item {
  std::string_view text;
  std::size_t column;  // 1-based
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t a = 0;
    while (a < raw.size() && is_space(raw[a])) ++a;
    std::size_t b = raw.size();
    while (b > a && is_space(raw[b - 1])) --b;
    if (b > a) out.push_back({number, a, raw.substr(a, b - a)});
    pos = end + 1;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(split_lines(text)) {}

  StructureFile run();

 private:
  [[noreturn]] void error(Kind kind, const Line& l, std::size_t col0, const std::string& msg) const {
    throw ParseError(kind, l.number, l.indent + col0 + 1, msg);
  }

  // Splits "a b = ..." style content into whitespace words starting at `from`.
  static std::vector<Item> words(const Line& l, std::size_t from, std::size_t to) {
    std::vector<Item> out;
    std::size_t i = from;
    while (i < to) {
      while (i < to && is_space(l.text[i])) ++i;
      const std::size_t s = i;
      while (i < to && !is_space(l.text[i])) ++i;
      if (i > s) out.push_back({l.text.substr(s, i - s), l.indent + s + 1});
    }
    return out;
  }

  static std::vector<Item> comma_items(const Line& l, std::size_t from) {
    std::vector<Item> out;
    int depth = 0;
    std::size_t start = from;
    auto push = [&](std::size_t end) {
      std::size_t a = start;
      while (a < end && is_space(l.text[a])) ++a;
      std::size_t b = end;
      while (b > a && is_space(l.text[b - 1])) --b;
      out.push_back({l.text.substr(a, b - a), l.indent + a + 1});
    };
    for (std::size_t i = from; i < l.text.size(); ++i) {
      if (l.text[i] == '(') ++depth;
      if (l.text[i] == ')') --depth;
      if (l.text[i] == ',' && depth == 0) {
        push(i);
        start = i + 1;
      }
    }
    push(l.text.size());
    return out;
  }

  Poly poly_at(const Line& l, const Item& item) const {
    if (item.text.empty()) {
      throw ParseError(Kind::kSyntax, l.number, item.column, "empty entry");
    }
    try {
      return exact::parse_poly(item.text, vars_, {file_.radicand});
    } catch (const exact::PolySyntaxError& e) {
      throw ParseError(e.lexical() ? Kind::kLexical : Kind::kSyntax, l.number,
                       item.column + e.offset(), e.what());
    }
  }

  Scalar scalar_at(const Line& l, const Item& item) const {
    const Poly p = poly_at(l, item);
    if (!p.is_constant()) {
      throw ParseError(Kind::kSemantic, l.number, item.column, "expected a constant, got '" +
                                                                    std::string(item.text) + "'");
    }
    return p.constant_value();
  }

  std::vector<Poly> poly_row(const Line& l, std::size_t from) const {
    const auto items = comma_items(l, from);
    if (items.size() != file_.dim) {
      error(Kind::kSemantic, l, from,
            "expected " + std::to_string(file_.dim) + " entries, found " +
                std::to_string(items.size()));
    }
    std::vector<Poly> row;
    for (const auto& it : items) row.push_back(poly_at(l, it));
    return row;
  }

  // Content after "<keyword> =" or "<keyword> <args> =".
  std::size_t after_equals(const Line& l, std::size_t from) const {
    const std::size_t eq = l.text.find('=', from);
    if (eq == std::string_view::npos) error(Kind::kSyntax, l, l.text.size(), "expected '='");
    return eq + 1;
  }

  void require_dim(const Line& l, std::string_view what) const {
    if (file_.dim == 0) error(Kind::kSyntax, l, 0, std::string(what) + " must come after 'dim'");
  }

  void require_names(const Line& l, std::string_view what) const {
    if (file_.names.empty()) error(Kind::kSyntax, l, 0, std::string(what) + " must come after 'names'");
  }

  std::size_t name_index(const Line& l, const Item& item) const {
    auto it = std::find(file_.names.begin(), file_.names.end(), item.text);
    if (it == file_.names.end()) {
      throw ParseError(Kind::kSemantic, l.number, item.column,
                       "unknown frame element '" + std::string(item.text) + "'");
    }
    return static_cast<std::size_t>(it - file_.names.begin());
  }

  void read_matrix_rows(std::size_t& idx, const Line& head, bool constant, std::string_view what);

  std::vector<Line> lines_;
  StructureFile file_;
  VarList vars_;
  bool have_mode_ = false;
  bool have_phi_ = false;
  bool have_xi_ = false;
  bool have_eta_ = false;
  bool have_metric_ = false;
  std::vector<bool> field_seen_;
  std::vector<std::vector<std::size_t>> bracket_line_;
  std::vector<std::size_t> metric_row_line_;
};

void Reader::read_matrix_rows(std::size_t& idx, const Line& head, bool constant,
                              std::string_view what) {
  if (head.text.size() != what.size()) {
    error(Kind::kSyntax, head, what.size(), "'" + std::string(what) + "' takes its rows on the following lines");
  }
  for (std::size_t r = 0; r < file_.dim; ++r) {
    ++idx;
    if (idx >= lines_.size()) {
      error(Kind::kSyntax, head, 0,
            "'" + std::string(what) + "' needs " + std::to_string(file_.dim) + " rows");
    }
    const Line& l = lines_[idx];
    if (constant) metric_row_line_.push_back(l.number);
    const auto row = poly_row(l, 0);
    for (std::size_t c = 0; c < file_.dim; ++c) {
      if (constant) {
        if (!row[c].is_constant()) {
          error(Kind::kSemantic, l, 0, "metric entries must be constants");
        }
        file_.metric(r, c) = row[c].constant_value();
      } else {
        file_.phi(r, c) = row[c];
      }
    }
  }
}

StructureFile Reader::run() {
  if (lines_.empty()) throw ParseError(Kind::kSyntax, 1, 1, "empty structure file");
  for (std::size_t idx = 0; idx < lines_.size(); ++idx) {
    const Line& l = lines_[idx];
    std::size_t kw_end = 0;
    while (kw_end < l.text.size() && !is_space(l.text[kw_end]) && l.text[kw_end] != '=') ++kw_end;
    const std::string_view kw = l.text.substr(0, kw_end);
    if (kw.empty()) error(Kind::kSyntax, l, 0, "expected a keyword");

    if (!have_mode_ && kw != "mode") error(Kind::kSyntax, l, 0, "file must start with 'mode'");

    if (kw == "mode") {
      if (have_mode_) error(Kind::kSemantic, l, 0, "duplicate 'mode'");
      const auto w = words(l, kw_end, l.text.size());
      if (w.size() != 1) error(Kind::kSyntax, l, kw_end, "expected 'lie_algebra' or 'coordinates'");
      if (w[0].text == "lie_algebra") {
        file_.mode = Mode::kLieAlgebra;
      } else if (w[0].text == "coordinates") {
        file_.mode = Mode::kCoordinates;
      } else {
        throw ParseError(Kind::kSemantic, l.number, w[0].column,
                         "unknown mode '" + std::string(w[0].text) + "'");
      }
      have_mode_ = true;
    } else if (kw == "radical") {
      const auto w = words(l, kw_end, l.text.size());
      std::int64_t d = 0;
      if (w.size() != 1 ||
          std::from_chars(w[0].text.data(), w[0].text.data() + w[0].text.size(), d).ec != std::errc{}) {
        error(Kind::kSyntax, l, kw_end, "expected an integer radicand");
      }
      if (!exact::is_squarefree_radicand(d)) {
        throw ParseError(Kind::kSemantic, l.number, w[0].column,
                         "radicand must be a square-free integer >= 2");
      }
      file_.radicand = d;
    } else if (kw == "dim") {
      const auto w = words(l, kw_end, l.text.size());
      std::size_t d = 0;
      if (w.size() != 1 ||
          std::from_chars(w[0].text.data(), w[0].text.data() + w[0].text.size(), d).ec != std::errc{}) {
        error(Kind::kSyntax, l, kw_end, "expected an integer dimension");
      }
      if (d < 3 || d % 2 == 0) {
        throw ParseError(Kind::kSemantic, l.number, w[0].column, "dimension must be odd and >= 3");
      }
      if (file_.dim != 0) error(Kind::kSemantic, l, 0, "duplicate 'dim'");
      file_.dim = d;
      file_.phi = PolyMatrix(d, d);
      file_.metric = ConstMatrix(d, d);
      file_.xi = FieldVec(d);
      file_.eta.assign(d, Poly());
      file_.brackets.assign(d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d)));
      bracket_line_.assign(d, std::vector<std::size_t>(d, 0));
      file_.fields.assign(d, FieldVec(d));
      field_seen_.assign(d, false);
    } else if (kw == "names") {
      require_dim(l, "names");
      if (!file_.names.empty()) error(Kind::kSemantic, l, 0, "duplicate 'names'");
      const auto w = words(l, kw_end, l.text.size());
      if (w.size() != file_.dim) {
        error(Kind::kSemantic, l, kw_end,
              "expected " + std::to_string(file_.dim) + " names, found " + std::to_string(w.size()));
      }
      std::set<std::string_view> seen;
      for (const auto& it : w) {
        if (!seen.insert(it.text).second) {
          throw ParseError(Kind::kSemantic, l.number, it.column,
                           "duplicate name '" + std::string(it.text) + "'");
        }
        file_.names.emplace_back(it.text);
      }
      file_.frame_line = l.number;
    } else if (kw == "coords") {
      require_names(l, "coords");
      if (file_.mode != Mode::kCoordinates) error(Kind::kSemantic, l, 0, "'coords' requires mode coordinates");
      if (vars_) error(Kind::kSemantic, l, 0, "duplicate 'coords'");
      const auto w = words(l, kw_end, l.text.size());
      if (w.size() != file_.dim) {
        error(Kind::kSemantic, l, kw_end,
              "expected " + std::to_string(file_.dim) + " coordinates, found " +
                  std::to_string(w.size()));
      }
      for (const auto& it : w) file_.coords.emplace_back(it.text);
      vars_ = exact::make_vars(file_.coords);
    } else if (kw == "field") {
      if (file_.mode != Mode::kCoordinates) error(Kind::kSemantic, l, 0, "'field' requires mode coordinates");
      if (!vars_) error(Kind::kSyntax, l, 0, "'field' must come after 'coords'");
      const std::size_t eq = after_equals(l, kw_end);
      const auto w = words(l, kw_end, eq - 1);
      if (w.size() != 1) error(Kind::kSyntax, l, kw_end, "expected 'field <name> = ...'");
      const std::size_t a = name_index(l, w[0]);
      if (field_seen_[a]) {
        throw ParseError(Kind::kSemantic, l.number, w[0].column,
                         "duplicate field '" + std::string(w[0].text) + "'");
      }
      field_seen_[a] = true;
      file_.fields[a] = FieldVec(poly_row(l, eq));
      file_.frame_line = std::min(file_.frame_line == 1 ? l.number : file_.frame_line, l.number);
    } else if (kw == "bracket") {
      if (file_.mode != Mode::kLieAlgebra) error(Kind::kSemantic, l, 0, "'bracket' requires mode lie_algebra");
      require_names(l, "bracket");
      const std::size_t eq = after_equals(l, kw_end);
      const auto w = words(l, kw_end, eq - 1);
      if (w.size() != 2) error(Kind::kSyntax, l, kw_end, "expected 'bracket <a> <b> = ...'");
      const std::size_t i = name_index(l, w[0]);
      const std::size_t j = name_index(l, w[1]);
      if (bracket_line_[i][j] != 0) {
        error(Kind::kSemantic, l, 0, "duplicate bracket [" + file_.names[i] + ", " + file_.names[j] + "]");
      }
      const auto items = comma_items(l, eq);
      if (items.size() != file_.dim) {
        error(Kind::kSemantic, l, eq,
              "expected " + std::to_string(file_.dim) + " entries, found " +
                  std::to_string(items.size()));
      }
      for (std::size_t k = 0; k < file_.dim; ++k) {
        const Scalar v = scalar_at(l, items[k]);
        if (i == j && !v.is_zero()) {
          throw ParseError(Kind::kSemantic, l.number, items[k].column,
                           "[" + file_.names[i] + ", " + file_.names[i] + "] must vanish");
        }
        if (bracket_line_[j][i] != 0 && file_.brackets[j][i][k] != -v) {
          throw ParseError(Kind::kSemantic, l.number, items[k].column,
                           "bracket table not antisymmetric: [" + file_.names[i] + ", " +
                               file_.names[j] + "] has " + file_.names[k] + "-component " +
                               v.str() + " but line " + std::to_string(bracket_line_[j][i]) +
                               " gives [" + file_.names[j] + ", " + file_.names[i] + "] " +
                               file_.names[k] + "-component " + file_.brackets[j][i][k].str());
        }
        file_.brackets[i][j][k] = v;
        file_.brackets[j][i][k] = -v;
      }
      bracket_line_[i][j] = l.number;
      if (file_.frame_line == 1) file_.frame_line = l.number;
    } else if (kw == "phi") {
      require_names(l, "phi");
      if (file_.mode == Mode::kCoordinates && !vars_) error(Kind::kSyntax, l, 0, "'phi' must come after 'coords'");
      if (have_phi_) error(Kind::kSemantic, l, 0, "duplicate 'phi'");
      file_.phi_line = l.number;
      read_matrix_rows(idx, l, false, "phi");
      have_phi_ = true;
    } else if (kw == "metric") {
      require_names(l, "metric");
      if (have_metric_) error(Kind::kSemantic, l, 0, "duplicate 'metric'");
      file_.metric_line = l.number;
      read_matrix_rows(idx, l, true, "metric");
      have_metric_ = true;
    } else if (kw == "xi" || kw == "eta") {
      require_names(l, kw);
      if (file_.mode == Mode::kCoordinates && !vars_) {
        error(Kind::kSyntax, l, 0, std::string(kw) + " must come after 'coords'");
      }
      bool& have = kw == "xi" ? have_xi_ : have_eta_;
      if (have) error(Kind::kSemantic, l, 0, "duplicate '" + std::string(kw) + "'");
      auto row = poly_row(l, after_equals(l, kw_end));
      if (kw == "xi") {
        file_.xi = FieldVec(std::move(row));
      } else {
        file_.eta = std::move(row);
      }
      have = true;
    } else {
      error(Kind::kSyntax, l, 0, "unknown keyword '" + std::string(kw) + "'");
    }
  }

  const Line& last = lines_.back();
  auto missing = [&](const std::string& what) {
    throw ParseError(Kind::kSemantic, last.number, 1, "missing '" + what + "'");
  };
  if (file_.dim == 0) missing("dim");
  if (file_.names.empty()) missing("names");
  if (file_.mode == Mode::kCoordinates) {
    if (!vars_) missing("coords");
    for (std::size_t a = 0; a < file_.dim; ++a)
      if (!field_seen_[a]) missing("field " + file_.names[a]);
  }
  if (!have_phi_) missing("phi");
  if (!have_xi_) missing("xi");
  if (!have_eta_) missing("eta");
  if (!have_metric_) missing("metric");
  for (std::size_t r = 0; r < file_.dim; ++r)
    for (std::size_t c = r + 1; c < file_.dim; ++c)
      if (file_.metric(r, c) != file_.metric(c, r)) {
        throw ParseError(Kind::kSemantic, metric_row_line_[r], 1,
                         "metric is not symmetric at (" + file_.names[r] + ", " + file_.names[c] +
                             ")");
      }
  return file_;
}

std::int64_t scan_radicand(const ParacontactData& s) {
  std::int64_t d = 0;
  auto see = [&](const Scalar& v) {
    if (!v.is_rational() && d == 0) d = v.radicand();
  };
  auto see_poly = [&](const Poly& p) {
    for (const auto& [m, c] : p.terms()) see(c);
  };
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i) {
    see_poly(s.xi()[i]);
    see_poly(s.eta()[i]);
    for (std::size_t j = 0; j < n; ++j) {
      see_poly(s.phi()(i, j));
      see(s.metric()(i, j));
      for (std::size_t k = 0; k < n; ++k) see_poly(s.frame().bracket(i, j)[k]);
    }
  }
  return d == 0 ? 2 : d;
}

template <typename T, typename F>
std::string join(const std::vector<T>& items, F&& fmt) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += fmt(items[i]);
  }
  return out;
}

}  // namespace

StructureFile parse_structure(std::string_view text) { return Reader(text).run(); }

ParacontactData build_structure(const StructureFile& file) {
  FramePtr frame;
  try {
    if (file.mode == Mode::kLieAlgebra) {
      frame = LieFrame::create(file.names, file.brackets);
    } else {
      frame = CoordFrame::create(file.names, exact::make_vars(file.coords), file.fields);
    }
  } catch (const FrameError& e) {
    throw ParseError(Kind::kSemantic, file.frame_line, 1, e.what());
  }
  try {
    return ParacontactData(frame, file.phi, file.xi, file.eta, file.metric);
  } catch (const StructureError& e) {
    const std::string what = e.what();
    const std::size_t line = what.find("metric") != std::string::npos ? file.metric_line : file.phi_line;
    throw ParseError(Kind::kSemantic, line, 1, what);
  }
}

ParacontactData load_structure(std::string_view text) { return build_structure(parse_structure(text)); }

StructureFile to_file(const ParacontactData& s) {
  StructureFile f;
  const std::size_t n = s.dim();
  f.dim = n;
  f.names = s.frame().names();
  f.radicand = scan_radicand(s);
  f.phi = s.phi();
  f.xi = s.xi();
  f.eta = s.eta();
  f.metric = s.metric();
  if (const auto* coord = dynamic_cast<const CoordFrame*>(&s.frame())) {
    f.mode = Mode::kCoordinates;
    f.coords = *coord->coordinates();
    f.fields = coord->fields();
  } else {
    f.mode = Mode::kLieAlgebra;
    f.brackets.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          f.brackets[i][j][k] = s.frame().bracket(i, j)[k].constant_value();
  }
  return f;
}

std::string emit(const StructureFile& f) {
  std::ostringstream os;
  auto poly_str = [](const Poly& p) { return p.str(); };
  auto scalar_str = [](const Scalar& v) { return v.str(); };
  os << "mode " << (f.mode == Mode::kLieAlgebra ? "lie_algebra" : "coordinates") << '\n';
  os << "radical " << f.radicand << '\n';
  os << "dim " << f.dim << '\n';
  os << "names";
  for (const auto& nm : f.names) os << ' ' << nm;
  os << '\n';
  if (f.mode == Mode::kCoordinates) {
    os << "coords";
    for (const auto& c : f.coords) os << ' ' << c;
    os << '\n';
    for (std::size_t a = 0; a < f.dim; ++a) {
      os << "field " << f.names[a] << " = " << join(f.fields[a].components(), poly_str) << '\n';
    }
  } else {
    for (std::size_t i = 0; i < f.dim; ++i)
      for (std::size_t j = i + 1; j < f.dim; ++j) {
        const auto& v = f.brackets[i][j];
        if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
        os << "bracket " << f.names[i] << ' ' << f.names[j] << " = " << join(v, scalar_str) << '\n';
      }
  }
  os << "phi\n";
  for (std::size_t r = 0; r < f.dim; ++r) {
    std::vector<Poly> row;
    for (std::size_t c = 0; c < f.dim; ++c) row.push_back(f.phi(r, c));
    os << "  " << join(row, poly_str) << '\n';
  }
  os << "xi = " << join(f.xi.components(), poly_str) << '\n';
  os << "eta = " << join(f.eta, poly_str) << '\n';
  os << "metric\n";
  for (std::size_t r = 0; r < f.dim; ++r) {
    std::vector<Scalar> row;
    for (std::size_t c = 0; c < f.dim; ++c) row.push_back(f.metric(r, c));
    os << "  " << join(row, scalar_str) << '\n';
  }
  return os.str();
}

std::string emit(const ParacontactData& s) { return emit(to_file(s)); }

}  // namespace pcm::io
