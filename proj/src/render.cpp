#include "cgseries/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cgs {

namespace {

std::string rational_latex(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  std::string s = r < 0 ? "-" : "";
  return s + "\\frac{" + mpz_class(abs(r.get_num())).get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string render_table(const std::vector<std::vector<std::string>>& cells, const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& col_labels) {
  std::vector<std::vector<std::string>> rows;
  const bool lr = !row_labels.empty(), lc = !col_labels.empty();
  if (lc) {
    std::vector<std::string> head;
    if (lr) head.push_back("");
    head.insert(head.end(), col_labels.begin(), col_labels.end());
    rows.push_back(head);
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::vector<std::string> r;
    if (lr) r.push_back(row_labels.at(i));
    r.insert(r.end(), cells[i].begin(), cells[i].end());
    rows.push_back(r);
  }
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (width.size() <= j) width.push_back(0);
      width[j] = std::max(width[j], r[j].size());
    }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) line += "  ";
      line += r[j] + std::string(width[j] - r[j].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  return os.str();
}

template <class T>
std::string render_any(const Matrix<T>& m, Format f, const std::vector<std::string>& rl,
                       const std::vector<std::string>& cl) {
  if (f == Format::Json) return to_json(m).dump(1) + "\n";
  std::vector<std::vector<std::string>> cells(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) cells[i].push_back(render_value(m(i, j), f));
  if (f == Format::Text) return render_table(cells, rl, cl);
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    os << "  ";
    for (std::size_t j = 0; j < cells[i].size(); ++j) os << (j ? " & " : "") << cells[i][j];
    os << (i + 1 < cells.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{pmatrix}\n";
  return os.str();
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "latex") return Format::Latex;
  throw std::invalid_argument("unknown format '" + text + "'");
}

std::string cyclo_latex(const Cyclo& c) {
  if (c.is_rational()) return rational_latex(c.rational_value());
  std::string out;
  for (const auto& [k, r] : c.terms()) {
    std::string term;
    const Rational mag = abs(r);
    if (k == 0) {
      term = rational_latex(mag);
    } else {
      if (mag != 1) term = rational_latex(mag) + " ";
      term += "\\zeta_{" + std::to_string(c.conductor()) + "}";
      if (k != 1) term += "^{" + std::to_string(k) + "}";
    }
    if (out.empty()) out = (r < 0 ? "-" : "") + term;
    else out += (r < 0 ? " - " : " + ") + term;
  }
  return out;
}

std::string render_value(const Cyclo& c, Format f) { return f == Format::Latex ? cyclo_latex(c) : c.to_string(); }
std::string render_value(const RatQ& r, Format f) { return f == Format::Latex ? r.to_latex() : r.to_string(); }
std::string render_value(const QPoly& p, Format f) { return f == Format::Latex ? p.to_latex() : p.to_string(); }

Json to_json(const CycloMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_string());
    rows.push_back(r);
  }
  return rows;
}

Json to_json(const SeriesMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).to_string());
    rows.push_back(r);
  }
  return rows;
}

std::string render_matrix(const CycloMatrix& m, Format f, const std::vector<std::string>& rl,
                          const std::vector<std::string>& cl) {
  return render_any(m, f, rl, cl);
}

std::string render_matrix(const SeriesMatrix& m, Format f, const std::vector<std::string>& rl,
                          const std::vector<std::string>& cl) {
  return render_any(m, f, rl, cl);
}

Json check_to_json(const IdentityCheck& c) {
  Json j;
  j["identity"] = c.identity;
  j["pass"] = c.pass;
  if (c.witness.first >= 0) j["witness"] = {c.witness.first, c.witness.second};
  else j["witness"] = nullptr;
  return j;
}

std::string render_checks(const std::vector<IdentityCheck>& checks, Format f) {
  if (f == Format::Json) {
    Json arr = Json::array();
    for (const auto& c : checks) arr.push_back(check_to_json(c));
    return arr.dump(1) + "\n";
  }
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.identity << ": " << (c.pass ? "PASS" : "FAIL");
    if (!c.pass && c.witness.first >= 0) os << " at (" << c.witness.first << ", " << c.witness.second << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace cgs
