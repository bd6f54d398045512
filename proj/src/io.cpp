#include "netdist/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace netdist {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw validation_error("cannot write " + tmp);
    out << content;
    if (!out.flush()) throw validation_error("failed writing " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw validation_error("cannot rename " + tmp + " to " + path + ": " +
                           std::strerror(errno));
  }
}

namespace {

double parse_finite(const std::string& token, const std::string& context) {
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
    if (used != token.size()) throw validation_error("");
    if (!std::isfinite(v)) throw validation_error("");
    return v;
  } catch (const std::exception&) {
    throw validation_error(context + ": '" + token + "' is not a finite real");
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  return fields;
}

std::string strip(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

network parse_network_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw validation_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("weights"))
    throw validation_error("network JSON needs a \"weights\" field");
  const auto& rows = doc["weights"];
  if (!rows.is_array() || rows.empty())
    throw validation_error("\"weights\" must be a nonempty array of rows");
  matrix w(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != w.cols)
      throw dimension_error("\"weights\" rows must all have the same length");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_number()) throw validation_error("weights must be numbers");
      w(i, j) = row[j].get<double>();
    }
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw validation_error("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return make_network(std::move(w), std::move(labels));
}

network parse_network_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (strip(line).empty()) continue;
    std::vector<double> row;
    for (const std::string& field : split(line, ','))
      row.push_back(parse_finite(strip(field), "line " + std::to_string(lineno)));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw validation_error("CSV matrix is empty");
  matrix w(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != w.cols) throw dimension_error("CSV rows have differing lengths");
    for (std::size_t j = 0; j < w.cols; ++j) w(i, j) = rows[i][j];
  }
  return make_network(std::move(w));
}

}  // namespace

network parse_network_text(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_network_json(text);
    break;
  }
  return parse_network_csv(text);
}

network load_network(const std::string& path) { return parse_network_text(read_file(path)); }

std::string network_to_json(const network& x) {
  std::ostringstream out;
  out << "{\n  \"labels\": [";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out << ", ";
    out << nlohmann::json(x.labels[i]).dump();
  }
  out << "],\n  \"weights\": [\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << "    [";
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j) out << ", ";
      out << format_real(x.w(i, j));
    }
    out << (i + 1 < x.size() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

void save_network(const network& x, const std::string& path) {
  write_file_atomic(path, network_to_json(x));
}

network parse_edge_list_text(const std::string& text, double missing) {
  if (!std::isfinite(missing)) throw validation_error("missing-edge fill value must be finite");
  struct edge {
    std::string src, dst;
    double weight;
  };
  std::vector<edge> edges;
  std::vector<std::string> nodes;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (strip(line).empty()) continue;
    const std::vector<std::string> fields = split(line, '\t');
    if (fields.size() != 3)
      throw validation_error("line " + std::to_string(lineno) +
                             ": expected 'src<TAB>dst<TAB>weight'");
    edge e{strip(fields[0]), strip(fields[1]),
           parse_finite(strip(fields[2]), "line " + std::to_string(lineno))};
    nodes.push_back(e.src);
    nodes.push_back(e.dst);
    edges.push_back(std::move(e));
  }
  if (edges.empty()) throw validation_error("edge list is empty");
  std::ranges::sort(nodes);
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i]] = i;
  matrix w(nodes.size(), nodes.size(), missing);
  for (const edge& e : edges) w(index[e.src], index[e.dst]) = e.weight;
  return make_network(std::move(w), std::move(nodes));
}

network load_edge_list(const std::string& path, double missing) {
  return parse_edge_list_text(read_file(path), missing);
}

network load_network_auto(const std::string& path, double missing) {
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".tsv") == 0)
    return load_edge_list(path, missing);
  return load_network(path);
}

std::string distance_matrix_to_csv(const distance_matrix& d) {
  std::ostringstream out;
  for (const std::string& label : d.labels) out << ',' << label;
  out << '\n';
  for (std::size_t i = 0; i < d.labels.size(); ++i) {
    out << d.labels[i];
    for (std::size_t j = 0; j < d.labels.size(); ++j) out << ',' << format_real(d.values(i, j));
    out << '\n';
  }
  return out.str();
}

distance_matrix parse_distance_matrix_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw validation_error("distance matrix CSV is empty");
  std::vector<std::string> header = split(line, ',');
  if (header.size() < 2 || !strip(header[0]).empty())
    throw validation_error("distance matrix CSV must start with an empty header cell");
  std::vector<std::string> labels(header.begin() + 1, header.end());
  for (std::string& l : labels) l = strip(l);
  matrix values(labels.size(), labels.size());
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    if (row >= labels.size()) throw dimension_error("distance matrix CSV has too many rows");
    const std::vector<std::string> fields = split(line, ',');
    if (fields.size() != labels.size() + 1)
      throw dimension_error("distance matrix CSV row width does not match the header");
    if (strip(fields[0]) != labels[row])
      throw validation_error("distance matrix CSV row labels must match the header order");
    for (std::size_t j = 0; j < labels.size(); ++j)
      values(row, j) = parse_finite(strip(fields[j + 1]), "row " + std::to_string(row + 1));
    ++row;
  }
  if (row != labels.size()) throw dimension_error("distance matrix CSV has too few rows");
  distance_matrix d{std::move(labels), std::move(values)};
  validate_distance_matrix(d);
  return d;
}

distance_matrix load_distance_matrix(const std::string& path) {
  return parse_distance_matrix_csv(read_file(path));
}

std::string dendrogram_to_json(const dendrogram& tree) {
  std::ostringstream out;
  out << "{\n  \"labels\": [";
  for (std::size_t i = 0; i < tree.labels.size(); ++i) {
    if (i) out << ", ";
    out << nlohmann::json(tree.labels[i]).dump();
  }
  out << "],\n  \"merges\": [\n";
  for (std::size_t i = 0; i < tree.merges.size(); ++i) {
    const auto& m = tree.merges[i];
    out << "    [" << m.a << ", " << m.b << ", " << format_real(m.height) << ']'
        << (i + 1 < tree.merges.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

namespace {

struct newick_writer {
  const dendrogram& tree;
  std::size_t leaf_count;

  double height_of(std::size_t id) const {
    return id < leaf_count ? 0.0 : tree.merges[id - leaf_count].height;
  }

  void emit(std::ostream& out, std::size_t id, double parent_height) const {
    if (id < leaf_count) {
      out << tree.labels[id];
    } else {
      const auto& m = tree.merges[id - leaf_count];
      out << '(';
      emit(out, m.a, m.height);
      out << ',';
      emit(out, m.b, m.height);
      out << ')';
    }
    out << ':' << format_real(parent_height - height_of(id));
  }
};

}  // namespace

std::string dendrogram_to_newick(const dendrogram& tree) {
  if (tree.merges.empty()) throw size_error("dendrogram has no merges");
  const newick_writer writer{tree, tree.labels.size()};
  std::ostringstream out;
  const auto& m = tree.merges.back();
  out << '(';
  writer.emit(out, m.a, m.height);
  out << ',';
  writer.emit(out, m.b, m.height);
  out << ");\n";
  return out.str();
}

}  // namespace netdist
