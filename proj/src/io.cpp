#include "mstar/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mstar {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string strip(const std::string& line) {
  std::string s = line;
  if (const auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Coord parse_coord(const std::string& field, int line_no) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(field, &used);
  } catch (const std::exception&) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": bad integer '" + field + "'");
  }
  if (used != field.size())
    throw std::runtime_error("line " + std::to_string(line_no) + ": bad integer '" + field + "'");
  if (v < 0)
    throw std::runtime_error("line " + std::to_string(line_no) + ": coordinates must be >= 0");
  return static_cast<Coord>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

void sort_dedup(std::vector<PositionVec>& vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

ordered_json vectors_to_json(const std::vector<PositionVec>& vs) {
  ordered_json arr = ordered_json::array();
  for (const PositionVec& p : vs) arr.push_back(p.coords());
  return arr;
}

std::vector<PositionVec> vectors_from_json(const ordered_json& arr, int dim) {
  std::vector<PositionVec> out;
  for (const auto& item : arr) {
    std::vector<Coord> coords = item.get<std::vector<Coord>>();
    if (static_cast<int>(coords.size()) != dim)
      throw std::runtime_error("trace document: vector of wrong dimension");
    out.emplace_back(std::move(coords));
  }
  return out;
}

}  // namespace

ParsedMoves parse_move_set_text(std::istream& in) {
  ParsedMoves out;
  std::string line;
  int line_no = 0;
  bool have_dim = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip(line);
    if (body.empty()) continue;
    if (!have_dim) {
      if (body.rfind("dim=", 0) != 0)
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": expected header 'dim=<d>'");
      const Coord d = parse_coord(body.substr(4), line_no);
      if (d < 1 || d > 16)
        throw std::runtime_error("line " + std::to_string(line_no) + ": dim must be in 1..16");
      out.dim = static_cast<int>(d);
      have_dim = true;
      continue;
    }
    const std::vector<std::string> fields = split(body, ',');
    if (static_cast<int>(fields.size()) != out.dim)
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(out.dim) + " fields");
    std::vector<Coord> coords;
    coords.reserve(fields.size());
    for (const std::string& f : fields) coords.push_back(parse_coord(strip(f), line_no));
    out.vectors.emplace_back(std::move(coords));
  }
  if (!have_dim) throw std::runtime_error("move set file has no 'dim=<d>' header");
  sort_dedup(out.vectors);
  return out;
}

ParsedMoves parse_move_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open move set file: " + path);
  return parse_move_set_text(in);
}

void write_move_set_text(std::ostream& out, const MoveSet& s) {
  out << "dim=" << s.window().dim() << "\n";
  if (!s.label().empty()) out << "# " << s.label() << "\n";
  for (const PositionVec& p : s.to_vectors()) {
    for (int i = 0; i < p.dim(); ++i) {
      if (i) out << ',';
      out << p[i];
    }
    out << "\n";
  }
}

ParsedMoves parse_inline_moves(const std::string& text) {
  ParsedMoves out;
  if (strip(text).empty()) throw std::runtime_error("empty inline move list");
  if (text.find('(') == std::string::npos) {
    // 1D short form: "4,9"
    out.dim = 1;
    for (const std::string& f : split(text, ','))
      out.vectors.push_back(PositionVec{parse_coord(strip(f), 1)});
  } else {
    for (const std::string& entry : split(text, ';')) {
      std::string t = strip(entry);
      if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw std::runtime_error("bad move tuple '" + entry + "'");
      t = t.substr(1, t.size() - 2);
      std::vector<Coord> coords;
      for (const std::string& f : split(t, ',')) coords.push_back(parse_coord(strip(f), 1));
      if (out.dim == 0)
        out.dim = static_cast<int>(coords.size());
      else if (static_cast<int>(coords.size()) != out.dim)
        throw std::runtime_error("move tuples of mixed dimension");
      out.vectors.emplace_back(std::move(coords));
    }
  }
  sort_dedup(out.vectors);
  return out;
}

std::vector<Coord> parse_coord_list(const std::string& text) {
  std::vector<Coord> out;
  for (const std::string& f : split(text, ',')) out.push_back(parse_coord(strip(f), 1));
  if (out.empty()) throw std::runtime_error("empty coordinate list");
  return out;
}

std::string trace_to_json(const TraceDocument& doc) {
  ordered_json j;
  j["format"] = "mstar-trace";
  j["version"] = 1;
  j["label"] = doc.input_label;
  j["window"] = doc.trace.window.bounds();
  j["iteration_cap"] = doc.trace.iteration_cap;
  if (doc.trace.phi_window)
    j["phi_window"] = *doc.trace.phi_window;
  else
    j["phi_window"] = nullptr;
  j["timing_us"] = doc.timing_us;
  ordered_json stages = ordered_json::array();
  for (const MoveSet& s : doc.trace.stages) stages.push_back(vectors_to_json(s.to_vectors()));
  j["stages"] = std::move(stages);
  ordered_json diffs = ordered_json::array();
  for (const auto& x : doc.trace.diff_sets) diffs.push_back(vectors_to_json(x));
  j["diff_sets"] = std::move(diffs);
  return j.dump(2) + "\n";
}

TraceDocument trace_from_json(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text);
  if (j.value("format", "") != std::string("mstar-trace") || j.value("version", 0) != 1)
    throw std::runtime_error("not a version-1 mstar-trace document");
  Window w(j.at("window").get<std::vector<Coord>>());
  TraceDocument doc{IterationTrace{w, {}, {}, std::nullopt, j.at("iteration_cap").get<int>()},
                    j.at("label").get<std::string>(), j.at("timing_us").get<std::int64_t>()};
  if (!j.at("phi_window").is_null()) doc.trace.phi_window = j.at("phi_window").get<int>();
  const std::string base = doc.input_label.empty() ? "M" : doc.input_label;
  int i = 0;
  for (const auto& stage : j.at("stages"))
    doc.trace.stages.push_back(MoveSet::from_vectors(w, vectors_from_json(stage, w.dim()),
                                                     base + "^" + std::to_string(i++)));
  for (const auto& diff : j.at("diff_sets"))
    doc.trace.diff_sets.push_back(vectors_from_json(diff, w.dim()));
  return doc;
}

}  // namespace mstar
