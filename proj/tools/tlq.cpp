// tlq: command-line frontend for the diagram and representation engines.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <future>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "tlq/errors.hpp"
#include "tlq/functor.hpp"
#include "tlq/serialize.hpp"

namespace {

using namespace tlq;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotIso = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Left-aligned columns separated by two spaces; trailing spaces stripped.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::vector<std::string> report_row(const FunctorReport& r) {
  return {r.source.to_string(),
          r.target.to_string(),
          r.mode.to_string(),
          std::to_string(r.dim_diagram_side),
          std::to_string(r.dim_rep_side),
          std::to_string(r.matrix_rank),
          r.iso ? "iso" : "not-iso"};
}

const std::vector<std::string> kReportHeader = {"source", "target", "mode", "diagram", "rep", "rank", "verdict"};

struct Output {
  std::string text;
  int code = kExitOk;
};

Output cmd_bracket(const std::string& path, const Field& field, bool json, bool normalize) {
  const GeneratorWord word = GeneratorWord::parse(read_file(path));
  const Scalar value = bracket(word, field);
  const int w = writhe(word);
  // (-a^3)^{-w} <D>
  const Scalar normalized = (w % 2 == 0 ? field.one() : -field.one()) * field.a_pow(-3 * w) * value;
  if (json) {
    Json j = {{"mode", field.to_string()}, {"crossings", word.crossings()}, {"writhe", w}, {"bracket", value.to_string()}};
    if (normalize) j["normalized"] = normalized.to_string();
    return {j.dump(2) + "\n"};
  }
  return {(normalize ? normalized : value).to_string() + "\n"};
}

Output cmd_jw(int k, const Field& field, bool json) {
  if (k < 0) throw InvalidArgument("k must be non-negative");
  const TLMorphism& f = jones_wenzl(k, field);
  if (json) {
    Json j = {{"k", k}, {"mode", field.to_string()}};
    j["terms"] = to_json(f)["terms"];
    return {j.dump(2) + "\n"};
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& [d, c] : f.terms()) rows.push_back({d.to_string(), c.to_string()});
  return {render_table(rows)};
}

Output emit_reports(const std::vector<FunctorReport>& reports, bool json) {
  const bool all_iso = std::all_of(reports.begin(), reports.end(), [](const FunctorReport& r) { return r.iso; });
  Output out;
  out.code = all_iso ? kExitOk : kExitNotIso;
  if (json) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out.text = Json({{"reports", arr}, {"all_iso", all_iso}}).dump(2) + "\n";
  } else {
    std::vector<std::vector<std::string>> rows{kReportHeader};
    for (const auto& r : reports) rows.push_back(report_row(r));
    out.text = render_table(rows);
  }
  return out;
}

Output cmd_homdim(const std::string& s, const std::string& t, const Field& field, bool json) {
  return emit_reports({verify_equivalence(ObjectSeq::parse(s), ObjectSeq::parse(t), field)}, json);
}

struct BatchEntry {
  ObjectSeq source, target;
  Field field = Field::generic();
};

std::vector<BatchEntry> parse_batch(const std::string& text, const Field& default_field) {
  std::vector<BatchEntry> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    std::vector<std::string> parts;
    std::istringstream fields(line);
    std::string part;
    while (std::getline(fields, part, ';')) parts.push_back(trim(part));
    if (parts.size() < 2 || parts.size() > 3) throw ParseError("expected 's ; t ; mode'", lineno);
    try {
      BatchEntry e{ObjectSeq::parse(parts[0]), ObjectSeq::parse(parts[1]),
                   parts.size() == 3 && !parts[2].empty() ? Field::parse(parts[2]) : default_field};
      e.source.validate(e.field);
      e.target.validate(e.field);
      out.push_back(std::move(e));
    } catch (const ParseError& err) {
      throw ParseError(err.what(), lineno);
    } catch (const InvalidArgument& err) {
      throw ParseError(err.what(), lineno);
    }
  }
  return out;
}

std::vector<FunctorReport> run_batch(const std::vector<BatchEntry>& entries) {
  std::vector<FunctorReport> reports(entries.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        reports[i] = verify_equivalence(entries[i].source, entries[i].target, entries[i].field);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min(std::thread::hardware_concurrency(), static_cast<unsigned>(entries.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return reports;
}

// A Gram file is the JSON written by `gram`. Every entry and the rank are
// recomputed; any disagreement is a verification failure.
Output check_gram_file(const std::string& path, bool json) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("gram file: ") + e.what());
  }
  for (const char* key : {"source", "target", "mode", "matrix", "rank"}) {
    if (!j.contains(key)) throw ParseError(std::string("gram file: missing key '") + key + "'");
  }
  const Field field = Field::parse(j["mode"].get<std::string>());
  const ObjectSeq s = ObjectSeq::parse(j["source"].get<std::string>());
  const ObjectSeq t = ObjectSeq::parse(j["target"].get<std::string>());
  const Matrix claimed = matrix_from_json(j["matrix"], field);
  const Matrix actual = gram_matrix(s, t, field);
  const bool entries_ok = claimed == actual;
  const bool rank_ok = j["rank"].get<int>() == rank(actual);
  const bool ok = entries_ok && rank_ok;
  Output out;
  out.code = ok ? kExitOk : kExitNotIso;
  std::string detail = ok ? "consistent" : !entries_ok ? "entries differ from recomputation" : "rank differs from recomputation";
  if (json) {
    out.text = Json({{"source", s.to_string()}, {"target", t.to_string()}, {"mode", field.to_string()},
                     {"gram_check", ok ? "pass" : "fail"}, {"detail", detail}})
                   .dump(2) +
               "\n";
  } else {
    out.text = "gram " + s.to_string() + " " + t.to_string() + " " + field.to_string() + ": " +
               (ok ? "pass" : "fail") + " (" + detail + ")\n";
  }
  return out;
}

Output cmd_gram(const std::string& s_text, const std::string& t_text, const Field& field, bool json) {
  const ObjectSeq s = ObjectSeq::parse(s_text);
  const ObjectSeq t = ObjectSeq::parse(t_text);
  const Matrix g = gram_matrix(s, t, field);
  const int rk = rank(g);
  if (json) {
    Json rows = Json::array();
    for (const auto& d : good_type_diagrams(s, t)) rows.push_back(d.export_matching());
    Json cols = Json::array();
    for (const auto& d : good_type_diagrams(t, s)) cols.push_back(d.export_matching());
    return {Json({{"source", s.to_string()}, {"target", t.to_string()}, {"mode", field.to_string()},
                  {"row_basis", rows}, {"column_basis", cols}, {"matrix", to_json(g)}, {"rank", rk}})
                .dump(2) +
            "\n"};
  }
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i < g.rows(); ++i) {
    std::vector<std::string> row;
    for (int j = 0; j < g.cols(); ++j) row.push_back(g(i, j).to_string());
    rows.push_back(row);
  }
  return {render_table(rows) + "rank " + std::to_string(rk) + "\n"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley-Lieb diagrams and U_q(sl2) representations"};
  app.require_subcommand(1);
  std::string mode = "generic";
  std::string format = "text";
  std::string out_path;
  app.add_option("--mode", mode, "generic or root:<r>")->capture_default_str();
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  auto* bracket_cmd = app.add_subcommand("bracket", "Kauffman bracket of a closed generator word");
  std::string word_file;
  bool normalize = false;
  bracket_cmd->add_option("word_file", word_file)->required();
  bracket_cmd->add_flag("--normalize", normalize, "multiply by (-a^3)^-writhe");

  auto* jw_cmd = app.add_subcommand("jw", "Jones-Wenzl projector coefficients");
  int jw_k = 0;
  jw_cmd->add_option("k", jw_k)->required();

  auto* homdim_cmd = app.add_subcommand("homdim", "hom dimensions on both sides and the verdict");
  std::string hs, ht;
  homdim_cmd->add_option("source", hs)->required();
  homdim_cmd->add_option("target", ht)->required();

  auto* verify_cmd = app.add_subcommand("verify", "verify a batch of (s ; t ; mode) lines");
  std::string batch_file, gram_file;
  verify_cmd->add_option("batch_file", batch_file);
  verify_cmd->add_option("--gram", gram_file, "check a Gram matrix file written by `gram`");

  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of the trace pairing");
  std::string gs, gt;
  gram_cmd->add_option("source", gs)->required();
  gram_cmd->add_option("target", gt)->required();

  for (auto* sub : {bracket_cmd, jw_cmd, homdim_cmd, verify_cmd, gram_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Output result;
  try {
    const Field field = Field::parse(mode);
    const bool json = format == "json";
    if (*bracket_cmd) {
      result = cmd_bracket(word_file, field, json, normalize);
    } else if (*jw_cmd) {
      result = cmd_jw(jw_k, field, json);
    } else if (*homdim_cmd) {
      result = cmd_homdim(hs, ht, field, json);
    } else if (*verify_cmd) {
      if (gram_file.empty() == batch_file.empty()) throw InvalidArgument("verify needs exactly one of a batch file or --gram");
      result = gram_file.empty() ? emit_reports(run_batch(parse_batch(read_file(batch_file), field)), json)
                                 : check_gram_file(gram_file, json);
    } else if (*gram_cmd) {
      result = cmd_gram(gs, gt, field, json);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (out_path.empty()) {
    std::cout << result.text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    out << result.text;
  }
  return result.code;
}
