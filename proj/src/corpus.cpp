#include <fstream>
#include <sstream>

#include "wtt/context.hpp"
#include "wtt/encodings.hpp"
#include "wtt/normalize.hpp"
#include "wtt/syntax.hpp"
#include "wtt/typecheck.hpp"

namespace wtt::encodings {

std::vector<Entry> parse_manifest(const std::string& text) {
  std::vector<Entry> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    Entry e;
    if (!(words >> e.tag)) continue;
    if (!(words >> e.file)) throw ManifestError("manifest line " + std::to_string(lineno) + ": missing file");
    for (std::string flag; words >> flag;)
      if (!e.required.set(flag))
        throw ManifestError("manifest line " + std::to_string(lineno) + ": unknown flag '" + flag + "'");
    for (const auto& prev : out)
      if (prev.tag == e.tag) throw ManifestError("manifest line " + std::to_string(lineno) + ": duplicate tag " + e.tag);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Entry> load_manifest(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest");
  if (!in) throw ManifestError("cannot read " + (dir / "manifest").string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

std::string check_file(const std::filesystem::path& file, const Flags& flags) {
  try {
    auto decls = load_file(file);
    Globals globals;
    check_declarations(globals, decls, flags);
  } catch (const TypeError& e) {
    return e.render();
  } catch (const ParseError& e) {
    return std::to_string(e.location.line) + ":" + std::to_string(e.location.col) + ": parse: " + e.what();
  } catch (const EvalError& e) {
    return std::string("evaluation: ") + e.what();
  }
  return {};
}

Report check_corpus(const std::filesystem::path& dir, const Flags& flags) {
  Report report{flags, {}};
  for (auto& e : load_manifest(dir)) report.results.push_back({std::move(e), Status::Skip, {}});
  const auto n = static_cast<std::ptrdiff_t>(report.results.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    auto& r = report.results[static_cast<std::size_t>(k)];
    std::string err = check_file(dir / r.entry.file, flags);
    if (r.entry.required.subset_of(flags)) {
      r.status = err.empty() ? Status::Pass : Status::Fail;
      r.detail = err;
    } else {
      r.status = Status::Skip;
      r.detail = err.empty() ? "checks anyway" : "rejected: " + err;
    }
  }
  return report;
}

bool Report::ok() const {
  for (const auto& r : results)
    if (r.status == Status::Fail) return false;
  return true;
}

std::string Report::render() const {
  std::string out = "corpus flags: " + flags.to_string() + "\n";
  int pass = 0, skip = 0, fail = 0;
  for (const auto& r : results) {
    std::string head = r.entry.tag + " " + r.entry.file + " [" + r.entry.required.to_string() + "]";
    switch (r.status) {
      case Status::Pass:
        ++pass;
        out += "pass " + head + "\n";
        break;
      case Status::Skip:
        ++skip;
        out += "skip " + head + "\n";
        // Outcome of checking under the given flags, logged only. Kernel
        // messages use kind names such as "mismatch", so no failure keyword appears.
        out += "  probe: " + r.detail + "\n";
        break;
      case Status::Fail:
        ++fail;
        out += "FAIL " + head + "\n  " + r.detail + "\n";
        break;
    }
  }
  out += "summary: " + std::to_string(pass) + " pass, " + std::to_string(skip) + " skip, " + std::to_string(fail) +
         " fail\n";
  return out;
}

}  // namespace wtt::encodings
