#pragma once

#include "lcq/abelian_group.hpp"
#include "lcq/error.hpp"
#include "lcq/fano.hpp"
#include "lcq/io.hpp"
#include "lcq/nilpotent.hpp"
#include "lcq/second_quotient.hpp"

#include <algorithm>
#include <filesystem>
#include <future>
#include <optional>
#include <string>
#include <vector>

namespace lcq::catalog {

enum class Kind { Space, Fano };

// A named test space. Fano entries carry no SpaceData: their quotient comes
// from the discriminant argument in lcq::fano.
struct CatalogEntry {
  std::string name;
  Kind kind = Kind::Space;
  std::optional<SpaceData> space;
  std::optional<GroupPresentation> presentation;
  std::optional<AbelianGroup> expected;
  std::string source; // how `expected` was obtained
};

struct EntryResult {
  std::string name;
  std::optional<AbelianGroup> group;
  Exactness exactness = Exactness::Exact;
  std::optional<AbelianGroup> oracle;
  Verdict verdict = Verdict::NotApplicable;
  std::optional<bool> matches_expected;
  std::string error;

  bool passed() const {
    return error.empty() && verdict != Verdict::Disagree &&
           matches_expected.value_or(true);
  }

  friend bool operator==(const EntryResult &, const EntryResult &) = default;
};

inline CatalogEntry entry_from_json(const io::Json &j) {
  CatalogEntry e;
  const io::Json &name = io::detail::field(j, "name", "catalog entry");
  if (!name.is_string())
    throw ParseError("catalog entry: 'name' must be a string");
  e.name = name.get<std::string>();
  const std::string ctx = "catalog entry '" + e.name + "'";
  const std::string kind = j.value("kind", std::string("space"));
  if (kind == "fano") {
    e.kind = Kind::Fano;
  } else if (kind == "space") {
    e.space = io::space_from_json(io::detail::field(j, "space", ctx));
  } else {
    throw ParseError(ctx + ": unknown kind '" + kind + "'");
  }
  if (j.contains("presentation") && !j["presentation"].is_null())
    e.presentation = io::presentation_from_json(j["presentation"]);
  if (j.contains("expected") && !j["expected"].is_null()) {
    if (!j["expected"].is_string())
      throw ParseError(ctx + ": 'expected' must be a group string");
    e.expected = io::parse_group(j["expected"].get<std::string>());
  }
  e.source = j.value("source", std::string());
  return e;
}

inline io::Json to_json(const CatalogEntry &e) {
  io::Json j;
  j["name"] = e.name;
  j["kind"] = e.kind == Kind::Fano ? "fano" : "space";
  if (e.space)
    j["space"] = io::to_json(*e.space);
  j["presentation"] =
      e.presentation ? io::to_json(*e.presentation) : io::Json(nullptr);
  j["expected"] = e.expected ? io::Json(e.expected->to_string())
                             : io::Json(nullptr);
  j["source"] = e.source;
  return j;
}

// All *.json files of a directory, by file name.
inline std::vector<CatalogEntry> load_catalog(const std::string &dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir))
    throw InputError("catalog directory '" + dir + "' not found");
  std::vector<fs::path> files;
  for (const auto &f : fs::directory_iterator(dir))
    if (f.is_regular_file() && f.path().extension() == ".json")
      files.push_back(f.path());
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> out;
  for (const auto &f : files) {
    try {
      out.push_back(entry_from_json(io::parse_json(io::read_file(f.string()))));
    } catch (const ParseError &e) {
      throw ParseError(f.filename().string() + ": " + e.what(), e.line(),
                       e.column());
    }
  }
  return out;
}

inline EntryResult run_entry(const CatalogEntry &e) {
  EntryResult r;
  r.name = e.name;
  try {
    SecondQuotientResult q;
    if (e.kind == Kind::Fano) {
      q = fano::fano_second_quotient();
    } else {
      q = second_lcs_quotient(*e.space);
      if (e.presentation) {
        const CrossValidation cv = cross_validate(*e.space, *e.presentation);
        r.verdict = cv.verdict;
        r.oracle = cv.oracle;
      }
    }
    r.group = q.group;
    r.exactness = q.exactness;
    if (e.expected)
      r.matches_expected = *e.expected == q.group;
  } catch (const std::exception &ex) {
    r.error = ex.what();
  }
  return r;
}

// Results come back in entry order whether or not entries ran concurrently.
inline std::vector<EntryResult> run_catalog(const std::vector<CatalogEntry> &entries,
                                            bool parallel) {
  std::vector<EntryResult> out;
  out.reserve(entries.size());
  if (!parallel) {
    for (const auto &e : entries)
      out.push_back(run_entry(e));
    return out;
  }
  std::vector<std::future<EntryResult>> jobs;
  jobs.reserve(entries.size());
  for (const auto &e : entries)
    jobs.push_back(std::async(std::launch::async, run_entry, std::cref(e)));
  for (auto &j : jobs)
    out.push_back(j.get());
  return out;
}

} // namespace lcq::catalog
