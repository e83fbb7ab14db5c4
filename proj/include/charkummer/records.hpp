#ifndef CHARKUMMER_RECORDS_HPP
#define CHARKUMMER_RECORDS_HPP

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace ck {

/// One expected-vs-computed assertion row.  The provenance tag separates
/// values quoted from the source article (PAPER) from values this toolkit
/// derives independently (DERIVED).
struct AssertionRecord {
  std::string id;
  bool pass = false;
  std::string expected;
  std::string got;
  std::string provenance = "DERIVED";  // "PAPER" or "DERIVED"
};

inline AssertionRecord make_record(std::string id, std::string expected,
                                   std::string got, std::string provenance) {
  AssertionRecord r;
  r.id = std::move(id);
  r.pass = (expected == got);
  r.expected = std::move(expected);
  r.got = std::move(got);
  r.provenance = std::move(provenance);
  return r;
}

inline std::string format_record(const AssertionRecord& r) {
  std::ostringstream os;
  os << "assert id=" << r.id << " status=" << (r.pass ? "pass" : "fail")
     << " expected=" << r.expected << " got=" << r.got
     << " provenance=" << r.provenance;
  return os.str();
}

inline bool all_pass(const std::vector<AssertionRecord>& rs) {
  return std::all_of(rs.begin(), rs.end(),
                     [](const AssertionRecord& r) { return r.pass; });
}

/// records mode output is sorted by assertion id for byte-stable emission
inline std::vector<AssertionRecord> sorted_records(std::vector<AssertionRecord> rs) {
  std::stable_sort(rs.begin(), rs.end(),
                   [](const AssertionRecord& a, const AssertionRecord& b) {
                     return a.id < b.id;
                   });
  return rs;
}

}  // namespace ck

#endif
