#pragma once

#include <string>
#include <vector>

namespace lpa {

enum class Status { Pass, Fail, Unknown, Skip };

const char* to_string(Status s);

// One checked relation instance.
struct Instance {
  std::string group;    // axiom or identity name
  std::string id;       // instance key, e.g. "v1,e2"
  Status status = Status::Pass;
  std::string witness;  // difference or reason when not a pass
};

struct Report {
  std::string suite;
  std::string subject;
  std::vector<Instance> instances;
  std::vector<std::string> notes;

  std::size_t count(Status s) const;
  // No failures and no undecided instances.
  bool ok() const { return count(Status::Fail) == 0 && count(Status::Unknown) == 0; }
  void add(std::string group, std::string id, Status s, std::string witness = {});
  void merge(const Report& other);
};

// Summary line, then one line per failing, undecided or skipped instance.
std::string to_text(const Report& r);
// One JSON object per instance.
std::string to_jsonl(const Report& r);

}  // namespace lpa
