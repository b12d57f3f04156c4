#include "lpa/report.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

namespace lpa {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Unknown: return "unknown";
    case Status::Skip: return "skip";
  }
  return "?";
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(),
                                                [s](const Instance& i) { return i.status == s; }));
}

void Report::add(std::string group, std::string id, Status s, std::string witness) {
  instances.push_back({std::move(group), std::move(id), s, std::move(witness)});
}

void Report::merge(const Report& other) {
  instances.insert(instances.end(), other.instances.begin(), other.instances.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << r.suite << " on " << r.subject << ": " << r.count(Status::Pass) << " pass, "
      << r.count(Status::Fail) << " fail, " << r.count(Status::Unknown) << " unknown, "
      << r.count(Status::Skip) << " skip\n";
  for (const auto& n : r.notes) out << "  note: " << n << "\n";
  for (const auto& i : r.instances) {
    if (i.status == Status::Pass) continue;
    out << "  " << to_string(i.status) << " " << i.group << " " << i.id;
    if (!i.witness.empty()) out << ": " << i.witness;
    out << "\n";
  }
  return out.str();
}

std::string to_jsonl(const Report& r) {
  std::string out;
  for (const auto& i : r.instances) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["subject"] = r.subject;
    j["group"] = i.group;
    j["instance"] = i.id;
    j["status"] = to_string(i.status);
    j["witness"] = i.witness;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace lpa
