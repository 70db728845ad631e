#pragma once

#include <mutex>
#include <string>
#include <vector>

namespace weaver {

// Collects warnings and informational notes produced while a run degrades
// around provider failures. Safe to share across worker threads.
class RunLog {
 public:
  void warn(const std::string& message) { push("warning", message); }
  void info(const std::string& message) { push("info", message); }

  std::vector<std::string> warnings() const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::vector<std::string> out;
    for (const auto& e : entries_) {
      if (e.level == "warning") out.push_back(e.message);
    }
    return out;
  }

  std::vector<std::string> messages() const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.level + ": " + e.message);
    return out;
  }

  bool contains(const std::string& needle) const {
    std::lock_guard<std::mutex> lock(mutex_);
    for (const auto& e : entries_) {
      if (e.message.find(needle) != std::string::npos) return true;
    }
    return false;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
  }

 private:
  struct Entry {
    std::string level;
    std::string message;
  };

  void push(const char* level, const std::string& message) {
    std::lock_guard<std::mutex> lock(mutex_);
    entries_.push_back(Entry{level, message});
  }

  mutable std::mutex mutex_;
  std::vector<Entry> entries_;
};

}  // namespace weaver
