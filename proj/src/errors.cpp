#include "zolo/errors.hpp"

#include <iostream>
#include <mutex>

namespace zolo {

namespace {
std::mutex sink_mutex;
WarningSink& sink() {
  static WarningSink s;
  return s;
}
}  // namespace

void set_warning_sink(WarningSink s) {
  std::lock_guard<std::mutex> lock(sink_mutex);
  sink() = std::move(s);
}

void warn(const std::string& msg) {
  std::lock_guard<std::mutex> lock(sink_mutex);
  if (sink())
    sink()(msg);
  else
    std::clog << "zolo: warning: " << msg << '\n';
}

}  // namespace zolo
