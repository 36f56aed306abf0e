#pragma once

#include <sys/types.h>

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace indcert {

class ProcessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A child process with piped stdin/stdout/stderr. stderr is collected in
/// the background of every read so the child never blocks on it.
class ChildProcess {
 public:
  using Clock = std::chrono::steady_clock;

  /// Looks `executable` up on PATH when it contains no slash.
  ChildProcess(const std::string& executable, const std::vector<std::string>& args);
  ~ChildProcess();

  ChildProcess(const ChildProcess&) = delete;
  ChildProcess& operator=(const ChildProcess&) = delete;

  /// Throws ProcessError when the child has closed its input.
  void write(std::string_view data);
  void close_stdin();

  enum class ReadStatus { Data, Timeout, Eof };
  /// Appends whatever stdout data arrives before `deadline` to `out`.
  ReadStatus read(std::string& out, Clock::time_point deadline);

  /// Reads the child's stderr until it closes or `deadline` passes.
  void drain_stderr(Clock::time_point deadline);
  const std::string& stderr_text() const { return stderr_; }
  void kill();
  /// Waits for exit; returns the exit status (128 + signal for signals).
  int wait();
  bool running() const { return pid_ > 0; }

 private:
  void close_fd(int& fd);

  pid_t pid_ = -1;
  int in_ = -1;
  int out_ = -1;
  int err_ = -1;
  std::string stderr_;
};

struct CommandResult {
  int exit_code = 0;
  bool timed_out = false;
  std::string out;
  std::string err;
  std::chrono::milliseconds elapsed{0};
};

/// Runs a command to completion with empty input.
CommandResult run_command(const std::vector<std::string>& argv, std::chrono::milliseconds timeout);

}  // namespace indcert
