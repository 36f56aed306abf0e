#include "indcert/process.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <mutex>

extern char** environ;

namespace indcert {

namespace {

std::string errno_text(const std::string& what) { return what + ": " + std::strerror(errno); }

void ignore_sigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

int remaining_ms(ChildProcess::Clock::time_point deadline) {
  auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - ChildProcess::Clock::now());
  if (left.count() <= 0) return 0;
  return static_cast<int>(std::min<long long>(left.count(), 1 << 30));
}

}  // namespace

ChildProcess::ChildProcess(const std::string& executable, const std::vector<std::string>& args) {
  ignore_sigpipe();
  int in[2], out[2], err[2];
  if (::pipe2(in, O_CLOEXEC) != 0) throw ProcessError(errno_text("pipe"));
  if (::pipe2(out, O_CLOEXEC) != 0) throw ProcessError(errno_text("pipe"));
  if (::pipe2(err, O_CLOEXEC) != 0) throw ProcessError(errno_text("pipe"));

  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_adddup2(&actions, in[0], 0);
  posix_spawn_file_actions_adddup2(&actions, out[1], 1);
  posix_spawn_file_actions_adddup2(&actions, err[1], 2);

  std::vector<std::string> argv_storage;
  argv_storage.push_back(executable);
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  argv.push_back(nullptr);

  int rc = ::posix_spawnp(&pid_, executable.c_str(), &actions, nullptr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  ::close(in[0]);
  ::close(out[1]);
  ::close(err[1]);
  in_ = in[1];
  out_ = out[0];
  err_ = err[0];
  if (rc != 0) {
    pid_ = -1;
    close_fd(in_);
    close_fd(out_);
    close_fd(err_);
    throw ProcessError("cannot start '" + executable + "': " + std::strerror(rc));
  }
}

ChildProcess::~ChildProcess() {
  close_fd(in_);
  if (pid_ > 0) {
    kill();
    wait();
  }
  close_fd(out_);
  close_fd(err_);
}

void ChildProcess::close_fd(int& fd) {
  if (fd >= 0) ::close(fd);
  fd = -1;
}

void ChildProcess::write(std::string_view data) {
  if (in_ < 0) throw ProcessError("child input already closed");
  while (!data.empty()) {
    ssize_t n = ::write(in_, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ProcessError(errno_text("write to child"));
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

void ChildProcess::close_stdin() { close_fd(in_); }

ChildProcess::ReadStatus ChildProcess::read(std::string& out, Clock::time_point deadline) {
  char buf[65536];
  for (;;) {
    pollfd fds[2];
    nfds_t n = 0;
    if (out_ >= 0) fds[n++] = {out_, POLLIN, 0};
    if (err_ >= 0) fds[n++] = {err_, POLLIN, 0};
    if (out_ < 0) return ReadStatus::Eof;
    int rc = ::poll(fds, n, remaining_ms(deadline));
    if (rc < 0) {
      if (errno == EINTR) continue;
      throw ProcessError(errno_text("poll"));
    }
    if (rc == 0) return ReadStatus::Timeout;
    bool got_data = false;
    for (nfds_t i = 0; i < n; ++i) {
      if (!(fds[i].revents & (POLLIN | POLLHUP | POLLERR))) continue;
      ssize_t k = ::read(fds[i].fd, buf, sizeof buf);
      if (k < 0 && errno == EINTR) continue;
      bool is_out = fds[i].fd == out_;
      if (k <= 0) {
        close_fd(is_out ? out_ : err_);
        if (is_out) return got_data ? ReadStatus::Data : ReadStatus::Eof;
        continue;
      }
      if (is_out) {
        out.append(buf, static_cast<std::size_t>(k));
        got_data = true;
      } else if (stderr_.size() < (1u << 20)) {
        stderr_.append(buf, static_cast<std::size_t>(k));
      }
    }
    if (got_data) return ReadStatus::Data;
  }
}

void ChildProcess::drain_stderr(Clock::time_point deadline) {
  char buf[4096];
  while (err_ >= 0) {
    pollfd fd{err_, POLLIN, 0};
    int rc = ::poll(&fd, 1, remaining_ms(deadline));
    if (rc < 0 && errno == EINTR) continue;
    if (rc <= 0) return;
    ssize_t k = ::read(err_, buf, sizeof buf);
    if (k < 0 && errno == EINTR) continue;
    if (k <= 0) {
      close_fd(err_);
      return;
    }
    if (stderr_.size() < (1u << 20)) stderr_.append(buf, static_cast<std::size_t>(k));
  }
}

void ChildProcess::kill() {
  if (pid_ > 0) ::kill(pid_, SIGKILL);
}

int ChildProcess::wait() {
  if (pid_ <= 0) return -1;
  int status = 0;
  while (::waitpid(pid_, &status, 0) < 0) {
    if (errno != EINTR) {
      pid_ = -1;
      return -1;
    }
  }
  pid_ = -1;
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  if (WIFSIGNALED(status)) return 128 + WTERMSIG(status);
  return -1;
}

CommandResult run_command(const std::vector<std::string>& argv, std::chrono::milliseconds timeout) {
  if (argv.empty()) throw ProcessError("empty command");
  auto start = ChildProcess::Clock::now();
  auto deadline = start + timeout;
  CommandResult r;
  ChildProcess child(argv[0], {argv.begin() + 1, argv.end()});
  child.close_stdin();
  for (;;) {
    auto st = child.read(r.out, deadline);
    if (st == ChildProcess::ReadStatus::Eof) break;
    if (st == ChildProcess::ReadStatus::Timeout) {
      r.timed_out = true;
      child.kill();
      break;
    }
  }
  if (!r.timed_out) child.drain_stderr(deadline);
  r.exit_code = child.wait();
  r.err = child.stderr_text();
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(ChildProcess::Clock::now() - start);
  return r;
}

}  // namespace indcert
