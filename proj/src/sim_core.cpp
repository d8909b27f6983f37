#include "vpon/sim_core.hpp"

#include <cmath>

namespace vpon {

std::uint64_t Engine::schedule(SimTime fire_at, EventKind kind, Handler fn) {
  if (fire_at < now_) throw std::logic_error("schedule: event in the past");
  std::uint64_t seq = next_seq_++;
  heap_.push(Entry{fire_at, seq, kind, std::move(fn)});
  return seq;
}

bool Engine::cancel(std::uint64_t handle) {
  if (handle == 0 || handle >= next_seq_) return false;
  return cancelled_.insert(handle).second;
}

bool Engine::step() {
  while (!heap_.empty()) {
    Entry top = heap_.top();
    heap_.pop();
    if (auto it = cancelled_.find(top.seq); it != cancelled_.end()) {
      cancelled_.erase(it);
      continue;
    }
    now_ = top.at;
    top.fn();
    return true;
  }
  return false;
}

std::uint64_t Engine::run_until(SimTime t_end) {
  if (t_end < now_) throw std::logic_error("run_until: t_end before clock");
  std::uint64_t processed = 0;
  while (!heap_.empty() && heap_.top().at <= t_end) {
    if (step()) ++processed;
  }
  now_ = t_end;
  return processed;
}

std::uint64_t Engine::run() {
  std::uint64_t processed = 0;
  while (step()) ++processed;
  return processed;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}
}  // namespace

RngStream::RngStream(std::uint64_t seed, std::string_view stream_id)
    : gen_(splitmix64(seed ^ fnv1a64(stream_id))) {}

double RngStream::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::exponential(double rate) {
  if (rate <= 0.0) throw std::invalid_argument("exponential: rate must be > 0");
  return -std::log(1.0 - uniform()) / rate;
}

std::vector<SimTime> poisson_arrivals(double rate_per_s, SimTime horizon,
                                      RngStream& stream) {
  if (rate_per_s < 0.0) throw std::invalid_argument("poisson_arrivals: negative rate");
  if (horizon <= 0) throw std::invalid_argument("poisson_arrivals: horizon must be > 0");
  std::vector<SimTime> out;
  if (rate_per_s == 0.0) return out;
  double t_s = 0.0;
  const double horizon_s = static_cast<double>(horizon) / 1e12;
  for (;;) {
    t_s += stream.exponential(rate_per_s);
    if (t_s > horizon_s) break;
    SimTime t = std::llround(t_s * 1e12);
    if (t > horizon) break;
    out.push_back(t);
  }
  return out;
}

}  // namespace vpon
