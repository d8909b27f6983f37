#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace vpon {

// Integer picosecond clock. Every duration in the model (327.68 ns frame
// airtime, 100 ns burst guard, 4.5 us/km propagation, 125 us grant cycles,
// 0.25/0.5 ms slots) is an exact integer in these units, so recurring
// schedules never drift.
using SimTime = std::int64_t;

inline constexpr SimTime kPicosecond = 1;
inline constexpr SimTime kNanosecond = 1'000;
inline constexpr SimTime kMicrosecond = 1'000'000;
inline constexpr SimTime kMillisecond = 1'000'000'000;
inline constexpr SimTime kSecond = 1'000'000'000'000;

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

enum class EventKind : std::uint8_t {
  SlotBoundary,
  GrantCycleBoundary,
  FrameArrival,
  ControlMessage,
  TrafficArrival,
  ProcessingComplete,
};

// Single-run event queue: total order by (fire_at, insertion seq), FIFO among
// equal timestamps. Strictly single-threaded.
class Engine {
 public:
  using Handler = std::function<void()>;

  // Enqueues an event; fire_at must not precede the clock. Returns a handle
  // usable with cancel().
  std::uint64_t schedule(SimTime fire_at, EventKind kind, Handler fn);
  bool cancel(std::uint64_t handle);

  // Processes every event with fire_at <= t_end, then sets the clock to
  // t_end. Returns the number of events processed.
  std::uint64_t run_until(SimTime t_end);
  // Processes events until the queue is empty.
  std::uint64_t run();

  SimTime now() const { return now_; }
  std::size_t pending() const { return heap_.size() - cancelled_.size(); }

 private:
  struct Entry {
    SimTime at;
    std::uint64_t seq;
    EventKind kind;
    Handler fn;
  };
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.at != b.at) return a.at > b.at;
      return a.seq > b.seq;
    }
  };

  bool step();

  std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
  std::unordered_set<std::uint64_t> cancelled_;
  SimTime now_ = 0;
  std::uint64_t next_seq_ = 1;
};

std::uint64_t fnv1a64(std::string_view s);

// Deterministic named random stream: identical (seed, stream_id) pairs give
// identical draw sequences on any platform. One stream per stochastic source
// keeps sources independent under parameter changes.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::string_view stream_id);

  std::uint64_t bits() { return gen_(); }
  double uniform();                  // [0, 1)
  double exponential(double rate);   // mean 1/rate

 private:
  std::mt19937_64 gen_;
};

// Sorted arrival instants of a Poisson process over (0, horizon]. rate is in
// arrivals per second; zero rate yields an empty list, negative is rejected.
std::vector<SimTime> poisson_arrivals(double rate_per_s, SimTime horizon,
                                      RngStream& stream);

}  // namespace vpon
