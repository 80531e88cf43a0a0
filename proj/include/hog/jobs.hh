#ifndef HOG_JOBS_HH
#define HOG_JOBS_HH

#include <hog/store.hh>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace hog
{
    enum class JobState
    {
        queued,
        running,
        done,
        timed_out
    };

    auto job_state_name(JobState state) -> std::string_view;

    using JobClock = std::chrono::steady_clock;

    struct Job
    {
        std::uint64_t serial = 0;
        RecordId graph = 0;
        InvariantId invariant = InvariantId::n;
        Budget budget{};
        JobState state = JobState::queued;
        JobClock::time_point enqueued{};
        std::optional<JobClock::time_point> started;
        CostClass priority = CostClass::poly;
        std::string diagnostic;
    };

    struct JobCounts
    {
        std::size_t queued = 0;
        std::size_t running = 0;
        std::size_t done = 0;
        std::size_t timed_out = 0;
    };

    /// Invariant computations for stored graphs. Polynomial jobs run before exponential
    /// ones, FIFO within a class. At most one queued or running job exists per
    /// (graph, invariant).
    class JobQueue
    {
    public:
        explicit JobQueue(Store & store, Budget default_budget = default_exp_budget);
        ~JobQueue();

        JobQueue(const JobQueue &) = delete;
        JobQueue & operator=(const JobQueue &) = delete;

        /// Enqueue every new record automatically.
        void attach();

        /// One job per registry invariant that is neither computed nor already queued
        /// or running; those values are set to PENDING.
        auto enqueue_all(RecordId graph) -> std::vector<Job>;

        /// Re-enqueues every PENDING value in the store, e.g. after a restart.
        auto enqueue_pending() -> std::size_t;

        /// Claims, runs and completes the highest-priority queued job.
        auto worker_step() -> std::optional<Job>;

        /// The two halves of worker_step. A claim that is never completed models a
        /// crashed worker; see requeue_stale.
        auto claim() -> std::optional<Job>;
        auto execute(Job job) -> Job;

        /// Queues a new attempt at a larger budget. Throws hog::Error (bad_query) unless
        /// the value is UNKNOWN and the budget exceeds the previous attempt's.
        auto retry(RecordId graph, InvariantId invariant, Budget budget) -> Job;

        /// Jobs RUNNING for longer than twice their budget are marked TIMED_OUT and a
        /// fresh job is queued in their place. Returns the number replaced.
        auto requeue_stale(JobClock::time_point now = JobClock::now()) -> std::size_t;

        /// Runs `workers` threads until the queue is empty.
        void drain(int workers = 1);

        /// Background workers that wait for jobs until stop().
        void start(int workers);
        void stop();

        auto counts() const -> JobCounts;
        auto jobs() const -> std::vector<Job>;
        auto find(std::uint64_t serial) const -> std::optional<Job>;
        auto default_budget() const -> Budget { return _default_budget; }

    private:
        using Key = std::pair<RecordId, InvariantId>;

        auto push_locked(RecordId graph, InvariantId invariant, Budget budget) -> Job;
        void complete(const Job & job, const InvariantValue & value);

        Store & _store;
        Budget _default_budget;

        mutable std::mutex _mutex;
        std::condition_variable _wake;
        std::map<std::uint64_t, Job> _jobs;
        std::map<Key, std::uint64_t> _active;
        std::map<Key, Budget> _last_budget;
        std::deque<std::uint64_t> _poly, _exp;
        std::uint64_t _next_serial = 1;

        std::atomic<bool> _stopping{false};
        std::vector<std::thread> _workers;
    };
}

#endif
