#include <hog/error.hh>
#include <hog/jobs.hh>

namespace hog
{
    auto job_state_name(JobState state) -> std::string_view
    {
        switch (state) {
        case JobState::queued: return "QUEUED";
        case JobState::running: return "RUNNING";
        case JobState::done: return "DONE";
        case JobState::timed_out: return "TIMED_OUT";
        }
        return "UNKNOWN";
    }

    JobQueue::JobQueue(Store & store, Budget default_budget) : _store(store), _default_budget(default_budget) {}

    JobQueue::~JobQueue()
    {
        stop();
        _store.set_insert_listener({});
    }

    void JobQueue::attach()
    {
        _store.set_insert_listener([this](RecordId id) { enqueue_all(id); });
    }

    auto JobQueue::push_locked(RecordId graph, InvariantId invariant, Budget budget) -> Job
    {
        Job job;
        job.serial = _next_serial++;
        job.graph = graph;
        job.invariant = invariant;
        job.budget = budget;
        job.enqueued = JobClock::now();
        job.priority = invariant_info(invariant).cost;
        _jobs.emplace(job.serial, job);
        _active[{graph, invariant}] = job.serial;
        _last_budget[{graph, invariant}] = budget;
        (job.priority == CostClass::poly ? _poly : _exp).push_back(job.serial);
        _wake.notify_one();
        return job;
    }

    auto JobQueue::enqueue_all(RecordId graph) -> std::vector<Job>
    {
        auto record = _store.get(graph);
        if (! record)
            throw Error{ErrorCode::not_found, "no graph with id " + std::to_string(graph)};

        std::vector<Job> created;
        std::vector<InvariantId> to_reset;
        {
            std::lock_guard lock{_mutex};
            for (const auto & info : invariant_registry()) {
                if (record->value(info.id).computed() || _active.contains({graph, info.id}))
                    continue;
                created.push_back(push_locked(graph, info.id, _default_budget));
                to_reset.push_back(info.id);
            }
        }
        for (auto id : to_reset)
            _store.set_invariant(graph, id, InvariantValue::pending());
        return created;
    }

    auto JobQueue::enqueue_pending() -> std::size_t
    {
        std::size_t count = 0;
        for (const auto & record : _store.snapshot()) {
            std::lock_guard lock{_mutex};
            for (const auto & info : invariant_registry())
                if (record.value(info.id).status() == ValueStatus::pending && ! _active.contains({record.id, info.id})) {
                    push_locked(record.id, info.id, _default_budget);
                    ++count;
                }
        }
        return count;
    }

    auto JobQueue::claim() -> std::optional<Job>
    {
        std::lock_guard lock{_mutex};
        auto & source = ! _poly.empty() ? _poly : _exp;
        if (source.empty())
            return std::nullopt;
        auto serial = source.front();
        source.pop_front();
        auto & job = _jobs.at(serial);
        job.state = JobState::running;
        job.started = JobClock::now();
        return job;
    }

    auto JobQueue::execute(Job job) -> Job
    {
        InvariantValue value = InvariantValue::unknown();
        try {
            auto record = _store.get(job.graph);
            if (! record)
                throw Error{ErrorCode::not_found, "graph vanished"};
            value = compute(record->graph, job.invariant, job.budget);
        }
        catch (const std::exception & e) {
            job.diagnostic = e.what();
            value = InvariantValue::unknown();
        }
        catch (...) {
            job.diagnostic = "solver failed";
            value = InvariantValue::unknown();
        }
        job.state = value.computed() ? JobState::done : JobState::timed_out;
        complete(job, value);
        return job;
    }

    void JobQueue::complete(const Job & job, const InvariantValue & value)
    {
        {
            std::lock_guard lock{_mutex};
            auto it = _jobs.find(job.serial);
            // Replaced by the watchdog in the meantime: the later attempt owns the value.
            if (it == _jobs.end() || it->second.state != JobState::running)
                return;
            it->second.state = job.state;
            it->second.diagnostic = job.diagnostic;
            auto active = _active.find({job.graph, job.invariant});
            if (active != _active.end() && active->second == job.serial)
                _active.erase(active);
        }
        try {
            _store.set_invariant(job.graph, job.invariant, value);
        }
        catch (const Error &) {
        }
    }

    auto JobQueue::worker_step() -> std::optional<Job>
    {
        auto job = claim();
        if (! job)
            return std::nullopt;
        return execute(*job);
    }

    auto JobQueue::retry(RecordId graph, InvariantId invariant, Budget budget) -> Job
    {
        auto record = _store.get(graph);
        if (! record)
            throw Error{ErrorCode::not_found, "no graph with id " + std::to_string(graph)};
        if (record->value(invariant).status() != ValueStatus::unknown)
            throw Error{ErrorCode::bad_query, "retry needs an UNKNOWN value; " + std::string{short_name(invariant)}
                    + " is " + std::string{value_status_name(record->value(invariant).status())}};

        std::lock_guard lock{_mutex};
        if (_active.contains({graph, invariant}))
            throw Error{ErrorCode::bad_query, "a job for this value is already queued"};
        auto last = _last_budget.find({graph, invariant});
        if (budget <= Budget::zero() || (last != _last_budget.end() && budget <= last->second))
            throw Error{ErrorCode::bad_query, "retry budget must exceed the previous attempt's"};
        return push_locked(graph, invariant, budget);
    }

    auto JobQueue::requeue_stale(JobClock::time_point now) -> std::size_t
    {
        std::lock_guard lock{_mutex};
        std::vector<Job> stale;
        for (auto & [serial, job] : _jobs)
            if (job.state == JobState::running && job.started && now - *job.started > 2 * job.budget) {
                job.state = JobState::timed_out;
                job.diagnostic = "worker lost; requeued by watchdog";
                stale.push_back(job);
            }
        for (const auto & job : stale) {
            _active.erase({job.graph, job.invariant});
            push_locked(job.graph, job.invariant, job.budget);
        }
        return stale.size();
    }

    void JobQueue::drain(int workers)
    {
        auto loop = [this] {
            while (worker_step())
                ;
        };
        if (workers <= 1) {
            loop();
            return;
        }
        std::vector<std::thread> threads;
        for (int i = 0; i < workers; ++i)
            threads.emplace_back(loop);
        for (auto & t : threads)
            t.join();
    }

    void JobQueue::start(int workers)
    {
        _stopping = false;
        for (int i = 0; i < std::max(1, workers); ++i)
            _workers.emplace_back([this] {
                while (! _stopping) {
                    if (worker_step())
                        continue;
                    std::unique_lock lock{_mutex};
                    _wake.wait_for(lock, std::chrono::milliseconds{200},
                        [this] { return _stopping || ! _poly.empty() || ! _exp.empty(); });
                }
            });
    }

    void JobQueue::stop()
    {
        _stopping = true;
        _wake.notify_all();
        for (auto & t : _workers)
            t.join();
        _workers.clear();
    }

    auto JobQueue::counts() const -> JobCounts
    {
        std::lock_guard lock{_mutex};
        JobCounts c;
        for (const auto & [serial, job] : _jobs)
            switch (job.state) {
            case JobState::queued: ++c.queued; break;
            case JobState::running: ++c.running; break;
            case JobState::done: ++c.done; break;
            case JobState::timed_out: ++c.timed_out; break;
            }
        return c;
    }

    auto JobQueue::jobs() const -> std::vector<Job>
    {
        std::lock_guard lock{_mutex};
        std::vector<Job> result;
        for (const auto & [serial, job] : _jobs)
            result.push_back(job);
        return result;
    }

    auto JobQueue::find(std::uint64_t serial) const -> std::optional<Job>
    {
        std::lock_guard lock{_mutex};
        auto it = _jobs.find(serial);
        if (it == _jobs.end())
            return std::nullopt;
        return it->second;
    }
}
