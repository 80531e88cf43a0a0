#include "helpers.hh"
#include "oracles.hh"

#include <hog/enumerate.hh>
#include <hog/error.hh>
#include <hog/jobs.hh>
#include <hog/seed.hh>

#include <doctest.h>

using namespace hog;
using namespace std::chrono_literals;

namespace
{
    auto hard_graph() -> Graph
    {
        return mycielskian(mycielskian(mycielskian(mycielskian(cycle_graph(5)))));
    }
}

TEST_SUITE("jobs")
{
    TEST_CASE("enqueue_all skips computed values and duplicates")
    {
        Store s;
        auto u = s.register_user("ann").user.id;
        JobQueue q{s};
        auto k1 = s.insert_graph(complete_graph(1), GraphMetadata{}, u).id;
        CHECK(q.enqueue_all(k1).size() == 17);
        CHECK(q.enqueue_all(k1).empty());

        auto k2 = s.insert_graph(complete_graph(2), GraphMetadata{}, u).id;
        s.set_invariant(k2, InvariantId::chi, InvariantValue::of(2));
        CHECK(q.enqueue_all(k2).size() == 16);
        CHECK(q.counts().queued == 33);
        CHECK_THROWS_AS(q.enqueue_all(999), Error);
    }

    TEST_CASE("attached queue picks up new records")
    {
        Store s;
        auto u = s.register_user("ann").user.id;
        JobQueue q{s};
        q.attach();
        s.insert_graph(cycle_graph(5), GraphMetadata{}, u);
        s.insert_graph(cycle_graph(5), GraphMetadata{}, u);
        CHECK(q.counts().queued == 17);
    }

    TEST_CASE("polynomial jobs run first, FIFO within a class")
    {
        Store s;
        auto u = s.register_user("ann").user.id;
        JobQueue q{s};
        auto a = s.insert_graph(cycle_graph(5), GraphMetadata{}, u).id;
        auto b = s.insert_graph(cycle_graph(6), GraphMetadata{}, u).id;
        q.enqueue_all(a);
        q.enqueue_all(b);
        std::vector<Job> order;
        while (auto job = q.worker_step())
            order.push_back(*job);
        REQUIRE(order.size() == 34);
        bool seen_exp = false;
        for (const auto & job : order) {
            if (job.priority == CostClass::exp)
                seen_exp = true;
            else
                CHECK_FALSE(seen_exp);
            CHECK(job.state == JobState::done);
        }
        for (std::size_t i = 1; i < order.size(); ++i)
            if (order[i].priority == order[i - 1].priority)
                CHECK(order[i - 1].serial < order[i].serial);
        CHECK_FALSE(q.worker_step().has_value());
        for (const auto & info : invariant_registry())
            CHECK(s.get(a)->value(info.id) == oracle::value(cycle_graph(5), info.id));
    }

    TEST_CASE("tiny budgets time out and retries recover")
    {
        Store s;
        auto u = s.register_user("ann").user.id;
        JobQueue q{s, 1us};
        auto id = s.insert_graph(hard_graph(), GraphMetadata{}, u).id;
        q.enqueue_all(id);
        q.drain();
        CHECK(s.get(id)->value(InvariantId::chi).status() == ValueStatus::unknown);
        CHECK(s.get(id)->value(InvariantId::mu).computed());
        CHECK(q.counts().timed_out >= 1);

        auto small = s.insert_graph(petersen_graph(), GraphMetadata{}, u).id;
        q.enqueue_all(small);
        q.drain();
        if (s.get(small)->value(InvariantId::chi).status() == ValueStatus::unknown) {
            CHECK_THROWS_AS(q.retry(small, InvariantId::chi, 1us), Error);
            CHECK_THROWS_AS(q.retry(small, InvariantId::chi, 500ns), Error);
            q.retry(small, InvariantId::chi, 60s);
            q.drain();
        }
        CHECK(s.get(small)->value(InvariantId::chi) == InvariantValue::of(3));
        CHECK_THROWS_AS(q.retry(small, InvariantId::chi, 120s), Error);
        CHECK_THROWS_AS(q.retry(small, InvariantId::mu, 120s), Error);
    }

    TEST_CASE("watchdog replaces jobs of lost workers")
    {
        Store s;
        auto u = s.register_user("ann").user.id;
        JobQueue q{s, 1s};
        auto id = s.insert_graph(cycle_graph(7), GraphMetadata{}, u).id;
        q.enqueue_all(id);
        auto lost = q.claim();
        REQUIRE(lost.has_value());
        CHECK(q.counts().running == 1);
        CHECK(q.requeue_stale(JobClock::now()) == 0);
        CHECK(q.requeue_stale(JobClock::now() + 3 * lost->budget) == 1);
        CHECK(q.counts().running == 0);
        CHECK(q.find(lost->serial)->state == JobState::timed_out);

        // The lost worker finishing late does not clobber the replacement.
        q.execute(*lost);
        CHECK(q.find(lost->serial)->state == JobState::timed_out);
        q.drain();
        CHECK(q.counts().running == 0);
        CHECK(q.counts().queued == 0);
        CHECK(s.get(id)->value(lost->invariant).computed());
    }

    TEST_CASE("drain with several workers computes everything, twice changes nothing")
    {
        Store s;
        auto u = s.register_user("ann").user.id;
        for (int n = 1; n <= 5; ++n)
            for (const auto & g : enumerate_graph_classes(n))
                s.insert_graph(g, GraphMetadata{}, u);
        JobQueue q{s};
        CHECK(q.enqueue_pending() == 17 * s.size());
        q.drain(4);
        auto first = s.snapshot();
        for (const auto & r : first)
            for (const auto & info : invariant_registry())
                CHECK(r.value(info.id) == oracle::value(r.graph, info.id));
        CHECK(q.enqueue_pending() == 0);
        q.drain(4);
        CHECK(s.snapshot() == first);
    }

    TEST_CASE("background workers")
    {
        Store s;
        auto u = s.register_user("ann").user.id;
        JobQueue q{s};
        q.attach();
        q.start(2);
        auto id = s.insert_graph(petersen_graph(), GraphMetadata{}, u).id;
        for (int i = 0; i < 200 && q.counts().done < 17; ++i)
            std::this_thread::sleep_for(10ms);
        q.stop();
        CHECK(q.counts().done == 17);
        CHECK(s.get(id)->value(InvariantId::girth) == InvariantValue::of(5));
    }
}
