#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "forgesim/assignment.hpp"
#include "forgesim/rng.hpp"

using namespace forgesim;

namespace {

Developer dev(int id, double w, double s, int cap = 10) {
    // Workload granularity 1/cap; w must be a multiple of it.
    Developer d;
    d.id = id;
    d.skills = SkillVector{s, s, s};
    d.concurrency_cap = cap;
    int assigned = static_cast<int>(std::lround(w * cap));
    for (int i = 0; i < assigned; ++i) d.assignments.insert(900 + i);
    return d;
}

std::vector<Developer> random_candidates(SimRng& rng, int n) {
    std::vector<Developer> out;
    for (int i = 0; i < n; ++i)
        out.push_back(dev(i, 0.1 * rng.uniform_int(0, 9),
                          0.05 * rng.uniform_int(0, 20)));
    return out;
}

double greedy_seed_cost(const std::vector<Developer>& candidates, int k,
                        const GoalWeights& weights) {
    std::vector<double> unit;
    for (const Developer& d : candidates)
        unit.push_back(weights.alpha * load_cost(d.workload()) +
                       weights.beta * skill_cost(d.skill()));
    std::sort(unit.begin(), unit.end());
    double total = 0.0;
    for (int i = 0; i < k; ++i) total += unit[static_cast<std::size_t>(i)];
    return total;
}

}  // namespace

TEST_SUITE_BEGIN("assignment");

TEST_CASE("source size follows the cube-root effort law") {
    CHECK(slim_source_size(1000.0, 8.0, 1.0) ==
          doctest::Approx(2000.0).epsilon(1e-12));
    CHECK(slim_source_size(400.0, 27.0, 0.125) ==
          doctest::Approx(300.0).epsilon(1e-12));
    CHECK(slim_source_size(1.0, 1.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(slim_source_size(0.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(slim_source_size(1.0, -2.0, 1.0), std::invalid_argument);
}

TEST_CASE("effort inverts the source-size law") {
    CHECK(slim_effort(2000.0, 1000.0, 1.0) ==
          doctest::Approx(8.0).epsilon(1e-9));
    CHECK(slim_effort(300.0, 400.0, 0.125) ==
          doctest::Approx(27.0).epsilon(1e-9));
    CHECK(slim_effort(7777.0, 7777.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(slim_effort(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("size and effort round-trip over randomized inputs") {
    SimRng rng(42);
    for (int i = 0; i < 1000; ++i) {
        double c = rng.uniform(610.0, 57314.0);
        double k = rng.uniform(0.1, 50.0);
        double t = rng.uniform(0.05, 3.0);
        double k_back = slim_effort(slim_source_size(c, k, t), c, t);
        CHECK(std::abs(k_back - k) <= 1e-9 * k);
    }
}

TEST_CASE("headcount is the ceiling of average staffing") {
    CHECK(required_headcount(8.0, 1.0, 46) == 8);
    CHECK(required_headcount(4.5, 0.5, 46) == 9);
    CHECK(required_headcount(8.0, 1.0, 5) == std::nullopt);
    CHECK(required_headcount(0.01, 1.0, 46) == 1);
    CHECK_THROWS_AS(required_headcount(0.0, 1.0, 5), std::invalid_argument);
}

TEST_CASE("cost mappings are identity and complement") {
    CHECK(load_cost(0.0) == 0.0);
    CHECK(skill_cost(1.0) == 0.0);
    CHECK(load_cost(1.0) == 1.0);
    CHECK(skill_cost(0.0) == 1.0);
    CHECK(load_cost(0.4) == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(skill_cost(0.3) == doctest::Approx(0.7).epsilon(1e-12));
    CHECK_THROWS_AS(load_cost(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(load_cost(1.1), std::invalid_argument);
    CHECK_THROWS_AS(skill_cost(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(skill_cost(1.1), std::invalid_argument);
}

TEST_CASE("team cost sums the weighted member terms") {
    GoalWeights even{0.5, 0.5};
    std::vector<Developer> members = {dev(1, 0.2, 1.0), dev(2, 0.4, 0.5)};
    CHECK(team_cost(members, even) == doctest::Approx(0.55).epsilon(1e-12));

    CHECK(team_cost({dev(3, 0.0, 1.0)}, even) == 0.0);
    CHECK(team_cost({dev(1, 0.0, 0.3), dev(2, 0.0, 0.8)}, GoalWeights{1.0, 0.0}) ==
          0.0);
    CHECK_THROWS_AS(team_cost({}, even), std::invalid_argument);
}

TEST_CASE("exhaustive selection finds the cheapest pair") {
    std::vector<Developer> candidates = {dev(1, 0.0, 0.9), dev(2, 0.5, 0.9),
                                         dev(3, 0.0, 0.2)};
    TeamSelection t = select_team_exhaustive(candidates, 2, GoalWeights{0.5, 0.5});
    CHECK(t.member_ids == std::vector<int>{1, 2});
    CHECK(t.cost == doctest::Approx(0.35).epsilon(1e-12));
}

TEST_CASE("k equal to the candidate count selects everyone") {
    std::vector<Developer> candidates = {dev(1, 0.1, 0.3), dev(2, 0.2, 0.8)};
    TeamSelection t = select_team_exhaustive(candidates, 2, GoalWeights{0.5, 0.5});
    CHECK(t.member_ids == std::vector<int>{1, 2});
}

TEST_CASE("degenerate k is rejected") {
    std::vector<Developer> candidates = {dev(1, 0.0, 0.5)};
    CHECK_THROWS_AS(select_team_exhaustive(candidates, 0, GoalWeights{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(select_team_exhaustive(candidates, 2, GoalWeights{}),
                    std::invalid_argument);
    CHECK_THROWS_AS(select_team(candidates, 0, GoalWeights{}),
                    std::invalid_argument);
}

TEST_CASE("identical candidates tie-break to the smallest ids") {
    std::vector<Developer> candidates;
    for (int id : {9, 4, 7, 2}) candidates.push_back(dev(id, 0.2, 0.6));
    TeamSelection t = select_team_exhaustive(candidates, 2, GoalWeights{0.5, 0.5});
    CHECK(t.member_ids == std::vector<int>{2, 4});
}

TEST_CASE("combination counts are exact and saturate") {
    CHECK(combination_count(3, 2) == 3);
    CHECK(combination_count(12, 6) == 924);
    CHECK(combination_count(46, 4) == 163185);
    CHECK(combination_count(46, 5) == 1370754);
    CHECK(combination_count(46, 23) == 8233430727600ULL);
    CHECK(combination_count(300, 150) ==
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()));
    CHECK(combination_count(5, 9) == 0);
}

TEST_CASE("small instances delegate to the exhaustive oracle") {
    SimRng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int n = rng.uniform_int(2, 12);
        int k = rng.uniform_int(1, std::min(6, n));
        std::vector<Developer> candidates = random_candidates(rng, n);
        GoalWeights w{0.7, 0.3};
        TeamSelection via_select = select_team(candidates, k, w);
        TeamSelection via_oracle = select_team_exhaustive(candidates, k, w);
        CHECK(via_select.cost == via_oracle.cost);
        CHECK(via_select.member_ids == via_oracle.member_ids);
    }
}

TEST_CASE("the heuristic path matches the oracle on separable costs") {
    SimRng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        int n = rng.uniform_int(4, 12);
        int k = rng.uniform_int(1, std::min(6, n));
        std::vector<Developer> candidates = random_candidates(rng, n);
        GoalWeights w{0.3, 0.7};
        // exhaustive_limit 0 forces the greedy + swap path
        TeamSelection heur = select_team(candidates, k, w, 0);
        TeamSelection oracle = select_team_exhaustive(candidates, k, w);
        CHECK(heur.cost == doctest::Approx(oracle.cost).epsilon(1e-12));
    }
}

TEST_CASE("the heuristic never exceeds its greedy seed on large instances") {
    SimRng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Developer> candidates = random_candidates(rng, 46);
        int k = rng.uniform_int(6, 10);
        GoalWeights w{0.7, 0.3};
        TeamSelection heur = select_team(candidates, k, w, 0);
        CHECK(heur.cost <= greedy_seed_cost(candidates, k, w) + 1e-12);
    }
}

TEST_CASE("dominated outsiders never displace the selected team") {
    SimRng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        int n = rng.uniform_int(4, 10);
        int k = rng.uniform_int(1, std::min(5, n));
        std::vector<Developer> candidates = random_candidates(rng, n);
        GoalWeights w{0.5, 0.5};
        TeamSelection base = select_team(candidates, k, w);

        // raise a non-member's workload (keeping them selectable)
        std::vector<Developer> raised = candidates;
        bool mutated = false;
        for (Developer& d : raised) {
            bool member = std::find(base.member_ids.begin(),
                                    base.member_ids.end(),
                                    d.id) != base.member_ids.end();
            if (!member &&
                static_cast<int>(d.assignments.size()) + 1 < d.concurrency_cap) {
                d.assignments.insert(800);
                mutated = true;
                break;
            }
        }
        if (mutated)
            CHECK(select_team(raised, k, w).member_ids == base.member_ids);

        // lower a member's workload; the member must stay selected
        std::vector<Developer> lowered = candidates;
        for (Developer& d : lowered) {
            bool member = std::find(base.member_ids.begin(),
                                    base.member_ids.end(),
                                    d.id) != base.member_ids.end();
            if (member && !d.assignments.empty()) {
                int id = d.id;
                d.assignments.erase(d.assignments.begin());
                TeamSelection again = select_team(lowered, k, w);
                CHECK(std::find(again.member_ids.begin(), again.member_ids.end(),
                                id) != again.member_ids.end());
                break;
            }
        }
    }
}

TEST_CASE("assignment fills one slot per member and sets the finish day") {
    Project p;
    p.id = 5;
    p.duration_days = 120.0;
    p.status = ProjectStatus::OnHold;
    std::vector<Developer> devs = {dev(1, 0.0, 0.5, 2), dev(2, 0.5, 0.5, 2)};
    TeamSelection team;
    team.project_id = 5;
    team.member_ids = {1, 2};

    double finish = assign(p, team, devs, 100.0);
    CHECK(finish == 220.0);
    CHECK(p.status == ProjectStatus::Ongoing);
    CHECK(devs[0].workload() == 0.5);
    CHECK(devs[1].workload() == 1.0);
}

TEST_CASE("assignment rejects full members and wrong status") {
    std::vector<Developer> devs = {dev(1, 1.0, 0.5, 2)};
    TeamSelection team;
    team.member_ids = {1};

    Project on_hold;
    on_hold.id = 1;
    on_hold.status = ProjectStatus::OnHold;
    CHECK_THROWS_AS(assign(on_hold, team, devs, 0.0), std::logic_error);

    Project waiting;
    waiting.id = 2;
    waiting.status = ProjectStatus::Waiting;
    std::vector<Developer> idle = {dev(1, 0.0, 0.5, 2)};
    CHECK_THROWS_AS(assign(waiting, team, idle, 0.0), std::logic_error);

    TeamSelection unknown;
    unknown.member_ids = {99};
    CHECK_THROWS_AS(assign(on_hold, unknown, idle, 0.0), std::logic_error);
}

TEST_CASE("release undoes assign exactly") {
    Project p;
    p.id = 8;
    p.duration_days = 50.0;
    p.status = ProjectStatus::OnHold;
    std::vector<Developer> devs = {dev(1, 0.0, 0.4, 2), dev(2, 0.5, 0.6, 2),
                                   dev(3, 0.0, 0.8, 2)};
    std::vector<Developer> before = devs;
    TeamSelection team;
    team.project_id = 8;
    team.member_ids = {1, 2, 3};

    assign(p, team, devs, 10.0);
    int changed = 0;
    for (std::size_t i = 0; i < devs.size(); ++i)
        if (devs[i].assignments != before[i].assignments) ++changed;
    CHECK(changed == 3);

    release(p, devs);
    CHECK(p.status == ProjectStatus::Finished);
    for (std::size_t i = 0; i < devs.size(); ++i)
        CHECK(devs[i].assignments == before[i].assignments);

    CHECK_THROWS_AS(release(p, devs), std::logic_error);
}

TEST_SUITE_END();
